#include "loopalg/randomgen.hpp"
#include "loopalg/textio.hpp"
#include "loopalg/triple.hpp"

#include <doctest.h>

using namespace loopalg;

namespace {

Word gen(const Signature& sig, GenKind k, int i, int exp = 1) {
    return sig.gen_word(sig.find(k, i), exp);
}

Tensor2 random_tensor2(Sampler& rnd, int len, int terms) {
    Tensor2 t;
    for (int k = 0; k < terms; ++k)
        t.add({rnd.word(len), rnd.word(len)}, rnd.coeff());
    return t;
}

} // namespace

TEST_CASE("outer action") {
    Signature sig = make_surface(1, 1);
    Word a = gen(sig, GenKind::alpha, 1), b = gen(sig, GenKind::beta, 1);
    Word d = gen(sig, GenKind::delta, 1), g = gen(sig, GenKind::gamma, 1);
    Word one0 = Word::identity(0), one1 = Word::identity(1);

    CHECK(outer_act(a, tensor2(one0, one0), b) == tensor2(a, b));
    CHECK(outer_act(one1, tensor2(d, g), one0) == tensor2(d, g));
    // 1_0 d1 = 0, so the action by the wrong idempotent kills the term
    CHECK(outer_act(one0, tensor2(d, g), a).is_zero());
}

TEST_CASE("inner action") {
    Signature sig = make_surface(1, 1);
    Sampler rnd(sig, 5);
    for (int i = 0; i < 30; ++i) {
        Word x = rnd.word(4), y = rnd.word(4);
        Word p = rnd.word(4), q = rnd.word(4);
        Tensor2 t = tensor2(p, q);
        Tensor2 got = inner_act(alg_word(x), t, alg_word(y));
        Tensor2 want;
        if (auto py = compose(p, y))
            if (auto xq = compose(x, q))
                want.add({*py, *xq}, 1);
        CHECK(got == want);
    }
    // unit acts trivially; inner and outer actions commute
    AlgElem one = alg_one(sig);
    for (int i = 0; i < 30; ++i) {
        Tensor2 t = random_tensor2(rnd, 4, 2);
        CHECK(inner_act(one, t, one) == t);
        AlgElem a = alg_word(rnd.word(3)), b = alg_word(rnd.word(3));
        AlgElem x = alg_word(rnd.word(3)), y = alg_word(rnd.word(3));
        CHECK(outer_act(a, inner_act(x, t, y), b) == inner_act(x, outer_act(a, t, b), y));
    }
}

TEST_CASE("mult2") {
    Signature sig = make_surface(1, 1);
    Word a = gen(sig, GenKind::alpha, 1), b = gen(sig, GenKind::beta, 1);
    CHECK(mult2(tensor2(b, a)) == alg_word(*compose(b, a)));
    // the fox value of d1 multiplies to zero: 1_1 . 1_0 = 0
    CHECK(mult2(tensor2(Word::identity(1), Word::identity(0))).is_zero());
    // d-expansion lies in the kernel of mult
    Tensor2 da = tensor2(Word::identity(0), a) - tensor2(a, Word::identity(0));
    CHECK(mult2(da).is_zero());
}

TEST_CASE("flip is an involution") {
    Signature sig = make_surface(1, 2);
    Sampler rnd(sig, 13);
    for (int i = 0; i < 50; ++i) {
        Tensor2 t = random_tensor2(rnd, 4, 3);
        CHECK(flip(flip(t)) == t);
    }
}

TEST_CASE("mult2 intertwines the outer action") {
    Signature sig = make_surface(1, 2);
    Sampler rnd(sig, 17);
    for (int i = 0; i < 50; ++i) {
        Tensor2 t = random_tensor2(rnd, 4, 2);
        AlgElem a = alg_word(rnd.word(3)), b = alg_word(rnd.word(3));
        CHECK(mult2(outer_act(a, t, b)) == alg_mul(a, alg_mul(mult2(t), b)));
    }
}

TEST_CASE("fold") {
    Signature sig = make_surface(1, 1);
    Word a = gen(sig, GenKind::alpha, 1);
    Word one0 = Word::identity(0);
    CyclicWord ua = CyclicWord::of_loop(a);
    CyclicWord unit = CyclicWord::unit();

    TripleTrace t = triple_left(unit, a) + triple_right(a, ua, Rational(2));
    TripleTrace folded = fold(t);
    CHECK(folded.left.is_zero());
    CHECK(folded.right.coeff({a, unit}) == Rational(1));
    CHECK(folded.right.coeff({a, ua}) == Rational(2));

    // fold of 1_0 (x) |a| - |1_0| (x) a, the phi-value shape
    TripleTrace phi_a = triple_right(one0, ua) - triple_left(unit, a);
    TripleTrace want = triple_right(one0, ua) - triple_right(a, unit);
    CHECK(fold(phi_a) == want);
}

TEST_CASE("mult_trace") {
    Signature sig = make_surface(1, 1);
    Word a = gen(sig, GenKind::alpha, 1), d = gen(sig, GenKind::delta, 1);
    CyclicWord ua = CyclicWord::of_loop(a);

    TripleTrace t = triple_right(a, ua);
    TraceTensor2 m = mult_trace(t);
    CHECK(m.coeff({ua, ua}) == Rational(1));

    // non-loop factor dies
    CHECK(mult_trace(triple_left(ua, d)).is_zero());
}

TEST_CASE("sym") {
    Signature sig = make_surface(1, 1);
    CyclicWord u = CyclicWord::of_loop(gen(sig, GenKind::alpha, 1));
    CyclicWord v = CyclicWord::of_loop(gen(sig, GenKind::beta, 1));
    TraceTensor2 t = TraceTensor2::single({u, v});
    TraceTensor2 s = sym(t);
    CHECK(s.coeff({u, v}) == Rational(1));
    CHECK(s.coeff({v, u}) == Rational(1));

    TraceTensor2 skew = TraceTensor2::single({u, v}) - TraceTensor2::single({v, u});
    CHECK(sym(skew).is_zero());

    CHECK(sym(sym(t)) == sym(t) * Rational(2));
}

TEST_CASE("triple action") {
    Signature sig = make_surface(1, 1);
    Word a = gen(sig, GenKind::alpha, 1), b = gen(sig, GenKind::beta, 1);
    Word one0 = Word::identity(0);
    CyclicWord ua = CyclicWord::of_loop(a);

    // action touches only the non-trace factor
    CHECK(triple_act(alg_word(a), triple_right(one0, ua), alg_word(b)) ==
          triple_right(*compose(a, b), ua));
    CHECK(triple_act(alg_word(a), triple_left(ua, one0), alg_word(b)) ==
          triple_left(ua, *compose(a, b)));

    Sampler rnd(sig, 23);
    for (int i = 0; i < 30; ++i) {
        Word x = rnd.word(3), y = rnd.word(3);
        TripleTrace t = triple_right(rnd.word(3), CyclicWord::unit(), rnd.coeff()) +
                        triple_left(CyclicWord::unit(), rnd.word(3), rnd.coeff());
        AlgElem xy = word_compose(x, y);
        AlgElem one = alg_one(sig);
        CHECK(triple_act(xy, t, one) ==
              triple_act(alg_word(x), triple_act(alg_word(y), t, one), one));
        CHECK(triple_act(one, t, one) == t);
    }
}

TEST_CASE("sym of mult_trace is fold-invariant") {
    Signature sig = make_surface(1, 2);
    Sampler rnd(sig, 31);
    for (int i = 0; i < 60; ++i) {
        TripleTrace t;
        for (int k = 0; k < 3; ++k) {
            Word loop = rnd.loop(4);
            t += triple_right(rnd.loop(4), CyclicWord::of_loop(loop), rnd.coeff());
            Word loop2 = rnd.loop(4);
            t += triple_left(CyclicWord::of_loop(loop2), rnd.loop(4), rnd.coeff());
        }
        CHECK(sym(mult_trace(fold(t))) == sym(mult_trace(t)));
    }
}
