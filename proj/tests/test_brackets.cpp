#include "loopalg/brackets.hpp"
#include "loopalg/randomgen.hpp"
#include "loopalg/textio.hpp"
#include "loopalg/verify.hpp"

#include <doctest.h>

#include <thread>

using namespace loopalg;

namespace {

Word gen(const Signature& sig, GenKind k, int i, int exp = 1) {
    return sig.gen_word(sig.find(k, i), exp);
}

// Endpoint typing of a bracket value: every p (x) q of Pi(a, b) has
// p in A(s(b), t(a)) and q in A(s(a), t(b)).
void check_value_typing(const Tensor2& t, const Word& a, const Word& b) {
    for (const auto& [pq, c] : t.terms()) {
        (void)c;
        CHECK(pq.first.source() == b.source());
        CHECK(pq.first.target() == a.target());
        CHECK(pq.second.source() == a.source());
        CHECK(pq.second.target() == b.target());
    }
}

} // namespace

TEST_CASE("kappa generator values") {
    Signature sig = make_surface(1, 2);
    DoubleBracket kappa = kappa_bracket(sig);
    Word a1 = gen(sig, GenKind::alpha, 1), b1 = gen(sig, GenKind::beta, 1);
    Word g1 = gen(sig, GenKind::gamma, 1);
    Word d1 = gen(sig, GenKind::delta, 1), d2 = gen(sig, GenKind::delta, 2);
    Word one0 = Word::identity(0);

    CHECK(kappa.eval(a1, b1) == tensor2(b1, a1));
    CHECK(kappa.eval(a1, g1).is_zero());
    CHECK(kappa.eval(d2, g1) == tensor2(g1, d2) - tensor2(one0, *compose(d2, g1)));
    CHECK(kappa.eval(d1, g1) == -tensor2(one0, *compose(d1, g1)));
    CHECK(kappa.eval(d1, d1) == tensor2(d1, d1));
    CHECK(kappa.eval(a1, a1) == tensor2(a1, a1) - tensor2(one0, *compose(a1, a1)));
}

TEST_CASE("kappa matches the independent table transcription") {
    for (auto [g, n] : {std::pair{1, 1}, std::pair{0, 1}, std::pair{0, 2}, std::pair{2, 2}}) {
        Signature sig = make_surface(g, n);
        DoubleBracket kappa = kappa_bracket(sig);
        for (int c1 = 0; c1 < sig.num_generators(); ++c1)
            for (int c2 = 0; c2 < sig.num_generators(); ++c2)
                CHECK(kappa.eval(sig.gen_word(c1), sig.gen_word(c2)) ==
                      kappa_expected(sig, c1, c2));
    }
}

TEST_CASE("bracket evaluation base cases") {
    Signature sig = make_surface(1, 1);
    DoubleBracket kappa = kappa_bracket(sig);
    Word a = gen(sig, GenKind::alpha, 1);
    Word ainv = gen(sig, GenKind::alpha, 1, -1);
    Word one0 = Word::identity(0);

    CHECK(kappa.eval(a, one0).is_zero());
    CHECK(kappa.eval(one0, a).is_zero());
    // derived from 0 = kappa(a, a a^-1)
    CHECK(kappa.eval(a, ainv) == -tensor2(one0, one0) + tensor2(ainv, a));
}

TEST_CASE("inversion") {
    Signature sig = make_surface(1, 1);
    DoubleBracket kappa = kappa_bracket(sig);
    Word a = gen(sig, GenKind::alpha, 1), b = gen(sig, GenKind::beta, 1);
    Word d = gen(sig, GenKind::delta, 1);

    CHECK(db_inversion_eval(kappa, b, a) == tensor2(a, b));
    // kappa + kappa° on (d1, d1) is 2 d1 (x) d1
    Tensor2 defect = kappa.eval(d, d) + db_inversion_eval(kappa, d, d);
    CHECK(defect == tensor2(d, d, Rational(2)));

    Sampler rnd(sig, 3);
    for (int i = 0; i < 40; ++i) {
        Word x = rnd.word(4), y = rnd.word(4);
        // (Pi°)° = Pi
        CHECK(flip(db_inversion_eval(kappa, y, x)) == kappa.eval(x, y));
    }
}

TEST_CASE("as_double_derivation tabulates kappa(a, .)") {
    Signature sig = make_surface(1, 1);
    DoubleBracket kappa = kappa_bracket(sig);
    Word a = gen(sig, GenKind::alpha, 1);
    DoubleDerivation th = as_double_derivation(sig, kappa, alg_word(a));
    CHECK(th.eval(gen(sig, GenKind::beta, 1)) == tensor2(gen(sig, GenKind::beta, 1), a));
    CHECK(as_double_derivation(sig, kappa, alg_unit(0)).gen_values.empty());

    DoubleDerivation thd =
        as_double_derivation(sig, kappa, alg_word(gen(sig, GenKind::delta, 1)));
    CHECK(thd.eval(gen(sig, GenKind::gamma, 1)) ==
          -tensor2(Word::identity(0),
                   *compose(gen(sig, GenKind::delta, 1), gen(sig, GenKind::gamma, 1))));
}

TEST_CASE("ad_e values") {
    Signature sig = make_surface(1, 1);
    DoubleDerivation ade = ad_e(sig);
    Word d = gen(sig, GenKind::delta, 1);
    CHECK(ade.eval(d) == tensor2(d, Word::identity(0)) - tensor2(Word::identity(1), d));
    Word a = gen(sig, GenKind::alpha, 1);
    CHECK(ade.eval(a) == tensor2(a, Word::identity(0)) - tensor2(Word::identity(0), a));
}

TEST_CASE("ad_ad_e four-term value") {
    Signature sig = make_surface(1, 1);
    Word a = gen(sig, GenKind::alpha, 1), b = gen(sig, GenKind::beta, 1);
    Word one0 = Word::identity(0);
    Tensor2 got = ad_ad_e(sig, alg_word(a), alg_word(b));
    Tensor2 want = -tensor2(*compose(b, a), one0) + tensor2(a, b) + tensor2(b, a) -
                   tensor2(one0, *compose(a, b));
    CHECK(got == want);
    // S-linearity in the second slot
    CHECK(ad_ad_e(sig, alg_word(a), alg_unit(0)).is_zero());
    CHECK(ad_ad_e(sig, alg_unit(1), alg_word(a)).is_zero());
}

TEST_CASE("defect identity on random words") {
    for (auto [g, n] : {std::pair{1, 1}, std::pair{2, 2}}) {
        Signature sig = make_surface(g, n);
        DoubleBracket kappa = kappa_bracket(sig);
        Sampler rnd(sig, 17);
        for (int i = 0; i < 60; ++i) {
            Word a = rnd.word(6), b = rnd.word(6);
            Tensor2 lhs = kappa.eval(a, b) + flip(kappa.eval(b, a));
            CHECK(lhs == ad_ad_e(sig, alg_word(a), alg_word(b)));
        }
    }
}

TEST_CASE("ad_ad_e is symmetric") {
    Signature sig = make_surface(1, 2);
    Sampler rnd(sig, 19);
    for (int i = 0; i < 60; ++i) {
        AlgElem a = alg_word(rnd.word(5)), b = alg_word(rnd.word(5));
        CHECK(ad_ad_e(sig, a, b) == flip(ad_ad_e(sig, b, a)));
    }
}

TEST_CASE("Leibniz rules of the evaluation") {
    Signature sig = make_surface(1, 1);
    DoubleBracket kappa = kappa_bracket(sig);
    Sampler rnd(sig, 23);
    for (int i = 0; i < 50; ++i) {
        auto [b, c] = rnd.composable_pair(3);
        Word a = rnd.word(4);
        AlgElem bc = word_compose(b, c);
        Tensor2 lhs = kappa.eval(alg_word(a), bc);
        Tensor2 rhs = outer_act(alg_unit(b.source()), kappa.eval(a, b), alg_word(c)) +
                      outer_act(alg_word(b), kappa.eval(a, c), alg_unit(c.target()));
        CHECK(lhs == rhs);

        Tensor2 lhs2 = kappa.eval(bc, alg_word(a));
        Tensor2 rhs2 = inner_act(alg_unit(b.source()), kappa.eval(b, a), alg_word(c)) +
                       inner_act(alg_word(b), kappa.eval(c, a), alg_unit(c.target()));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("value typing is preserved") {
    Signature sig = make_surface(1, 2);
    DoubleBracket kappa = kappa_bracket(sig);
    Sampler rnd(sig, 29);
    for (int i = 0; i < 50; ++i) {
        Word a = rnd.word(5), b = rnd.word(5);
        check_value_typing(kappa.eval(a, b), a, b);
    }
}

TEST_CASE("ham") {
    Signature sig = make_surface(1, 1);
    DoubleBracket kappa = kappa_bracket(sig);
    Word a = gen(sig, GenKind::alpha, 1), b = gen(sig, GenKind::beta, 1);

    Derivation sigma_a = ham(sig, kappa, trace_project(a));
    CHECK(sigma_a.eval(b) == alg_word(*compose(b, a)));
    CHECK(ham(sig, kappa, trace_project(Word::identity(0))).gen_values.empty());

    // representative independence: |xy| and |yx| drive the same flow
    Sampler rnd(sig, 31);
    for (int i = 0; i < 30; ++i) {
        Word x = rnd.word(4);
        Word y = rnd.word_between(x.target(), x.source(), 4);
        AlgElem xy = word_compose(x, y), yx = word_compose(y, x);
        Derivation f1 = ham(sig, kappa, trace_project(xy));
        Derivation f2 = ham(sig, kappa, trace_project(yx));
        for (int c = 0; c < sig.num_generators(); ++c)
            CHECK(f1.eval(sig.gen_word(c)) == f2.eval(sig.gen_word(c)));
    }
}

TEST_CASE("random brackets with prescribed defect") {
    Signature sig = make_surface(1, 1);
    Sampler rnd(sig, 37);
    for (int i = 0; i < 10; ++i) {
        DoubleBracket pi = rnd.bracket_with_ad_defect(2);
        for (int k = 0; k < 10; ++k) {
            Word a = rnd.word(4), b = rnd.word(4);
            Tensor2 defect = pi.eval(a, b) + flip(pi.eval(b, a));
            CHECK(defect == ad_ad_e(sig, alg_word(a), alg_word(b)));
        }
    }
}

TEST_CASE("split position independence") {
    Signature sig = make_surface(1, 1);
    DoubleBracket kappa = kappa_bracket(sig);
    Sampler rnd(sig, 41);
    for (int i = 0; i < 30; ++i) {
        Word w = rnd.word(6);
        if (w.size() < 2)
            continue;
        Word c = rnd.word(3);
        Tensor2 direct_first = kappa.eval(w, c);
        Tensor2 direct_second = kappa.eval(c, w);
        for (std::size_t k = 1; k < w.size(); ++k) {
            Word x = w.prefix(k), y = w.suffix(k);
            Tensor2 split_first =
                inner_act(alg_unit(x.source()), kappa.eval(x, c), alg_word(y)) +
                inner_act(alg_word(x), kappa.eval(y, c), alg_unit(y.target()));
            CHECK(split_first == direct_first);
            Tensor2 split_second =
                outer_act(alg_unit(x.source()), kappa.eval(c, x), alg_word(y)) +
                outer_act(alg_word(x), kappa.eval(c, y), alg_unit(y.target()));
            CHECK(split_second == direct_second);
        }
    }
}

TEST_CASE("memoized evaluation is safe under concurrent use") {
    Signature sig = make_surface(1, 2);
    DoubleBracket kappa = kappa_bracket(sig);
    Sampler rnd(sig, 47);
    std::vector<std::pair<Word, Word>> pairs;
    for (int i = 0; i < 40; ++i)
        pairs.emplace_back(rnd.word(6), rnd.word(6));

    std::vector<Tensor2> serial;
    for (const auto& [a, b] : pairs)
        serial.push_back(kappa.eval(a, b));

    DoubleBracket fresh = kappa_bracket(sig);
    std::vector<std::vector<Tensor2>> results(4, std::vector<Tensor2>(pairs.size()));
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            for (std::size_t i = 0; i < pairs.size(); ++i)
                results[std::size_t(t)][i] = fresh.eval(pairs[i].first, pairs[i].second);
        });
    for (auto& th : threads)
        th.join();
    for (int t = 0; t < 4; ++t)
        for (std::size_t i = 0; i < pairs.size(); ++i)
            CHECK(results[std::size_t(t)][i] == serial[i]);
}
