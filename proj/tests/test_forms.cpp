#include "loopalg/forms.hpp"
#include "loopalg/randomgen.hpp"
#include "loopalg/textio.hpp"

#include <doctest.h>

using namespace loopalg;

namespace {

Word gen(const Signature& sig, GenKind k, int i, int exp = 1) {
    return sig.gen_word(sig.find(k, i), exp);
}

// A (x)_S A expansion of a one-form: u . (dc) . v = u (x) cv - uc (x) v.
Tensor2 expand_form(const Signature& sig, const OneForm& omega) {
    Tensor2 out;
    for (const auto& [c, t] : omega.coeffs) {
        const Word cw = sig.gen_word(c);
        for (const auto& [uw, q] : t.terms()) {
            const Word v = d_cofactor(sig, c, uw.second);
            out.add({uw.first, *compose(cw, v)}, q);
            out.add({*compose(uw.first, cw), v}, -q);
        }
    }
    return out;
}

void check_typing(const Signature& sig, const OneForm& omega) {
    for (const auto& [c, t] : omega.coeffs) {
        const int s = sig.gen(c).source;
        for (const auto& [uw, q] : t.terms()) {
            (void)q;
            CHECK(uw.first.target() == s);
            CHECK(uw.second.source() == s);
        }
    }
}

} // namespace

TEST_CASE("differential on identities and letters") {
    Signature sig = make_surface(1, 1);
    CHECK(differential(sig, Word::identity(0)).is_zero());
    CHECK(differential(sig, Word::identity(1)).is_zero());

    Word a = gen(sig, GenKind::alpha, 1);
    OneForm da = differential(sig, a);
    CHECK(da.coeffs.size() == 1);
    CHECK(da.coeffs.at(sig.find(GenKind::alpha, 1)) == tensor2(Word::identity(0), a));
}

TEST_CASE("differential Leibniz expansion") {
    Signature sig = make_surface(1, 1);
    Word a = gen(sig, GenKind::alpha, 1), b = gen(sig, GenKind::beta, 1);
    Word ab = *compose(a, b);
    OneForm dab = differential(sig, ab);
    const int ia = sig.find(GenKind::alpha, 1), ib = sig.find(GenKind::beta, 1);
    CHECK(dab.coeffs.at(ia) == tensor2(Word::identity(0), ab));
    CHECK(dab.coeffs.at(ib) == tensor2(a, b));
    check_typing(sig, dab);
}

TEST_CASE("differential satisfies d(xy) = dx.y + x.dy") {
    for (auto [g, n] : {std::pair{1, 1}, std::pair{0, 2}}) {
        Signature sig = make_surface(g, n);
        Sampler rnd(sig, 3);
        for (int i = 0; i < 60; ++i) {
            auto [x, y] = rnd.composable_pair(5);
            OneForm lhs = differential(sig, *compose(x, y));
            OneForm rhs = form_act_right(differential(sig, x), y) +
                          form_act_left(x, differential(sig, y));
            CHECK(lhs == rhs);
            check_typing(sig, lhs);
        }
    }
}

TEST_CASE("differential lands in the kernel of mult") {
    Signature sig = make_surface(1, 2);
    Sampler rnd(sig, 5);
    for (int i = 0; i < 60; ++i) {
        Word w = rnd.word(6);
        Tensor2 expanded = expand_form(sig, differential(sig, w));
        CHECK(mult2(expanded).is_zero());
        // and the expansion telescopes to 1 (x) w - w (x) 1
        Tensor2 want = tensor2(Word::identity(w.source()), w) -
                       tensor2(w, Word::identity(w.target()));
        CHECK(expanded == want);
    }
}

TEST_CASE("fox partial on generators and inverses") {
    Signature sig = make_surface(1, 1);
    const int ia = sig.find(GenKind::alpha, 1);
    Word a = gen(sig, GenKind::alpha, 1);
    Word b = gen(sig, GenKind::beta, 1);
    CHECK(fox_partial(sig, ia, a) == tensor2(Word::identity(0), Word::identity(0)));
    CHECK(fox_partial(sig, ia, b).is_zero());
    Word ainv = gen(sig, GenKind::alpha, 1, -1);
    CHECK(fox_partial(sig, ia, ainv) == -tensor2(ainv, ainv));

    // endpoints of the delta partial
    const int id = sig.find(GenKind::delta, 1);
    Word d = gen(sig, GenKind::delta, 1);
    CHECK(fox_partial(sig, id, d) == tensor2(Word::identity(1), Word::identity(0)));
}

TEST_CASE("reconstruct is the identity") {
    Signature sig = make_surface(1, 1);
    Word a = gen(sig, GenKind::alpha, 1), b = gen(sig, GenKind::beta, 1);
    OneForm dab = differential(sig, *compose(a, b));
    CHECK(reconstruct(sig, dab) == dab);

    OneForm basis = basis_form(sig, sig.find(GenKind::delta, 1));
    CHECK(reconstruct(sig, basis) == basis);

    Sampler rnd(sig, 7);
    for (int i = 0; i < 60; ++i) {
        OneForm omega = rnd.one_form(2, 4);
        CHECK(reconstruct(sig, omega) == omega);
        check_typing(sig, omega);
    }
}

TEST_CASE("reconstruct on the tensor backend") {
    Signature sig = Signature::tensor_algebra(3);
    Sampler rnd(sig, 9);
    for (int i = 0; i < 40; ++i) {
        OneForm omega = rnd.one_form(2, 4);
        CHECK(reconstruct(sig, omega) == omega);
    }
}

TEST_CASE("one-form actions preserve typing") {
    Signature sig = make_surface(1, 2);
    Sampler rnd(sig, 11);
    for (int i = 0; i < 40; ++i) {
        OneForm omega = rnd.one_form(2, 3);
        OneForm acted = form_act_left(alg_word(rnd.word(3)), omega);
        acted = form_act_right(acted, alg_word(rnd.word(3)));
        check_typing(sig, acted);
    }
}

TEST_CASE("connection flavour") {
    Signature sig = make_surface(1, 1);
    Connection conn = nabla_basis(sig);
    CHECK(conn.flavor == Connection::Flavor::basis_flat);
    CHECK_NOTHROW(require_basis_flat(conn));
}
