#include "loopalg/forms.hpp"

#include <stdexcept>

namespace loopalg {

bool OneForm::is_zero() const {
    for (const auto& [g, t] : coeffs)
        if (!t.is_zero())
            return false;
    return true;
}

OneForm& OneForm::operator+=(const OneForm& o) {
    for (const auto& [g, t] : o.coeffs) {
        auto& mine = coeffs[g];
        mine += t;
        if (mine.is_zero())
            coeffs.erase(g);
    }
    return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
    for (const auto& [g, t] : o.coeffs) {
        auto& mine = coeffs[g];
        mine -= t;
        if (mine.is_zero())
            coeffs.erase(g);
    }
    return *this;
}

OneForm& OneForm::operator*=(const Rational& s) {
    if (loopalg::is_zero(s)) {
        coeffs.clear();
        return *this;
    }
    for (auto& [g, t] : coeffs)
        t *= s;
    return *this;
}

OneForm OneForm::operator-() const {
    OneForm r;
    for (const auto& [g, t] : coeffs)
        r.coeffs.emplace(g, -t);
    return r;
}

void OneForm::add(int gen, const Word& u, const Word& w, const Rational& q) {
    auto& t = coeffs[gen];
    t.add({u, w}, q);
    if (t.is_zero())
        coeffs.erase(gen);
}

OneForm basis_form(const Signature& sig, int gen) {
    const int s = sig.gen(gen).source;
    OneForm r;
    r.add(gen, Word::identity(s), Word::identity(s), Rational(1));
    return r;
}

OneForm form_act_left(const Word& a, const OneForm& omega) {
    OneForm r;
    for (const auto& [g, t] : omega.coeffs)
        for (const auto& [uw, q] : t.terms())
            if (auto au = compose(a, uw.first))
                r.add(g, *au, uw.second, q);
    return r;
}

OneForm form_act_left(const AlgElem& a, const OneForm& omega) {
    OneForm r;
    for (const auto& [wa, qa] : a.terms()) {
        OneForm part = form_act_left(wa, omega);
        part *= qa;
        r += part;
    }
    return r;
}

OneForm form_act_right(const OneForm& omega, const Word& b) {
    OneForm r;
    for (const auto& [g, t] : omega.coeffs)
        for (const auto& [uw, q] : t.terms())
            if (auto wb = compose(uw.second, b))
                r.add(g, uw.first, *wb, q);
    return r;
}

OneForm form_act_right(const OneForm& omega, const AlgElem& b) {
    OneForm r;
    for (const auto& [wb, qb] : b.terms()) {
        OneForm part = form_act_right(omega, wb);
        part *= qb;
        r += part;
    }
    return r;
}

Word d_cofactor(const Signature& sig, int gen, const Word& w) {
    if (!sig.invertible_letters())
        return w;
    auto v = compose(sig.gen_word(gen, -1), w);
    if (!v)
        throw std::logic_error("ill-typed one-form coefficient");
    return *v;
}

Word stored_right(const Signature& sig, int gen, const Word& v) {
    if (!sig.invertible_letters())
        return v;
    auto w = compose(sig.gen_word(gen), v);
    if (!w)
        throw std::logic_error("d-cofactor does not start at the generator's target");
    return *w;
}

AlgElem stored_right(const Signature& sig, int gen, const AlgElem& v) {
    AlgElem r;
    if (!sig.invertible_letters())
        return v;
    Word c = sig.gen_word(gen);
    for (const auto& [w, q] : v.terms())
        if (auto cw = compose(c, w))
            r.add(*cw, q);
    return r;
}

OneForm differential(const Signature& sig, const Word& w) {
    OneForm r;
    const bool inv = sig.invertible_letters();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter& l = w.letter(i);
        Word u = w.prefix(i);
        Word v = w.suffix(i + 1);
        if (l.exp == 1) {
            r.add(l.gen, u, inv ? *compose(Word::of_letter(l), v) : v, Rational(1));
        } else {
            // d(c^-1) = -c^-1 (dc) c^-1, so the monomial u d(c^-1) v becomes
            // -(u c^-1) . B_c . v.
            auto uc = compose(u, Word::of_letter(l));
            r.add(l.gen, *uc, v, Rational(-1));
        }
    }
    return r;
}

OneForm differential(const Signature& sig, const AlgElem& x) {
    OneForm r;
    for (const auto& [w, q] : x.terms()) {
        OneForm part = differential(sig, w);
        part *= q;
        r += part;
    }
    return r;
}

DoubleDerivation fox_derivation(const Signature& sig, int gen) {
    const Generator& g = sig.gen(gen);
    DoubleDerivation r;
    r.gen_values.emplace(gen,
                         tensor2(Word::identity(g.source), Word::identity(g.target)));
    return r;
}

Tensor2 fox_partial(const Signature& sig, int gen, const Word& w) {
    return fox_derivation(sig, gen).eval(w);
}

Tensor2 fox_partial(const Signature& sig, int gen, const AlgElem& a) {
    return fox_derivation(sig, gen).eval(a);
}

OneForm reconstruct(const Signature& sig, const OneForm& omega) {
    // Expand every stored monomial u . B_c . w = u . (dc) . v into the two
    // a0 d(a1) monomials u d(c v) - (u c) d(v); the contraction
    // i_{del_c}(a0 d a1) = a0 . del_c(a1) then runs through the Fox-Leibniz
    // recursion, which is independent of the rewrite used by differential().
    std::vector<std::pair<AlgElem, Word>> pairs; // (a0 with coefficient, a1)
    for (const auto& [g, t] : omega.coeffs) {
        Word c = sig.gen_word(g);
        for (const auto& [uw, q] : t.terms()) {
            Word v = d_cofactor(sig, g, uw.second);
            pairs.emplace_back(alg_word(uw.first, q), *compose(c, v));
            if (!v.is_identity())
                pairs.emplace_back(alg_word(*compose(uw.first, c), -q), v);
        }
    }
    OneForm r;
    for (int g = 0; g < sig.num_generators(); ++g) {
        Tensor2 contraction;
        for (const auto& [a0, a1] : pairs) {
            Tensor2 part = fox_partial(sig, g, a1);
            if (part.is_zero())
                continue;
            contraction += outer_act(a0, part, alg_one(sig));
        }
        for (const auto& [pq, q] : contraction.terms())
            r.add(g, pq.first, stored_right(sig, g, pq.second), q);
    }
    return r;
}

Connection nabla_basis(const Signature&) { return Connection{}; }

void require_basis_flat(const Connection& conn) {
    if (conn.flavor != Connection::Flavor::basis_flat)
        throw std::invalid_argument("only basis-flat connections are supported");
}

} // namespace loopalg
