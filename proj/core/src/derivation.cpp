#include "loopalg/derivation.hpp"

namespace loopalg {

AlgElem Derivation::on_letter(const Letter& l) const {
    auto it = gen_values.find(l.gen);
    if (it == gen_values.end())
        return AlgElem{};
    if (l.exp == 1)
        return it->second;
    Word cinv = Word::of_letter(l); // l already is c^-1
    return -alg_mul(cinv, alg_mul(it->second, cinv));
}

AlgElem Derivation::eval(const Word& w) const {
    AlgElem r;
    for (std::size_t i = 0; i < w.size(); ++i) {
        AlgElem mid = on_letter(w.letter(i));
        if (mid.is_zero())
            continue;
        r += alg_mul(w.prefix(i), alg_mul(mid, w.suffix(i + 1)));
    }
    return r;
}

AlgElem Derivation::eval(const AlgElem& x) const {
    AlgElem r;
    for (const auto& [w, q] : x.terms())
        r += eval(w) * q;
    return r;
}

Derivation& Derivation::operator+=(const Derivation& o) {
    for (const auto& [g, v] : o.gen_values) {
        auto& mine = gen_values[g];
        mine += v;
        if (mine.is_zero())
            gen_values.erase(g);
    }
    return *this;
}

Derivation& Derivation::operator*=(const Rational& s) {
    for (auto& [g, v] : gen_values)
        v *= s;
    return *this;
}

Tensor2 DoubleDerivation::on_letter(const Letter& l) const {
    auto it = gen_values.find(l.gen);
    if (it == gen_values.end())
        return Tensor2{};
    if (l.exp == 1)
        return it->second;
    Word cinv = Word::of_letter(l);
    return -outer_act(cinv, it->second, cinv);
}

Tensor2 DoubleDerivation::eval(const Word& w) const {
    Tensor2 r;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Tensor2 mid = on_letter(w.letter(i));
        if (mid.is_zero())
            continue;
        r += outer_act(w.prefix(i), mid, w.suffix(i + 1));
    }
    return r;
}

Tensor2 DoubleDerivation::eval(const AlgElem& x) const {
    Tensor2 r;
    for (const auto& [w, q] : x.terms())
        r += eval(w) * q;
    return r;
}

DoubleDerivation& DoubleDerivation::operator+=(const DoubleDerivation& o) {
    for (const auto& [g, v] : o.gen_values) {
        auto& mine = gen_values[g];
        mine += v;
        if (mine.is_zero())
            gen_values.erase(g);
    }
    return *this;
}

DoubleDerivation& DoubleDerivation::operator*=(const Rational& s) {
    for (auto& [g, v] : gen_values)
        v *= s;
    return *this;
}

Derivation mult_compose(const DoubleDerivation& theta) {
    Derivation f;
    for (const auto& [g, v] : theta.gen_values) {
        AlgElem m = mult2(v);
        if (!m.is_zero())
            f.gen_values.emplace(g, std::move(m));
    }
    return f;
}

DoubleDerivation dd_inner_act(const AlgElem& a, const DoubleDerivation& theta, const AlgElem& b) {
    DoubleDerivation r;
    for (const auto& [g, v] : theta.gen_values) {
        Tensor2 t = inner_act(a, v, b);
        if (!t.is_zero())
            r.gen_values.emplace(g, std::move(t));
    }
    return r;
}

DoubleDerivation ad_e(const Signature& sig) {
    DoubleDerivation r;
    for (int id = 0; id < sig.num_generators(); ++id) {
        const Generator& g = sig.gen(id);
        Tensor2 t = tensor2(sig.gen_word(id), Word::identity(g.target));
        t -= tensor2(Word::identity(g.source), sig.gen_word(id));
        r.gen_values.emplace(id, std::move(t));
    }
    return r;
}

Tensor2 ad_ad_e(const Signature& sig, const AlgElem& x, const AlgElem& y) {
    Tensor2 r;
    for (int j = 0; j < sig.num_objects(); ++j) {
        Word e = Word::identity(j);
        AlgElem ex = alg_mul(e, x);       // 1_j x
        AlgElem yex = alg_mul(y, ex);     // y 1_j x
        AlgElem ye = alg_mul(y, e);       // y 1_j
        AlgElem xe = alg_mul(x, e);       // x 1_j
        AlgElem xey = alg_mul(xe, y);     // x 1_j y
        for (const auto& [w, q] : yex.terms())
            r.add({w, e}, -q);
        AlgElem ey = alg_mul(e, y);
        for (const auto& [wp, qp] : ex.terms())
            for (const auto& [wq, qq] : ey.terms())
                r.add({wp, wq}, qp * qq);
        for (const auto& [wp, qp] : ye.terms())
            for (const auto& [wq, qq] : xe.terms())
                r.add({wp, wq}, qp * qq);
        for (const auto& [w, q] : xey.terms())
            r.add({e, w}, -q);
    }
    return r;
}

} // namespace loopalg
