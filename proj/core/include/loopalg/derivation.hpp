#pragma once

#include "loopalg/tensor2.hpp"

#include <map>

namespace loopalg {

// S-linear derivation A -> A, tabulated on generators and extended by the
// Leibniz rule; f(c^-1) = -c^-1 f(c) c^-1 on inverse letters, f(1_v) = 0.
struct Derivation {
    std::map<int, AlgElem> gen_values;

    AlgElem on_letter(const Letter& l) const;
    AlgElem eval(const Word& w) const;
    AlgElem eval(const AlgElem& x) const;

    Derivation& operator+=(const Derivation& o);
    Derivation& operator*=(const Rational& s);
};

// S-linear double derivation A -> A (x) A (outer structure), tabulated on
// generators; Theta(c^-1) = -c^-1 . Theta(c) . c^-1 with the outer action.
struct DoubleDerivation {
    std::map<int, Tensor2> gen_values;

    Tensor2 on_letter(const Letter& l) const;
    Tensor2 eval(const Word& w) const;
    Tensor2 eval(const AlgElem& x) const;

    DoubleDerivation& operator+=(const DoubleDerivation& o);
    DoubleDerivation& operator*=(const Rational& s);
};

// f = mult o Theta.
Derivation mult_compose(const DoubleDerivation& theta);

// The right A^e-action induced by the inner structure:
// ((a (x) b-bar) . Theta)(x) = Theta'(x) b (x) a Theta''(x).
DoubleDerivation dd_inner_act(const AlgElem& a, const DoubleDerivation& theta, const AlgElem& b);

// The inner double derivation by e = sum_v 1_v (x) 1_v:
// ad_e(x) = x (x) 1_t(x) - 1_s(x) (x) x.
DoubleDerivation ad_e(const Signature& sig);

// The inner double bracket measuring the symmetric defect:
// ad_{ad_e}(x, y) = -y e' x (x) e'' + e' x (x) e'' y + y e' (x) x e'' - e' (x) x e'' y.
Tensor2 ad_ad_e(const Signature& sig, const AlgElem& x, const AlgElem& y);

} // namespace loopalg
