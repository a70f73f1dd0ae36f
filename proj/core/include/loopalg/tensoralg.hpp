#pragma once

#include "loopalg/divergence.hpp"

#include <vector>

namespace loopalg {

// Rational pairing matrix on the letter space of T(W): P[i][j] = <w_i, w_j>
// with 0-based storage for 1-based letters.
struct PairingMatrix {
    int dim = 0;
    std::vector<std::vector<Rational>> entries;

    static PairingMatrix zero(int dim);
    const Rational& at(int i, int j) const { return entries[std::size_t(i - 1)][std::size_t(j - 1)]; }
    void set(int i, int j, const Rational& q) { entries[std::size_t(i - 1)][std::size_t(j - 1)] = q; }
    bool is_skew() const;
};

// The double bracket on T(W) induced by the pairing, as a generator table
// <w_i, w_j> = P[i][j] (empty (x) empty) extended by the Leibniz machinery.
// The explicit double-sum expansion of the same bracket is kept as a
// brute-force oracle in the test suites.
DoubleBracket pairing_bracket(const Signature& sig, const PairingMatrix& p);

// phi and delta for the pairing bracket with the basis-flat connection on
// {dw_i}; thin wrappers over the shared divergence engine.
TripleTrace phi_tensor(const Signature& sig, const PairingMatrix& p, const Word& a);
TraceTensor2 delta_tensor(const Signature& sig, const PairingMatrix& p, const TraceElem& t);

} // namespace loopalg
