#pragma once

#include "loopalg/derivation.hpp"

#include <map>

namespace loopalg {

// Element of Omega^1 in the dualisable basis. The basis element at the
// generator c is B_c = (dc)c^-1 on the groupoid side and B_c = dc on the
// tensor-algebra side; a coefficient entry (u, w) at c denotes u . B_c . w.
// Both slots of B_c live at source(c), so target(u) = source(w) = source(c).
struct OneForm {
    std::map<int, Tensor2> coeffs;

    bool is_zero() const;
    OneForm& operator+=(const OneForm& o);
    OneForm& operator-=(const OneForm& o);
    OneForm& operator*=(const Rational& s);
    friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
    friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
    friend OneForm operator*(const Rational& s, OneForm a) { return a *= s; }
    OneForm operator-() const;
    friend bool operator==(const OneForm& a, const OneForm& b) { return a.coeffs == b.coeffs; }

    void add(int gen, const Word& u, const Word& w, const Rational& q);
};

OneForm basis_form(const Signature& sig, int gen);

// Bimodule actions a . omega and omega . b (left factor u and right factor w).
OneForm form_act_left(const AlgElem& a, const OneForm& omega);
OneForm form_act_left(const Word& a, const OneForm& omega);
OneForm form_act_right(const OneForm& omega, const AlgElem& b);
OneForm form_act_right(const OneForm& omega, const Word& b);

// The actual d-cofactor of a stored monomial: u . B_c . w = u . (dc) . v with
// v = c^-1 w on the groupoid side and v = w on the tensor side.
Word d_cofactor(const Signature& sig, int gen, const Word& w);
// Inverse direction: the stored right slot for u . (dc) . v.
Word stored_right(const Signature& sig, int gen, const Word& v);
AlgElem stored_right(const Signature& sig, int gen, const AlgElem& v);

// Universal derivation d followed by the basis rewrite
//   u . d(c) . v    |->  (u, c v) at c,
//   u . d(c^-1) . v |->  -(u c^-1, v) at c;
// d kills every identity.
OneForm differential(const Signature& sig, const Word& w);
OneForm differential(const Signature& sig, const AlgElem& x);

// The dual-basis double derivation: del_c(c') = delta_{c c'} 1_s (x) 1_t.
DoubleDerivation fox_derivation(const Signature& sig, int gen);
Tensor2 fox_partial(const Signature& sig, int gen, const AlgElem& a);
Tensor2 fox_partial(const Signature& sig, int gen, const Word& w);

// Round trip through the dual basis: expands omega into a0 d(a1) shape,
// contracts with every del_c and rebuilds the coefficient table. Always equal
// to the input; exercised as a self-check of the two code paths.
OneForm reconstruct(const Signature& sig, const OneForm& omega);

// Connections on Omega^1. Only basis-flat connections are supported: the
// connection annihilating every B_c (nabla_C on the groupoid, nabla_W on the
// tensor algebra).
struct Connection {
    enum class Flavor { basis_flat };
    Flavor flavor = Flavor::basis_flat;
};

Connection nabla_basis(const Signature& sig);
void require_basis_flat(const Connection& conn);

} // namespace loopalg
