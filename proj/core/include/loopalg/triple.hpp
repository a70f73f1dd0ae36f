#pragma once

#include "loopalg/tensor2.hpp"

namespace loopalg {

// Element of |A^e| = |A| (x) |A|.
using TraceTensor2 = LinComb<std::pair<CyclicWord, CyclicWord>>;

// Element of |trip(A)| = (A (x) |A|) + (|A| (x) A). The algebra acts on the
// non-trace factor only: a.(x(x)|y|).b = axb (x) |y| and
// a.(|x|(x)y).b = |x| (x) ayb.
struct TripleTrace {
    LinComb<std::pair<Word, CyclicWord>> right; // A (x) |A|
    LinComb<std::pair<CyclicWord, Word>> left;  // |A| (x) A

    bool is_zero() const { return right.is_zero() && left.is_zero(); }

    TripleTrace& operator+=(const TripleTrace& o) {
        right += o.right;
        left += o.left;
        return *this;
    }
    TripleTrace& operator-=(const TripleTrace& o) {
        right -= o.right;
        left -= o.left;
        return *this;
    }
    TripleTrace& operator*=(const Rational& s) {
        right *= s;
        left *= s;
        return *this;
    }
    friend TripleTrace operator+(TripleTrace a, const TripleTrace& b) { return a += b; }
    friend TripleTrace operator-(TripleTrace a, const TripleTrace& b) { return a -= b; }
    friend TripleTrace operator*(const Rational& s, TripleTrace a) { return a *= s; }
    friend TripleTrace operator*(TripleTrace a, const Rational& s) { return a *= s; }
    TripleTrace operator-() const {
        TripleTrace r;
        r.right = -right;
        r.left = -left;
        return r;
    }
    friend bool operator==(const TripleTrace& a, const TripleTrace& b) {
        return a.right == b.right && a.left == b.left;
    }
};

TripleTrace triple_right(const Word& x, const CyclicWord& y, Rational c = Rational(1));
TripleTrace triple_left(const CyclicWord& x, const Word& y, Rational c = Rational(1));

// (|.| (x) id): p (x) q |-> |p| (x) q, landing in the left part.
TripleTrace trace_left(const Tensor2& t);
// (id (x) |.|): p (x) q |-> p (x) |q|, landing in the right part.
TripleTrace trace_right(const Tensor2& t);

TripleTrace triple_act(const AlgElem& a, const TripleTrace& t, const AlgElem& b);
TripleTrace triple_act(const Word& a, const TripleTrace& t, const Word& b);

// Fold: x (x) |y| + |z| (x) w |-> x (x) |y| + w (x) |z|; output has no left part.
TripleTrace fold(const TripleTrace& t);

// |mult|: both parts collapse to |first| (x) |second|.
TraceTensor2 mult_trace(const TripleTrace& t);

// sym(u (x) v) = u (x) v + v (x) u.
TraceTensor2 sym(const TraceTensor2& t);

} // namespace loopalg
