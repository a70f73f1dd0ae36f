#pragma once

#include "loopalg/alg.hpp"

namespace loopalg {

// Element of A (x) A, carrying both the outer bimodule structure
// x.(a(x)b).y = xa (x) by and the inner one x.in (a(x)b) .in y = ay (x) xb.
using Tensor2 = LinComb<std::pair<Word, Word>>;

inline Tensor2 tensor2(const Word& p, const Word& q, Rational c = Rational(1)) {
    return Tensor2::single({p, q}, c);
}

Tensor2 outer_act(const AlgElem& a, const Tensor2& t, const AlgElem& b);
Tensor2 outer_act(const Word& a, const Tensor2& t, const Word& b);
Tensor2 inner_act(const AlgElem& a, const Tensor2& t, const AlgElem& b);
Tensor2 inner_act(const Word& a, const Tensor2& t, const Word& b);

// p (x) q  |->  pq
AlgElem mult2(const Tensor2& t);

// p (x) q  |->  q (x) p
Tensor2 flip(const Tensor2& t);

} // namespace loopalg
