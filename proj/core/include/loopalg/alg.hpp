#pragma once

#include "loopalg/lincomb.hpp"
#include "loopalg/signature.hpp"
#include "loopalg/word.hpp"

namespace loopalg {

// Element of the category algebra A = K Groupoid: a finitely supported
// rational combination of reduced composable words.
using AlgElem = LinComb<Word>;

// Element of the trace space |A|: a combination of cyclic word classes.
using TraceElem = LinComb<CyclicWord>;

inline AlgElem alg_word(const Word& w, Rational q = Rational(1)) {
    return AlgElem::single(w, q);
}
inline AlgElem alg_unit(int object) { return alg_word(Word::identity(object)); }

// Sum of all object idempotents: the multiplicative unit of A.
AlgElem alg_one(const Signature& sig);

// [x][y] = [xy] when composable, 0 otherwise.
AlgElem word_compose(const Word& x, const Word& y);

AlgElem alg_mul(const AlgElem& x, const AlgElem& y);
AlgElem alg_mul(const Word& x, const AlgElem& y);
AlgElem alg_mul(const AlgElem& x, const Word& y);

// Groupoid inversion of a word (letters reversed, exponents negated).
Word alg_inverse(const Word& w);

// Projection A -> |A|: non-loop words die, loop words map to their canonical
// cyclic class, every identity maps to the shared unit class.
TraceElem trace_project(const Word& w);
TraceElem trace_project(const AlgElem& x);

// A loop representative of the class (the canonical one).
Word trace_representative(const CyclicWord& c);

} // namespace loopalg
