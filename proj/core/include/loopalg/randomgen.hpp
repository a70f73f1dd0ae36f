#pragma once

#include "loopalg/brackets.hpp"
#include "loopalg/forms.hpp"

#include <random>

namespace loopalg {

// Seeded source of random words, coefficients, derivations and brackets for
// the property suites. Uses mt19937_64 with explicit modulo draws so that a
// fixed seed replays byte-identically on every platform.
class Sampler {
public:
    Sampler(const Signature& sig, uint64_t seed) : sig_(sig), rng_(seed) {}

    uint64_t draw(uint64_t bound); // uniform-ish in [0, bound)
    long draw_signed(long lo, long hi);

    Rational coeff(); // small nonzero rational

    // Random reduced word of length <= max_len starting anywhere (or at
    // `from` when given); never backtracks, so the result needs no further
    // reduction.
    Word word(int max_len);
    Word word_from(int from, int max_len);
    // Random reduced word with both endpoints fixed (rejection sampling).
    Word word_between(int from, int to, int max_len);
    Word loop(int max_len); // loop at a random object
    Word loop_at(int from, int max_len);
    // Composable pair (a, b): b starts where a ends.
    std::pair<Word, Word> composable_pair(int max_len);

    // Possibly unreduced composable letter chain (random backtracking
    // allowed); for the confluence suites.
    std::vector<Letter> raw_chain(int len);

    // Random double-derivation table with monomial values of length
    // <= value_len (typed source(p) = source(c), target(q) = target(c)).
    DoubleDerivation dd_table(int value_len);
    // Random derivation table with values in A(source(c), target(c)).
    Derivation derivation_table(int value_len);
    // Random generator-pair table T with the double-bracket typing.
    DoubleBracket bracket_table(int value_len);
    // Pi = (T - T°) + 1/2 ad_{ad_e}: a random bracket with Pi + Pi° = ad_{ad_e}.
    DoubleBracket bracket_with_ad_defect(int value_len);
    // Random one-form with <= terms coefficient monomials per generator.
    OneForm one_form(int terms, int len);
    // Random skew-symmetric pairing on a tensor-algebra signature.
    std::vector<std::vector<Rational>> skew_entries(int dim);

private:
    Word walk(int from, int len);

    const Signature& sig_;
    std::mt19937_64 rng_;
};

} // namespace loopalg
