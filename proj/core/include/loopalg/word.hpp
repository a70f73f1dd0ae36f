#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace loopalg {

// One letter of a path word: a generator id (index into the ambient
// Signature's generator list) raised to +1 or -1, with the endpoints the
// letter has after applying the exponent.
struct Letter {
    int16_t gen = 0;
    int8_t exp = 1;
    int8_t src = 0;
    int8_t tgt = 0;

    Letter inverse() const { return Letter{gen, int8_t(-exp), tgt, src}; }
    bool is_inverse_of(const Letter& o) const { return gen == o.gen && exp == -o.exp; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Generator ids are assigned in the fixed total order (kind, index), so the
// canonical letter order is (gen id, exponent) with +1 before -1.
inline bool letter_less(const Letter& a, const Letter& b) {
    if (a.gen != b.gen)
        return a.gen < b.gen;
    return a.exp > b.exp;
}

namespace detail {
struct WordData {
    std::vector<Letter> letters;
    int8_t src = 0;
    int8_t tgt = 0;
    std::size_t hash = 0;
};
} // namespace detail

// A reduced composable word in the free groupoid (or free monoid, for the
// tensor-algebra backend). Words are interned in a global pool, so equality
// is pointer equality and hashing is retrieval of a precomputed value.
// Immutable and freely shareable between threads.
class Word {
public:
    Word() : Word(identity(0)) {}

    static Word identity(int object);

    // Reduces the given composable letter chain (cancelling c c^-1 pairs) and
    // interns the result. `object_if_empty` names the base object when the
    // chain reduces to an identity; it defaults to the chain's source. Throws
    // std::invalid_argument on a non-composable chain.
    static Word of_letters(std::span<const Letter> letters, int object_if_empty = -1);
    static Word of_letter(const Letter& l) { return of_letters({&l, 1}); }

    bool is_identity() const { return d_->letters.empty(); }
    int source() const { return d_->src; }
    int target() const { return d_->tgt; }
    bool is_loop() const { return d_->src == d_->tgt; }
    std::size_t size() const { return d_->letters.size(); }
    const std::vector<Letter>& letters() const { return d_->letters; }
    const Letter& letter(std::size_t i) const { return d_->letters[i]; }
    std::size_t hash() const { return d_->hash; }

    // letters [0, i) as a word; identity at source() when i == 0.
    Word prefix(std::size_t i) const;
    // letters [i, size()) as a word; identity at target() when i == size().
    Word suffix(std::size_t i) const;
    // letters rotated left by k; only meaningful for loop words.
    Word rotated(std::size_t k) const;
    Word inverse() const;

    friend bool operator==(const Word& a, const Word& b) { return a.d_ == b.d_; }
    friend bool operator!=(const Word& a, const Word& b) { return a.d_ != b.d_; }
    // Canonical total order: identities first (by object), then by length,
    // then lexicographically in the letter order.
    friend bool operator<(const Word& a, const Word& b);

private:
    explicit Word(const detail::WordData* d) : d_(d) {}
    const detail::WordData* d_;
};

// Reduced concatenation, or nullopt when target(x) != source(y).
std::optional<Word> compose(const Word& x, const Word& y);

// Cyclic words: trace classes of loop words. The canonical representative is
// the lexicographically least rotation of the cyclically reduced loop; the
// unit class (trace of any 1_v) is object-independent and is represented by
// the identity at object 0.
class CyclicWord {
public:
    static CyclicWord unit() { return CyclicWord(Word::identity(0)); }
    // Canonical class of a loop word. Throws on non-loop input; callers that
    // need "non-loops vanish" semantics go through trace_project.
    static CyclicWord of_loop(const Word& w);

    const Word& rep() const { return rep_; }
    bool is_unit() const { return rep_.is_identity(); }

    friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const CyclicWord& a, const CyclicWord& b) { return a.rep_ != b.rep_; }
    friend bool operator<(const CyclicWord& a, const CyclicWord& b) { return a.rep_ < b.rep_; }

private:
    explicit CyclicWord(const Word& w) : rep_(w) {}
    Word rep_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

} // namespace loopalg
