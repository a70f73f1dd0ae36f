#pragma once

#include "loopalg/derivation.hpp"
#include "loopalg/triple.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace loopalg {

// A double bracket tabulated on generator pairs and extended by the two
// Leibniz rules: the outer rule in the second slot, the inner rule in the
// first, with identities mapping to zero. The inverse-letter formulas are the
// unique ones compatible with Pi(a, c c^-1) = 0 and Pi(c c^-1, b) = 0:
//   Pi(a, c^-1) = -c^-1 . Pi(a, c) . c^-1               (outer action)
//   Pi(c^-1, b) = -(Pi'(c,b) c^-1) (x) (c^-1 Pi''(c,b)).
// Evaluation is memoized per (word, word) pair; the recursion always splits
// at the leftmost letter, and split-position independence is a tested
// property rather than an implementation degree of freedom.
class DoubleBracket {
public:
    using Table = std::map<std::pair<int, int>, Tensor2>;

    DoubleBracket() : memo_(std::make_unique<Memo>()) {}
    explicit DoubleBracket(Table table)
        : table_(std::move(table)), memo_(std::make_unique<Memo>()) {}
    DoubleBracket(const DoubleBracket& o)
        : table_(o.table_), memo_(std::make_unique<Memo>()) {}
    DoubleBracket& operator=(const DoubleBracket& o) {
        table_ = o.table_;
        memo_ = std::make_unique<Memo>();
        return *this;
    }
    DoubleBracket(DoubleBracket&&) = default;
    DoubleBracket& operator=(DoubleBracket&&) = default;

    const Table& table() const { return table_; }
    Tensor2 on_generators(int c1, int c2) const;

    Tensor2 eval(const Word& a, const Word& b) const;
    Tensor2 eval(const AlgElem& a, const AlgElem& b) const;

private:
    Tensor2 eval_letter_letter(const Letter& la, const Letter& lb) const;

    Table table_;
    struct PairHash {
        std::size_t operator()(const std::pair<Word, Word>& p) const {
            std::size_t h = p.first.hash() * 0x9e3779b97f4a7c15ull;
            return h ^ (p.second.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
        }
    };
    struct Memo {
        std::mutex mutex;
        std::unordered_map<std::pair<Word, Word>, Tensor2, PairHash> values;
    };
    std::unique_ptr<Memo> memo_;
};

// Pi°(a, b) = flip(Pi(b, a)).
Tensor2 db_inversion_eval(const DoubleBracket& pi, const AlgElem& a, const AlgElem& b);
Tensor2 db_inversion_eval(const DoubleBracket& pi, const Word& a, const Word& b);

// The double derivation Pi(a, .) as a generator table.
DoubleDerivation as_double_derivation(const Signature& sig, const DoubleBracket& pi,
                                      const AlgElem& a);

// The intersection double bracket of the surface, tabulated on generators.
DoubleBracket kappa_bracket(const Signature& sig);

// Ham_Pi: the derivation  c |-> mult2(Pi(rep, c))  summed over the classes of
// the trace element; representative choice does not matter.
Derivation ham(const Signature& sig, const DoubleBracket& pi, const TraceElem& t);

} // namespace loopalg
