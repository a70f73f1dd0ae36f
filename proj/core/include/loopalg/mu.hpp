#pragma once

#include "loopalg/divergence.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace loopalg {

// Rotation numbers of simple generator representatives for the standard
// framing: rot(a_i) = 1/2, rot(b_i) = -1/2, rot(g_j) = 1/2,
// rot(d_j) = 2g + j - 1/2. Retained as metadata: the generator table of mu
// depends on it only through the two monogon counts rot +- 1/2, which makes
// it a mutation-testing knob for the verification harness.
struct FramingData {
    std::map<int, Rational> rot;
    static FramingData standard(const Signature& sig);
};

// The framed self-intersection operation mu = mu_r + mu_l, defined
// algebraically by its generator table and the product rule
//   mu(ab) = mu(a).b + a.mu(b) + (|.| (x) id) kappa(a,b) + (id (x) |.|) kappa(b,a),
// with mu(1_v) = 0 and the inverse-letter value solved from mu(c c^-1) = 0.
class MuOperator {
public:
    explicit MuOperator(const Signature& sig);
    MuOperator(const Signature& sig, const FramingData& framing);

    const Signature& signature() const { return sig_; }
    const DoubleBracket& kappa() const { return kappa_; }
    const TripleTrace& generator_value(int gen) const;

    TripleTrace eval(const Word& w) const;
    TripleTrace eval(const AlgElem& x) const;

    struct Check {
        Word word;
        TripleTrace residual;
        bool ok = false;
    };
    // Residuals mu(w) + phi_{kappa, nabla}(w), expected to vanish identically.
    std::vector<Check> verify_main_theorem(const std::vector<Word>& words) const;

private:
    Signature sig_;
    DoubleBracket kappa_;
    std::map<int, TripleTrace> table_;
    struct Memo {
        std::mutex mutex;
        std::unordered_map<Word, TripleTrace, WordHash> values;
    };
    std::unique_ptr<Memo> memo_;
};

std::map<int, TripleTrace> mu_generator_table(const Signature& sig, const FramingData& framing);

} // namespace loopalg
