#include "loopalg/mu.hpp"

#include <stdexcept>

namespace loopalg {

FramingData FramingData::standard(const Signature& sig) {
    FramingData fr;
    const Rational half = frac(1, 2);
    for (int id = 0; id < sig.num_generators(); ++id) {
        const Generator& g = sig.gen(id);
        switch (g.kind) {
        case GenKind::alpha:
        case GenKind::gamma:
            fr.rot.emplace(id, half);
            break;
        case GenKind::beta:
            fr.rot.emplace(id, -half);
            break;
        case GenKind::delta:
            fr.rot.emplace(id, Rational(2 * sig.genus() + g.index) - half);
            break;
        default:
            throw std::invalid_argument("framing data lives on a surface signature");
        }
    }
    return fr;
}

std::map<int, TripleTrace> mu_generator_table(const Signature& sig, const FramingData& framing) {
    if (!sig.invertible_letters())
        throw std::invalid_argument("mu lives on a surface signature");
    std::map<int, TripleTrace> table;
    const Rational half = frac(1, 2);
    const CyclicWord unit = CyclicWord::unit();
    const Word one0 = Word::identity(0);
    for (int id = 0; id < sig.num_generators(); ++id) {
        const Generator& g = sig.gen(id);
        const Word c = sig.gen_word(id);
        const Rational rot = framing.rot.at(id);
        TripleTrace v;
        // Monogon insertions: rot + 1/2 of them normalise the right half,
        // each contributing +|1_0| (x) c; rot - 1/2 normalise the left half,
        // each contributing -c (x) |1_0|.
        v += triple_left(unit, c, rot + half);
        v += triple_right(c, unit, -(rot - half));
        // Base-point contribution of the generator itself.
        switch (g.kind) {
        case GenKind::alpha:
        case GenKind::gamma:
            v += triple_right(one0, CyclicWord::of_loop(c), Rational(-1));
            break;
        case GenKind::beta:
            v += triple_left(CyclicWord::of_loop(c), one0, Rational(-1));
            break;
        default:
            break;
        }
        table.emplace(id, std::move(v));
    }
    return table;
}

MuOperator::MuOperator(const Signature& sig) : MuOperator(sig, FramingData::standard(sig)) {}

MuOperator::MuOperator(const Signature& sig, const FramingData& framing)
    : sig_(sig), kappa_(kappa_bracket(sig)), table_(mu_generator_table(sig, framing)),
      memo_(std::make_unique<Memo>()) {}

const TripleTrace& MuOperator::generator_value(int gen) const { return table_.at(gen); }

TripleTrace MuOperator::eval(const Word& w) const {
    if (w.is_identity())
        return TripleTrace{};
    if (w.size() == 1) {
        const Letter& l = w.letter(0);
        if (l.exp == 1)
            return table_.at(l.gen);
        // 0 = mu(c c^-1) = mu(c).c^-1 + c.mu(c^-1)
        //   + (|.| (x) id) kappa(c, c^-1) + (id (x) |.|) kappa(c^-1, c)
        Word c = Word::of_letter(l.inverse());
        Word cinv = w;
        TripleTrace sum = triple_act(alg_unit(l.tgt), table_.at(l.gen), alg_word(cinv));
        sum += trace_left(kappa_.eval(c, cinv));
        sum += trace_right(kappa_.eval(cinv, c));
        return -triple_act(alg_word(cinv), sum, alg_unit(l.tgt));
    }

    {
        std::lock_guard lock(memo_->mutex);
        auto it = memo_->values.find(w);
        if (it != memo_->values.end())
            return it->second;
    }

    Word head = w.prefix(1), rest = w.suffix(1);
    TripleTrace r = triple_act(alg_unit(head.source()), eval(head), alg_word(rest));
    r += triple_act(alg_word(head), eval(rest), alg_unit(rest.target()));
    r += trace_left(kappa_.eval(head, rest));
    r += trace_right(kappa_.eval(rest, head));

    std::lock_guard lock(memo_->mutex);
    memo_->values.emplace(w, r);
    return r;
}

TripleTrace MuOperator::eval(const AlgElem& x) const {
    TripleTrace r;
    for (const auto& [w, q] : x.terms())
        r += eval(w) * q;
    return r;
}

std::vector<MuOperator::Check> MuOperator::verify_main_theorem(
    const std::vector<Word>& words) const {
    std::vector<Check> out;
    const Connection conn = nabla_basis(sig_);
    for (const Word& w : words) {
        Check chk;
        chk.word = w;
        chk.residual = eval(w) + phi_map(sig_, kappa_, conn, w);
        chk.ok = chk.residual.is_zero();
        out.push_back(std::move(chk));
    }
    return out;
}

} // namespace loopalg
