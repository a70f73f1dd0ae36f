#include "loopalg/randomgen.hpp"

#include <stdexcept>

namespace loopalg {

uint64_t Sampler::draw(uint64_t bound) {
    if (bound == 0)
        return 0;
    return rng_() % bound;
}

long Sampler::draw_signed(long lo, long hi) {
    return lo + long(draw(uint64_t(hi - lo + 1)));
}

Rational Sampler::coeff() {
    long num = draw_signed(1, 3);
    if (draw(2))
        num = -num;
    long den = draw_signed(1, 3);
    return frac(num, den);
}

namespace {

// Letters available at an object: positive letters starting there, plus
// inverse letters of generators ending there when the signature is a
// groupoid.
std::vector<Letter> moves_at(const Signature& sig, int obj) {
    std::vector<Letter> out;
    for (int id = 0; id < sig.num_generators(); ++id) {
        const Generator& g = sig.gen(id);
        if (g.source == obj)
            out.push_back(sig.letter(id, 1));
        if (sig.invertible_letters() && g.target == obj)
            out.push_back(sig.letter(id, -1));
    }
    return out;
}

} // namespace

Word Sampler::walk(int from, int len) {
    std::vector<Letter> letters;
    int at = from;
    for (int i = 0; i < len; ++i) {
        std::vector<Letter> moves = moves_at(sig_, at);
        if (!letters.empty()) {
            std::erase_if(moves,
                          [&](const Letter& l) { return l.is_inverse_of(letters.back()); });
        }
        if (moves.empty())
            break;
        letters.push_back(moves[draw(moves.size())]);
        at = letters.back().tgt;
    }
    return Word::of_letters(letters, from);
}

Word Sampler::word(int max_len) { return word_from(int(draw(uint64_t(sig_.num_objects()))), max_len); }

Word Sampler::word_from(int from, int max_len) {
    return walk(from, int(draw(uint64_t(max_len) + 1)));
}

Word Sampler::word_between(int from, int to, int max_len) {
    for (int tries = 0; tries < 4096; ++tries) {
        Word w = word_from(from, max_len);
        if (w.target() == to)
            return w;
    }
    throw std::runtime_error("rejection sampling failed to hit the target object");
}

Word Sampler::loop_at(int from, int max_len) { return word_between(from, from, max_len); }

Word Sampler::loop(int max_len) {
    return loop_at(int(draw(uint64_t(sig_.num_objects()))), max_len);
}

std::pair<Word, Word> Sampler::composable_pair(int max_len) {
    Word a = word(max_len);
    Word b = word_from(a.target(), max_len);
    return {a, b};
}

std::vector<Letter> Sampler::raw_chain(int len) {
    std::vector<Letter> letters;
    int at = int(draw(uint64_t(sig_.num_objects())));
    for (int i = 0; i < len; ++i) {
        std::vector<Letter> moves = moves_at(sig_, at);
        if (moves.empty())
            break;
        letters.push_back(moves[draw(moves.size())]);
        at = letters.back().tgt;
    }
    return letters;
}

DoubleDerivation Sampler::dd_table(int value_len) {
    DoubleDerivation theta;
    for (int id = 0; id < sig_.num_generators(); ++id) {
        const Generator& g = sig_.gen(id);
        Word p = word_from(g.source, value_len);
        Word q = word_between(int(draw(uint64_t(sig_.num_objects()))), g.target, value_len);
        theta.gen_values.emplace(id, tensor2(p, q, coeff()));
    }
    return theta;
}

Derivation Sampler::derivation_table(int value_len) {
    Derivation f;
    for (int id = 0; id < sig_.num_generators(); ++id) {
        const Generator& g = sig_.gen(id);
        f.gen_values.emplace(id, alg_word(word_between(g.source, g.target, value_len), coeff()));
    }
    return f;
}

DoubleBracket Sampler::bracket_table(int value_len) {
    DoubleBracket::Table table;
    for (int c1 = 0; c1 < sig_.num_generators(); ++c1)
        for (int c2 = 0; c2 < sig_.num_generators(); ++c2) {
            if (draw(3) == 0)
                continue; // keep some zero entries
            const Generator &g1 = sig_.gen(c1), &g2 = sig_.gen(c2);
            Word p = word_between(g2.source, g1.target, value_len);
            Word q = word_between(g1.source, g2.target, value_len);
            table.emplace(std::make_pair(c1, c2), tensor2(p, q, coeff()));
        }
    return DoubleBracket(std::move(table));
}

DoubleBracket Sampler::bracket_with_ad_defect(int value_len) {
    DoubleBracket t = bracket_table(value_len);
    DoubleBracket::Table table;
    const Rational half = frac(1, 2);
    for (int c1 = 0; c1 < sig_.num_generators(); ++c1)
        for (int c2 = 0; c2 < sig_.num_generators(); ++c2) {
            Tensor2 v = t.on_generators(c1, c2) - flip(t.on_generators(c2, c1));
            v += ad_ad_e(sig_, alg_word(sig_.gen_word(c1)), alg_word(sig_.gen_word(c2))) * half;
            if (!v.is_zero())
                table.emplace(std::make_pair(c1, c2), std::move(v));
        }
    return DoubleBracket(std::move(table));
}

OneForm Sampler::one_form(int terms, int len) {
    OneForm omega;
    for (int c = 0; c < sig_.num_generators(); ++c) {
        const int s = sig_.gen(c).source;
        const int want = int(draw(uint64_t(terms) + 1));
        for (int k = 0; k < want; ++k) {
            Word u = word_between(int(draw(uint64_t(sig_.num_objects()))), s, len);
            Word w = word_from(s, len);
            omega.add(c, u, w, coeff());
        }
    }
    return omega;
}

std::vector<std::vector<Rational>> Sampler::skew_entries(int dim) {
    std::vector<std::vector<Rational>> entries(std::size_t(dim),
                                               std::vector<Rational>(std::size_t(dim), Rational(0)));
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Rational q = coeff();
            entries[std::size_t(i)][std::size_t(j)] = q;
            entries[std::size_t(j)][std::size_t(i)] = -q;
        }
    return entries;
}

} // namespace loopalg
