#include "loopalg/brackets.hpp"

namespace loopalg {

Tensor2 DoubleBracket::on_generators(int c1, int c2) const {
    auto it = table_.find({c1, c2});
    return it == table_.end() ? Tensor2{} : it->second;
}

Tensor2 DoubleBracket::eval_letter_letter(const Letter& la, const Letter& lb) const {
    if (la.exp == 1 && lb.exp == 1)
        return on_generators(la.gen, lb.gen);
    if (lb.exp == -1) {
        Word binv = Word::of_letter(lb);
        Tensor2 inner_val = eval(Word::of_letter(la), Word::of_letter(lb.inverse()));
        return -outer_act(binv, inner_val, binv);
    }
    // la.exp == -1, lb.exp == +1
    Word ainv = Word::of_letter(la);
    Tensor2 pos = eval(Word::of_letter(la.inverse()), Word::of_letter(lb));
    Tensor2 r;
    for (const auto& [pq, q] : pos.terms()) {
        auto p = compose(pq.first, ainv);
        auto s = compose(ainv, pq.second);
        if (p && s)
            r.add({*p, *s}, -q);
    }
    return r;
}

Tensor2 DoubleBracket::eval(const Word& a, const Word& b) const {
    if (a.is_identity() || b.is_identity())
        return Tensor2{};
    if (a.size() == 1 && b.size() == 1)
        return eval_letter_letter(a.letter(0), b.letter(0));

    const std::pair<Word, Word> key{a, b};
    {
        std::lock_guard lock(memo_->mutex);
        auto it = memo_->values.find(key);
        if (it != memo_->values.end())
            return it->second;
    }

    Tensor2 r;
    if (a.size() > 1) {
        // Pi(la a', b) = Pi(la, b) .in a' + la .in Pi(a', b)
        Word la = a.prefix(1), rest = a.suffix(1);
        r = inner_act(Word::identity(la.source()), eval(la, b), rest) +
            inner_act(la, eval(rest, b), Word::identity(rest.target()));
    } else {
        // Pi(a, lb b') = Pi(a, lb) . b' + lb . Pi(a, b')
        Word lb = b.prefix(1), rest = b.suffix(1);
        r = outer_act(Word::identity(lb.source()), eval(a, lb), rest) +
            outer_act(lb, eval(a, rest), Word::identity(rest.target()));
    }

    std::lock_guard lock(memo_->mutex);
    memo_->values.emplace(key, r);
    return r;
}

Tensor2 DoubleBracket::eval(const AlgElem& a, const AlgElem& b) const {
    Tensor2 r;
    for (const auto& [wa, qa] : a.terms())
        for (const auto& [wb, qb] : b.terms())
            r += eval(wa, wb) * (qa * qb);
    return r;
}

Tensor2 db_inversion_eval(const DoubleBracket& pi, const Word& a, const Word& b) {
    return flip(pi.eval(b, a));
}

Tensor2 db_inversion_eval(const DoubleBracket& pi, const AlgElem& a, const AlgElem& b) {
    return flip(pi.eval(b, a));
}

DoubleDerivation as_double_derivation(const Signature& sig, const DoubleBracket& pi,
                                      const AlgElem& a) {
    DoubleDerivation r;
    for (int c = 0; c < sig.num_generators(); ++c) {
        Tensor2 v = pi.eval(a, alg_word(sig.gen_word(c)));
        if (!v.is_zero())
            r.gen_values.emplace(c, std::move(v));
    }
    return r;
}

namespace {

// Shorthands used when instantiating the generator table.
Tensor2 t2(const Word& p, const Word& q, int c = 1) { return tensor2(p, q, Rational(c)); }

} // namespace

DoubleBracket kappa_bracket(const Signature& sig) {
    if (!sig.invertible_letters())
        throw std::invalid_argument("kappa lives on a surface signature");
    DoubleBracket::Table table;
    const Word one0 = Word::identity(0);
    auto W = [&](GenKind k, int i) { return sig.gen_word(sig.find(k, i)); };
    auto mul = [](const Word& x, const Word& y) { return *compose(x, y); };
    auto put = [&](GenKind k1, int i, GenKind k2, int j, Tensor2 v) {
        if (v.is_zero())
            return;
        table.emplace(std::make_pair(sig.find(k1, i), sig.find(k2, j)), std::move(v));
    };
    // The generic "same handle" value shared by several i > j branches and by
    // all (gamma_i, alpha_j / beta_j) pairs: x (x) y + y (x) x - yx (x) 1_0 - 1_0 (x) xy.
    auto loop_pair = [&](const Word& x, const Word& y) {
        return t2(x, y) + t2(y, x) - t2(mul(y, x), one0) - t2(one0, mul(x, y));
    };

    const int g = sig.genus(), n = sig.boundary_extra();
    for (int i = 1; i <= g; ++i) {
        Word ai = W(GenKind::alpha, i), bi = W(GenKind::beta, i);
        for (int j = 1; j <= g; ++j) {
            Word aj = W(GenKind::alpha, j), bj = W(GenKind::beta, j);
            if (i == j) {
                put(GenKind::alpha, i, GenKind::alpha, j,
                    t2(ai, ai) - t2(one0, mul(ai, ai)));
                put(GenKind::alpha, i, GenKind::beta, j, t2(bi, ai));
                put(GenKind::beta, i, GenKind::alpha, j,
                    t2(bi, ai) - t2(mul(ai, bi), one0) - t2(one0, mul(bi, ai)));
                put(GenKind::beta, i, GenKind::beta, j,
                    t2(bi, bi) - t2(mul(bi, bi), one0));
            } else if (i > j) {
                put(GenKind::alpha, i, GenKind::alpha, j, loop_pair(ai, aj));
                put(GenKind::alpha, i, GenKind::beta, j, loop_pair(ai, bj));
                put(GenKind::beta, i, GenKind::alpha, j, loop_pair(bi, aj));
                put(GenKind::beta, i, GenKind::beta, j, loop_pair(bi, bj));
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        Word gi = W(GenKind::gamma, i), di = W(GenKind::delta, i);
        for (int j = 1; j <= g; ++j) {
            Word aj = W(GenKind::alpha, j), bj = W(GenKind::beta, j);
            put(GenKind::gamma, i, GenKind::alpha, j, loop_pair(gi, aj));
            put(GenKind::gamma, i, GenKind::beta, j, loop_pair(gi, bj));
            put(GenKind::delta, i, GenKind::alpha, j,
                t2(aj, di) - t2(one0, mul(di, aj)));
            put(GenKind::delta, i, GenKind::beta, j,
                t2(bj, di) - t2(one0, mul(di, bj)));
        }
        for (int j = 1; j <= n; ++j) {
            Word gj = W(GenKind::gamma, j), dj = W(GenKind::delta, j);
            if (i == j) {
                put(GenKind::gamma, i, GenKind::gamma, j,
                    t2(gi, gi) - t2(one0, mul(gi, gi)));
                put(GenKind::gamma, i, GenKind::delta, j, t2(di, gi));
                put(GenKind::delta, i, GenKind::gamma, j,
                    -t2(one0, mul(di, gi)));
                put(GenKind::delta, i, GenKind::delta, j, t2(di, di));
            } else if (i > j) {
                put(GenKind::gamma, i, GenKind::gamma, j, loop_pair(gi, gj));
                put(GenKind::gamma, i, GenKind::delta, j,
                    -t2(mul(dj, gi), one0) + t2(dj, gi));
                put(GenKind::delta, i, GenKind::gamma, j,
                    t2(gj, di) - t2(one0, mul(di, gj)));
                put(GenKind::delta, i, GenKind::delta, j, t2(dj, di));
            }
        }
    }
    return DoubleBracket(std::move(table));
}

Derivation ham(const Signature& sig, const DoubleBracket& pi, const TraceElem& t) {
    Derivation f;
    for (const auto& [cls, q] : t.terms()) {
        AlgElem rep = alg_word(trace_representative(cls), q);
        for (int c = 0; c < sig.num_generators(); ++c) {
            AlgElem v = mult2(pi.eval(rep, alg_word(sig.gen_word(c))));
            if (v.is_zero())
                continue;
            auto& slot = f.gen_values[c];
            slot += v;
            if (slot.is_zero())
                f.gen_values.erase(c);
        }
    }
    return f;
}

} // namespace loopalg
