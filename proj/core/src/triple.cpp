#include "loopalg/triple.hpp"

namespace loopalg {

TripleTrace triple_right(const Word& x, const CyclicWord& y, Rational c) {
    TripleTrace r;
    r.right.add({x, y}, c);
    return r;
}

TripleTrace triple_left(const CyclicWord& x, const Word& y, Rational c) {
    TripleTrace r;
    r.left.add({x, y}, c);
    return r;
}

TripleTrace trace_left(const Tensor2& t) {
    TripleTrace r;
    for (const auto& [pq, c] : t.terms())
        if (pq.first.is_loop())
            r.left.add({CyclicWord::of_loop(pq.first), pq.second}, c);
    return r;
}

TripleTrace trace_right(const Tensor2& t) {
    TripleTrace r;
    for (const auto& [pq, c] : t.terms())
        if (pq.second.is_loop())
            r.right.add({pq.first, CyclicWord::of_loop(pq.second)}, c);
    return r;
}

TripleTrace triple_act(const Word& a, const TripleTrace& t, const Word& b) {
    TripleTrace r;
    for (const auto& [xy, c] : t.right.terms()) {
        auto ax = compose(a, xy.first);
        if (!ax)
            continue;
        auto axb = compose(*ax, b);
        if (!axb)
            continue;
        r.right.add({*axb, xy.second}, c);
    }
    for (const auto& [xy, c] : t.left.terms()) {
        auto ay = compose(a, xy.second);
        if (!ay)
            continue;
        auto ayb = compose(*ay, b);
        if (!ayb)
            continue;
        r.left.add({xy.first, *ayb}, c);
    }
    return r;
}

TripleTrace triple_act(const AlgElem& a, const TripleTrace& t, const AlgElem& b) {
    TripleTrace r;
    for (const auto& [wa, qa] : a.terms())
        for (const auto& [wb, qb] : b.terms())
            r += triple_act(wa, t, wb) * (qa * qb);
    return r;
}

TripleTrace fold(const TripleTrace& t) {
    TripleTrace r;
    r.right = t.right;
    for (const auto& [xy, c] : t.left.terms())
        r.right.add({xy.second, xy.first}, c);
    return r;
}

TraceTensor2 mult_trace(const TripleTrace& t) {
    TraceTensor2 r;
    for (const auto& [xy, c] : t.right.terms())
        if (xy.first.is_loop())
            r.add({CyclicWord::of_loop(xy.first), xy.second}, c);
    for (const auto& [xy, c] : t.left.terms())
        if (xy.second.is_loop())
            r.add({xy.first, CyclicWord::of_loop(xy.second)}, c);
    return r;
}

TraceTensor2 sym(const TraceTensor2& t) {
    TraceTensor2 r;
    for (const auto& [uv, c] : t.terms()) {
        r.add(uv, c);
        r.add({uv.second, uv.first}, c);
    }
    return r;
}

} // namespace loopalg
