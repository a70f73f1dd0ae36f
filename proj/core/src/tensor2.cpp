#include "loopalg/tensor2.hpp"

namespace loopalg {

Tensor2 outer_act(const Word& a, const Tensor2& t, const Word& b) {
    Tensor2 r;
    for (const auto& [pq, c] : t.terms()) {
        auto p = compose(a, pq.first);
        if (!p)
            continue;
        auto q = compose(pq.second, b);
        if (!q)
            continue;
        r.add({*p, *q}, c);
    }
    return r;
}

Tensor2 outer_act(const AlgElem& a, const Tensor2& t, const AlgElem& b) {
    Tensor2 r;
    for (const auto& [wa, qa] : a.terms())
        for (const auto& [wb, qb] : b.terms())
            r += outer_act(wa, t, wb) * (qa * qb);
    return r;
}

Tensor2 inner_act(const Word& a, const Tensor2& t, const Word& b) {
    Tensor2 r;
    for (const auto& [pq, c] : t.terms()) {
        auto p = compose(pq.first, b);
        if (!p)
            continue;
        auto q = compose(a, pq.second);
        if (!q)
            continue;
        r.add({*p, *q}, c);
    }
    return r;
}

Tensor2 inner_act(const AlgElem& a, const Tensor2& t, const AlgElem& b) {
    Tensor2 r;
    for (const auto& [wa, qa] : a.terms())
        for (const auto& [wb, qb] : b.terms())
            r += inner_act(wa, t, wb) * (qa * qb);
    return r;
}

AlgElem mult2(const Tensor2& t) {
    AlgElem r;
    for (const auto& [pq, c] : t.terms())
        if (auto w = compose(pq.first, pq.second))
            r.add(*w, c);
    return r;
}

Tensor2 flip(const Tensor2& t) {
    Tensor2 r;
    for (const auto& [pq, c] : t.terms())
        r.add({pq.second, pq.first}, c);
    return r;
}

} // namespace loopalg
