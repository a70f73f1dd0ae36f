#include "loopalg/alg.hpp"

namespace loopalg {

AlgElem alg_one(const Signature& sig) {
    AlgElem r;
    for (int v = 0; v < sig.num_objects(); ++v)
        r.add(Word::identity(v), Rational(1));
    return r;
}

AlgElem word_compose(const Word& x, const Word& y) {
    auto xy = compose(x, y);
    if (!xy)
        return AlgElem{};
    return alg_word(*xy);
}

AlgElem alg_mul(const AlgElem& x, const AlgElem& y) {
    AlgElem r;
    for (const auto& [wx, qx] : x.terms())
        for (const auto& [wy, qy] : y.terms())
            if (auto w = compose(wx, wy))
                r.add(*w, qx * qy);
    return r;
}

AlgElem alg_mul(const Word& x, const AlgElem& y) {
    AlgElem r;
    for (const auto& [wy, qy] : y.terms())
        if (auto w = compose(x, wy))
            r.add(*w, qy);
    return r;
}

AlgElem alg_mul(const AlgElem& x, const Word& y) {
    AlgElem r;
    for (const auto& [wx, qx] : x.terms())
        if (auto w = compose(wx, y))
            r.add(*w, qx);
    return r;
}

Word alg_inverse(const Word& w) { return w.inverse(); }

TraceElem trace_project(const Word& w) {
    TraceElem r;
    if (!w.is_loop())
        return r;
    r.add(CyclicWord::of_loop(w), Rational(1));
    return r;
}

TraceElem trace_project(const AlgElem& x) {
    TraceElem r;
    for (const auto& [w, q] : x.terms())
        if (w.is_loop())
            r.add(CyclicWord::of_loop(w), q);
    return r;
}

Word trace_representative(const CyclicWord& c) { return c.rep(); }

} // namespace loopalg
