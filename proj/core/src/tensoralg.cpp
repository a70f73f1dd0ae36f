#include "loopalg/tensoralg.hpp"

#include <stdexcept>

namespace loopalg {

PairingMatrix PairingMatrix::zero(int dim) {
    PairingMatrix p;
    p.dim = dim;
    p.entries.assign(std::size_t(dim), std::vector<Rational>(std::size_t(dim), Rational(0)));
    return p;
}

bool PairingMatrix::is_skew() const {
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j)
            if (at(i, j) != -at(j, i))
                return false;
    return true;
}

DoubleBracket pairing_bracket(const Signature& sig, const PairingMatrix& p) {
    if (sig.invertible_letters())
        throw std::invalid_argument("pairing bracket lives on a tensor-algebra signature");
    if (p.dim != sig.num_generators())
        throw std::invalid_argument("pairing matrix dimension does not match the signature");
    DoubleBracket::Table table;
    const Word empty = Word::identity(0);
    for (int i = 0; i < p.dim; ++i)
        for (int j = 0; j < p.dim; ++j) {
            const Rational& q = p.at(i + 1, j + 1);
            if (!is_zero(q))
                table.emplace(std::make_pair(i, j), tensor2(empty, empty, q));
        }
    return DoubleBracket(std::move(table));
}

TripleTrace phi_tensor(const Signature& sig, const PairingMatrix& p, const Word& a) {
    return phi_map(sig, pairing_bracket(sig, p), nabla_basis(sig), a);
}

TraceTensor2 delta_tensor(const Signature& sig, const PairingMatrix& p, const TraceElem& t) {
    return delta_map(sig, pairing_bracket(sig, p), nabla_basis(sig), t);
}

} // namespace loopalg
