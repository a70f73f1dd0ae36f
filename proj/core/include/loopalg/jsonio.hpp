#pragma once

#include "loopalg/tensoralg.hpp"
#include "loopalg/textio.hpp"

#include <json.hpp>

namespace loopalg {

using Json = nlohmann::ordered_json;

Json to_json(const Signature& sig, const AlgElem& x);
Json to_json(const Signature& sig, const Tensor2& t);       // [[p, q, coeff], ...]
Json to_json(const Signature& sig, const TraceTensor2& t);  // [[|u|, |v|, coeff], ...]
Json to_json(const Signature& sig, const TripleTrace& t);   // {"left": ..., "right": ...}
Json to_json(const Signature& sig, const OneForm& omega);

// Theta-table schema: { "<gen>": [[p, q, coeff], ...], ... }. Values are
// endpoint-checked: each monomial p (x) q at c needs source(p) = source(c)
// and target(q) = target(c).
DoubleDerivation theta_table_from_json(const Signature& sig, const Json& j);
Json theta_table_to_json(const Signature& sig, const DoubleDerivation& theta);

// Pairing-matrix schema: {"dim": m, "entries": [[...], ...]} with rational
// entries given as numbers or "p/q" strings.
PairingMatrix pairing_from_json(const Json& j);
Json pairing_to_json(const PairingMatrix& p);

// Generator-pair table of a double bracket (random-bracket test fixtures).
DoubleBracket bracket_table_from_json(const Signature& sig, const Json& j);
Json bracket_table_to_json(const Signature& sig, const DoubleBracket& pi);

} // namespace loopalg
