#pragma once

#include "loopalg/divergence.hpp"

#include <string>
#include <string_view>

namespace loopalg {

// Canonical text forms. Words are letters joined by spaces ("a1 b1 a1^-1",
// identities "1_0"); linear combinations are "q*term" joined with " + " /
// " - ", the coefficient omitted when it is a unit; tensor factors are
// separated by " (x) " printed as the UTF-8 tensor sign; trace classes are
// "|w|". Output is canonically ordered and byte-deterministic.
std::string show(const Signature& sig, const Word& w);
std::string show(const Signature& sig, const CyclicWord& c);
std::string show(const Signature& sig, const AlgElem& x);
std::string show(const Signature& sig, const TraceElem& t);
std::string show(const Signature& sig, const Tensor2& t);
std::string show(const Signature& sig, const TraceTensor2& t);
std::string show(const Signature& sig, const TripleTrace& t);
// OneForm terms print as "u * D[c] * w", standing for u (dc)c^-1 w.
std::string show(const Signature& sig, const OneForm& omega);

struct ParseError : std::invalid_argument {
    ParseError(std::size_t offset, const std::string& what)
        : std::invalid_argument(what + " (at byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

// Path-expression parser: identifiers a<k>, b<k>, g<k>, d<k>, w<k> and
// identities 1_<k>, with optional ^<int> exponents, separated by whitespace
// or '*'. The lowered word is reduced and composability-checked.
Word parse_path(const Signature& sig, std::string_view src);

} // namespace loopalg
