#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loopalg {

// Exact arbitrary-precision rational. Every coefficient in the library is one
// of these; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational frac(long num, long den = 1) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Canonical text form: "p/q" with q > 1, plain integer otherwise.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else.
inline Rational rat_parse(std::string_view text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t n = from;
        while (n < text.size() && text[n] >= '0' && text[n] <= '9')
            ++n;
        return n;
    };
    if (i < text.size() && text[i] == '-')
        ++i;
    std::size_t num_end = digits(i);
    if (num_end == i)
        throw std::invalid_argument("malformed rational: " + std::string(text));
    i = num_end;
    if (i < text.size()) {
        if (text[i] != '/')
            throw std::invalid_argument("malformed rational: " + std::string(text));
        std::size_t den_end = digits(i + 1);
        if (den_end == i + 1 || den_end != text.size())
            throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    Rational q{std::string(text)};
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

} // namespace loopalg
