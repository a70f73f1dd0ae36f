#pragma once

#include "loopalg/rational.hpp"

#include <map>
#include <utility>

namespace loopalg {

// Finitely supported rational linear combination over a canonically ordered
// key type. Zero coefficients are never stored, so operator== is canonical
// equality and iteration order is the canonical term order.
template <class Key>
class LinComb {
public:
    using Terms = std::map<Key, Rational>;

    LinComb() = default;

    static LinComb single(const Key& k, Rational q = Rational(1)) {
        LinComb r;
        r.add(k, q);
        return r;
    }

    void add(const Key& k, const Rational& q) {
        if (loopalg::is_zero(q))
            return;
        auto [it, inserted] = terms_.emplace(k, q);
        if (!inserted) {
            it->second += q;
            if (loopalg::is_zero(it->second))
                terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, q] : o.terms_)
            add(k, q);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, q] : o.terms_)
            add(k, -q);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (loopalg::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, q] : terms_)
            q *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    LinComb operator-() const {
        LinComb r(*this);
        for (auto& [k, q] : r.terms_)
            q = -q;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    Terms terms_;
};

} // namespace loopalg
