#pragma once

#include "eulerflag/rational.hpp"

#include <map>
#include <utility>

namespace eulerflag {

// Finitely supported map Key -> Rational with zero coefficients never stored.
template <class Key>
class LinearCombination {
public:
    using Terms = std::map<Key, Rational>;

    LinearCombination() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Key& key, const Rational& coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinearCombination& operator+=(const LinearCombination& other) {
        for (const auto& [key, coef] : other.terms_) add_term(key, coef);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& other) {
        for (const auto& [key, coef] : other.terms_) add_term(key, -coef);
        return *this;
    }

    LinearCombination& operator*=(const Rational& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& entry : terms_) entry.second *= scalar;
        return *this;
    }

    friend bool operator==(const LinearCombination& lhs, const LinearCombination& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

protected:
    Terms terms_;
};

}  // namespace eulerflag
