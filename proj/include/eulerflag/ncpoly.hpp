#pragma once

// Noncommutative polynomials over the rationals in the alphabets {a,b} and {c,d}.
//
// A word is stored as a plain string of letters; the empty string is the unit 1.
// Words are ordered lexicographically (a < b, c < d), which is also the canonical
// rendering order.

#include "eulerflag/error.hpp"
#include "eulerflag/linear.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace eulerflag {

enum class Alphabet { ab, cd };

template <Alphabet A>
struct AlphabetTraits;

template <>
struct AlphabetTraits<Alphabet::ab> {
    static constexpr char first = 'a';
    static constexpr char second = 'b';
    static constexpr int degree(char) { return 1; }
};

template <>
struct AlphabetTraits<Alphabet::cd> {
    static constexpr char first = 'c';
    static constexpr char second = 'd';
    static constexpr int degree(char letter) { return letter == 'c' ? 1 : 2; }
};

using Word = std::string;

template <Alphabet A>
class NcPoly : public LinearCombination<Word> {
public:
    using Traits = AlphabetTraits<A>;

    NcPoly() = default;

    static bool valid_word(std::string_view word) {
        for (char ch : word)
            if (ch != Traits::first && ch != Traits::second) return false;
        return true;
    }

    static int word_degree(std::string_view word) {
        int deg = 0;
        for (char ch : word) deg += Traits::degree(ch);
        return deg;
    }

    static NcPoly monomial(std::string_view word, const Rational& coef = 1) {
        if (!valid_word(word))
            throw InvalidArgument("word '" + std::string(word) + "' is outside the alphabet");
        NcPoly p;
        p.add_term(Word(word), coef);
        return p;
    }

    static NcPoly constant(const Rational& coef) { return monomial("", coef); }
    static NcPoly one() { return constant(1); }

    // -1 for the zero polynomial.
    int degree() const {
        int deg = -1;
        for (const auto& entry : terms_) deg = std::max(deg, word_degree(entry.first));
        return deg;
    }

    bool is_homogeneous() const {
        int deg = -2;
        for (const auto& entry : terms_) {
            int d = word_degree(entry.first);
            if (deg != -2 && d != deg) return false;
            deg = d;
        }
        return true;
    }

    NcPoly homogeneous_part(int deg) const {
        NcPoly out;
        for (const auto& [word, coef] : terms_)
            if (word_degree(word) == deg) out.add_term(word, coef);
        return out;
    }

    NcPoly& operator+=(const NcPoly& other) {
        LinearCombination<Word>::operator+=(other);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& other) {
        LinearCombination<Word>::operator-=(other);
        return *this;
    }
    NcPoly& operator*=(const Rational& scalar) {
        LinearCombination<Word>::operator*=(scalar);
        return *this;
    }
    NcPoly& operator*=(const NcPoly& other) {
        *this = *this * other;
        return *this;
    }

    friend NcPoly operator+(NcPoly lhs, const NcPoly& rhs) { return lhs += rhs; }
    friend NcPoly operator-(NcPoly lhs, const NcPoly& rhs) { return lhs -= rhs; }
    friend NcPoly operator-(NcPoly p) { return p *= Rational(-1); }
    friend NcPoly operator*(NcPoly p, const Rational& s) { return p *= s; }
    friend NcPoly operator*(const Rational& s, NcPoly p) { return p *= s; }

    friend NcPoly operator*(const NcPoly& lhs, const NcPoly& rhs) {
        NcPoly out;
        for (const auto& [lw, lc] : lhs.terms_)
            for (const auto& [rw, rc] : rhs.terms_) out.add_term(lw + rw, lc * rc);
        return out;
    }

    friend bool operator==(const NcPoly& lhs, const NcPoly& rhs) {
        return lhs.terms() == rhs.terms();
    }
};

using AbPoly = NcPoly<Alphabet::ab>;
using CdPoly = NcPoly<Alphabet::cd>;

template <Alphabet A>
NcPoly<A> power(const NcPoly<A>& base, int exponent) {
    NcPoly<A> out = NcPoly<A>::one();
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
}

// (a - b)^k, cached.
const AbPoly& a_minus_b_power(int k);

// Substitutes c -> a + b and d -> ab + ba.
AbPoly cd_expand(const CdPoly& p);

class NotCdExpressible : public Error {
public:
    explicit NotCdExpressible(AbPoly residual);
    const AbPoly& residual() const { return residual_; }

private:
    AbPoly residual_;
};

// The unique q with cd_expand(q) == p. Throws NotCdExpressible carrying the
// part of p that no cd-combination accounts for.
CdPoly ab_to_cd(const AbPoly& p);
bool is_cd_expressible(const AbPoly& p);

// Reverses every word.
AbPoly star(const AbPoly& p);
CdPoly star(const CdPoly& p);

// The derivation with G(a) = ba, G(b) = ab; on cd-words G(c) = d, G(d) = cd.
AbPoly derivation_g(const AbPoly& p);
CdPoly derivation_g(const CdPoly& p);

// Collected tensor p (x) q in Z<a,b> (x) Z<a,b>.
class AbTensor : public LinearCombination<std::pair<Word, Word>> {
public:
    void add_product(const AbPoly& left, const AbPoly& right, const Rational& coef = 1);
    friend bool operator==(const AbTensor& lhs, const AbTensor& rhs) {
        return lhs.terms() == rhs.terms();
    }
};

// Delta(u1...uk) = sum_i u1..u_{i-1} (x) u_{i+1}..uk, Delta(1) = 0.
AbTensor coproduct(const AbPoly& p);

std::string render(const AbPoly& p);
std::string render(const CdPoly& p);
std::string render(const AbTensor& t);
std::string render_word(std::string_view word);

AbPoly parse_ab(std::string_view text);
CdPoly parse_cd(std::string_view text);
// Alphabet decided by the letters present; a constant parses as an AbPoly.
std::variant<AbPoly, CdPoly> parse_poly(std::string_view text);

}  // namespace eulerflag
