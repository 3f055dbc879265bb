#pragma once

// Quasisymmetric functions in the monomial basis M_alpha.

#include "eulerflag/linear.hpp"
#include "eulerflag/ncpoly.hpp"
#include "eulerflag/poset.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eulerflag {

using Composition = std::vector<int>;

class QSymElement : public LinearCombination<Composition> {
public:
    static QSymElement monomial(const Composition& alpha, const Rational& coef = 1);

    QSymElement& operator+=(const QSymElement& other) {
        LinearCombination<Composition>::operator+=(other);
        return *this;
    }
    QSymElement& operator-=(const QSymElement& other) {
        LinearCombination<Composition>::operator-=(other);
        return *this;
    }
    friend QSymElement operator+(QSymElement l, const QSymElement& r) { return l += r; }
    friend QSymElement operator-(QSymElement l, const QSymElement& r) { return l -= r; }
    friend QSymElement operator*(QSymElement l, const Rational& s) {
        l.LinearCombination<Composition>::operator*=(s);
        return l;
    }
    // Quasi-shuffle product.
    friend QSymElement operator*(const QSymElement& l, const QSymElement& r);
    friend bool operator==(const QSymElement& l, const QSymElement& r) { return l.terms() == r.terms(); }

    bool is_homogeneous_of_weight(int weight) const;
};

class QSymTensor : public LinearCombination<std::pair<Composition, Composition>> {
public:
    void add_product(const QSymElement& left, const QSymElement& right, const Rational& coef = 1);
    friend bool operator==(const QSymTensor& l, const QSymTensor& r) { return l.terms() == r.terms(); }
};

// Deconcatenation, empty parts included.
QSymTensor coproduct(const QSymElement& x);

// Sum over chains 0 = x0 < ... < xk = 1 of zeta(c) M_(rho(x0,x1), ..., rho(x_{k-1},xk)).
QSymElement qsym_of_poset(const QuasiGradedPoset& p);

// alpha -> (a-b)^{alpha1-1} b (a-b)^{alpha2-1} b ... (a-b)^{alphak-1}.
AbPoly collapse_to_ab(const QSymElement& x);

struct HopfCheck {
    bool product = false;    // F(P x Q) = F(P) F(Q)
    bool coproduct = false;  // Delta F(P) = sum over 0 <= x <= 1 of F([0,x]) (x) F([x,1])
    bool ok() const { return product && coproduct; }
};

HopfCheck check_hopf_identities(const QuasiGradedPoset& p, const QuasiGradedPoset& q);

std::string render_composition(const Composition& alpha);  // "M(1,2)"
std::string render(const QSymElement& x);
std::string render(const QSymTensor& t);
Composition parse_composition(std::string_view text);  // "1,2" or "(1,2)" or ""

}  // namespace eulerflag
