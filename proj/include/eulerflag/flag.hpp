#pragma once

#include "eulerflag/ncpoly.hpp"
#include "eulerflag/poset.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

namespace eulerflag {

// Subsets of {1..n} as bitmasks, element i at bit i-1.
using Subset = std::uint64_t;

Subset make_subset(std::initializer_list<int> elements);
std::vector<int> subset_elements(Subset s);
std::string render_subset(Subset s);  // "{1,3}"

class FlagVector {
public:
    explicit FlagVector(int n = 0);

    int n() const { return n_; }
    Subset full() const { return n_ == 0 ? 0 : (~Subset{0} >> (64 - n_)); }
    Rational operator[](Subset s) const;
    void set(Subset s, const Rational& value);
    void add(Subset s, const Rational& value);
    const std::map<Subset, Rational>& values() const { return values_; }

    friend bool operator==(const FlagVector&, const FlagVector&) = default;

private:
    int n_;
    std::map<Subset, Rational> values_;  // zeros omitted
};

enum class PsiMethod { chains, recursion, mobius };

// Psi of P; requires both extrema. Homogeneous of degree rho(0,1) - 1.
AbPoly ab_index(const QuasiGradedPoset& p, PsiMethod method = PsiMethod::recursion);
CdPoly cd_index(const QuasiGradedPoset& p);

// Psi([0,x]) for every x != 0 (entry for the bottom is the zero polynomial).
std::vector<AbPoly> lower_interval_indices(const QuasiGradedPoset& p);

FlagVector flag_f_vector(const QuasiGradedPoset& p);
FlagVector flag_h_vector(const QuasiGradedPoset& p);
FlagVector h_from_f(const FlagVector& f);
// Reads h_S as the coefficient of u_S in a homogeneous Psi of degree n.
FlagVector h_from_ab(const AbPoly& psi, int n);

struct DehnSommervilleWitness {
    Subset s = 0;
    int i = 0;
    int k = 0;
};

struct DehnSommervilleCheck {
    bool ok = true;
    std::optional<DehnSommervilleWitness> witness;  // first failure in (S, i, k) order
};

DehnSommervilleCheck check_dehn_sommerville(const QuasiGradedPoset& p);
DehnSommervilleCheck check_dehn_sommerville(const FlagVector& f);

// Delta(Psi(P)) against the sum over middle elements of Psi([0,x]) (x) Psi([x,1]).
bool check_coalgebra_identity(const QuasiGradedPoset& p);

struct AlexanderCheck {
    bool ok = false;
    Rational lhs;  // restricted inverse over q
    Rational rhs;  // (-1)^n times restricted inverse over r
};

AlexanderCheck check_alexander_duality(const QuasiGradedPoset& p, const std::vector<ElementId>& q,
                                       const std::vector<ElementId>& r);
bool check_h_symmetry(const QuasiGradedPoset& p);

}  // namespace eulerflag
