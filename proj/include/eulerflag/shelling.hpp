#pragma once

#include "eulerflag/complexes.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

namespace eulerflag {

// The first i+1 facets of the k-simplex on vertices "1".."k+1"; facet j omits vertex j.
// delta_complex(0, 0) is {empty face}.
SimplicialComplex delta_complex(int k, int i);

enum class PhiMethod { direct, recursive, binomial };

// Closed forms used as boundary values.
CdPoly boolean_cd(int k);                      // Psi(B_k), k >= 1, by repeated pyramids
CdPoly omega_cd(int m);                        // Psi(Omega_m), m >= 1
CdPoly manifold_cd(int n, const Rational& chi);  // chi (c^2-2d)^{n/2}, or ... c for odd n

// The increment Psi(P_{n,k,i}) - Psi(P_{n,k,i-1}) (Psi(P_{n,k,0}) for i = 0),
// P_{n,k,i} = Semi(Delta_{k,i}, n). Requires 0 <= i <= k <= n, n >= 1.
CdPoly phi_shelling_component(int n, int k, int i, PhiMethod method);

// Memoised components; entries are computed once and never change.
class PhiTable {
public:
    const CdPoly& get(int n, int k, int i, PhiMethod method = PhiMethod::binomial);

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int, int>, CdPoly> entries_;
};

class NotAShelling : public Error {
public:
    NotAShelling(std::size_t position, Face facet, SimplicialComplex intersection);
    std::size_t position() const { return position_; }  // 1-based r
    const Face& facet() const { return facet_; }
    const SimplicialComplex& intersection() const { return intersection_; }

private:
    std::size_t position_;
    Face facet_;
    SimplicialComplex intersection_;
};

struct ShellingStep {
    Face facet;
    int k = 0;
    int i = 0;
};

struct HTriangle {
    std::map<std::pair<int, int>, long> entries;  // (k,i) -> h_{k,i}, zeros omitted
    std::vector<ShellingStep> steps;
    long operator()(int k, int i) const;
};

// Checks the non-pure shelling condition along `order`, which must list every facet once.
HTriangle verify_shelling(const SimplicialComplex& delta, const std::vector<Face>& order);

// Sum of h_{k,i} Phi(n,k,i) over the h-triangle of the given shelling.
CdPoly semisuspension_via_h_triangle(const SimplicialComplex& delta, const std::vector<Face>& order, int n,
                                     PhiTable* table = nullptr);

// Psi(P_{n,k,i} x B_1) + Psi(P_{n+1,k+1,0}) = Psi(P_{n+1,k+1,i+1}) + Psi(P_{n,k,i} * B_2).
bool check_four_posets(int n, int k, int i);

}  // namespace eulerflag
