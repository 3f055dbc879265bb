#pragma once

#include "eulerflag/flag.hpp"
#include "eulerflag/poset.hpp"

#include <vector>

namespace eulerflag {

// Subsets of {1..k} ordered by inclusion, ids "{}", "{1}", "{1,2}", ...
QuasiGradedPoset boolean_algebra(int k);

// Order reversed, zeta*(x,y) = zeta(y,x). Ranks are rho(top) - rho(x), or
// max rank - rho(x) when there is no top.
QuasiGradedPoset dual(const QuasiGradedPoset& p);

// Element ids "(x,y)"; ranks add and zeta values multiply.
QuasiGradedPoset cartesian_product(const QuasiGradedPoset& p, const QuasiGradedPoset& q);

// (P - top) glued under (Q - bottom). Q-part ids get primes appended on clashes.
QuasiGradedPoset stanley_product(const QuasiGradedPoset& p, const QuasiGradedPoset& q);

struct PyramidResult {
    QuasiGradedPoset poset;  // P x B_1
    AbPoly psi;              // enumerated on the product
    AbPoly by_sum;           // b Psi + Psi a + sum Psi([0,x]) ab Psi([x,1])
    AbPoly by_derivation;    // Psi c + G(Psi)
    bool consistent() const { return psi == by_sum && psi == by_derivation; }
};

PyramidResult pyramid(const QuasiGradedPoset& p);

// Replaces x and y (same rank, same up set, same zeta upwards) by one element.
QuasiGradedPoset merge_equal_upset(const QuasiGradedPoset& p, const ElementId& x, const ElementId& y);

struct Zipper {
    ElementId x;
    ElementId y;
    ElementId z;
    friend bool operator==(const Zipper&, const Zipper&) = default;
};

// Empty when the triple is a zipper, otherwise the first failed condition.
std::string zipper_defect(const QuasiGradedPoset& p, const Zipper& zipper);

// Sorted by (z, x, y) with x < y.
std::vector<Zipper> find_zippers(const QuasiGradedPoset& p);

struct ZipResult {
    QuasiGradedPoset poset;
    ElementId w;
    bool total_identity = false;    // Psi(Q) = Psi(P) - Psi([0,z]) d Psi([x,1])
    bool lower_identity = false;    // Psi([0,w]) = Psi([0,x]) + Psi([0,y]) - Psi([0,z]) c
    // [x,1], [y,1] and [z,1] with x and y contracted into z all share one ab-index
    bool upper_intervals_agree = false;
    bool identities_hold() const { return total_identity && lower_identity && upper_intervals_agree; }
};

ZipResult zip_zipper(const QuasiGradedPoset& p, const Zipper& zipper);

// Id for an element replacing `parts`: "w:" + sorted flattened constituents.
ElementId merged_id(const QuasiGradedPoset& p, const std::vector<ElementId>& parts);

}  // namespace eulerflag
