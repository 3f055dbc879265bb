#pragma once

// Quasi-graded posets: a finite poset, a strictly order-preserving rank and a
// rational weighted zeta function with zeta(x,x) = 1.

#include "eulerflag/error.hpp"
#include "eulerflag/rational.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace eulerflag {

using ElementId = std::string;
using Index = std::size_t;

struct ElementSpec {
    ElementId id;
    long rank = 0;
};

struct ZetaSpec {
    ElementId from;
    ElementId to;
    Rational value;
};

// Input description. `relations` may be cover relations or any generating set
// of strict relations; the closure is computed either way.
struct PosetSpec {
    std::vector<ElementSpec> elements;
    std::vector<std::pair<ElementId, ElementId>> relations;
    std::optional<ElementId> bottom;
    std::optional<ElementId> top;
    std::vector<ZetaSpec> zeta;
};

class QuasiGradedPoset {
public:
    // Elements are indexed 0..size()-1 in (rank, id) order, which is a linear
    // extension of the partial order.
    std::size_t size() const { return ids_.size(); }
    const ElementId& id(Index i) const { return ids_.at(i); }
    const std::vector<ElementId>& ids() const { return ids_; }
    Index index(const ElementId& id) const;
    bool contains(const ElementId& id) const { return by_id_.count(id) != 0; }

    long rank(Index i) const { return ranks_.at(i); }
    long rank(Index i, Index j) const { return ranks_.at(j) - ranks_.at(i); }

    bool leq(Index i, Index j) const { return i == j || less(i, j); }
    bool less(Index i, Index j) const { return (rows_[i][j / 64] >> (j % 64)) & 1u; }

    // 0 on incomparable pairs, 1 on the diagonal.
    const Rational& zeta(Index i, Index j) const;

    const std::vector<Index>& above(Index i) const { return above_.at(i); }  // strictly, ascending
    const std::vector<Index>& below(Index i) const { return below_.at(i); }  // strictly, ascending
    const std::vector<Index>& upper_covers(Index i) const { return upper_covers_.at(i); }
    const std::vector<Index>& lower_covers(Index i) const { return lower_covers_.at(i); }

    std::optional<Index> bottom() const { return bottom_; }
    std::optional<Index> top() const { return top_; }
    bool has_extrema() const { return bottom_.has_value() && top_.has_value(); }
    Index require_bottom() const;
    Index require_top() const;
    // rho(0,1); requires both extrema.
    long total_rank() const;

    // Round-trip description: covers, and zeta only where it differs from 1.
    PosetSpec to_spec() const;

    friend bool operator==(const QuasiGradedPoset& lhs, const QuasiGradedPoset& rhs);

private:
    friend QuasiGradedPoset build_poset(const PosetSpec& spec);

    static std::uint64_t key(Index i, Index j) { return (static_cast<std::uint64_t>(i) << 32) | j; }

    std::vector<ElementId> ids_;
    std::vector<long> ranks_;
    std::unordered_map<ElementId, Index> by_id_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::unordered_map<std::uint64_t, Rational> zeta_;  // comparable strict pairs with value != 1
    std::vector<std::vector<Index>> above_, below_, upper_covers_, lower_covers_;
    std::optional<Index> bottom_, top_;
};

// Validates and closes the relation. When a bottom exists (declared or unique
// minimum) ranks are shifted so that it has rank 0.
QuasiGradedPoset build_poset(const PosetSpec& spec);

// Values on comparable pairs, indexed by poset indices.
class IncidenceFunction {
public:
    IncidenceFunction() = default;
    explicit IncidenceFunction(std::size_t n) : n_(n), values_(n * n) {}

    std::size_t size() const { return n_; }
    const Rational& operator()(Index i, Index j) const { return values_[i * n_ + j]; }
    Rational& operator()(Index i, Index j) { return values_[i * n_ + j]; }

    friend bool operator==(const IncidenceFunction&, const IncidenceFunction&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> values_;
};

IncidenceFunction zeta_function(const QuasiGradedPoset& p);
IncidenceFunction delta_function(const QuasiGradedPoset& p);
// (f * g)(x,y) = sum over x <= z <= y of f(x,z) g(z,y).
IncidenceFunction convolve(const QuasiGradedPoset& p, const IncidenceFunction& f, const IncidenceFunction& g);

IncidenceFunction weighted_mobius(const QuasiGradedPoset& p);

QuasiGradedPoset interval(const QuasiGradedPoset& p, const ElementId& x, const ElementId& y);
QuasiGradedPoset interval(const QuasiGradedPoset& p, Index x, Index y);

// The subposet on `keep` with inherited order, rank and zeta. Ranks are
// re-normalised if the subposet has a bottom.
QuasiGradedPoset induced_subposet(const QuasiGradedPoset& p, const std::vector<Index>& keep);

struct EulerianCheck {
    bool ok = true;
    std::optional<std::pair<ElementId, ElementId>> witness;
};

// Witness: the violating pair (x,z) least in lexicographic order of ids.
EulerianCheck is_eulerian(const QuasiGradedPoset& p);

// zeta must be given (or default to 1) only on pairs of odd rank difference;
// the even ones are filled in so that the result is Eulerian.
QuasiGradedPoset complete_eulerian(const PosetSpec& spec);

QuasiGradedPoset rank_selection(const QuasiGradedPoset& p, const std::set<long>& ranks);

// (zeta restricted to q)^{-1}(0,1) by the alternating chain sum inside q.
Rational restricted_zeta_inverse(const QuasiGradedPoset& p, const std::vector<ElementId>& q);

}  // namespace eulerflag
