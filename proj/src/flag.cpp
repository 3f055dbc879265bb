#include "eulerflag/flag.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace eulerflag {

Subset make_subset(std::initializer_list<int> elements) {
    Subset s = 0;
    for (int e : elements) {
        if (e < 1 || e > 64) throw InvalidArgument("subset element out of range");
        s |= Subset{1} << (e - 1);
    }
    return s;
}

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((s >> i) & 1u) out.push_back(i + 1);
    return out;
}

std::string render_subset(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

FlagVector::FlagVector(int n) : n_(n) {
    if (n < 0 || n > 62) throw InvalidArgument("flag vector length must be in 0..62");
}

Rational FlagVector::operator[](Subset s) const {
    auto it = values_.find(s);
    return it == values_.end() ? Rational(0) : it->second;
}

void FlagVector::set(Subset s, const Rational& value) {
    if (s & ~full()) throw InvalidArgument("subset " + render_subset(s) + " outside {1.." + std::to_string(n_) + "}");
    if (value == 0) values_.erase(s);
    else values_[s] = value;
}

void FlagVector::add(Subset s, const Rational& value) { set(s, (*this)[s] + value); }

namespace {

// Small enough for dense transforms over all subsets.
constexpr int kDenseLimit = 24;

void require_dense(int n) {
    if (n > kDenseLimit) throw InvalidArgument("rank too large for subset transforms (n > 24)");
}

long checked_rank(const QuasiGradedPoset& p) {
    long r = p.total_rank();
    if (r < 1) throw InvalidPoset("the ab-index needs rank at least 1");
    if (r > 63) throw InvalidPoset("rank too large (at most 63)");
    return r;
}

AbPoly weight_of_subset(Subset s, int n) {
    // (a-b)^{s1-1} b (a-b)^{s2-s1-1} b ... (a-b)^{n-sk}
    AbPoly out = AbPoly::one();
    int previous = 0;
    const AbPoly b = AbPoly::monomial("b");
    for (int e : subset_elements(s)) {
        out = out * a_minus_b_power(e - previous - 1) * b;
        previous = e;
    }
    return out * a_minus_b_power(n - previous);
}

// poly * letter * coef * (a-b)^{r-1}
AbPoly extend(const AbPoly& poly, const char* letter, const Rational& coef, long r) {
    return poly * AbPoly::monomial(letter, coef) * a_minus_b_power(static_cast<int>(r - 1));
}

std::vector<AbPoly> psi_straight(const QuasiGradedPoset& p) {
    Index bottom = p.require_bottom();
    std::vector<AbPoly> psi(p.size());
    for (Index z : p.above(bottom)) {
        AbPoly value = a_minus_b_power(static_cast<int>(p.rank(bottom, z) - 1)) * p.zeta(bottom, z);
        for (Index y : p.below(z))
            if (y != bottom) value += extend(psi[y], "b", p.zeta(y, z), p.rank(y, z));
        psi[z] = std::move(value);
    }
    return psi;
}

std::vector<AbPoly> psi_mobius(const QuasiGradedPoset& p) {
    Index bottom = p.require_bottom();
    IncidenceFunction mu = weighted_mobius(p);
    std::vector<AbPoly> psi(p.size());
    for (Index z : p.above(bottom)) {
        AbPoly value = a_minus_b_power(static_cast<int>(p.rank(bottom, z) - 1)) * Rational(-mu(bottom, z));
        for (Index y : p.below(z))
            if (y != bottom) value -= extend(psi[y], "a", mu(y, z), p.rank(y, z));
        psi[z] = std::move(value);
    }
    return psi;
}

}  // namespace

FlagVector flag_f_vector(const QuasiGradedPoset& p) {
    long r = checked_rank(p);
    Index bottom = p.require_bottom(), top = p.require_top();
    // Chain sums from the bottom, grouped by the ranks of the interior chain elements.
    std::vector<std::map<Subset, Rational>> chains(p.size());
    chains[bottom][0] = 1;
    for (Index y : p.above(bottom)) {
        auto& acc = chains[y];
        for (Index x : p.below(y)) {
            const Rational& z = p.zeta(x, y);
            Subset extra = x == bottom ? 0 : Subset{1} << (p.rank(x) - 1);
            for (const auto& [s, v] : chains[x]) acc[s | extra] += v * z;
        }
    }
    FlagVector f(static_cast<int>(r - 1));
    for (const auto& [s, v] : chains[top]) f.add(s, v);
    return f;
}

FlagVector h_from_f(const FlagVector& f) {
    require_dense(f.n());
    FlagVector h(f.n());
    const Subset full = f.full();
    for (const auto& [t, v] : f.values()) {
        Subset free = full & ~t;
        // Every superset S of t receives (-1)^{|S - t|} f_t.
        for (Subset extra = free;; extra = (extra - 1) & free) {
            h.add(t | extra, std::popcount(extra) % 2 == 0 ? v : Rational(-v));
            if (extra == 0) break;
        }
    }
    return h;
}

FlagVector h_from_ab(const AbPoly& psi, int n) {
    FlagVector h(n);
    for (const auto& [word, coef] : psi.terms()) {
        if (static_cast<int>(word.size()) != n) throw InvalidArgument("ab-polynomial is not homogeneous of degree " + std::to_string(n));
        Subset s = 0;
        for (int i = 0; i < n; ++i)
            if (word[i] == 'b') s |= Subset{1} << i;
        h.set(s, coef);
    }
    return h;
}

FlagVector flag_h_vector(const QuasiGradedPoset& p) { return h_from_f(flag_f_vector(p)); }

AbPoly ab_index(const QuasiGradedPoset& p, PsiMethod method) {
    checked_rank(p);
    Index top = p.require_top();
    switch (method) {
        case PsiMethod::chains: {
            FlagVector f = flag_f_vector(p);
            AbPoly out;
            for (const auto& [s, v] : f.values()) out += weight_of_subset(s, f.n()) * v;
            return out;
        }
        case PsiMethod::recursion:
            return psi_straight(p)[top];
        case PsiMethod::mobius:
            return psi_mobius(p)[top];
    }
    throw InvalidArgument("unknown method");
}

CdPoly cd_index(const QuasiGradedPoset& p) { return ab_to_cd(ab_index(p)); }

std::vector<AbPoly> lower_interval_indices(const QuasiGradedPoset& p) { return psi_straight(p); }

DehnSommervilleCheck check_dehn_sommerville(const FlagVector& f) {
    const int n = f.n();
    require_dense(n);
    DehnSommervilleCheck result;
    for (Subset s = 0; s <= f.full(); ++s) {
        std::vector<int> points{0};
        for (int e : subset_elements(s)) points.push_back(e);
        points.push_back(n + 1);
        for (std::size_t q = 0; q + 1 < points.size(); ++q) {
            int i = points[q], k = points[q + 1];
            Rational sum = 0;
            for (int j = i; j <= k; ++j) {
                Subset with = (j == 0 || j == n + 1) ? s : (s | (Subset{1} << (j - 1)));
                sum += sign_power(j) * f[with];
            }
            if (sum != 0) {
                result.ok = false;
                result.witness = DehnSommervilleWitness{s, i, k};
                return result;
            }
        }
        if (s == f.full()) break;
    }
    return result;
}

DehnSommervilleCheck check_dehn_sommerville(const QuasiGradedPoset& p) {
    return check_dehn_sommerville(flag_f_vector(p));
}

bool check_coalgebra_identity(const QuasiGradedPoset& p) {
    Index bottom = p.require_bottom(), top = p.require_top();
    AbTensor lhs = coproduct(ab_index(p));
    std::vector<AbPoly> lower = lower_interval_indices(p);
    AbTensor rhs;
    for (Index x = 0; x < p.size(); ++x) {
        if (x == bottom || x == top) continue;
        rhs.add_product(lower[x], ab_index(interval(p, x, top)));
    }
    return lhs == rhs;
}

AlexanderCheck check_alexander_duality(const QuasiGradedPoset& p, const std::vector<ElementId>& q,
                                       const std::vector<ElementId>& r) {
    Index bottom = p.require_bottom(), top = p.require_top();
    std::set<Index> qs, rs;
    for (const auto& id : q) qs.insert(p.index(id));
    for (const auto& id : r) rs.insert(p.index(id));
    std::set<Index> both;
    std::set_intersection(qs.begin(), qs.end(), rs.begin(), rs.end(), std::inserter(both, both.end()));
    if (both != std::set<Index>{bottom, top} || qs.size() + rs.size() - 2 != p.size())
        throw InvalidArgument("Q and R must cover P and meet exactly in the minimum and maximum");
    AlexanderCheck check;
    long n = p.total_rank() - 1;
    check.lhs = restricted_zeta_inverse(p, q);
    check.rhs = sign_power(n) * restricted_zeta_inverse(p, r);
    check.ok = check.lhs == check.rhs;
    return check;
}

bool check_h_symmetry(const QuasiGradedPoset& p) {
    FlagVector h = flag_h_vector(p);
    for (const auto& [s, v] : h.values())
        if (h[h.full() & ~s] != v) return false;
    return true;
}

}  // namespace eulerflag
