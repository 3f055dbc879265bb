#include "eulerflag/shelling.hpp"

#include "eulerflag/poset_ops.hpp"

#include <algorithm>
#include <set>

namespace eulerflag {

namespace {

void check_bounds(int n, int k, int i) {
    if (n < 1 || k < 0 || i < 0 || i > k || k > n)
        throw InvalidArgument("shelling component needs 0 <= i <= k <= n and n >= 1; got (" + std::to_string(n) +
                              "," + std::to_string(k) + "," + std::to_string(i) + ")");
}

const CdPoly& letter(const char* w) {
    static const CdPoly c = CdPoly::monomial("c"), d = CdPoly::monomial("d");
    return w[0] == 'c' ? c : d;
}

CdPoly c2_minus_2d() { return letter("c") * letter("c") - letter("d") * Rational(2); }

// Phi(n,k,0) from the closed forms, n >= 0 allowed.
CdPoly phi_boundary(int n, int k) {
    if (k == 0) return n == 0 ? CdPoly::one() : manifold_cd(n, 1);
    return boolean_cd(k) * omega_cd(n - k + 1);
}

CdPoly phi_recursive(int n, int k, int i) {
    if (i == 0) return phi_boundary(n, k);
    return derivation_g(phi_recursive(n - 1, k - 1, i - 1));
}

CdPoly phi_binomial(int n, int k, int i) {
    CdPoly out;
    for (int j = 0; j <= i; ++j) out += phi_boundary(n, k - j) * Rational(sign_power(j) * binomial(i, j));
    return out;
}

CdPoly phi_direct(int n, int k, int i) {
    CdPoly out = cd_index(semisuspension(delta_complex(k, i), n));
    if (i > 0) out -= cd_index(semisuspension(delta_complex(k, i - 1), n));
    return out;
}

}  // namespace

SimplicialComplex delta_complex(int k, int i) {
    if (k < 0 || i < 0 || i > k) throw InvalidArgument("delta complex needs 0 <= i <= k");
    if (k == 0) return SimplicialComplex();
    std::vector<Face> facets;
    for (int j = 1; j <= i + 1; ++j) {
        std::vector<Vertex> face;
        for (int v = 1; v <= k + 1; ++v)
            if (v != j) face.push_back(std::to_string(v));
        facets.push_back(make_face(std::move(face)));
    }
    return SimplicialComplex(facets);
}

CdPoly boolean_cd(int k) {
    if (k < 1) throw InvalidArgument("boolean algebra index needs k >= 1");
    CdPoly psi = CdPoly::one();
    for (int j = 1; j < k; ++j) psi = psi * letter("c") + derivation_g(psi);
    return psi;
}

CdPoly omega_cd(int m) {
    if (m < 1) throw InvalidArgument("omega needs m >= 1");
    const CdPoly c = letter("c");
    CdPoly sum = m % 2 == 0 ? power(c2_minus_2d(), m / 2) + c * power(c2_minus_2d(), (m - 2) / 2) * c
                            : c * power(c2_minus_2d(), (m - 1) / 2) + power(c2_minus_2d(), (m - 1) / 2) * c;
    return sum * Rational(1, 2);
}

CdPoly manifold_cd(int n, const Rational& chi) {
    if (n < 1) throw InvalidArgument("manifold needs n >= 1");
    CdPoly out = n % 2 == 0 ? power(c2_minus_2d(), n / 2) : power(c2_minus_2d(), (n - 1) / 2) * letter("c");
    return out * chi;
}

CdPoly phi_shelling_component(int n, int k, int i, PhiMethod method) {
    check_bounds(n, k, i);
    switch (method) {
        case PhiMethod::direct: return phi_direct(n, k, i);
        case PhiMethod::recursive: return phi_recursive(n, k, i);
        case PhiMethod::binomial: return phi_binomial(n, k, i);
    }
    throw InvalidArgument("unknown method");
}

const CdPoly& PhiTable::get(int n, int k, int i, PhiMethod method) {
    check_bounds(n, k, i);
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(n, k, i, static_cast<int>(method));
    auto it = entries_.find(key);
    if (it == entries_.end()) it = entries_.emplace(key, phi_shelling_component(n, k, i, method)).first;
    return it->second;
}

NotAShelling::NotAShelling(std::size_t position, Face facet, SimplicialComplex intersection)
    : Error("not a shelling at position " + std::to_string(position) + ": facet " + face_id(facet) +
            " meets the earlier facets in a complex that is not pure of dimension " +
            std::to_string(static_cast<long>(facet.size()) - 2)),
      position_(position),
      facet_(std::move(facet)),
      intersection_(std::move(intersection)) {}

long HTriangle::operator()(int k, int i) const {
    auto it = entries.find({k, i});
    return it == entries.end() ? 0 : it->second;
}

HTriangle verify_shelling(const SimplicialComplex& delta, const std::vector<Face>& order) {
    std::vector<Face> given;
    for (const auto& f : order) given.push_back(make_face(f));
    std::vector<Face> sorted_given = given, sorted_facets = delta.facets();
    std::sort(sorted_given.begin(), sorted_given.end());
    std::sort(sorted_facets.begin(), sorted_facets.end());
    if (sorted_given != sorted_facets) throw InvalidArgument("shelling order must list every facet exactly once");

    HTriangle out;
    std::vector<Face> earlier;
    for (std::size_t r = 0; r < given.size(); ++r) {
        const Face& facet = given[r];
        const int k = static_cast<int>(facet.size());
        int i = 0;
        if (r > 0) {
            SimplicialComplex before(earlier);
            SimplicialComplex closure(std::vector<Face>{facet});
            SimplicialComplex meet = before.intersection(closure);
            for (const auto& m : meet.facets())
                if (static_cast<int>(m.size()) != k - 1) throw NotAShelling(r + 1, facet, meet);
            i = static_cast<int>(meet.facets().size());
        }
        out.steps.push_back({facet, k, i});
        ++out.entries[{k, i}];
        earlier.push_back(facet);
    }
    return out;
}

CdPoly semisuspension_via_h_triangle(const SimplicialComplex& delta, const std::vector<Face>& order, int n,
                                     PhiTable* table) {
    HTriangle h = verify_shelling(delta, order);
    if (delta.dimension() + 1 > n) throw InvalidArgument("complex dimension must be below n");
    CdPoly out;
    for (const auto& [ki, count] : h.entries) {
        const CdPoly phi = table ? table->get(n, ki.first, ki.second)
                                 : phi_shelling_component(n, ki.first, ki.second, PhiMethod::binomial);
        out += phi * Rational(count);
    }
    return out;
}

bool check_four_posets(int n, int k, int i) {
    check_bounds(n, k, i);
    QuasiGradedPoset p = semisuspension(delta_complex(k, i), n);
    AbPoly lhs = ab_index(cartesian_product(p, boolean_algebra(1))) +
                 ab_index(semisuspension(delta_complex(k + 1, 0), n + 1));
    AbPoly rhs = ab_index(semisuspension(delta_complex(k + 1, i + 1), n + 1)) +
                 ab_index(stanley_product(p, boolean_algebra(2)));
    return lhs == rhs;
}

}  // namespace eulerflag
