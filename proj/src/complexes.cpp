#include "eulerflag/complexes.hpp"

#include "eulerflag/poset_ops.hpp"

#include <algorithm>
#include <set>

namespace eulerflag {

namespace {

struct FaceOrder {
    bool operator()(const Face& l, const Face& r) const {
        return l.size() != r.size() ? l.size() < r.size() : l < r;
    }
};

bool is_subset(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Face face_union(const Face& l, const Face& r) {
    Face out;
    std::set_union(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
    return out;
}

Face face_intersection(const Face& l, const Face& r) {
    Face out;
    std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
    return out;
}

Face without(const Face& face, std::size_t position) {
    Face out = face;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(position));
    return out;
}

void require_semi_dimension(const SimplicialComplex& gamma, int n) {
    if (n < 1) throw InvalidArgument("semisuspension needs n >= 1");
    if (gamma.dimension() + 1 > n)
        throw InvalidArgument("semisuspension needs dim(complex) < n; got dimension " +
                              std::to_string(gamma.dimension()) + " and n = " + std::to_string(n));
}

const AbPoly& letter_c() {
    static const AbPoly c = AbPoly::monomial("a") + AbPoly::monomial("b");
    return c;
}

const AbPoly& letter_d() {
    static const AbPoly d = AbPoly::monomial("ab") + AbPoly::monomial("ba");
    return d;
}

}  // namespace

std::string face_id(const Face& face) {
    std::string out = "{";
    for (std::size_t k = 0; k < face.size(); ++k) out += (k ? "," : "") + face[k];
    return out + "}";
}

Face make_face(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw InvalidArgument("repeated vertex in face");
    for (const auto& v : vertices)
        if (v.empty()) throw InvalidArgument("empty vertex id");
    return vertices;
}

SimplicialComplex::SimplicialComplex() : facets_{Face{}}, faces_{Face{}} {}

SimplicialComplex::SimplicialComplex(std::vector<Face> facets, const std::vector<Vertex>& extra_vertices) {
    for (auto& f : facets) f = make_face(std::move(f));
    for (const auto& v : extra_vertices) facets.push_back(make_face({v}));
    // Keep the first occurrence of each maximal facet, in input order.
    for (std::size_t k = 0; k < facets.size(); ++k) {
        bool dominated = false;
        for (std::size_t m = 0; m < facets.size() && !dominated; ++m) {
            if (m == k) continue;
            if (facets[m] == facets[k]) dominated = m < k;
            else if (is_subset(facets[k], facets[m])) dominated = true;
        }
        if (!dominated) facets_.push_back(facets[k]);
    }
    if (facets_.empty()) facets_.push_back(Face{});
    std::set<Face, FaceOrder> all;
    for (const auto& f : facets_) {
        if (f.size() > 20) throw InvalidArgument("facet too large (more than 20 vertices)");
        for (unsigned long mask = 0; mask < (1ul << f.size()); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < f.size(); ++i)
                if ((mask >> i) & 1ul) sub.push_back(f[i]);
            all.insert(std::move(sub));
        }
    }
    faces_.assign(all.begin(), all.end());
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> out;
    for (const auto& f : faces_)
        if (f.size() == 1) out.push_back(f[0]);
    return out;
}

bool SimplicialComplex::contains(const Face& face) const {
    return std::binary_search(faces_.begin(), faces_.end(), face, FaceOrder{});
}

int SimplicialComplex::dimension() const {
    std::size_t largest = 0;
    for (const auto& f : facets_) largest = std::max(largest, f.size());
    return static_cast<int>(largest) - 1;
}

SimplicialComplex SimplicialComplex::link(const Face& face) const {
    if (!contains(face)) throw InvalidArgument("face " + face_id(face) + " is not in the complex");
    std::vector<Face> parts;
    for (const auto& tau : faces_)
        if (face_intersection(tau, face).empty() && contains(face_union(tau, face))) parts.push_back(tau);
    return SimplicialComplex(parts);
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (const auto& f : faces_)
        if (!f.empty()) chi += (f.size() % 2 == 1) ? 1 : -1;
    return chi;
}

SimplicialComplex SimplicialComplex::intersection(const SimplicialComplex& other) const {
    std::vector<Face> common;
    for (const auto& f : faces_)
        if (other.contains(f)) common.push_back(f);
    return SimplicialComplex(common);
}

SimplicialComplex SimplicialComplex::union_with(const SimplicialComplex& other) const {
    std::vector<Face> all = facets_;
    all.insert(all.end(), other.facets_.begin(), other.facets_.end());
    return SimplicialComplex(all);
}

SimplicialComplex SimplicialComplex::generated_by(const std::vector<Face>& faces) const {
    for (const auto& f : faces)
        if (!contains(f)) throw InvalidArgument("face " + face_id(f) + " is not in the complex");
    return SimplicialComplex(faces);
}

QuasiGradedPoset face_poset_classical(const SimplicialComplex& gamma, bool adjoin_top) {
    PosetSpec spec;
    for (const auto& f : gamma.faces()) {
        spec.elements.push_back({face_id(f), static_cast<long>(f.size())});
        for (std::size_t i = 0; i < f.size(); ++i) spec.relations.emplace_back(face_id(without(f, i)), face_id(f));
    }
    if (adjoin_top) {
        spec.elements.push_back({"1", gamma.dimension() + 2});
        for (const auto& f : gamma.facets()) spec.relations.emplace_back(face_id(f), "1");
    }
    return build_poset(spec);
}

QuasiGradedPoset semisuspension(const SimplicialComplex& gamma, int n) {
    require_semi_dimension(gamma, n);
    PosetSpec spec;
    for (const auto& f : gamma.faces()) {
        const ElementId id = face_id(f);
        const long r = static_cast<long>(f.size());
        spec.elements.push_back({id, r});
        for (std::size_t i = 0; i < f.size(); ++i) spec.relations.emplace_back(face_id(without(f, i)), id);
        spec.relations.emplace_back(id, "1");
        if (r < n) {
            spec.relations.emplace_back(id, "*");
            Rational z = 1 + sign_power(n - r) * gamma.link(f).reduced_euler_characteristic();
            if (z != 1) spec.zeta.push_back({id, "*", z});
        }
    }
    spec.elements.push_back({"*", n});
    spec.elements.push_back({"1", n + 1});
    spec.relations.emplace_back("*", "1");
    return build_poset(spec);
}

QuasiGradedPoset omega_poset(int n) {
    if (n < 1) throw InvalidArgument("omega needs n >= 1");
    PosetSpec spec;
    spec.elements = {{"0", 0}, {"p", 1}, {"c", n}, {"b", n + 1}};
    spec.relations = {{"0", "p"}, {"0", "c"}, {"p", "b"}, {"c", "b"}};
    if (n >= 2) {
        spec.relations.emplace_back("p", "c");
        Rational z = 1 + sign_power(n);
        if (z != 1) spec.zeta.push_back({"p", "c", z});
    }
    return build_poset(spec);
}

QuasiGradedPoset manifold_poset(int n, const Rational& chi) {
    if (n < 1) throw InvalidArgument("manifold needs n >= 1");
    PosetSpec spec;
    spec.elements = {{"0", 0}, {"dM", n}, {"M", n + 1}};
    spec.relations = {{"0", "dM"}, {"dM", "M"}};
    spec.zeta = {{"0", "dM", (1 - sign_power(n)) * chi}, {"0", "M", chi}};
    return build_poset(spec);
}

QuasiGradedPoset ngon_poset(int n, int variant) {
    if (n < 1) throw InvalidArgument("ngon needs n >= 1");
    if (variant < 1 || variant > 3) throw InvalidArgument("ngon stratification must be 1, 2 or 3");
    PosetSpec spec;
    spec.elements.push_back({"0", 0});
    spec.elements.push_back({"1", 3});
    auto v = [](int i) { return "v" + std::to_string(i); };
    auto e = [](int i) { return "e" + std::to_string(i); };
    for (int i = 1; i <= n; ++i) {
        spec.elements.push_back({v(i), 1});
        spec.elements.push_back({e(i), 2});
        spec.relations.emplace_back("0", v(i));
        spec.relations.emplace_back(e(i), "1");
        spec.relations.emplace_back(v(i), e(i));
        if (n >= 2) spec.relations.emplace_back(v(i % n + 1), e(i));
    }
    if (n == 1) spec.zeta.push_back({v(1), e(1), 2});
    QuasiGradedPoset p = build_poset(spec);
    if (variant == 1) return p;
    ElementId edges = e(1);
    for (int i = 2; i <= n; ++i) {
        ElementId next = merged_id(p, {edges, e(i)});
        p = merge_equal_upset(p, edges, e(i));
        edges = next;
    }
    if (variant == 2) return p;
    ElementId points = v(1);
    for (int i = 2; i <= n; ++i) {
        ElementId next = merged_id(p, {points, v(i)});
        p = merge_equal_upset(p, points, v(i));
        points = next;
    }
    return p;
}

QuasiGradedPoset simple_chain_poset(const std::vector<Rational>& f) {
    const long n = static_cast<long>(f.size());
    if (n < 1) throw InvalidArgument("simple chain needs a nonempty f-vector");
    PosetSpec spec;
    auto x = [](long i) { return "x" + std::to_string(i); };
    spec.elements.push_back({"0", 0});
    spec.elements.push_back({"1", n + 1});
    spec.relations.emplace_back("0", x(1));
    for (long i = 1; i <= n; ++i) {
        spec.elements.push_back({x(i), i});
        spec.relations.emplace_back(x(i), i == n ? std::string("1") : x(i + 1));
        spec.zeta.push_back({"0", x(i), f[static_cast<std::size_t>(i - 1)]});
        for (long j = i + 1; j <= n; ++j) spec.zeta.push_back({x(i), x(j), binomial(n + 1 - i, n + 1 - j)});
    }
    return build_poset(spec);
}

AbPoly semisuspension_of_empty_face(int n) { return ab_index(semisuspension(SimplicialComplex(), n)); }

bool check_inclusion_exclusion(const SimplicialComplex& gamma, const SimplicialComplex& delta, int n) {
    SimplicialComplex join = gamma.union_with(delta);
    require_semi_dimension(join, n);
    SimplicialComplex meet = gamma.intersection(delta);
    AbPoly lhs = ab_index(semisuspension(gamma, n)) + ab_index(semisuspension(delta, n));
    AbPoly rhs = ab_index(semisuspension(meet, n)) + ab_index(semisuspension(join, n));
    return lhs == rhs;
}

CdPoly semisuspension_via_intersections(const SimplicialComplex& gamma, int n) {
    require_semi_dimension(gamma, n);
    std::set<Face, FaceOrder> found(gamma.facets().begin(), gamma.facets().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Face> current(found.begin(), found.end());
        for (const auto& a : current)
            for (const auto& facet : gamma.facets())
                if (found.insert(face_intersection(a, facet)).second) grew = true;
    }
    AbPoly total;
    for (const auto& f : found) {
        Rational weight = -gamma.link(f).reduced_euler_characteristic();
        if (weight == 0) continue;
        AbPoly term;
        if (f.empty()) {
            term = semisuspension_of_empty_face(n);
        } else {
            const int k = static_cast<int>(f.size());
            term = ab_index(boolean_algebra(k)) * ab_index(omega_poset(n - k + 1));
        }
        total += term * weight;
    }
    return ab_to_cd(total);
}

bool check_wednesday(const SimplicialComplex& gamma, int n) {
    QuasiGradedPoset low = semisuspension(gamma, n);
    AbPoly lower_star = ab_index(interval(low, "{}", "*"));
    AbPoly expected = ab_index(low) * letter_c() - lower_star * letter_d();
    return ab_index(semisuspension(gamma, n + 1)) == expected;
}

Subdivision make_subdivision(SimplicialComplex gamma, SimplicialComplex lambda,
                             const std::map<Face, Face>& given_carriers) {
    if (gamma.dimension() != lambda.dimension())
        throw InvalidArgument("subdivision: gamma and lambda differ in dimension");
    for (const auto* complex : {&gamma, &lambda}) {
        if (complex->dimension() < 0) throw InvalidArgument("subdivision: boundary complex is empty");
        if (!is_eulerian(face_poset_classical(*complex, true)).ok)
            throw InvalidArgument("subdivision: the interior is not a face (boundary is not an Eulerian sphere)");
    }
    for (const auto& [x, s] : given_carriers) {
        if (!lambda.contains(x)) throw InvalidArgument("carrier given for " + face_id(x) + ", not a face of lambda");
        if (!gamma.contains(s)) throw InvalidArgument("carrier " + face_id(s) + " is not a face of gamma");
    }
    Subdivision out{std::move(gamma), std::move(lambda), {}};
    for (const auto& x : out.lambda.faces()) {
        Face sigma;
        if (auto it = given_carriers.find(x); it != given_carriers.end()) {
            sigma = it->second;
        } else if (x.size() == 1) {
            throw InvalidArgument("no carrier for vertex " + x[0]);
        } else {
            for (const auto& v : x) sigma = face_union(sigma, out.carrier.at(Face{v}));
        }
        if (!out.gamma.contains(sigma))
            throw InvalidArgument("carrier " + face_id(sigma) + " of " + face_id(x) + " is not a face of gamma");
        if (sigma.size() < x.size())
            throw InvalidArgument("carrier " + face_id(sigma) + " has smaller dimension than " + face_id(x));
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!is_subset(out.carrier.at(without(x, i)), sigma))
                throw InvalidArgument("carrier map is not order-preserving at " + face_id(x));
        out.carrier[x] = sigma;
    }
    return out;
}

LocalRelation check_local_relation(const Subdivision& sub, int n) {
    if (sub.gamma.dimension() + 1 != n)
        throw InvalidArgument("local relation: subdivisions of the " + std::to_string(n) +
                              "-ball need boundary complexes of dimension " + std::to_string(n - 1));
    LocalRelation out;
    auto add = [&](std::string label, long rank_to_top, const AbPoly& psi) {
        AbPoly term = psi * Rational(sign_power(rank_to_top));
        out.sum += term;
        out.terms.emplace_back(std::move(label), std::move(term));
    };
    add("0", n + 1, semisuspension_of_empty_face(n));
    for (const auto& f : sub.gamma.faces()) {
        if (f.empty()) continue;
        std::vector<Face> carried;
        for (const auto& [x, sigma] : sub.carrier)
            if (is_subset(sigma, f)) carried.push_back(x);
        SimplicialComplex restricted = sub.lambda.generated_by(carried);
        add(face_id(f), n + 1 - static_cast<long>(f.size()), ab_index(semisuspension(restricted, n)));
    }
    add("1", 0, ab_index(face_poset_classical(sub.lambda, true)));
    return out;
}

}  // namespace eulerflag
