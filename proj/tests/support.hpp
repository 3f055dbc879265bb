#pragma once

#include "eulerflag/complexes.hpp"
#include "eulerflag/flag.hpp"
#include "eulerflag/ncpoly.hpp"
#include "eulerflag/poset.hpp"
#include "eulerflag/poset_ops.hpp"
#include "eulerflag/qsym.hpp"
#include "eulerflag/shelling.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace eulerflag;

inline AbPoly ab(const char* text) { return parse_ab(text); }
inline CdPoly cd(const char* text) { return parse_cd(text); }

// 0 < v < e < c with the given zeta(v,e).
inline QuasiGradedPoset four_chain(const Rational& ve = 1) {
    PosetSpec spec;
    spec.elements = {{"0", 0}, {"v", 1}, {"e", 2}, {"c", 3}};
    spec.relations = {{"0", "v"}, {"v", "e"}, {"e", "c"}};
    if (ve != 1) spec.zeta.push_back({"v", "e", ve});
    return build_poset(spec);
}

inline QuasiGradedPoset one_gon() { return four_chain(2); }

// x < y < z, classical.
inline QuasiGradedPoset three_chain() {
    PosetSpec spec;
    spec.elements = {{"x", 0}, {"y", 1}, {"z", 2}};
    spec.relations = {{"x", "y"}, {"y", "z"}};
    return build_poset(spec);
}

inline SimplicialComplex complex_of(std::initializer_list<std::initializer_list<const char*>> facets) {
    std::vector<Face> out;
    for (const auto& f : facets) out.push_back(make_face(std::vector<Vertex>(f.begin(), f.end())));
    return SimplicialComplex(out);
}

inline SimplicialComplex triangle_boundary() { return complex_of({{"1", "2"}, {"1", "3"}, {"2", "3"}}); }
inline SimplicialComplex tetrahedron_boundary() {
    return complex_of({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
}

// Triangle boundary and the same with edge {1,2} split at a midpoint m.
inline Subdivision split_edge_subdivision() {
    SimplicialComplex gamma = triangle_boundary();
    SimplicialComplex lambda = complex_of({{"1", "m"}, {"2", "m"}, {"1", "3"}, {"2", "3"}});
    std::map<Face, Face> carriers{{{"1"}, {"1"}}, {{"2"}, {"2"}}, {{"3"}, {"3"}}, {{"m"}, {"1", "2"}}};
    return make_subdivision(gamma, lambda, carriers);
}

inline Subdivision identity_subdivision(const SimplicialComplex& gamma) {
    std::map<Face, Face> carriers;
    for (const auto& v : gamma.vertices()) carriers[{v}] = {v};
    return make_subdivision(gamma, gamma, carriers);
}

// Random complex on vertices "a".."e" with facets of size <= max_size.
inline SimplicialComplex random_complex(std::mt19937& rng, int max_size) {
    static const std::vector<Vertex> pool{"a", "b", "c", "d", "e"};
    std::uniform_int_distribution<int> count(1, 4), size(1, max_size), vertex(0, 4);
    std::vector<Face> facets;
    for (int f = count(rng); f > 0; --f) {
        std::set<Vertex> face;
        for (int s = size(rng); static_cast<int>(face.size()) < s;) face.insert(pool[vertex(rng)]);
        facets.push_back(make_face(std::vector<Vertex>(face.begin(), face.end())));
    }
    return SimplicialComplex(facets);
}

// Ranked poset with 0 and 1: every middle element sits on one of the ranks 1..top-1
// and has at least one lower cover; relations may skip ranks.
inline QuasiGradedPoset random_ranked_poset(std::mt19937& rng, int top_rank) {
    std::uniform_int_distribution<int> width(1, 3), coin(0, 3);
    std::vector<std::vector<ElementId>> layers(static_cast<std::size_t>(top_rank + 1));
    PosetSpec spec;
    layers[0] = {"0"};
    spec.elements.push_back({"0", 0});
    for (int r = 1; r < top_rank; ++r)
        for (int k = width(rng); k > 0; --k) {
            ElementId id = "r" + std::to_string(r) + "_" + std::to_string(k);
            layers[static_cast<std::size_t>(r)].push_back(id);
            spec.elements.push_back({id, r});
            const auto& below = layers[static_cast<std::size_t>(r - 1)];
            std::uniform_int_distribution<std::size_t> pick(0, below.size() - 1);
            spec.relations.emplace_back(below[pick(rng)], id);
            for (int s = 0; s < r - 1; ++s)
                for (const auto& lower : layers[static_cast<std::size_t>(s)])
                    if (coin(rng) == 0) spec.relations.emplace_back(lower, id);
            for (const auto& lower : below)
                if (coin(rng) == 0) spec.relations.emplace_back(lower, id);
        }
    spec.elements.push_back({"1", top_rank});
    for (const auto& e : spec.elements)
        if (e.id != "1") spec.relations.emplace_back(e.id, "1");
    spec.bottom = "0";
    spec.top = "1";
    return build_poset(spec);
}

// Random odd-rank zeta values in lo..hi on the pairs of p; even pairs left unset.
inline PosetSpec with_random_odd_zeta(const QuasiGradedPoset& p, std::mt19937& rng, int lo, int hi) {
    PosetSpec spec = p.to_spec();
    spec.zeta.clear();
    std::uniform_int_distribution<int> value(lo, hi);
    for (Index i = 0; i < p.size(); ++i)
        for (Index j : p.above(i))
            if (p.rank(i, j) % 2 == 1) spec.zeta.push_back({p.id(i), p.id(j), value(rng)});
    return spec;
}

// Eulerian posets of rank <= 6 that tend to contain zippers.
inline QuasiGradedPoset random_eulerian(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 5);
    switch (kind(rng)) {
        case 0: {
            SimplicialComplex gamma = random_complex(rng, 3);
            std::uniform_int_distribution<int> n(gamma.dimension() + 1 < 1 ? 1 : gamma.dimension() + 1, 5);
            return semisuspension(gamma, n(rng));
        }
        case 1: {
            std::uniform_int_distribution<int> n(1, 8), variant(1, 3);
            return ngon_poset(n(rng), variant(rng));
        }
        case 2: {
            SimplicialComplex gamma = random_complex(rng, 2);
            std::uniform_int_distribution<int> n(2, 4);
            return cartesian_product(semisuspension(gamma, std::max(n(rng), gamma.dimension() + 1)), boolean_algebra(1));
        }
        case 3: {
            std::uniform_int_distribution<int> k(1, 3), m(1, 3);
            return stanley_product(boolean_algebra(k(rng)), omega_poset(m(rng)));
        }
        case 4: {
            const int which = std::uniform_int_distribution<int>(0, 2)(rng);
            SimplicialComplex sphere = which == 0   ? triangle_boundary()
                                       : which == 1 ? tetrahedron_boundary()
                                                    : complex_of({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
            return face_poset_classical(sphere, true);
        }
        default: {
            std::uniform_int_distribution<int> k(2, 4);
            return boolean_algebra(k(rng));
        }
    }
}

// Every poset built by the constructor modules with rank <= 7.
inline std::vector<QuasiGradedPoset> constructor_corpus() {
    std::vector<QuasiGradedPoset> out;
    for (int k = 1; k <= 6; ++k) out.push_back(boolean_algebra(k));
    for (int n = 1; n <= 6; ++n) out.push_back(omega_poset(n));
    for (int n = 1; n <= 6; ++n)
        for (int chi = -2; chi <= 2; ++chi) out.push_back(manifold_poset(n, chi));
    for (int n = 1; n <= 6; ++n)
        for (int v = 1; v <= 3; ++v) out.push_back(ngon_poset(n, v));
    out.push_back(simple_chain_poset({4, 4}));
    out.push_back(simple_chain_poset({8, 12, 6}));
    out.push_back(face_poset_classical(triangle_boundary(), true));
    out.push_back(face_poset_classical(tetrahedron_boundary(), true));
    out.push_back(face_poset_classical(complex_of({{"1", "2", "3"}}), false));
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (int i = 0; i <= k; ++i) out.push_back(semisuspension(delta_complex(k, i), n));
    return out;
}

// Complexes for the semisuspension identities.
inline std::vector<SimplicialComplex> complex_corpus() {
    std::vector<SimplicialComplex> out;
    for (int k = 0; k <= 4; ++k)
        for (int i = 0; i <= k; ++i) out.push_back(delta_complex(k, i));
    out.push_back(complex_of({{"1", "2"}, {"2", "3"}}));
    out.push_back(complex_of({{"1", "2"}, {"2", "3"}, {"3", "4"}}));
    out.push_back(complex_of({{"1"}, {"2"}}));
    out.push_back(complex_of({{"1"}, {"2", "3"}}));
    out.push_back(triangle_boundary());
    out.push_back(tetrahedron_boundary());
    out.push_back(complex_of({{"a", "b", "c"}, {"c", "d"}}));
    return out;
}

}  // namespace testing
