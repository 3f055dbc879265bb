// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace testing;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool condition, const std::string& what) {
        if (!condition && ok) note << what;
        ok = ok && condition;
    }
};

bool run(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note << "exception: " << e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.ok ? "PASS" : "FAIL") << " " << number << " " << title << " (" << ms << " ms)";
    if (!out.ok) std::cout << " -- " << out.note.str();
    std::cout << std::endl;
    return out.ok;
}

const std::map<std::tuple<int, int, int>, const char*> table_one{
    {{2, 0, 0}, "c^2 - 2*d"}, {{2, 1, 0}, "c^2 - d"},    {{2, 1, 1}, "d"},          {{2, 2, 0}, "c^2"},
    {{2, 2, 1}, "d"},         {{2, 2, 2}, "0"},          {{3, 0, 0}, "c^3 - 2*dc"}, {{3, 1, 0}, "c^3 - dc - cd"},
    {{3, 1, 1}, "dc - cd"},   {{3, 2, 0}, "c^3 - cd"},   {{3, 2, 1}, "dc"},         {{3, 2, 2}, "cd"},
    {{3, 3, 0}, "c^3 + dc"},  {{3, 3, 1}, "dc + cd"},    {{3, 3, 2}, "cd"},         {{3, 3, 3}, "0"}};

CdPoly c2_minus_2d_power(int k) { return power(cd("c^2 - 2*d"), k); }

std::vector<Face> facet_list(std::initializer_list<std::initializer_list<const char*>> list) {
    std::vector<Face> out;
    for (const auto& f : list) out.push_back(make_face(std::vector<Vertex>(f.begin(), f.end())));
    return out;
}

// Complementary rank selections Q = P_S, R = P_{S complement}.
bool alexander_for_all_selections(const QuasiGradedPoset& p) {
    const long n = p.total_rank() - 1;
    for (Subset s = 0; s < (Subset{1} << n); ++s) {
        std::vector<ElementId> q, r;
        for (Index x = 0; x < p.size(); ++x) {
            long rank = p.rank(x);
            bool end = x == *p.bottom() || x == *p.top();
            if (end || ((s >> (rank - 1)) & 1)) q.push_back(p.id(x));
            if (end || !((s >> (rank - 1)) & 1)) r.push_back(p.id(x));
        }
        if (!check_alexander_duality(p, q, r).ok) return false;
    }
    return true;
}

}  // namespace

int main() {
    int failures = 0;
    auto tally = [&](bool ok) { failures += ok ? 0 : 1; };

    tally(run(1, "one-gon", [](Outcome& o) {
        QuasiGradedPoset gon = one_gon();
        o.require(ab_index(gon) == ab("a^2 + b^2"), "ab-index");
        o.require(cd_index(gon) == cd("c^2 - d"), "cd-index");
        o.require(is_eulerian(gon).ok, "Eulerian");
    }));

    tally(run(2, "n-gon family, three stratifications", [](Outcome& o) {
        for (int n = 1; n <= 10; ++n)
            for (int v = 1; v <= 3; ++v)
                o.require(cd_index(ngon_poset(n, v)) == cd("c^2") + cd("d") * Rational(n - 2),
                          "n=" + std::to_string(n) + " variant " + std::to_string(v));
    }));

    tally(run(3, "Table 1, three methods", [](Outcome& o) {
        for (const auto& [nki, text] : table_one) {
            auto [n, k, i] = nki;
            for (auto m : {PhiMethod::direct, PhiMethod::recursive, PhiMethod::binomial})
                o.require(phi_shelling_component(n, k, i, m) == parse_cd(text),
                          "cell " + std::to_string(n) + std::to_string(k) + std::to_string(i));
        }
    }));

    tally(run(4, "Omega_n closed forms", [](Outcome& o) {
        const CdPoly c = cd("c");
        for (int n = 1; n <= 8; ++n) {
            CdPoly expected = n % 2 == 0 ? (c2_minus_2d_power(n / 2) + c * c2_minus_2d_power((n - 2) / 2) * c)
                                         : (c * c2_minus_2d_power((n - 1) / 2) + c2_minus_2d_power((n - 1) / 2) * c);
            o.require(cd_index(omega_poset(n)) == expected * Rational(1, 2), "n=" + std::to_string(n));
        }
    }));

    tally(run(5, "manifold formulas", [](Outcome& o) {
        for (int n = 1; n <= 8; ++n)
            for (int chi = -2; chi <= 2; ++chi) {
                CdPoly expected = (n % 2 == 0 ? c2_minus_2d_power(n / 2) : c2_minus_2d_power((n - 1) / 2) * cd("c")) *
                                  Rational(chi);
                o.require(cd_index(manifold_poset(n, chi)) == expected,
                          "n=" + std::to_string(n) + " chi=" + std::to_string(chi));
            }
    }));

    tally(run(6, "zipping", [](Outcome& o) {
        ZipResult two = zip_zipper(ngon_poset(2, 1), {"e1", "e2", "v1"});
        o.require(two.poset.zeta(two.poset.index("v2"), two.poset.index(two.w)) == 2, "zeta(v2,w)");
        o.require(cd_index(two.poset) == cd("c^2 - d"), "2-gon zipped");
        std::mt19937 rng(2024);
        int done = 0;
        for (int attempts = 0; done < 200 && attempts < 5000; ++attempts) {
            QuasiGradedPoset p = random_eulerian(rng);
            if (p.total_rank() > 6) continue;
            auto zippers = find_zippers(p);
            if (zippers.empty()) continue;
            const Zipper& z = zippers[std::uniform_int_distribution<std::size_t>(0, zippers.size() - 1)(rng)];
            ZipResult r = zip_zipper(p, z);
            o.require(r.total_identity && r.lower_identity, "identity on random poset " + std::to_string(done));
            o.require(is_eulerian(r.poset).ok, "Eulerian lost on random poset " + std::to_string(done));
            ++done;
        }
        o.require(done == 200, "only " + std::to_string(done) + " random posets with zippers");
    }));

    tally(run(7, "Eulerian completion", [](Outcome& o) {
        std::mt19937 rng(77);
        for (int t = 0; t < 200; ++t) {
            int rank = std::uniform_int_distribution<int>(2, 6)(rng);
            QuasiGradedPoset p = complete_eulerian(with_random_odd_zeta(random_ranked_poset(rng, rank), rng, -3, 3));
            o.require(is_eulerian(p).ok, "completion " + std::to_string(t));
            for (Index x = 0; x < p.size(); ++x)
                for (Index y : p.above(x))
                    o.require(is_cd_expressible(ab_index(interval(p, x, y))),
                              "interval not cd in completion " + std::to_string(t));
        }
    }));

    tally(run(8, "three ab-index methods agree", [](Outcome& o) {
        for (const auto& p : constructor_corpus()) {
            if (p.total_rank() > 7) continue;
            AbPoly chains = ab_index(p, PsiMethod::chains);
            o.require(chains == ab_index(p, PsiMethod::recursion) && chains == ab_index(p, PsiMethod::mobius),
                      "disagreement");
        }
    }));

    tally(run(9, "semisuspension identities", [](Outcome& o) {
        std::vector<SimplicialComplex> corpus = complex_corpus();
        o.require(corpus.size() >= 20, "corpus too small");
        for (const auto& gamma : corpus)
            for (int n = std::max(1, gamma.dimension() + 1); n <= 5; ++n) {
                o.require(check_wednesday(gamma, n), "raising identity");
                o.require(semisuspension_via_intersections(gamma, n) == cd_index(semisuspension(gamma, n)),
                          "intersections");
            }
        for (std::size_t i = 0; i < corpus.size(); ++i)
            for (std::size_t j = i; j < corpus.size(); ++j) {
                SimplicialComplex join = corpus[i].union_with(corpus[j]);
                for (int n = std::max(1, join.dimension() + 1); n <= 5; ++n)
                    o.require(check_inclusion_exclusion(corpus[i], corpus[j], n), "inclusion-exclusion");
            }
    }));

    tally(run(10, "local relation", [](Outcome& o) {
        o.require(check_local_relation(split_edge_subdivision(), 2).holds(), "split edge");
        o.require(check_local_relation(identity_subdivision(triangle_boundary()), 2).holds(), "identity");
    }));

    tally(run(11, "shellings and h-triangles", [](Outcome& o) {
        HTriangle tri = verify_shelling(triangle_boundary(), facet_list({{"1", "2"}, {"1", "3"}, {"2", "3"}}));
        o.require(tri(2, 0) == 1 && tri(2, 1) == 1 && tri(2, 2) == 1 && tri.entries.size() == 3, "triangle");
        HTriangle mixed = verify_shelling(complex_of({{"a", "b", "c"}, {"c", "d"}}), facet_list({{"a", "b", "c"}, {"c", "d"}}));
        o.require(mixed(3, 0) == 1 && mixed(2, 1) == 1 && mixed.entries.size() == 2, "mixed dimension");
        PhiTable table;
        for (const auto& delta : complex_corpus()) {
            std::vector<Face> order = delta.facets();
            std::sort(order.begin(), order.end());
            std::optional<HTriangle> first;
            do {
                HTriangle h;
                try {
                    h = verify_shelling(delta, order);
                } catch (const NotAShelling&) {
                    continue;
                }
                if (!first) first = h;
                o.require(h.entries == first->entries, "order dependence");
                for (int n = std::max(1, delta.dimension() + 1); n <= 4; ++n)
                    o.require(semisuspension_via_h_triangle(delta, order, n, &table) == cd_index(semisuspension(delta, n)),
                              "h-triangle formula");
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }));

    tally(run(12, "coalgebra and Hopf identities", [](Outcome& o) {
        std::vector<QuasiGradedPoset> family{boolean_algebra(1), boolean_algebra(2), boolean_algebra(3),
                                             one_gon(),          omega_poset(2),     omega_poset(3)};
        for (const auto& p : family) o.require(check_coalgebra_identity(p), "coalgebra");
        for (const auto& p : family)
            for (const auto& q : family) o.require(check_hopf_identities(p, q).ok(), "Hopf");
    }));

    tally(run(13, "duality", [](Outcome& o) {
        for (const auto& p : {boolean_algebra(4), one_gon()}) {
            o.require(ab_index(dual(p)) == star(ab_index(p)), "star");
            o.require(check_h_symmetry(p), "h symmetry");
            o.require(alexander_for_all_selections(p), "Alexander duality");
        }
    }));

    tally(run(14, "negative control: classical 4-chain", [](Outcome& o) {
        QuasiGradedPoset chain = four_chain();
        EulerianCheck check = is_eulerian(chain);
        o.require(!check.ok, "4-chain reported Eulerian");
        o.require(ab_index(chain) == ab("a^2"), "ab-index of the chain");
        for (const AbPoly& psi : {ab_index(chain), ab("a^3")}) {
            bool raised = false;
            try {
                ab_to_cd(psi);
            } catch (const NotCdExpressible&) {
                raised = true;
            }
            o.require(raised, render(psi) + " converted to cd");
        }
        o.require(check.witness && *check.witness == std::pair<ElementId, ElementId>{"v", "e"},
                  "witness is (" + (check.witness ? check.witness->first + "," + check.witness->second : "none") +
                      "), expected (v,e)");
    }));

    return failures == 0 ? 0 : 1;
}
