#include "eulerflag/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace eulerflag {

namespace {

const Rational kZero(0);
const Rational kOne(1);

}  // namespace

Index QuasiGradedPoset::index(const ElementId& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw InvalidArgument("unknown element '" + id + "'");
    return it->second;
}

const Rational& QuasiGradedPoset::zeta(Index i, Index j) const {
    if (i == j) return kOne;
    if (!less(i, j)) return kZero;
    auto it = zeta_.find(key(i, j));
    return it == zeta_.end() ? kOne : it->second;
}

Index QuasiGradedPoset::require_bottom() const {
    if (!bottom_) throw InvalidPoset("poset has no minimum element");
    return *bottom_;
}

Index QuasiGradedPoset::require_top() const {
    if (!top_) throw InvalidPoset("poset has no maximum element");
    return *top_;
}

long QuasiGradedPoset::total_rank() const { return rank(require_bottom(), require_top()); }

PosetSpec QuasiGradedPoset::to_spec() const {
    PosetSpec spec;
    for (Index i = 0; i < size(); ++i) spec.elements.push_back({ids_[i], ranks_[i]});
    for (Index i = 0; i < size(); ++i)
        for (Index j : upper_covers_[i]) spec.relations.emplace_back(ids_[i], ids_[j]);
    for (Index i = 0; i < size(); ++i)
        for (Index j : above_[i]) {
            const Rational& z = zeta(i, j);
            if (z != 1) spec.zeta.push_back({ids_[i], ids_[j], z});
        }
    if (bottom_) spec.bottom = ids_[*bottom_];
    if (top_) spec.top = ids_[*top_];
    return spec;
}

bool operator==(const QuasiGradedPoset& lhs, const QuasiGradedPoset& rhs) {
    return lhs.ids_ == rhs.ids_ && lhs.ranks_ == rhs.ranks_ && lhs.rows_ == rhs.rows_ &&
           lhs.zeta_ == rhs.zeta_ && lhs.bottom_ == rhs.bottom_ && lhs.top_ == rhs.top_;
}

QuasiGradedPoset build_poset(const PosetSpec& spec) {
    const std::size_t n = spec.elements.size();
    if (n == 0) throw InvalidPoset("poset has no elements");
    if (n >= (std::size_t{1} << 31)) throw InvalidPoset("poset too large");

    // Input positions, then the canonical (rank, id) order.
    std::unordered_map<ElementId, std::size_t> position;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& e = spec.elements[k];
        if (e.id.empty()) throw InvalidPoset("empty element id");
        if (e.rank < 0) throw InvalidPoset("negative rank for '" + e.id + "'");
        if (!position.emplace(e.id, k).second) throw InvalidPoset("duplicate element '" + e.id + "'");
    }
    auto lookup = [&](const ElementId& id, const char* what) {
        auto it = position.find(id);
        if (it == position.end()) throw InvalidPoset(std::string(what) + " refers to unknown element '" + id + "'");
        return it->second;
    };

    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [from, to] : spec.relations) {
        std::size_t a = lookup(from, "relation"), b = lookup(to, "relation");
        if (a == b) throw InvalidPoset("cycle in relations at '" + from + "'");
        succ[a].push_back(b);
        ++indegree[b];
    }
    {
        std::vector<std::size_t> queue;
        for (std::size_t k = 0; k < n; ++k)
            if (indegree[k] == 0) queue.push_back(k);
        std::size_t seen = 0;
        while (!queue.empty()) {
            std::size_t k = queue.back();
            queue.pop_back();
            ++seen;
            for (std::size_t m : succ[k])
                if (--indegree[m] == 0) queue.push_back(m);
        }
        if (seen != n) throw InvalidPoset("cycle in relations");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : succ[a])
            if (spec.elements[a].rank >= spec.elements[b].rank)
                throw InvalidPoset("rank is not strictly order-preserving on '" + spec.elements[a].id + "' < '" +
                                   spec.elements[b].id + "'");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ea = spec.elements[a];
        const auto& eb = spec.elements[b];
        return ea.rank != eb.rank ? ea.rank < eb.rank : ea.id < eb.id;
    });
    std::vector<Index> canonical(n);
    for (Index i = 0; i < n; ++i) canonical[order[i]] = i;

    QuasiGradedPoset p;
    p.ids_.resize(n);
    p.ranks_.resize(n);
    for (Index i = 0; i < n; ++i) {
        p.ids_[i] = spec.elements[order[i]].id;
        p.ranks_[i] = spec.elements[order[i]].rank;
        p.by_id_.emplace(p.ids_[i], i);
    }

    const std::size_t words = (n + 63) / 64;
    p.rows_.assign(n, std::vector<std::uint64_t>(words, 0));
    for (Index i = n; i-- > 0;) {
        auto& row = p.rows_[i];
        for (std::size_t m : succ[order[i]]) {
            Index j = canonical[m];
            row[j / 64] |= std::uint64_t{1} << (j % 64);
            for (std::size_t w = 0; w < words; ++w) row[w] |= p.rows_[j][w];
        }
    }

    p.above_.assign(n, {});
    p.below_.assign(n, {});
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (p.less(i, j)) {
                p.above_[i].push_back(j);
                p.below_[j].push_back(i);
            }
    p.upper_covers_.assign(n, {});
    p.lower_covers_.assign(n, {});
    for (Index i = 0; i < n; ++i)
        for (Index j : p.above_[i]) {
            bool cover = true;
            for (Index k : p.above_[i]) {
                if (k >= j) break;
                if (p.less(k, j)) {
                    cover = false;
                    break;
                }
            }
            if (cover) {
                p.upper_covers_[i].push_back(j);
                p.lower_covers_[j].push_back(i);
            }
        }

    if (spec.bottom) {
        Index b = canonical[lookup(*spec.bottom, "bottom")];
        if (p.above_[b].size() != n - 1)
            throw InvalidPoset("declared bottom '" + *spec.bottom + "' is not below every element");
        p.bottom_ = b;
    } else if (p.above_[0].size() == n - 1) {
        p.bottom_ = 0;
    }
    if (spec.top) {
        Index t = canonical[lookup(*spec.top, "top")];
        if (p.below_[t].size() != n - 1)
            throw InvalidPoset("declared top '" + *spec.top + "' is not above every element");
        p.top_ = t;
    } else if (p.below_[n - 1].size() == n - 1) {
        p.top_ = n - 1;
    }
    if (p.bottom_) {
        long shift = p.ranks_[*p.bottom_];
        for (auto& r : p.ranks_) r -= shift;
    }

    for (const auto& z : spec.zeta) {
        Index i = canonical[lookup(z.from, "zeta")], j = canonical[lookup(z.to, "zeta")];
        if (i == j) {
            if (z.value != 1) throw InvalidPoset("zeta(" + z.from + "," + z.from + ") must be 1");
            continue;
        }
        if (!p.less(i, j))
            throw InvalidPoset("zeta given on incomparable pair (" + z.from + "," + z.to + ")");
        auto k = QuasiGradedPoset::key(i, j);
        auto existing = p.zeta_.find(k);
        Rational current = existing == p.zeta_.end() ? Rational(1) : existing->second;
        bool given_before = existing != p.zeta_.end();
        if (given_before && current != z.value)
            throw InvalidPoset("conflicting zeta values on (" + z.from + "," + z.to + ")");
        if (z.value != 1) p.zeta_[k] = z.value;
    }
    return p;
}

IncidenceFunction zeta_function(const QuasiGradedPoset& p) {
    IncidenceFunction f(p.size());
    for (Index i = 0; i < p.size(); ++i) {
        f(i, i) = 1;
        for (Index j : p.above(i)) f(i, j) = p.zeta(i, j);
    }
    return f;
}

IncidenceFunction delta_function(const QuasiGradedPoset& p) {
    IncidenceFunction f(p.size());
    for (Index i = 0; i < p.size(); ++i) f(i, i) = 1;
    return f;
}

IncidenceFunction convolve(const QuasiGradedPoset& p, const IncidenceFunction& f, const IncidenceFunction& g) {
    if (f.size() != p.size() || g.size() != p.size())
        throw InvalidArgument("incidence function does not match the poset");
    IncidenceFunction h(p.size());
    for (Index x = 0; x < p.size(); ++x) {
        h(x, x) = f(x, x) * g(x, x);
        for (Index y : p.above(x)) {
            Rational sum = f(x, x) * g(x, y) + f(x, y) * g(y, y);
            for (Index z : p.above(x)) {
                if (z >= y) break;
                if (p.less(z, y)) sum += f(x, z) * g(z, y);
            }
            h(x, y) = sum;
        }
    }
    return h;
}

IncidenceFunction weighted_mobius(const QuasiGradedPoset& p) {
    IncidenceFunction mu(p.size());
    for (Index x = 0; x < p.size(); ++x) {
        mu(x, x) = 1;
        for (Index y : p.above(x)) {
            Rational sum = p.zeta(x, y);
            for (Index z : p.above(x)) {
                if (z >= y) break;
                if (p.less(z, y)) sum += mu(x, z) * p.zeta(z, y);
            }
            mu(x, y) = -sum;
        }
    }
    return mu;
}

QuasiGradedPoset induced_subposet(const QuasiGradedPoset& p, const std::vector<Index>& keep) {
    std::vector<Index> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    PosetSpec spec;
    for (Index i : sorted) spec.elements.push_back({p.id(i), p.rank(i)});
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b)
            if (p.less(sorted[a], sorted[b])) {
                spec.relations.emplace_back(p.id(sorted[a]), p.id(sorted[b]));
                const Rational& z = p.zeta(sorted[a], sorted[b]);
                if (z != 1) spec.zeta.push_back({p.id(sorted[a]), p.id(sorted[b]), z});
            }
    return build_poset(spec);
}

QuasiGradedPoset interval(const QuasiGradedPoset& p, Index x, Index y) {
    if (!p.leq(x, y)) throw InvalidArgument("interval [" + p.id(x) + "," + p.id(y) + "]: lower end is not below upper end");
    std::vector<Index> keep{x};
    for (Index w : p.above(x))
        if (p.leq(w, y)) keep.push_back(w);
    return induced_subposet(p, keep);
}

QuasiGradedPoset interval(const QuasiGradedPoset& p, const ElementId& x, const ElementId& y) {
    return interval(p, p.index(x), p.index(y));
}

EulerianCheck is_eulerian(const QuasiGradedPoset& p) {
    EulerianCheck result;
    for (Index x = 0; x < p.size(); ++x)
        for (Index z : p.above(x)) {
            Rational sum = p.zeta(x, z) + sign_power(p.rank(x, z)) * p.zeta(x, z);
            for (Index y : p.above(x)) {
                if (y >= z) break;
                if (p.less(y, z)) sum += sign_power(p.rank(x, y)) * p.zeta(x, y) * p.zeta(y, z);
            }
            if (sum == 0) continue;
            std::pair<ElementId, ElementId> candidate{p.id(x), p.id(z)};
            if (!result.witness || candidate < *result.witness) result.witness = candidate;
            result.ok = false;
        }
    return result;
}

QuasiGradedPoset complete_eulerian(const PosetSpec& spec) {
    QuasiGradedPoset base = build_poset(spec);
    for (const auto& z : spec.zeta) {
        Index i = base.index(z.from), j = base.index(z.to);
        if (i != j && base.rank(i, j) % 2 == 0)
            throw InvalidArgument("zeta(" + z.from + "," + z.to + ") has even rank difference; completion fills these");
    }
    const std::size_t n = base.size();
    std::map<std::pair<Index, Index>, Rational> value;
    std::vector<std::pair<Index, Index>> even;
    for (Index x = 0; x < n; ++x)
        for (Index z : base.above(x)) {
            if (base.rank(x, z) % 2 == 0) even.emplace_back(x, z);
            else value[{x, z}] = base.zeta(x, z);
        }
    std::stable_sort(even.begin(), even.end(), [&](auto l, auto r) {
        return base.rank(l.first, l.second) < base.rank(r.first, r.second);
    });
    for (auto [x, z] : even) {
        Rational sum = 0;
        for (Index y : base.above(x)) {
            if (y >= z) break;
            if (base.less(y, z)) sum += sign_power(base.rank(x, y)) * value.at({x, y}) * value.at({y, z});
        }
        value[{x, z}] = -sum / 2;
    }
    PosetSpec out = base.to_spec();
    out.zeta.clear();
    for (const auto& [pair, v] : value)
        if (v != 1) out.zeta.push_back({base.id(pair.first), base.id(pair.second), v});
    return build_poset(out);
}

QuasiGradedPoset rank_selection(const QuasiGradedPoset& p, const std::set<long>& ranks) {
    Index bottom = p.require_bottom(), top = p.require_top();
    long n = p.total_rank() - 1;
    for (long r : ranks)
        if (r < 1 || r > n)
            throw InvalidArgument("rank selection " + std::to_string(r) + " outside 1.." + std::to_string(n));
    std::vector<Index> keep{bottom, top};
    for (Index i = 0; i < p.size(); ++i)
        if (i != bottom && i != top && ranks.count(p.rank(i))) keep.push_back(i);
    return induced_subposet(p, keep);
}

Rational restricted_zeta_inverse(const QuasiGradedPoset& p, const std::vector<ElementId>& q) {
    Index bottom = p.require_bottom(), top = p.require_top();
    std::vector<Index> members;
    for (const auto& id : q) members.push_back(p.index(id));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!std::binary_search(members.begin(), members.end(), bottom) ||
        !std::binary_search(members.begin(), members.end(), top))
        throw InvalidArgument("subposet must contain the minimum and maximum");
    // g(y) = sum over chains 0 = x0 < ... < xk = y inside q of (-1)^k prod zeta.
    std::vector<Rational> g(members.size());
    for (std::size_t b = 0; b < members.size(); ++b) {
        if (members[b] == bottom) {
            g[b] = 1;
            continue;
        }
        Rational sum = 0;
        for (std::size_t a = 0; a < b; ++a)
            if (p.less(members[a], members[b])) sum += g[a] * p.zeta(members[a], members[b]);
        g[b] = -sum;
    }
    return g.back();
}

}  // namespace eulerflag
