#include "eulerflag/poset_ops.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

namespace eulerflag {

namespace {

void add_zeta(PosetSpec& spec, const ElementId& from, const ElementId& to, const Rational& value) {
    if (value != 1) spec.zeta.push_back({from, to, value});
}

std::vector<ElementId> split_merged(const ElementId& id) {
    if (id.rfind("w:", 0) != 0) return {id};
    std::vector<ElementId> parts;
    std::size_t start = 2;
    while (true) {
        std::size_t plus = id.find('+', start);
        parts.push_back(id.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return parts;
}

std::string fresh(std::string id, const std::set<std::string>& taken) {
    while (taken.count(id)) id += "'";
    return id;
}

// Copies P without `removed`, keeping the closure and zeta among survivors.
PosetSpec survivors(const QuasiGradedPoset& p, const std::set<Index>& removed) {
    PosetSpec spec;
    for (Index i = 0; i < p.size(); ++i)
        if (!removed.count(i)) spec.elements.push_back({p.id(i), p.rank(i)});
    for (Index i = 0; i < p.size(); ++i) {
        if (removed.count(i)) continue;
        for (Index j : p.above(i)) {
            if (removed.count(j)) continue;
            spec.relations.emplace_back(p.id(i), p.id(j));
            add_zeta(spec, p.id(i), p.id(j), p.zeta(i, j));
        }
    }
    return spec;
}

}  // namespace

ElementId merged_id(const QuasiGradedPoset& p, const std::vector<ElementId>& parts) {
    std::vector<ElementId> flat;
    for (const auto& part : parts)
        for (auto& piece : split_merged(part)) flat.push_back(piece);
    std::sort(flat.begin(), flat.end());
    std::string id = "w:";
    for (std::size_t k = 0; k < flat.size(); ++k) id += (k ? "+" : "") + flat[k];
    std::set<std::string> taken(p.ids().begin(), p.ids().end());
    for (const auto& part : parts) taken.erase(part);
    return fresh(id, taken);
}

QuasiGradedPoset boolean_algebra(int k) {
    if (k < 0 || k > 16) throw InvalidArgument("boolean algebra rank must be in 0..16");
    auto name = [](unsigned mask) {
        std::string out = "{";
        bool first = true;
        for (int i = 0; i < 16; ++i)
            if ((mask >> i) & 1u) {
                out += (first ? "" : ",") + std::to_string(i + 1);
                first = false;
            }
        return out + "}";
    };
    PosetSpec spec;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        spec.elements.push_back({name(mask), static_cast<long>(std::popcount(mask))});
        for (int i = 0; i < k; ++i)
            if (!((mask >> i) & 1u)) spec.relations.emplace_back(name(mask), name(mask | (1u << i)));
    }
    return build_poset(spec);
}

QuasiGradedPoset dual(const QuasiGradedPoset& p) {
    long top_rank = 0;
    if (p.top()) top_rank = p.rank(*p.top());
    else
        for (Index i = 0; i < p.size(); ++i) top_rank = std::max(top_rank, p.rank(i));
    PosetSpec spec;
    for (Index i = 0; i < p.size(); ++i) spec.elements.push_back({p.id(i), top_rank - p.rank(i)});
    for (Index i = 0; i < p.size(); ++i)
        for (Index j : p.upper_covers(i)) spec.relations.emplace_back(p.id(j), p.id(i));
    for (Index i = 0; i < p.size(); ++i)
        for (Index j : p.above(i)) add_zeta(spec, p.id(j), p.id(i), p.zeta(i, j));
    if (p.top()) spec.bottom = p.id(*p.top());
    if (p.bottom()) spec.top = p.id(*p.bottom());
    return build_poset(spec);
}

QuasiGradedPoset cartesian_product(const QuasiGradedPoset& p, const QuasiGradedPoset& q) {
    auto name = [&](Index a, Index b) { return "(" + p.id(a) + "," + q.id(b) + ")"; };
    PosetSpec spec;
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < q.size(); ++b) {
            spec.elements.push_back({name(a, b), p.rank(a) + q.rank(b)});
            for (Index a2 : p.upper_covers(a)) spec.relations.emplace_back(name(a, b), name(a2, b));
            for (Index b2 : q.upper_covers(b)) spec.relations.emplace_back(name(a, b), name(a, b2));
        }
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < q.size(); ++b) {
            std::vector<Index> up_a{a}, up_b{b};
            up_a.insert(up_a.end(), p.above(a).begin(), p.above(a).end());
            up_b.insert(up_b.end(), q.above(b).begin(), q.above(b).end());
            for (Index a2 : up_a)
                for (Index b2 : up_b)
                    if (a2 != a || b2 != b) add_zeta(spec, name(a, b), name(a2, b2), p.zeta(a, a2) * q.zeta(b, b2));
        }
    return build_poset(spec);
}

QuasiGradedPoset stanley_product(const QuasiGradedPoset& p, const QuasiGradedPoset& q) {
    Index p0 = p.require_bottom(), p1 = p.require_top();
    Index q0 = q.require_bottom(), q1 = q.require_top();
    const long shift = p.total_rank() - 1;
    std::set<std::string> taken;
    for (Index i = 0; i < p.size(); ++i)
        if (i != p1) taken.insert(p.id(i));
    std::vector<ElementId> qname(q.size());
    for (Index j = 0; j < q.size(); ++j) {
        if (j == q0) continue;
        qname[j] = fresh(q.id(j), taken);
        taken.insert(qname[j]);
    }
    PosetSpec spec;
    for (Index i = 0; i < p.size(); ++i) {
        if (i == p1) continue;
        spec.elements.push_back({p.id(i), p.rank(i)});
        for (Index j : p.above(i))
            if (j != p1) {
                spec.relations.emplace_back(p.id(i), p.id(j));
                add_zeta(spec, p.id(i), p.id(j), p.zeta(i, j));
            }
        for (Index j = 0; j < q.size(); ++j)
            if (j != q0) {
                spec.relations.emplace_back(p.id(i), qname[j]);
                add_zeta(spec, p.id(i), qname[j], p.zeta(i, p1) * q.zeta(q0, j));
            }
    }
    for (Index j = 0; j < q.size(); ++j) {
        if (j == q0) continue;
        spec.elements.push_back({qname[j], q.rank(j) + shift});
        for (Index k : q.above(j)) {
            spec.relations.emplace_back(qname[j], qname[k]);
            add_zeta(spec, qname[j], qname[k], q.zeta(j, k));
        }
    }
    spec.bottom = p.id(p0);
    spec.top = qname[q1];
    return build_poset(spec);
}

PyramidResult pyramid(const QuasiGradedPoset& p) {
    Index bottom = p.require_bottom(), top = p.require_top();
    QuasiGradedPoset product = cartesian_product(p, boolean_algebra(1));
    AbPoly psi = ab_index(p);
    const AbPoly a = AbPoly::monomial("a"), b = AbPoly::monomial("b");
    AbPoly by_sum = b * psi + psi * a;
    std::vector<AbPoly> lower = lower_interval_indices(p);
    for (Index x = 0; x < p.size(); ++x)
        if (x != bottom && x != top) by_sum += lower[x] * AbPoly::monomial("ab") * ab_index(interval(p, x, top));
    AbPoly by_derivation = psi * (a + b) + derivation_g(psi);
    AbPoly direct = ab_index(product);
    return PyramidResult{std::move(product), std::move(direct), std::move(by_sum), std::move(by_derivation)};
}

QuasiGradedPoset merge_equal_upset(const QuasiGradedPoset& p, const ElementId& x_id, const ElementId& y_id) {
    Index x = p.index(x_id), y = p.index(y_id);
    if (x == y) throw InvalidArgument("cannot merge an element with itself");
    if (p.rank(x) != p.rank(y)) throw InvalidArgument("merge: '" + x_id + "' and '" + y_id + "' differ in rank");
    if (p.above(x) != p.above(y)) throw InvalidArgument("merge: '" + x_id + "' and '" + y_id + "' have different up sets");
    for (Index v : p.above(x))
        if (p.zeta(x, v) != p.zeta(y, v))
            throw InvalidArgument("merge: zeta differs towards '" + p.id(v) + "'");
    ElementId w = merged_id(p, {x_id, y_id});
    PosetSpec spec = survivors(p, {x, y});
    spec.elements.push_back({w, p.rank(x)});
    for (Index u = 0; u < p.size(); ++u) {
        if (u == x || u == y || !(p.less(u, x) || p.less(u, y))) continue;
        spec.relations.emplace_back(p.id(u), w);
        add_zeta(spec, p.id(u), w, p.zeta(u, x) + p.zeta(u, y));
    }
    for (Index v : p.above(x)) {
        spec.relations.emplace_back(w, p.id(v));
        add_zeta(spec, w, p.id(v), p.zeta(x, v));
    }
    return build_poset(spec);
}

std::string zipper_defect(const QuasiGradedPoset& p, const Zipper& zipper) {
    Index x = p.index(zipper.x), y = p.index(zipper.y), z = p.index(zipper.z);
    if (x == y) return "x and y coincide";
    if (p.rank(x) != p.rank(y) || p.rank(x) != p.rank(z) + 1) return "(i) ranks";
    if (p.bottom() && z == *p.bottom()) return "z is the minimum";
    std::vector<Index> covers = p.upper_covers(z);
    std::vector<Index> expected{std::min(x, y), std::max(x, y)};
    if (covers != expected) return "(ii) z must be covered exactly by x and y";
    for (Index v : p.above(z)) {
        if (p.rank(v) <= p.rank(x)) continue;
        if (!p.less(x, v) || !p.less(y, v)) return "(iii) up sets differ at '" + p.id(v) + "'";
        if (p.zeta(x, v) != p.zeta(z, v) || p.zeta(y, v) != p.zeta(z, v))
            return "(iii) zeta differs at '" + p.id(v) + "'";
    }
    if (p.zeta(z, x) != 1 || p.zeta(z, y) != 1) return "(iv) zeta(z,x) and zeta(z,y) must be 1";
    return "";
}

std::vector<Zipper> find_zippers(const QuasiGradedPoset& p) {
    std::vector<Zipper> out;
    for (Index z = 0; z < p.size(); ++z) {
        const auto& covers = p.upper_covers(z);
        if (covers.size() != 2) continue;
        ElementId a = p.id(covers[0]), b = p.id(covers[1]);
        if (b < a) std::swap(a, b);
        Zipper candidate{a, b, p.id(z)};
        if (zipper_defect(p, candidate).empty()) out.push_back(candidate);
    }
    std::sort(out.begin(), out.end(), [](const Zipper& l, const Zipper& r) {
        return std::tie(l.z, l.x, l.y) < std::tie(r.z, r.x, r.y);
    });
    return out;
}

namespace {

// {z} together with everything above x, z taking the place of x.
QuasiGradedPoset contracted_upper_interval(const QuasiGradedPoset& p, Index x, Index z) {
    PosetSpec spec;
    spec.elements.push_back({p.id(z), 0});
    for (Index v : p.above(x)) {
        spec.elements.push_back({p.id(v), p.rank(x, v)});
        spec.relations.emplace_back(p.id(z), p.id(v));
        add_zeta(spec, p.id(z), p.id(v), p.zeta(z, v));
        for (Index u : p.above(v)) {
            spec.relations.emplace_back(p.id(v), p.id(u));
            add_zeta(spec, p.id(v), p.id(u), p.zeta(v, u));
        }
    }
    spec.bottom = p.id(z);
    return build_poset(spec);
}

}  // namespace

ZipResult zip_zipper(const QuasiGradedPoset& p, const Zipper& zipper) {
    if (auto defect = zipper_defect(p, zipper); !defect.empty())
        throw InvalidArgument("(" + zipper.z + "; " + zipper.x + ", " + zipper.y + ") is not a zipper: " + defect);
    Index x = p.index(zipper.x), y = p.index(zipper.y), z = p.index(zipper.z);
    ElementId w = merged_id(p, {zipper.x, zipper.y, zipper.z});
    PosetSpec spec = survivors(p, {x, y, z});
    spec.elements.push_back({w, p.rank(x)});
    for (Index u = 0; u < p.size(); ++u) {
        if (u == x || u == y || u == z || !(p.less(u, x) || p.less(u, y))) continue;
        spec.relations.emplace_back(p.id(u), w);
        add_zeta(spec, p.id(u), w, p.zeta(u, x) + p.zeta(u, y) - p.zeta(u, z));
    }
    for (Index v : p.above(x)) {
        spec.relations.emplace_back(w, p.id(v));
        add_zeta(spec, w, p.id(v), p.zeta(x, v));
    }
    if (p.bottom()) spec.bottom = p.id(*p.bottom());
    if (p.top()) spec.top = p.id(*p.top());
    ZipResult result{build_poset(spec), w};
    if (p.has_extrema()) {
        Index top = *p.top();
        const QuasiGradedPoset& q = result.poset;
        std::vector<AbPoly> lower_p = lower_interval_indices(p);
        std::vector<AbPoly> lower_q = lower_interval_indices(q);
        AbPoly upper_x = ab_index(interval(p, x, top));
        result.upper_intervals_agree = upper_x == ab_index(interval(p, y, top)) &&
                                       upper_x == ab_index(contracted_upper_interval(p, x, z));
        result.total_identity = ab_index(q) == ab_index(p) - lower_p[z] * AbPoly::monomial("ab") * upper_x -
                                                   lower_p[z] * AbPoly::monomial("ba") * upper_x;
        const AbPoly c = AbPoly::monomial("a") + AbPoly::monomial("b");
        result.lower_identity = lower_q[q.index(w)] == lower_p[x] + lower_p[y] - lower_p[z] * c;
    }
    return result;
}

}  // namespace eulerflag
