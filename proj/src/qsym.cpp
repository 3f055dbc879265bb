#include "eulerflag/qsym.hpp"

#include "eulerflag/poset_ops.hpp"

#include <cctype>
#include <map>

namespace eulerflag {

namespace {

Composition tail(const Composition& alpha) { return Composition(alpha.begin() + 1, alpha.end()); }

Composition prepend(int part, const Composition& rest) {
    Composition out{part};
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

void quasi_shuffle(const Composition& alpha, const Composition& beta, const Rational& coef, QSymElement& out) {
    // Collects all results into out; the recursion is on the first parts.
    if (alpha.empty() || beta.empty()) {
        out.add_term(alpha.empty() ? beta : alpha, coef);
        return;
    }
    QSymElement partial;
    auto recurse = [&](int first, const Composition& a, const Composition& b) {
        QSymElement rest;
        quasi_shuffle(a, b, coef, rest);
        for (const auto& [gamma, c] : rest.terms()) out.add_term(prepend(first, gamma), c);
    };
    recurse(alpha[0], tail(alpha), beta);
    recurse(beta[0], alpha, tail(beta));
    recurse(alpha[0] + beta[0], tail(alpha), tail(beta));
}

}  // namespace

QSymElement QSymElement::monomial(const Composition& alpha, const Rational& coef) {
    for (int part : alpha)
        if (part < 1) throw InvalidArgument("composition parts must be positive");
    QSymElement out;
    out.add_term(alpha, coef);
    return out;
}

QSymElement operator*(const QSymElement& l, const QSymElement& r) {
    QSymElement out;
    for (const auto& [alpha, a] : l.terms())
        for (const auto& [beta, b] : r.terms()) quasi_shuffle(alpha, beta, a * b, out);
    return out;
}

bool QSymElement::is_homogeneous_of_weight(int weight) const {
    for (const auto& [alpha, coef] : terms()) {
        int sum = 0;
        for (int part : alpha) sum += part;
        if (sum != weight) return false;
    }
    return true;
}

void QSymTensor::add_product(const QSymElement& left, const QSymElement& right, const Rational& coef) {
    for (const auto& [l, lc] : left.terms())
        for (const auto& [r, rc] : right.terms()) add_term({l, r}, coef * lc * rc);
}

QSymTensor coproduct(const QSymElement& x) {
    QSymTensor out;
    for (const auto& [alpha, coef] : x.terms())
        for (std::size_t cut = 0; cut <= alpha.size(); ++cut)
            out.add_term({Composition(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(cut)),
                          Composition(alpha.begin() + static_cast<std::ptrdiff_t>(cut), alpha.end())},
                         coef);
    return out;
}

QSymElement qsym_of_poset(const QuasiGradedPoset& p) {
    Index bottom = p.require_bottom(), top = p.require_top();
    std::vector<std::map<Composition, Rational>> chains(p.size());
    chains[bottom][Composition{}] = 1;
    for (Index y : p.above(bottom))
        for (Index x : p.below(y)) {
            const Rational& z = p.zeta(x, y);
            const int step = static_cast<int>(p.rank(x, y));
            for (const auto& [alpha, v] : chains[x]) {
                Composition longer = alpha;
                longer.push_back(step);
                chains[y][longer] += v * z;
            }
        }
    QSymElement out;
    for (const auto& [alpha, v] : chains[top]) out.add_term(alpha, v);
    return out;
}

AbPoly collapse_to_ab(const QSymElement& x) {
    AbPoly out;
    const AbPoly b = AbPoly::monomial("b");
    for (const auto& [alpha, coef] : x.terms()) {
        if (alpha.empty()) throw InvalidArgument("the empty composition has no ab-image");
        AbPoly word = a_minus_b_power(alpha[0] - 1);
        for (std::size_t k = 1; k < alpha.size(); ++k) word = word * b * a_minus_b_power(alpha[k] - 1);
        out += word * coef;
    }
    return out;
}

HopfCheck check_hopf_identities(const QuasiGradedPoset& p, const QuasiGradedPoset& q) {
    HopfCheck check;
    check.product = qsym_of_poset(cartesian_product(p, q)) == qsym_of_poset(p) * qsym_of_poset(q);
    Index bottom = p.require_bottom(), top = p.require_top();
    QSymTensor rhs;
    for (Index x = 0; x < p.size(); ++x)
        rhs.add_product(qsym_of_poset(interval(p, bottom, x)), qsym_of_poset(interval(p, x, top)));
    check.coproduct = coproduct(qsym_of_poset(p)) == rhs;
    return check;
}

std::string render_composition(const Composition& alpha) {
    std::string out = "M(";
    for (std::size_t k = 0; k < alpha.size(); ++k) out += (k ? "," : "") + std::to_string(alpha[k]);
    return out + ")";
}

std::string render(const QSymElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, coef] : x.terms()) {
        Rational magnitude = abs(coef);
        out += first ? (coef < 0 ? "-" : "") : (coef < 0 ? " - " : " + ");
        first = false;
        if (magnitude != 1) out += to_string(magnitude) + "*";
        out += render_composition(alpha);
    }
    return out;
}

std::string render(const QSymTensor& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [pair, coef] : t.terms()) {
        Rational magnitude = abs(coef);
        out += first ? (coef < 0 ? "-" : "") : (coef < 0 ? " - " : " + ");
        first = false;
        if (magnitude != 1) out += to_string(magnitude) + "*";
        out += "(" + render_composition(pair.first) + " # " + render_composition(pair.second) + ")";
    }
    return out;
}

Composition parse_composition(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && s[0] == 'M') s.erase(0, 1);
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw ParseError("unbalanced parentheses in composition '" + std::string(text) + "'");
        s = s.substr(1, s.size() - 2);
    }
    Composition alpha;
    if (s.empty()) return alpha;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty() || piece.size() > 6 || piece.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed composition '" + std::string(text) + "'");
        int part = std::stoi(piece);
        if (part < 1) throw ParseError("composition parts must be positive in '" + std::string(text) + "'");
        alpha.push_back(part);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return alpha;
}

}  // namespace eulerflag
