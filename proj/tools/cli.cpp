#include "cli.hpp"

#include "CLI11.hpp"
#include "eulerflag/io.hpp"
#include "eulerflag/poset_ops.hpp"
#include "eulerflag/qsym.hpp"
#include "eulerflag/shelling.hpp"

#include <algorithm>
#include <functional>

namespace eulerflag {

namespace {

struct Options {
    std::string kind;
    std::string poset, other, complex, other_complex, subdivision;
    std::string method = "recursion";
    std::string phi_method = "binomial";
    std::string basis = "ab";
    std::string via = "direct";
    std::string order;
    std::string x, y, z;
    std::vector<long> ranks;
    std::vector<std::string> f;
    std::string chi = "2";
    int n = 0, k = 0, i = 0, variant = 1;
    bool emit_poset = false;
};

QuasiGradedPoset load_poset(const std::string& path) { return poset_from_json(read_file(path)); }
SimplicialComplex load_complex(const std::string& path) { return complex_from_json(read_file(path)); }

void require(const std::string& value, const char* option) {
    if (value.empty()) throw InvalidArgument(std::string("missing ") + option);
}

PsiMethod psi_method(const std::string& name) {
    if (name == "chains") return PsiMethod::chains;
    if (name == "mobius") return PsiMethod::mobius;
    return PsiMethod::recursion;
}

PhiMethod phi_method(const std::string& name) {
    if (name == "direct") return PhiMethod::direct;
    if (name == "recursive") return PhiMethod::recursive;
    return PhiMethod::binomial;
}

// Splits on commas outside braces: "{1,2},{1,3}" -> "{1,2}", "{1,3}".
std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char ch : text) {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        if (depth < 0) throw ParseError("unbalanced braces in '" + text + "'");
        if (ch == ',' && depth == 0) {
            out.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    if (depth != 0) throw ParseError("unbalanced braces in '" + text + "'");
    out.push_back(current);
    return out;
}

// Items are faces "{a,b}" or 1-based positions in the file's facet list.
std::vector<Face> shelling_order(const SimplicialComplex& delta, const std::string& text) {
    require(text, "--order");
    std::vector<Face> order;
    for (const auto& item : split_top_level(text)) {
        if (!item.empty() && item.front() == '{') {
            order.push_back(parse_face(item));
            continue;
        }
        std::size_t pos = 0;
        long position = 0;
        try {
            position = std::stol(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || position < 1 || static_cast<std::size_t>(position) > delta.facets().size())
            throw ParseError("shelling order item '" + item + "' is neither a face nor a facet position");
        order.push_back(delta.facets()[position - 1]);
    }
    return order;
}

void print_cd_or_poset(std::ostream& out, const QuasiGradedPoset& p, bool emit_poset) {
    if (emit_poset)
        out << poset_to_json(p) << '\n';
    else
        out << render(cd_index(p)) << '\n';
}

int verdict(std::ostream& out, bool ok, const std::string& failure) {
    out << (ok ? "PASS" : "FAIL " + failure) << '\n';
    return ok ? 0 : 1;
}

int run_check(const Options& o, std::ostream& out) {
    if (o.kind == "eulerian") {
        require(o.poset, "--poset");
        EulerianCheck c = is_eulerian(load_poset(o.poset));
        std::string where = c.witness ? "interval (" + c.witness->first + "," + c.witness->second + ")" : "";
        return verdict(out, c.ok, where);
    }
    if (o.kind == "ds") {
        require(o.poset, "--poset");
        DehnSommervilleCheck c = check_dehn_sommerville(load_poset(o.poset));
        std::string where;
        if (c.witness)
            where = "S=" + render_subset(c.witness->s) + " i=" + std::to_string(c.witness->i) +
                    " k=" + std::to_string(c.witness->k);
        return verdict(out, c.ok, where);
    }
    if (o.kind == "coalgebra") {
        require(o.poset, "--poset");
        return verdict(out, check_coalgebra_identity(load_poset(o.poset)), "coproduct identity");
    }
    if (o.kind == "hsym") {
        require(o.poset, "--poset");
        return verdict(out, check_h_symmetry(load_poset(o.poset)), "flag h-vector symmetry");
    }
    if (o.kind == "alexander") {
        require(o.poset, "--poset");
        QuasiGradedPoset p = load_poset(o.poset);
        const long n = p.total_rank() - 1;
        std::set<long> selected(o.ranks.begin(), o.ranks.end());
        for (long r : selected)
            if (r < 1 || r > n) throw InvalidArgument("rank " + std::to_string(r) + " outside 1.." + std::to_string(n));
        std::vector<ElementId> q, r;
        for (Index x = 0; x < p.size(); ++x) {
            bool end = x == *p.bottom() || x == *p.top();
            bool in = selected.count(p.rank(x)) != 0;
            if (end || in) q.push_back(p.id(x));
            if (end || !in) r.push_back(p.id(x));
        }
        AlexanderCheck c = check_alexander_duality(p, q, r);
        return verdict(out, c.ok, "lhs=" + to_string(c.lhs) + " rhs=" + to_string(c.rhs));
    }
    if (o.kind == "wednesday") {
        require(o.complex, "--complex");
        return verdict(out, check_wednesday(load_complex(o.complex), o.n), "raising identity");
    }
    if (o.kind == "local") {
        require(o.subdivision, "--subdivision");
        LocalRelation rel = check_local_relation(subdivision_from_json(read_file(o.subdivision)), o.n);
        return verdict(out, rel.holds(), "sum=" + render(rel.sum));
    }
    if (o.kind == "inclusion-exclusion") {
        require(o.complex, "--complex");
        require(o.other_complex, "--other-complex");
        return verdict(out, check_inclusion_exclusion(load_complex(o.complex), load_complex(o.other_complex), o.n),
                       "inclusion-exclusion");
    }
    require(o.poset, "--poset");
    require(o.other, "--other");
    HopfCheck c = check_hopf_identities(load_poset(o.poset), load_poset(o.other));
    return verdict(out, c.ok(), c.product ? "coproduct" : "product");
}

QuasiGradedPoset run_op(const Options& o) {
    require(o.poset, "--poset");
    QuasiGradedPoset p = load_poset(o.poset);
    if (o.kind == "dual") return dual(p);
    if (o.kind == "pyramid") return pyramid(p).poset;
    if (o.kind == "merge") {
        require(o.x, "--x");
        require(o.y, "--y");
        return merge_equal_upset(p, o.x, o.y);
    }
    if (o.kind == "zip") {
        require(o.x, "--x");
        require(o.y, "--y");
        require(o.z, "--z");
        return zip_zipper(p, {o.x, o.y, o.z}).poset;
    }
    require(o.other, "--other");
    QuasiGradedPoset q = load_poset(o.other);
    return o.kind == "product" ? cartesian_product(p, q) : stanley_product(p, q);
}

QuasiGradedPoset run_catalog(const Options& o) {
    if (o.kind == "boolean") return boolean_algebra(o.n);
    if (o.kind == "ngon") return ngon_poset(o.n, o.variant);
    if (o.kind == "manifold") return manifold_poset(o.n, parse_rational(o.chi));
    std::vector<Rational> f;
    for (const auto& v : o.f) f.push_back(parse_rational(v));
    return simple_chain_poset(f);
}

int run_semi(const Options& o, std::ostream& out) {
    require(o.complex, "--complex");
    SimplicialComplex gamma = load_complex(o.complex);
    if (o.emit_poset) {
        out << poset_to_json(semisuspension(gamma, o.n)) << '\n';
        return 0;
    }
    CdPoly psi;
    if (o.via == "intersections")
        psi = semisuspension_via_intersections(gamma, o.n);
    else if (o.via == "h-triangle")
        psi = semisuspension_via_h_triangle(gamma, shelling_order(gamma, o.order), o.n);
    else
        psi = cd_index(semisuspension(gamma, o.n));
    out << render(psi) << '\n';
    return 0;
}

int run_shell(const Options& o, std::ostream& out) {
    require(o.complex, "--complex");
    SimplicialComplex delta = load_complex(o.complex);
    HTriangle h;
    try {
        h = verify_shelling(delta, shelling_order(delta, o.order));
    } catch (const NotAShelling& e) {
        out << "FAIL position " << e.position() << " facet " << face_id(e.facet()) << '\n';
        return 1;
    }
    for (const auto& [ki, value] : h.entries) out << "h(" << ki.first << "," << ki.second << ") = " << value << '\n';
    return 0;
}

int run_flags(const Options& o, std::ostream& out) {
    require(o.poset, "--poset");
    QuasiGradedPoset p = load_poset(o.poset);
    FlagVector v = o.kind == "h" ? flag_h_vector(p) : flag_f_vector(p);
    if (v.n() > 20) throw InvalidArgument("rank too large to list every subset");
    for (Subset s = 0; s <= v.full(); ++s) out << render_subset(s) << ' ' << to_string(v[s]) << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Euler flag enumeration of quasi-graded posets", "eulerflag"};
    app.require_subcommand(1);
    Options o;

    auto poset_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--poset", o.poset, "poset JSON file");
        if (required) opt->required();
    };
    auto emit_flag = [&](CLI::App* sub) { sub->add_flag("--emit-poset", o.emit_poset, "print the poset as JSON"); };

    auto* psi = app.add_subcommand("psi", "ab- or cd-index of a poset");
    poset_opt(psi, true);
    psi->add_option("--method", o.method)->check(CLI::IsMember({"chains", "recursion", "mobius"}));
    psi->add_option("--basis", o.basis)->check(CLI::IsMember({"ab", "cd"}));

    auto* flags = app.add_subcommand("flags", "flag f- or h-vector");
    flags->add_option("kind", o.kind)->check(CLI::IsMember({"f", "h"}));
    poset_opt(flags, true);

    auto* check = app.add_subcommand("check", "verify an identity; FAIL lines carry a witness");
    check->add_option("kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"eulerian", "ds", "coalgebra", "hsym", "alexander", "wednesday", "local",
                               "inclusion-exclusion", "hopf"}));
    poset_opt(check, false);
    check->add_option("--other", o.other, "second poset (hopf)");
    check->add_option("--complex", o.complex, "complex JSON file");
    check->add_option("--other-complex", o.other_complex, "second complex (inclusion-exclusion)");
    check->add_option("--subdivision", o.subdivision, "subdivision JSON file (local)");
    check->add_option("--n", o.n, "semisuspension rank")->default_val(2);
    check->add_option("--ranks", o.ranks, "selected ranks (alexander)")->delimiter(',');

    auto* complete = app.add_subcommand("complete", "fill in even-rank zeta values");
    poset_opt(complete, true);

    auto* select = app.add_subcommand("select", "rank selection");
    poset_opt(select, true);
    select->add_option("--ranks", o.ranks)->required()->delimiter(',');

    auto* op = app.add_subcommand("op", "poset operations; prints the result as JSON");
    op->add_option("kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"dual", "product", "stanley", "pyramid", "merge", "zip"}));
    poset_opt(op, true);
    op->add_option("--other", o.other, "second factor");
    op->add_option("--x", o.x);
    op->add_option("--y", o.y);
    op->add_option("--z", o.z);

    auto* zippers = app.add_subcommand("zippers", "list zippers");
    poset_opt(zippers, true);

    auto* semi = app.add_subcommand("semi", "cd-index of a semisuspension");
    semi->add_option("--complex", o.complex)->required();
    semi->add_option("--n", o.n)->required();
    semi->add_option("--via", o.via)->check(CLI::IsMember({"direct", "intersections", "h-triangle"}));
    semi->add_option("--order", o.order, "shelling order for --via h-triangle");
    emit_flag(semi);

    auto* omega = app.add_subcommand("omega", "cd-index of Omega_n");
    omega->add_option("n", o.n)->required();
    emit_flag(omega);

    auto* catalog = app.add_subcommand("catalog", "cd-index of a catalog poset");
    catalog->add_option("kind", o.kind)->required()->check(CLI::IsMember({"boolean", "ngon", "manifold", "simple-chain"}));
    catalog->add_option("--n", o.n);
    catalog->add_option("--variant", o.variant)->check(CLI::Range(1, 3));
    catalog->add_option("--chi", o.chi);
    catalog->add_option("--f", o.f, "face numbers of a simple polytope")->delimiter(',');
    emit_flag(catalog);

    auto* phi = app.add_subcommand("phi", "shelling component");
    phi->add_option("--n", o.n)->required();
    phi->add_option("--k", o.k)->required();
    phi->add_option("--i", o.i)->required();
    phi->add_option("--method", o.phi_method)->check(CLI::IsMember({"direct", "recursive", "binomial"}));

    auto* phitable = app.add_subcommand("phitable", "every shelling component for one n");
    phitable->add_option("--n", o.n)->required();

    auto* shell = app.add_subcommand("shell", "verify a shelling and print its h-triangle");
    shell->add_option("--complex", o.complex)->required();
    shell->add_option("--order", o.order, "faces {a,b} or 1-based facet positions")->required();

    auto* qsym = app.add_subcommand("qsym", "quasisymmetric function of a poset");
    poset_opt(qsym, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (psi->parsed()) {
            QuasiGradedPoset p = load_poset(o.poset);
            AbPoly ab = ab_index(p, psi_method(o.method));
            out << (o.basis == "cd" ? render(ab_to_cd(ab)) : render(ab)) << '\n';
            return 0;
        }
        if (flags->parsed()) return run_flags(o, out);
        if (check->parsed()) return run_check(o, out);
        if (complete->parsed()) {
            out << poset_to_json(complete_eulerian(poset_spec_from_json(read_file(o.poset)))) << '\n';
            return 0;
        }
        if (select->parsed()) {
            out << poset_to_json(rank_selection(load_poset(o.poset), {o.ranks.begin(), o.ranks.end()})) << '\n';
            return 0;
        }
        if (op->parsed()) {
            out << poset_to_json(run_op(o)) << '\n';
            return 0;
        }
        if (zippers->parsed()) {
            for (const auto& zip : find_zippers(load_poset(o.poset)))
                out << "x=" << zip.x << " y=" << zip.y << " z=" << zip.z << '\n';
            return 0;
        }
        if (semi->parsed()) return run_semi(o, out);
        if (omega->parsed()) {
            print_cd_or_poset(out, omega_poset(o.n), o.emit_poset);
            return 0;
        }
        if (catalog->parsed()) {
            print_cd_or_poset(out, run_catalog(o), o.emit_poset);
            return 0;
        }
        if (phi->parsed()) {
            out << render(phi_shelling_component(o.n, o.k, o.i, phi_method(o.phi_method))) << '\n';
            return 0;
        }
        if (phitable->parsed()) {
            PhiTable table;
            for (int k = 0; k <= o.n; ++k)
                for (int i = 0; i <= k; ++i)
                    out << o.n << ' ' << k << ' ' << i << ": " << render(table.get(o.n, k, i)) << '\n';
            return 0;
        }
        if (shell->parsed()) return run_shell(o, out);
        out << render(qsym_of_poset(load_poset(o.poset))) << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace eulerflag
