#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eulerflag/io.hpp"
#include "eulerflag/poset_ops.hpp"
#include "eulerflag/qsym.hpp"
#include "eulerflag/shelling.hpp"

namespace py = pybind11;
using namespace eulerflag;

// Polynomials cross the boundary in their canonical text form and rationals as
// "p/q" strings; the Python package wraps the latter in fractions.Fraction.

namespace {

PsiMethod psi_method(const std::string& name) {
    if (name == "chains") return PsiMethod::chains;
    if (name == "recursion") return PsiMethod::recursion;
    if (name == "mobius") return PsiMethod::mobius;
    throw InvalidArgument("unknown method '" + name + "'");
}

PhiMethod phi_method(const std::string& name) {
    if (name == "direct") return PhiMethod::direct;
    if (name == "recursive") return PhiMethod::recursive;
    if (name == "binomial") return PhiMethod::binomial;
    throw InvalidArgument("unknown method '" + name + "'");
}

std::map<std::string, std::string> flag_map(const FlagVector& v) {
    std::map<std::string, std::string> out;
    for (Subset s = 0; s <= v.full(); ++s) out[render_subset(s)] = to_string(v[s]);
    return out;
}

std::vector<Face> faces(const std::vector<std::vector<std::string>>& list) {
    std::vector<Face> out;
    for (const auto& f : list) out.push_back(make_face(f));
    return out;
}

}  // namespace

PYBIND11_MODULE(_eulerflag, m) {
    m.doc() = "Euler flag enumeration of quasi-graded posets";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<NotCdExpressible>(m, "NotCdExpressible", error.ptr());
    py::register_exception<NotAShelling>(m, "NotAShelling", error.ptr());

    py::class_<QuasiGradedPoset>(m, "Poset")
        .def_static("from_json", [](const std::string& text) { return poset_from_json(text); })
        .def("to_json", [](const QuasiGradedPoset& p) { return poset_to_json(p); })
        .def("__len__", &QuasiGradedPoset::size)
        .def_property_readonly("ids", &QuasiGradedPoset::ids)
        .def("rank", [](const QuasiGradedPoset& p, const ElementId& x) { return p.rank(p.index(x)); })
        .def("zeta",
             [](const QuasiGradedPoset& p, const ElementId& x, const ElementId& y) {
                 return to_string(p.zeta(p.index(x), p.index(y)));
             })
        .def("leq", [](const QuasiGradedPoset& p, const ElementId& x,
                       const ElementId& y) { return p.leq(p.index(x), p.index(y)); })
        .def_property_readonly("total_rank", &QuasiGradedPoset::total_rank)
        .def("interval", [](const QuasiGradedPoset& p, const ElementId& x, const ElementId& y) { return interval(p, x, y); })
        .def("__eq__", [](const QuasiGradedPoset& l, const QuasiGradedPoset& r) { return l == r; });

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init([](const std::vector<std::vector<std::string>>& facets) { return SimplicialComplex(faces(facets)); }),
             py::arg("facets"))
        .def_static("from_json", [](const std::string& text) { return complex_from_json(text); })
        .def("to_json", [](const SimplicialComplex& c) { return complex_to_json(c); })
        .def_property_readonly("facets", &SimplicialComplex::facets)
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def("reduced_euler_characteristic", &SimplicialComplex::reduced_euler_characteristic)
        .def("__eq__", [](const SimplicialComplex& l, const SimplicialComplex& r) { return l == r; });

    m.def("ab_index", [](const QuasiGradedPoset& p, const std::string& method) { return render(ab_index(p, psi_method(method))); },
          py::arg("poset"), py::arg("method") = "recursion");
    m.def("cd_index", [](const QuasiGradedPoset& p) { return render(cd_index(p)); });
    m.def("ab_to_cd", [](const std::string& ab) { return render(ab_to_cd(parse_ab(ab))); });
    m.def("cd_expand", [](const std::string& cd) { return render(cd_expand(parse_cd(cd))); });
    m.def("is_eulerian", [](const QuasiGradedPoset& p) {
        EulerianCheck c = is_eulerian(p);
        return py::make_tuple(c.ok, c.witness ? py::cast(*c.witness) : py::none());
    });
    m.def("flag_f_vector", [](const QuasiGradedPoset& p) { return flag_map(flag_f_vector(p)); });
    m.def("flag_h_vector", [](const QuasiGradedPoset& p) { return flag_map(flag_h_vector(p)); });
    m.def("complete_eulerian", [](const std::string& text) { return complete_eulerian(poset_spec_from_json(text)); });

    m.def("boolean_algebra", &boolean_algebra);
    m.def("dual", &dual);
    m.def("cartesian_product", &cartesian_product);
    m.def("stanley_product", &stanley_product);
    m.def("pyramid", [](const QuasiGradedPoset& p) { return pyramid(p).poset; });
    m.def("merge_equal_upset", &merge_equal_upset);
    m.def("find_zippers", [](const QuasiGradedPoset& p) {
        std::vector<std::tuple<ElementId, ElementId, ElementId>> out;
        for (const auto& z : find_zippers(p)) out.emplace_back(z.x, z.y, z.z);
        return out;
    });
    m.def("zip_zipper", [](const QuasiGradedPoset& p, const ElementId& x, const ElementId& y, const ElementId& z) {
        ZipResult r = zip_zipper(p, {x, y, z});
        return py::make_tuple(r.poset, r.w, r.identities_hold());
    });

    m.def("omega_poset", &omega_poset);
    m.def("ngon_poset", &ngon_poset, py::arg("n"), py::arg("variant") = 1);
    m.def("manifold_poset", [](int n, const std::string& chi) { return manifold_poset(n, parse_rational(chi)); });
    m.def("simple_chain_poset", [](const std::vector<std::string>& f) {
        std::vector<Rational> values;
        for (const auto& v : f) values.push_back(parse_rational(v));
        return simple_chain_poset(values);
    });
    m.def("semisuspension", &semisuspension);
    m.def("semisuspension_via_intersections",
          [](const SimplicialComplex& g, int n) { return render(semisuspension_via_intersections(g, n)); });

    m.def("phi", [](int n, int k, int i, const std::string& method) {
        return render(phi_shelling_component(n, k, i, phi_method(method)));
    }, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("method") = "binomial");
    m.def("h_triangle", [](const SimplicialComplex& delta, const std::vector<std::vector<std::string>>& order) {
        return verify_shelling(delta, faces(order)).entries;
    });

    m.def("qsym", [](const QuasiGradedPoset& p) { return render(qsym_of_poset(p)); });
}
