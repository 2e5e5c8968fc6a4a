#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "folcalc/foliation.hpp"
#include "folcalc/ntlab.hpp"
#include "folcalc/scene.hpp"

namespace py = pybind11;
using namespace folcalc;

namespace {

PolyModule module_from(int n, const std::vector<std::string>& gens) {
    std::vector<PolyVec> vecs;
    for (const auto& g : gens) vecs.push_back(parse_vector_field(g, n).v);
    return PolyModule::make(n, n, std::move(vecs));
}

std::vector<std::string> module_strings(const PolyModule& m) {
    PolyModule g = groebner_module(m);
    std::vector<std::string> out;
    for (const auto& v : *g.gb) out.push_back(print_vector_field(v));
    return out;
}

std::vector<std::string> ideal_strings(PolyIdeal ideal) {
    std::vector<std::string> out;
    for (const auto& p : ideal_basis(ideal)) out.push_back(print_poly(p));
    return out;
}

py::dict foliation_dict(const Foliation& f) {
    py::dict d;
    d["generators"] = module_strings(f.module);
    d["rank"] = f.rank;
    d["singular_ideal"] = ideal_strings(f.sing_ideal);
    d["empty"] = f.empty();
    return d;
}

PolyMatrix matrix_from(const std::vector<std::vector<std::string>>& rows, int nvars) {
    int r = static_cast<int>(rows.size());
    int cols = r ? static_cast<int>(rows[0].size()) : 0;
    PolyMatrix m = PolyMatrix::zero(r, cols, nvars);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw DimensionMismatch("ragged matrix rows");
        for (int j = 0; j < cols; ++j) m.at(i, j) = parse_poly(rows[i][j], nvars);
    }
    return m;
}

CMatrix cmatrix_from(const std::vector<std::vector<std::complex<double>>>& rows) {
    size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw DimensionMismatch("matrix must be square");
    return rows;
}

}  // namespace

PYBIND11_MODULE(_folcalc, m) {
    m.doc() = "exact calculus for singular holomorphic foliations on affine charts, "
              "with a numeric lab for decay and transversality diagnostics";

    // Translators run most-recent-first: the base goes in first so the
    // derived budget error is matched before it.
    py::register_exception<Error>(m, "FolcalcError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError");

    // polynomials and vector fields
    m.def("canonical_poly", [](const std::string& text, int n) {
        return print_poly(parse_poly(text, n));
    }, py::arg("text"), py::arg("n"), "parse and reprint a polynomial in canonical form");
    m.def("differentiate", [](const std::string& text, int n, int var) {
        return print_poly(differentiate(parse_poly(text, n), var - 1));
    }, py::arg("text"), py::arg("n"), py::arg("var"));
    m.def("lie_bracket", [](const std::string& x, const std::string& y, int n) {
        return print_vector_field(lie_bracket(parse_vector_field(x, n), parse_vector_field(y, n)));
    }, py::arg("x"), py::arg("y"), py::arg("n"));

    // module algebra
    m.def("groebner_module", [](int n, const std::vector<std::string>& gens) {
        return module_strings(module_from(n, gens));
    }, py::arg("n"), py::arg("generators"));
    m.def("member", [](int n, const std::string& v, const std::vector<std::string>& gens) {
        return member(parse_vector_field(v, n).v, module_from(n, gens));
    }, py::arg("n"), py::arg("element"), py::arg("generators"));
    m.def("module_equal", [](int n, const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
        return module_equal(module_from(n, a), module_from(n, b));
    }, py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("module_intersect", [](int n, const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
        return module_strings(module_intersect(module_from(n, a), module_from(n, b)));
    }, py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("syzygy", [](int nvars, const std::vector<std::vector<std::string>>& rows) {
        PolyModule s = syzygy(matrix_from(rows, nvars));
        return module_strings(s);
    }, py::arg("nvars"), py::arg("rows"),
       "kernel of the polynomial matrix, columns as generator strings over d1..ds");
    m.def("generic_rank", [](int nvars, const std::vector<std::vector<std::string>>& rows) {
        return generic_rank(matrix_from(rows, nvars));
    }, py::arg("nvars"), py::arg("rows"));
    m.def("minors_ideal", [](int nvars, const std::vector<std::vector<std::string>>& rows, int r) {
        return ideal_strings(minors_ideal(matrix_from(rows, nvars), r));
    }, py::arg("nvars"), py::arg("rows"), py::arg("r"));
    m.def("saturate", [](int n, const std::vector<std::string>& gens) {
        return module_strings(saturate(module_from(n, gens)));
    }, py::arg("n"), py::arg("generators"));

    // foliation calculus
    m.def("is_involutive", [](int n, const std::vector<std::string>& gens) {
        return is_involutive(module_from(n, gens));
    }, py::arg("n"), py::arg("generators"));
    m.def("closure", [](int n, const std::vector<std::string>& gens) {
        ClosureStats stats;
        Foliation f = involutive_closure(module_from(n, gens), default_budget(), &stats);
        py::dict d = foliation_dict(f);
        d["iterations"] = stats.iterations;
        return d;
    }, py::arg("n"), py::arg("generators"));
    m.def("union_foliations", [](int n, const std::vector<std::string>& f,
                                 const std::vector<std::string>& g) {
        Foliation ff = involutive_closure(module_from(n, f));
        Foliation gg = involutive_closure(module_from(n, g));
        return foliation_dict(foliation_union(ff, gg));
    }, py::arg("n"), py::arg("f"), py::arg("g"));
    m.def("intersection_foliation", [](int n, const std::vector<std::string>& f,
                                       const std::vector<std::string>& g) {
        Foliation ff = involutive_closure(module_from(n, f));
        Foliation gg = involutive_closure(module_from(n, g));
        IntersectionResult r = intersection_foliation(ff, gg);
        py::dict d;
        d["generators"] = module_strings(r.module);
        d["saturated"] = r.saturated;
        return d;
    }, py::arg("n"), py::arg("f"), py::arg("g"));
    m.def("induced_foliation", [](int n, const std::vector<std::string>& comps) {
        RationalMap f{n, {}};
        for (const auto& c : comps) f.comps.push_back(parse_poly(c, n));
        return foliation_dict(induced_foliation(f));
    }, py::arg("n"), py::arg("components"));
    m.def("tangent_frame_at", [](int n, const std::vector<std::string>& gens,
                                 const std::vector<std::complex<double>>& point) {
        Foliation f = involutive_closure(module_from(n, gens));
        return tangent_frame_at(f, point);
    }, py::arg("n"), py::arg("generators"), py::arg("point"));

    // test forms and the wedge kernel
    m.def("is_test_pair", [](const std::vector<int>& I, const std::vector<int>& J, int n, int k,
                             int p) { return is_test_pair(I, J, n, k, p); },
          py::arg("I"), py::arg("J"), py::arg("n"), py::arg("k"), py::arg("p"));
    m.def("test_form_basis", [](int n, int k, int p) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& pr : constant_test_form_basis(n, k, p)) out.emplace_back(pr.I, pr.J);
        return out;
    }, py::arg("n"), py::arg("k"), py::arg("p"));
    m.def("wedge_coefficient", [](const std::vector<std::vector<std::complex<double>>>& h, int p,
                                  const std::vector<int>& I, const std::vector<int>& J) {
        return wedge_coefficient(cmatrix_from(h), p, IndexPair{I, J});
    }, py::arg("h"), py::arg("p"), py::arg("I"), py::arg("J"));
    m.def("cauchy_schwarz_audit", [](const std::vector<std::vector<std::complex<double>>>& h,
                                     int p) { return cauchy_schwarz_audit(cmatrix_from(h), p); },
          py::arg("h"), py::arg("p"));

    // scenes
    m.def("run_scene", [](const std::string& text, long long budget_steps, bool parallel) {
        SceneDoc doc = parse_scene(text);
        Budget budget;
        budget.max_steps = budget_steps;
        return emit_report(run_all_tasks(doc, budget, parallel));
    }, py::arg("text"), py::arg("budget_steps") = default_budget().max_steps,
       py::arg("parallel") = false, "run every task and return the canonical JSON report");
    m.def("check_scene", [](const std::string& text) {
        std::vector<std::tuple<int, int, std::string>> errors;
        try {
            parse_scene(text);
        } catch (const SceneParseError& e) {
            for (const auto& err : e.errors) errors.emplace_back(err.line, err.col, err.message);
        }
        return errors;
    }, py::arg("text"), "validate a scene; returns a list of (line, col, message)");
}
