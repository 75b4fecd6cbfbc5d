#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "fermat/curve.hpp"
#include "fermat/gf.hpp"
#include "fermat/surface.hpp"
#include "fermat/verify.hpp"

namespace py = pybind11;
using namespace fermat;

namespace {

using u64 = std::uint64_t;

// The core hands out shared_ptr<const T>; pybind11 holders want non-const.
// Every exposed method is const, so the cast is safe.
std::shared_ptr<FieldCtx> field_handle(FieldPtr f) {
  return std::const_pointer_cast<FieldCtx>(std::move(f));
}
std::shared_ptr<TowerCtx> tower_handle(TowerPtr t) {
  return std::const_pointer_cast<TowerCtx>(std::move(t));
}

template <typename Point>
py::list points_to_py(const FieldCtx& f, const std::vector<Point>& pts) {
  py::list out;
  for (const auto& pt : pts) {
    py::list coords;
    for (Elem e : pt.c) coords.append(f.coeffs(e));
    py::dict d;
    d["coords"] = coords;
    d["codes"] = py::cast(std::vector<u64>(pt.c.begin(), pt.c.end()));
    d["provenance"] = std::string(prov_name(pt.prov));
    out.append(d);
  }
  return out;
}

py::dict pattern_to_py(const ZeroPattern& z, u64 total) {
  py::dict d;
  d["total"] = total;
  d["no-zero"] = z.no_zero;
  d["one-zero"] = z.one_zero;
  d["two-zero"] = z.two_zero;
  return d;
}

py::dict report_to_py(const VerifyReport& r) {
  py::dict d;
  d["q"] = r.q;
  d["ext"] = r.ext;
  d["check"] = r.check;
  d["instances"] = r.instances;
  d["violation_count"] = r.violation_count;
  py::list vs;
  for (const auto& v : r.violations) {
    py::dict vd;
    vd["kind"] = v.kind;
    vd["items"] = v.items;
    vd["detail"] = v.detail;
    vs.append(vd);
  }
  d["violations"] = vs;
  d["verdict"] = r.pass ? "pass" : "fail";
  d["informational"] = r.informational;
  d["note"] = r.note;
  return d;
}

py::dict remark_to_py(const RemarkResult& r) {
  py::dict d;
  d["found"] = r.found;
  d["triple"] = py::cast(std::vector<u64>(r.triple.begin(), r.triple.end()));
  d["product"] = r.product;
  d["product_order"] = r.product_order;
  d["scanned"] = r.scanned;
  return d;
}

TowerPtr make_tower(u64 q, unsigned ext) { return TowerCtx::build(prime_power_from_q(q), ext); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact GF(p^n) arithmetic and rational-point enumeration for "
            "degree-(q-1) Fermat curves and surfaces";

  py::class_<FieldCtx, std::shared_ptr<FieldCtx>>(m, "Field")
      .def_property_readonly("p", &FieldCtx::characteristic)
      .def_property_readonly("degree", &FieldCtx::degree)
      .def_property_readonly("card", &FieldCtx::card)
      .def_property_readonly("modulus", &FieldCtx::modulus,
                             "Defining polynomial, little-endian, leading 1")
      .def("add", &FieldCtx::add)
      .def("sub", &FieldCtx::sub)
      .def("neg", &FieldCtx::neg)
      .def("mul", &FieldCtx::mul)
      .def("inv", &FieldCtx::inv)
      .def("pow", &FieldCtx::pow)
      .def("coeffs", &FieldCtx::coeffs)
      .def("from_coeffs", &FieldCtx::from_coeffs)
      .def("element_order", &FieldCtx::element_order)
      .def("is_nth_power", [](const FieldCtx& f, Elem x, u64 n) { return is_nth_power(f, x, n); })
      .def("cube_roots_of_unity", [](const FieldCtx& f) { return cube_roots_of_unity(f); })
      .def("__len__", &FieldCtx::card)
      .def("__repr__", [](const FieldCtx& f) {
        return "Field(p=" + std::to_string(f.characteristic()) + ", n=" + std::to_string(f.degree()) + ")";
      });

  py::class_<TowerCtx, std::shared_ptr<TowerCtx>>(m, "Tower")
      .def_property_readonly("q", &TowerCtx::q)
      .def_property_readonly("ext", &TowerCtx::ext)
      .def_property_readonly("base", [](const TowerCtx& t) { return field_handle(t.base_ptr()); })
      .def_property_readonly("top", [](const TowerCtx& t) { return field_handle(t.top_ptr()); })
      .def_property_readonly("embed_table", &TowerCtx::embed_table)
      .def("embed", &TowerCtx::embed)
      .def("frobenius_q", &TowerCtx::frobenius_q)
      .def("in_base", &TowerCtx::in_base)
      .def("embedded_units", &TowerCtx::embedded_units)
      .def("t_map", &TowerCtx::t_map)
      .def("t_kernel", &TowerCtx::t_kernel)
      .def("__repr__", [](const TowerCtx& t) {
        return "Tower(q=" + std::to_string(t.q()) + ", ext=" + std::to_string(t.ext()) + ")";
      });

  m.def("build_field", [](u64 p, unsigned n) { return field_handle(FieldCtx::build(p, n)); },
        py::arg("p"), py::arg("n"));
  m.def("build_tower", [](u64 q, unsigned ext) { return tower_handle(make_tower(q, ext)); },
        py::arg("q"), py::arg("ext"));
  m.def("is_prime", &is_prime);
  m.def("prime_powers_upto", &prime_powers_upto);
  m.def("gcd_overlap", &gcd_overlap);

  m.def("curve_count_formula", [](u64 q, unsigned ext) {
    auto c = curve_count_formula(prime_power_from_q(q), ext);
    return pattern_to_py(c.pattern, c.total);
  }, py::arg("q"), py::arg("ext"));
  m.def("surface_count_formula", [](u64 q) {
    auto c = surface_count_formula(prime_power_from_q(q));
    return pattern_to_py(c.pattern, c.total);
  }, py::arg("q"));

  m.def("enumerate_curve", [](u64 q, unsigned ext, const std::string& method, unsigned workers) {
    auto t = make_tower(q, ext);
    auto pts = method == "brute" ? enumerate_curve_brute(*t, workers) : enumerate_curve(*t);
    return points_to_py(t->top(), pts);
  }, py::arg("q"), py::arg("ext"), py::arg("method") = "parametric", py::arg("workers") = 1);

  m.def("enumerate_surface", [](u64 q, const std::string& method, unsigned workers) {
    auto t = make_tower(q, 2);
    auto pts = method == "brute" ? enumerate_surface_brute(*t, workers).points : enumerate_surface(*t);
    return points_to_py(t->top(), pts);
  }, py::arg("q"), py::arg("method") = "parametric", py::arg("workers") = 1);

  m.def("negation_set", [](u64 q) {
    auto t = make_tower(q, 2);
    return negation_set(*t);
  }, py::arg("q"));

  m.def("curve_brute_representatives", [](u64 q, unsigned ext) {
    return dec_string(curve_brute_representatives(prime_power_from_q(q), ext));
  }, py::arg("q"), py::arg("ext"), "Decimal string, the count can exceed 64 bits");
  m.def("surface_brute_representatives", [](u64 q) {
    return dec_string(surface_brute_representatives(prime_power_from_q(q)));
  }, py::arg("q"));

  m.def("check_cube_corollary", [](u64 q, unsigned ext) {
    return report_to_py(check_cube_corollary(*make_tower(q, ext)));
  }, py::arg("q"), py::arg("ext"));
  m.def("check_square_corollary", [](u64 q) {
    return report_to_py(check_square_corollary(*make_tower(q, 2)));
  }, py::arg("q"));
  m.def("check_factorization_cubic", [](u64 q) {
    return report_to_py(check_factorization_cubic(*make_tower(q, 3)));
  }, py::arg("q"));
  m.def("check_factorization_surface", [](u64 q) {
    return report_to_py(check_factorization_surface(*make_tower(q, 2)));
  }, py::arg("q"));
  m.def("check_symmetric_identity", [](u64 p, unsigned n) {
    return report_to_py(check_symmetric_identity(*FieldCtx::build(p, n)));
  }, py::arg("p"), py::arg("n"));

  m.def("remark_counterexample", [] { return remark_to_py(remark_counterexample()); });
  m.def("cube_survey_quartic", [](u64 q) {
    return remark_to_py(cube_survey_quartic(prime_power_from_q(q)));
  }, py::arg("q"));

  m.def("full_report", [](u64 q_max, u64 budget, unsigned workers) {
    py::list out;
    for (const auto& r : full_report(q_max, budget, workers)) out.append(report_to_py(r));
    return out;
  }, py::arg("q_max"), py::arg("budget") = u64{1} << 25, py::arg("workers") = 1);

  m.attr("__version__") = "0.1.0";
}
