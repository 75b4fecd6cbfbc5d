#include "fermat/json_io.hpp"

#include <algorithm>

namespace fermat {

using nlohmann::json;

json elem_json(const FieldCtx& f, Elem x) {
  return json(f.coeffs(x));
}

json field_json(const FieldCtx& f) {
  return json{{"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.modulus()}};
}

namespace {

template <typename Point>
json point_json_impl(const FieldCtx& f, const Point& pt) {
  json coords = json::array();
  for (Elem e : pt.c) coords.push_back(elem_json(f, e));
  return json{{"coords", coords}, {"provenance", prov_name(pt.prov)}};
}

json tally_json(const ZeroPattern& z, std::uint64_t total) {
  return json{{"total", total},
              {"no-zero", z.no_zero},
              {"one-zero", z.one_zero},
              {"two-zero", z.two_zero}};
}

template <typename Point>
json enumerated_tally(const std::vector<Point>& pts) {
  auto z = zero_pattern<std::tuple_size_v<decltype(Point{}.c)>>(pts);
  return tally_json(z, pts.size());
}

bool tallies_equal(const json& a, const json& b) {
  return a["total"] == b["total"] && a["no-zero"] == b["no-zero"] &&
         a["one-zero"] == b["one-zero"] && a["two-zero"] == b["two-zero"];
}

}  // namespace

json point_json(const FieldCtx& f, const ProjPoint2& pt) { return point_json_impl(f, pt); }
json point_json(const FieldCtx& f, const ProjPoint3& pt) { return point_json_impl(f, pt); }

json zero_pattern_json(const ZeroPattern& z) { return tally_json(z, z.total()); }

json curve_count_report(const PrimePower& pp, unsigned ext, const FieldCtx& top,
                        const CurveCount& formula,
                        const std::vector<ProjPoint2>* parametric,
                        const std::vector<ProjPoint2>* brute) {
  json out{{"object", "curve"}, {"q", pp.q}, {"p", pp.p}, {"r", pp.r}, {"ext", ext}};
  out["field"] = field_json(top);
  out["formula"] = tally_json(formula.pattern, formula.total);
  out["parametric"] = parametric ? enumerated_tally(*parametric) : json(nullptr);
  out["brute"] = brute ? enumerated_tally(*brute) : json(nullptr);
  out["formula_matches_parametric"] =
      parametric ? json(tallies_equal(out["formula"], out["parametric"])) : json(nullptr);
  out["formula_matches_brute"] = brute ? json(tallies_equal(out["formula"], out["brute"])) : json(nullptr);
  if (parametric && brute) {
    bool eq = parametric->size() == brute->size() &&
              std::equal(parametric->begin(), parametric->end(), brute->begin(),
                         [](const ProjPoint2& a, const ProjPoint2& b) { return a.c == b.c; });
    out["parametric_equals_brute"] = eq;
  } else {
    out["parametric_equals_brute"] = nullptr;
  }
  return out;
}

json surface_count_report(const PrimePower& pp, const FieldCtx& top,
                          const SurfaceCount& formula,
                          const std::vector<ProjPoint3>* parametric,
                          const SurfaceBruteResult* brute) {
  json out{{"object", "surface"}, {"q", pp.q}, {"p", pp.p}, {"r", pp.r}, {"ext", 2}};
  out["field"] = field_json(top);
  out["formula"] = tally_json(formula.pattern, formula.total);
  out["parametric"] = parametric ? enumerated_tally(*parametric) : json(nullptr);
  out["brute"] = brute ? tally_json(brute->pattern, brute->points.size()) : json(nullptr);
  out["formula_matches_parametric"] =
      parametric ? json(tallies_equal(out["formula"], out["parametric"])) : json(nullptr);
  out["formula_matches_brute"] = brute ? json(tallies_equal(out["formula"], out["brute"])) : json(nullptr);
  if (parametric && brute) {
    bool eq = parametric->size() == brute->points.size() &&
              std::equal(parametric->begin(), parametric->end(), brute->points.begin(),
                         [](const ProjPoint3& a, const ProjPoint3& b) { return a.c == b.c; });
    out["parametric_equals_brute"] = eq;
  } else {
    out["parametric_equals_brute"] = nullptr;
  }
  return out;
}

json verify_report_json(const VerifyReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"kind", v.kind}, {"items", v.items}, {"detail", v.detail}});
  }
  return json{{"q", r.q},
              {"ext", r.ext},
              {"check", r.check},
              {"instances", r.instances},
              {"violation_count", r.violation_count},
              {"violations", violations},
              {"verdict", r.pass ? "pass" : "fail"},
              {"informational", r.informational},
              {"note", r.note}};
}

bool count_report_passes(const json& report) {
  for (const char* key :
       {"formula_matches_parametric", "formula_matches_brute", "parametric_equals_brute"}) {
    const auto& v = report.at(key);
    if (!v.is_null() && v != true) return false;
  }
  return true;
}

}  // namespace fermat
