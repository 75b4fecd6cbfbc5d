#pragma once

#include <json.hpp>

#include "fermat/curve.hpp"
#include "fermat/gf.hpp"
#include "fermat/points.hpp"
#include "fermat/surface.hpp"
#include "fermat/verify.hpp"

namespace fermat {

/// Little-endian coefficient list, one decimal integer per basis power.
nlohmann::json elem_json(const FieldCtx& f, Elem x);

/// (p, n, defining polynomial), polynomial little-endian with leading 1.
nlohmann::json field_json(const FieldCtx& f);

nlohmann::json point_json(const FieldCtx& f, const ProjPoint2& pt);
nlohmann::json point_json(const FieldCtx& f, const ProjPoint3& pt);

nlohmann::json zero_pattern_json(const ZeroPattern& z);

/// CountReport: formula values, parametric/brute tallies when available, and
/// pass/fail verdicts for every comparison that could be made.
nlohmann::json curve_count_report(const PrimePower& pp, unsigned ext, const FieldCtx& top,
                                  const CurveCount& formula,
                                  const std::vector<ProjPoint2>* parametric,
                                  const std::vector<ProjPoint2>* brute);

nlohmann::json surface_count_report(const PrimePower& pp, const FieldCtx& top,
                                    const SurfaceCount& formula,
                                    const std::vector<ProjPoint3>* parametric,
                                    const SurfaceBruteResult* brute);

nlohmann::json verify_report_json(const VerifyReport& r);

/// True iff every verdict in the report object is pass (missing comparisons
/// do not count against it).
bool count_report_passes(const nlohmann::json& report);

}  // namespace fermat
