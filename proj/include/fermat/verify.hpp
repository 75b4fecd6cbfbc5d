#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fermat/curve.hpp"
#include "fermat/gf.hpp"
#include "fermat/surface.hpp"

namespace fermat {

inline constexpr std::size_t kMaxWitnesses = 16;

/// Replayable failure witness; items hold coefficient vectors of the field
/// elements involved, detail carries human-readable numbers.
struct Violation {
  std::string kind;
  std::vector<std::vector<std::uint64_t>> items;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t q = 0;
  unsigned ext = 0;
  std::string check;
  std::uint64_t instances = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // capped at kMaxWitnesses; count stays exact
  bool pass = true;                   // pass == (violation_count == 0)
  bool informational = false;         // skipped/survey rows, never affect exit status
  std::string note;
};

/// uvw is a cube for every curve point over F_{q^i}; one canonical
/// representative per point suffices (scaling multiplies uvw by a cube).
VerifyReport check_cube_corollary(const TowerCtx& t);

/// u1 u2 u3 u4 is a square for every surface point over F_{q^2}.
VerifyReport check_square_corollary(const TowerCtx& t);

/// (V+1)^{q^2+q+1} + 1 = (V^{q+1}+V+1)(V^{-q-1}+V^{-1}+1) on the norm-1
/// subgroup of GF(q^3)*.
VerifyReport check_factorization_cubic(const TowerCtx& t);

/// (A+B)(A+C)(B+C) = (A+B+C)(AB+BC+CA) - ABC; exhaustive for card <= 81,
/// sampled deterministically above that.
VerifyReport check_symmetric_identity(const FieldCtx& f);

/// Two layers: the symmetric identity on GF(q^2), and the vanishing of
/// (u^{q-1}+v^{q-1})(u^{q-1}+w^{q-1})(v^{q-1}+w^{q-1}) on every surface point
/// with no zero coordinate.
VerifyReport check_factorization_surface(const TowerCtx& t);

struct RemarkResult {
  bool found = false;
  std::array<Elem, 3> triple{};
  Elem product = 0;
  std::uint64_t product_order = 0;
  std::uint64_t scanned = 0;
};

/// First triple u, v, w in GF(16) (canonical order) with u + v + w = 0 and
/// uvw of multiplicative order 15.
RemarkResult remark_counterexample();

/// Survey of the quartic extension: first curve point over F_{q^4} whose
/// coordinate product is a nonzero non-cube, if any.
RemarkResult cube_survey_quartic(const PrimePower& pp);

/// Every check plus every oracle-equivalence comparison for all prime powers
/// q <= q_max. Scans whose representative or point counts exceed the budget
/// are reported as informational skipped rows. Deterministic (q, check) order.
std::vector<VerifyReport> full_report(std::uint64_t q_max, std::uint64_t budget,
                                      unsigned workers = 1);

bool all_pass(const std::vector<VerifyReport>& reports);

/// Re-run one witness standalone; true when it still fails its check.
bool violation_replays(const VerifyReport& report, const Violation& v);

}  // namespace fermat
