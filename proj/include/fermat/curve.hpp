#pragma once

#include <cstdint>
#include <vector>

#include "fermat/gf.hpp"
#include "fermat/points.hpp"

namespace fermat {

struct CurveCount {
  std::uint64_t q = 0;
  unsigned ext = 0;
  ZeroPattern pattern;
  std::uint64_t total = 0;
};

/// Points of u^{q-1} + v^{q-1} + w^{q-1} = 0 in P^2(F_q): the all-nonzero
/// points when p = 3, the one-zero-coordinate points when p = 2, nothing
/// otherwise. Requires ext == 1.
std::vector<ProjPoint2> enumerate_base(const TowerCtx& t);

/// Points over F_{q^2}: the three quadratic families (cube-root-of-unity
/// parametrization, embedded torus for q = 0 mod 3, arrangements of {0,1,d}
/// with d^{q-1} = -1), merged and deduplicated. Requires ext == 2.
std::vector<ProjPoint2> enumerate_quadratic(const TowerCtx& t);

/// Points over F_{q^3}: (c v^{q+1} : v : 1) over the nonzero kernel of the
/// linearized map, the mirrored family through 1/v, and for even q the
/// one-zero points over F_q. Requires ext == 3.
std::vector<ProjPoint2> enumerate_cubic(const TowerCtx& t);

/// Dispatch on t.ext().
std::vector<ProjPoint2> enumerate_curve(const TowerCtx& t);

/// Independent oracle: scan every canonical representative of P^2(F_{q^i})
/// and keep the points whose coordinate (q-1)-powers sum to zero.
std::vector<ProjPoint2> enumerate_curve_brute(const TowerCtx& t, unsigned workers = 1);

/// Number of canonical representatives the brute scan would visit.
unsigned __int128 curve_brute_representatives(const PrimePower& pp, unsigned ext);

/// Closed-form point count with its zero-coordinate breakdown, ext in 1..3.
CurveCount curve_count_formula(const PrimePower& pp, unsigned ext);

/// Evaluate the defining equation directly (independent of any enumerator).
bool on_curve(const TowerCtx& t, const std::array<Elem, 3>& c);

}  // namespace fermat
