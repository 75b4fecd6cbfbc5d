#pragma once

#include <cstdint>
#include <vector>

#include "fermat/gf.hpp"
#include "fermat/points.hpp"

namespace fermat {

struct SurfaceCount {
  std::uint64_t q = 0;
  ZeroPattern pattern;
  std::uint64_t total = 0;
};

struct SurfaceBruteResult {
  std::vector<ProjPoint3> points;
  ZeroPattern pattern;
};

/// All s in GF(q^2)* with s^{q-1} = -1, sorted; size q-1 (for even q this is
/// the embedded F_q*). Requires ext == 2.
std::vector<Elem> negation_set(const TowerCtx& t);

/// Points of u^{q-1}+v^{q-1}+w^{q-1}+x^{q-1} = 0 in P^3(F_{q^2}): the lines
/// (a : s a : b : t b) over the three pair-partitions, plus the one-zero
/// families (cube-root classes for q = 2 mod 3, embedded F_q for q = 0 mod 3).
/// Requires ext == 2.
std::vector<ProjPoint3> enumerate_surface(const TowerCtx& t);

/// Independent oracle: scan canonical representatives of P^3(F_{q^2}) and
/// tally matches by zero-coordinate pattern.
SurfaceBruteResult enumerate_surface_brute(const TowerCtx& t, unsigned workers = 1);

unsigned __int128 surface_brute_representatives(const PrimePower& pp);

/// Closed-form count with the two-zero / one-zero / no-zero breakdown.
SurfaceCount surface_count_formula(const PrimePower& pp);

bool on_surface(const TowerCtx& t, const std::array<Elem, 4>& c);

}  // namespace fermat
