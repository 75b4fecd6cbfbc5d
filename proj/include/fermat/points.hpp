#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fermat/gf.hpp"

namespace fermat {

/// Which parametric family produced a point. Tags are part of the JSON wire
/// format; equality of points never looks at them.
enum class Prov : std::uint8_t {
  kT3Case1,
  kT3Case2,
  kT3Case3,
  kT2Case1,
  kT2Case2,
  kT2Case3,
  kLCase1,
  kLCase2,
  kSLines,
  kSCubes,
  kSChar3,
  kBrute,
};

std::string_view prov_name(Prov p);

/// Canonical projective point in P^2: leftmost nonzero coordinate equals 1.
struct ProjPoint2 {
  std::array<Elem, 3> c{};
  Prov prov = Prov::kBrute;

  friend bool operator==(const ProjPoint2& a, const ProjPoint2& b) { return a.c == b.c; }
  friend std::strong_ordering operator<=>(const ProjPoint2& a, const ProjPoint2& b) {
    return a.c <=> b.c;
  }
};

/// Canonical projective point in P^3.
struct ProjPoint3 {
  std::array<Elem, 4> c{};
  Prov prov = Prov::kBrute;

  friend bool operator==(const ProjPoint3& a, const ProjPoint3& b) { return a.c == b.c; }
  friend std::strong_ordering operator<=>(const ProjPoint3& a, const ProjPoint3& b) {
    return a.c <=> b.c;
  }
};

/// Point tallies grouped by how many coordinates vanish.
struct ZeroPattern {
  std::uint64_t no_zero = 0;
  std::uint64_t one_zero = 0;
  std::uint64_t two_zero = 0;

  std::uint64_t total() const { return no_zero + one_zero + two_zero; }
  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

template <std::size_t N>
ZeroPattern zero_pattern(const std::vector<std::conditional_t<N == 3, ProjPoint2, ProjPoint3>>& pts) {
  ZeroPattern z;
  for (const auto& pt : pts) {
    unsigned zeros = 0;
    for (Elem e : pt.c) zeros += (e == 0);
    if (zeros == 0) ++z.no_zero;
    else if (zeros == 1) ++z.one_zero;
    else ++z.two_zero;
  }
  return z;
}

/// Scale so the leftmost nonzero coordinate becomes 1.
template <std::size_t N>
std::array<Elem, N> normalize_coords(const FieldCtx& f, std::array<Elem, N> c) {
  for (std::size_t i = 0; i < N; ++i) {
    if (c[i] != 0) {
      if (c[i] != 1) {
        Elem s = f.inv(c[i]);
        for (std::size_t j = i; j < N; ++j) c[j] = f.mul(s, c[j]);
      }
      return c;
    }
  }
  return c;  // all-zero never reaches here from the enumerators
}

/// Sort by coordinates and drop duplicates; the earliest-generated point wins,
/// so provenance of merged families is deterministic.
template <typename P>
void canonical_dedup(std::vector<P>& pts) {
  std::stable_sort(pts.begin(), pts.end(),
                   [](const P& a, const P& b) { return a.c < b.c; });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const P& a, const P& b) { return a.c == b.c; }),
            pts.end());
}

}  // namespace fermat
