#include "fermat/surface.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace fermat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 checked_u64(u128 v, const char* who) {
  if (v > static_cast<u128>(~std::uint64_t{0})) {
    throw std::overflow_error(std::string(who) + ": count exceeds 64-bit range");
  }
  return static_cast<u64>(v);
}

constexpr std::array<std::array<unsigned, 4>, 3> kPairings = {{
    {0, 1, 2, 3},  // (u1,u2) | (u3,u4)
    {0, 2, 1, 3},  // (u1,u3) | (u2,u4)
    {0, 3, 1, 2},  // (u1,u4) | (u2,u3)
}};

}  // namespace

std::vector<Elem> negation_set(const TowerCtx& t) {
  if (t.ext() != 2) throw std::logic_error("negation_set: requires a quadratic tower");
  const FieldCtx& f = t.top();
  const Elem minus_one = f.neg(1);
  std::vector<Elem> out;
  out.reserve(t.q() - 1);
  for (Elem s = 1; s < f.card(); ++s) {
    if (f.pow(s, t.q() - 1) == minus_one) out.push_back(s);
  }
  return out;
}

std::vector<ProjPoint3> enumerate_surface(const TowerCtx& t) {
  if (t.ext() != 2) throw std::logic_error("enumerate_surface: requires a quadratic tower");
  const FieldCtx& f = t.top();
  const u64 q = t.q();
  const u64 Q = f.card();
  auto negs = negation_set(t);
  std::vector<ProjPoint3> out;

  // Lines (a : s a : b : t b), coordinates placed per pairing; a = 0 and b = 0
  // degenerations supply the two-zero points.
  for (const auto& pr : kPairings) {
    for (Elem s : negs) {
      for (Elem tt : negs) {
        for (u64 rep = 0; rep <= Q; ++rep) {
          Elem a = rep == 0 ? 0 : 1;
          Elem b = rep == 0 ? 1 : static_cast<Elem>(rep - 1);
          std::array<Elem, 4> co{};
          co[pr[0]] = a;
          co[pr[1]] = f.mul(s, a);
          co[pr[2]] = b;
          co[pr[3]] = f.mul(tt, b);
          out.push_back({normalize_coords<4>(f, co), Prov::kSLines});
        }
      }
    }
  }

  if (q % 3 == 2) {
    // One zero coordinate; the other three carry the three distinct cube
    // roots of unity as their (q-1)-th powers, in every arrangement.
    auto pw = power_table(f, q - 1);
    auto roots = cube_roots_of_unity(f);
    std::array<std::vector<Elem>, 3> cls;
    for (Elem z = 1; z < Q; ++z) {
      for (unsigned k = 0; k < 3; ++k) {
        if (pw[z] == roots[k]) {
          cls[k].push_back(z);
          break;
        }
      }
    }
    std::array<unsigned, 3> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
      for (unsigned zero_pos = 0; zero_pos < 4; ++zero_pos) {
        std::array<unsigned, 3> slots{};
        unsigned n = 0;
        for (unsigned k = 0; k < 4; ++k) {
          if (k != zero_pos) slots[n++] = k;
        }
        for (Elem z1 : cls[perm[0]]) {
          for (Elem z2 : cls[perm[1]]) {
            for (Elem z3 : cls[perm[2]]) {
              std::array<Elem, 4> co{};
              co[slots[0]] = z1;
              co[slots[1]] = z2;
              co[slots[2]] = z3;
              out.push_back({normalize_coords<4>(f, co), Prov::kSCubes});
            }
          }
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else if (q % 3 == 0) {
    auto units = t.embedded_units();
    for (unsigned zero_pos = 0; zero_pos < 4; ++zero_pos) {
      std::array<unsigned, 3> slots{};
      unsigned n = 0;
      for (unsigned k = 0; k < 4; ++k) {
        if (k != zero_pos) slots[n++] = k;
      }
      for (Elem z1 : units) {
        for (Elem z2 : units) {
          for (Elem z3 : units) {
            std::array<Elem, 4> co{};
            co[slots[0]] = z1;
            co[slots[1]] = z2;
            co[slots[2]] = z3;
            out.push_back({normalize_coords<4>(f, co), Prov::kSChar3});
          }
        }
      }
    }
  }

  canonical_dedup(out);
  return out;
}

SurfaceBruteResult enumerate_surface_brute(const TowerCtx& t, unsigned workers) {
  if (t.ext() != 2) throw std::logic_error("enumerate_surface_brute: requires a quadratic tower");
  const FieldCtx& f = t.top();
  const u64 Q = f.card();
  auto pw = power_table(f, t.q() - 1);
  std::vector<ProjPoint3> out;

  if (pw[1] == 0) out.push_back({{0, 0, 0, 1}, Prov::kBrute});  // never: 1^{q-1} = 1
  for (Elem z = 0; z < Q; ++z) {
    if (f.add(pw[1], pw[z]) == 0) out.push_back({{0, 0, 1, z}, Prov::kBrute});
  }
  for (Elem y = 0; y < Q; ++y) {
    Elem head = f.add(pw[1], pw[y]);
    for (Elem z = 0; z < Q; ++z) {
      if (f.add(head, pw[z]) == 0) out.push_back({{0, 1, y, z}, Prov::kBrute});
    }
  }

  auto scan_rows = [&](u64 x_begin, u64 x_end, std::vector<ProjPoint3>& sink) {
    for (Elem x = x_begin; x < x_end; ++x) {
      Elem head1 = f.add(pw[1], pw[x]);
      for (Elem y = 0; y < Q; ++y) {
        Elem head2 = f.add(head1, pw[y]);
        for (Elem z = 0; z < Q; ++z) {
          if (f.add(head2, pw[z]) == 0) sink.push_back({{1, x, y, z}, Prov::kBrute});
        }
      }
    }
  };

  if (workers <= 1) {
    scan_rows(0, Q, out);
  } else {
    std::vector<std::vector<ProjPoint3>> parts(workers);
    std::vector<std::thread> pool;
    u64 chunk = (Q + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      u64 lo = std::min<u64>(Q, w * chunk);
      u64 hi = std::min<u64>(Q, lo + chunk);
      pool.emplace_back(scan_rows, lo, hi, std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  }

  canonical_dedup(out);
  SurfaceBruteResult res;
  res.pattern = zero_pattern<4>(out);
  res.points = std::move(out);
  return res;
}

unsigned __int128 surface_brute_representatives(const PrimePower& pp) {
  u128 Q = static_cast<u128>(pp.q) * pp.q;
  return Q * Q * Q + Q * Q + Q + 1;
}

SurfaceCount surface_count_formula(const PrimePower& pp) {
  const u128 q = pp.q;
  u128 two_zero = 6 * (q - 1);
  u128 one_zero = 0;
  if (q % 3 == 2) one_zero = 8 * (q - 1) * (q - 1);
  else if (q % 3 == 0) one_zero = 4 * (q - 1) * (q - 1);
  u128 no_zero;
  if (q % 2 == 1) {
    no_zero = 3 * (q - 1) * (q - 1) * (q - 1) * (q - 1) + 3 * (q - 1) * (q - 1) * (q - 1);
  } else {
    no_zero = (3 * q + 1) * (q - 1) * (q - 1) * (q - 1);
  }
  SurfaceCount out;
  out.q = pp.q;
  out.pattern.two_zero = checked_u64(two_zero, "surface_count_formula");
  out.pattern.one_zero = checked_u64(one_zero, "surface_count_formula");
  out.pattern.no_zero = checked_u64(no_zero, "surface_count_formula");
  out.total = checked_u64(two_zero + one_zero + no_zero, "surface_count_formula");
  return out;
}

bool on_surface(const TowerCtx& t, const std::array<Elem, 4>& c) {
  const FieldCtx& f = t.top();
  const u64 e = t.q() - 1;
  Elem s = f.add(f.pow(c[0], e), f.pow(c[1], e));
  return f.add(s, f.add(f.pow(c[2], e), f.pow(c[3], e))) == 0;
}

}  // namespace fermat
