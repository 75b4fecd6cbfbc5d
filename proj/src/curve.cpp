#include "fermat/curve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace fermat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void require_ext(const TowerCtx& t, unsigned ext, const char* who) {
  if (t.ext() != ext) throw std::logic_error(std::string(who) + ": wrong extension degree");
}

u64 checked_u64(u128 v, const char* who) {
  if (v > static_cast<u128>(~std::uint64_t{0})) {
    throw std::overflow_error(std::string(who) + ": count exceeds 64-bit range");
  }
  return static_cast<u64>(v);
}

}  // namespace

std::string_view prov_name(Prov p) {
  switch (p) {
    case Prov::kT3Case1: return "T3-case1";
    case Prov::kT3Case2: return "T3-case2";
    case Prov::kT3Case3: return "T3-case3";
    case Prov::kT2Case1: return "T2-case1";
    case Prov::kT2Case2: return "T2-case2";
    case Prov::kT2Case3: return "T2-case3";
    case Prov::kLCase1: return "L-case1";
    case Prov::kLCase2: return "L-case2";
    case Prov::kSLines: return "S-lines";
    case Prov::kSCubes: return "S-cubes";
    case Prov::kSChar3: return "S-char3";
    case Prov::kBrute: return "brute";
  }
  return "?";
}

std::vector<ProjPoint2> enumerate_base(const TowerCtx& t) {
  require_ext(t, 1, "enumerate_base");
  const FieldCtx& f = t.top();
  const u64 q = t.q();
  std::vector<ProjPoint2> out;
  if (f.characteristic() == 3) {
    out.reserve((q - 1) * (q - 1));
    for (Elem a = 1; a < q; ++a) {
      for (Elem b = 1; b < q; ++b) {
        out.push_back({{1, a, b}, Prov::kLCase1});
      }
    }
  } else if (f.characteristic() == 2) {
    out.reserve(3 * (q - 1));
    for (Elem d = 1; d < q; ++d) {
      out.push_back({{0, 1, d}, Prov::kLCase2});
      out.push_back({{1, 0, d}, Prov::kLCase2});
      out.push_back({{1, d, 0}, Prov::kLCase2});
    }
  }
  canonical_dedup(out);
  return out;
}

std::vector<ProjPoint2> enumerate_quadratic(const TowerCtx& t) {
  require_ext(t, 2, "enumerate_quadratic");
  const FieldCtx& f = t.top();
  const u64 q = t.q();
  auto pw = power_table(f, q - 1);
  std::vector<ProjPoint2> out;

  if (q % 3 == 2) {
    // v^{q-1} a primitive cube root of unity, u = c v^2 with c embedded.
    auto roots = cube_roots_of_unity(f);
    std::vector<Elem> vs;
    for (Elem v = 1; v < f.card(); ++v) {
      if (pw[v] != 1 && (pw[v] == roots[1] || pw[v] == roots[2])) vs.push_back(v);
    }
    auto units = t.embedded_units();
    for (Elem v : vs) {
      Elem v2 = f.mul(v, v);
      for (Elem c : units) {
        out.push_back({normalize_coords<3>(f, {f.mul(c, v2), v, 1}), Prov::kT2Case1});
      }
    }
  } else if (q % 3 == 0) {
    auto units = t.embedded_units();
    for (Elem a : units) {
      for (Elem b : units) {
        out.push_back({normalize_coords<3>(f, {a, b, 1}), Prov::kT2Case2});
      }
    }
  }

  const Elem minus_one = f.neg(1);
  for (Elem d = 1; d < f.card(); ++d) {
    if (pw[d] != minus_one) continue;
    out.push_back({{0, 1, d}, Prov::kT2Case3});
    out.push_back({{1, 0, d}, Prov::kT2Case3});
    out.push_back({{1, d, 0}, Prov::kT2Case3});
  }

  canonical_dedup(out);
  return out;
}

std::vector<ProjPoint2> enumerate_cubic(const TowerCtx& t) {
  require_ext(t, 3, "enumerate_cubic");
  const FieldCtx& f = t.top();
  const u64 q = t.q();
  auto kernel = t.t_kernel();
  auto units = t.embedded_units();
  std::vector<ProjPoint2> out;
  out.reserve(2 * kernel.size() * units.size());

  for (Elem v : kernel) {
    if (v == 0) continue;
    Elem vq1 = f.pow(v, q + 1);
    for (Elem c : units) {
      out.push_back({normalize_coords<3>(f, {f.mul(c, vq1), v, 1}), Prov::kT3Case1});
    }
  }
  for (Elem v : kernel) {
    if (v == 0) continue;
    // T(1/v') = 0 for v' = 1/v; the point is (c v'^{-q} : v' : 1) = (c v^q : 1/v : 1)
    Elem vq = f.pow(v, q);
    Elem vi = f.inv(v);
    for (Elem c : units) {
      out.push_back({normalize_coords<3>(f, {f.mul(c, vq), vi, 1}), Prov::kT3Case2});
    }
  }
  if (q % 2 == 0) {
    for (Elem d = 1; d < q; ++d) {
      Elem e = t.embed(d);
      out.push_back({{0, 1, e}, Prov::kT3Case3});
      out.push_back({{1, 0, e}, Prov::kT3Case3});
      out.push_back({{1, e, 0}, Prov::kT3Case3});
    }
  }

  canonical_dedup(out);
  return out;
}

std::vector<ProjPoint2> enumerate_curve(const TowerCtx& t) {
  switch (t.ext()) {
    case 1: return enumerate_base(t);
    case 2: return enumerate_quadratic(t);
    case 3: return enumerate_cubic(t);
    default: throw std::logic_error("enumerate_curve: extension degree must be 1..3");
  }
}

std::vector<ProjPoint2> enumerate_curve_brute(const TowerCtx& t, unsigned workers) {
  const FieldCtx& f = t.top();
  const u64 Q = f.card();
  auto pw = power_table(f, t.q() - 1);
  std::vector<ProjPoint2> out;

  if (f.add(f.add(pw[0], pw[0]), pw[1]) == 0) out.push_back({{0, 0, 1}, Prov::kBrute});
  for (Elem z = 0; z < Q; ++z) {
    if (f.add(f.add(pw[0], pw[1]), pw[z]) == 0) out.push_back({{0, 1, z}, Prov::kBrute});
  }

  auto scan_rows = [&](u64 y_begin, u64 y_end, std::vector<ProjPoint2>& sink) {
    for (Elem y = y_begin; y < y_end; ++y) {
      Elem head = f.add(pw[1], pw[y]);
      for (Elem z = 0; z < Q; ++z) {
        if (f.add(head, pw[z]) == 0) sink.push_back({{1, y, z}, Prov::kBrute});
      }
    }
  };

  if (workers <= 1) {
    scan_rows(0, Q, out);
  } else {
    std::vector<std::vector<ProjPoint2>> parts(workers);
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
  return out;
}

unsigned __int128 curve_brute_representatives(const PrimePower& pp, unsigned ext) {
  u128 Q = 1;
  for (unsigned k = 0; k < ext; ++k) Q *= pp.q;
  return Q * Q + Q + 1;
}

CurveCount curve_count_formula(const PrimePower& pp, unsigned ext) {
  const u128 q = pp.q;
  u128 no_zero = 0, one_zero = 0;
  switch (ext) {
    case 1:
      if (pp.p == 3) no_zero = (q - 1) * (q - 1);
      else if (pp.p == 2) one_zero = 3 * (q - 1);
      break;
    case 2:
      one_zero = 3 * (q - 1);
      if (q % 3 == 0) no_zero = (q - 1) * (q - 1);
      else if (q % 3 == 2) no_zero = 2 * (q - 1) * (q - 1);
      break;
    case 3:
      if (q % 2 == 0) one_zero = 3 * (q - 1);
      if (q % 3 == 0) no_zero = (2 * q + 1) * (q - 1) * (q - 1);
      else if (q % 3 == 1) no_zero = 2 * q * (q - 1) * (q - 1);
      else no_zero = (2 * q + 2) * (q - 1) * (q - 1);
      break;
    default:
      throw std::invalid_argument("curve_count_formula: extension degree must be 1..3");
  }
  CurveCount out;
  out.q = pp.q;
  out.ext = ext;
  out.pattern.no_zero = checked_u64(no_zero, "curve_count_formula");
  out.pattern.one_zero = checked_u64(one_zero, "curve_count_formula");
  out.pattern.two_zero = 0;
  out.total = checked_u64(no_zero + one_zero, "curve_count_formula");
  return out;
}

bool on_curve(const TowerCtx& t, const std::array<Elem, 3>& c) {
  const FieldCtx& f = t.top();
  const u64 e = t.q() - 1;
  return f.add(f.add(f.pow(c[0], e), f.pow(c[1], e)), f.pow(c[2], e)) == 0;
}

}  // namespace fermat
