#include "fermat/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace fermat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void add_violation(VerifyReport& r, Violation v) {
  ++r.violation_count;
  r.pass = false;
  if (r.violations.size() < kMaxWitnesses) r.violations.push_back(std::move(v));
}

VerifyReport skipped_row(u64 q, unsigned ext, std::string check, std::string note) {
  VerifyReport r;
  r.q = q;
  r.ext = ext;
  r.check = std::move(check);
  r.informational = true;
  r.note = std::move(note);
  return r;
}

std::string pattern_str(const ZeroPattern& z) {
  return "no-zero=" + std::to_string(z.no_zero) + " one-zero=" + std::to_string(z.one_zero) +
         " two-zero=" + std::to_string(z.two_zero);
}

template <typename Point>
VerifyReport count_row(std::string check, u64 q, unsigned ext,
                       const std::vector<Point>& pts, const ZeroPattern& want,
                       u64 want_total) {
  VerifyReport r;
  r.q = q;
  r.ext = ext;
  r.check = std::move(check);
  r.instances = pts.size();
  auto got = zero_pattern<std::tuple_size_v<decltype(Point{}.c)>>(pts);
  if (pts.size() != want_total || !(got == want)) {
    add_violation(r, Violation{"count-mismatch", {},
                               "enumerated " + std::to_string(pts.size()) + " (" + pattern_str(got) +
                                   "), formula " + std::to_string(want_total) + " (" + pattern_str(want) + ")"});
  }
  return r;
}

template <typename Point>
VerifyReport oracle_row(std::string check, const TowerCtx& t, u64 instances,
                        const std::vector<Point>& param, const std::vector<Point>& brute) {
  VerifyReport r;
  r.q = t.q();
  r.ext = t.ext();
  r.check = std::move(check);
  r.instances = instances;
  const FieldCtx& f = t.top();
  auto emit = [&](const Point& pt, const char* kind) {
    Violation v;
    v.kind = kind;
    for (Elem e : pt.c) v.items.push_back(f.coeffs(e));
    add_violation(r, std::move(v));
  };
  std::size_t i = 0, j = 0;
  while (i < param.size() || j < brute.size()) {
    if (j == brute.size() || (i < param.size() && param[i].c < brute[j].c)) {
      emit(param[i], "param-only");
      ++i;
    } else if (i == param.size() || brute[j].c < param[i].c) {
      emit(brute[j], "brute-only");
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

VerifyReport check_cube_corollary(const TowerCtx& t) {
  VerifyReport r;
  r.q = t.q();
  r.ext = t.ext();
  r.check = "cube-corollary-i" + std::to_string(t.ext());
  const FieldCtx& f = t.top();
  auto pts = enumerate_curve(t);
  r.instances = pts.size();
  for (const auto& pt : pts) {
    Elem prod = f.mul(f.mul(pt.c[0], pt.c[1]), pt.c[2]);
    if (!is_nth_power(f, prod, 3)) {
      Violation v{"uvw-not-a-cube", {f.coeffs(pt.c[0]), f.coeffs(pt.c[1]), f.coeffs(pt.c[2])}, ""};
      add_violation(r, std::move(v));
    }
  }
  return r;
}

VerifyReport check_square_corollary(const TowerCtx& t) {
  VerifyReport r;
  r.q = t.q();
  r.ext = t.ext();
  r.check = "square-corollary";
  const FieldCtx& f = t.top();
  auto pts = enumerate_surface(t);
  r.instances = pts.size();
  for (const auto& pt : pts) {
    Elem prod = f.mul(f.mul(pt.c[0], pt.c[1]), f.mul(pt.c[2], pt.c[3]));
    if (!is_nth_power(f, prod, 2)) {
      Violation v{"uvwx-not-a-square",
                  {f.coeffs(pt.c[0]), f.coeffs(pt.c[1]), f.coeffs(pt.c[2]), f.coeffs(pt.c[3])},
                  ""};
      add_violation(r, std::move(v));
    }
  }
  return r;
}

VerifyReport check_factorization_cubic(const TowerCtx& t) {
  if (t.ext() != 3) throw std::logic_error("check_factorization_cubic: requires a cubic tower");
  VerifyReport r;
  r.q = t.q();
  r.ext = 3;
  r.check = "factorization-cubic";
  const FieldCtx& f = t.top();
  const u64 q = t.q();
  const u64 e = q * q + q + 1;
  for (Elem V = 1; V < f.card(); ++V) {
    if (f.pow(V, e) != 1) continue;
    ++r.instances;
    Elem lhs = f.add(f.pow(f.add(V, 1), e), 1);
    Elem t1 = f.add(f.add(f.pow(V, q + 1), V), 1);
    Elem Vi = f.inv(V);
    Elem t2 = f.add(f.add(f.pow(Vi, q + 1), Vi), 1);
    if (lhs != f.mul(t1, t2)) {
      add_violation(r, Violation{"factorization", {f.coeffs(V)}, ""});
    }
  }
  return r;
}

VerifyReport check_symmetric_identity(const FieldCtx& f) {
  VerifyReport r;
  r.q = f.card();
  r.ext = 1;
  r.check = "symmetric-identity";
  auto test = [&](Elem A, Elem B, Elem C) {
    Elem lhs = f.mul(f.mul(f.add(A, B), f.add(A, C)), f.add(B, C));
    Elem e1 = f.add(f.add(A, B), C);
    Elem e2 = f.add(f.add(f.mul(A, B), f.mul(B, C)), f.mul(C, A));
    Elem e3 = f.mul(f.mul(A, B), C);
    Elem rhs = f.sub(f.mul(e1, e2), e3);
    ++r.instances;
    if (lhs != rhs) {
      add_violation(r, Violation{"symmetric-identity", {f.coeffs(A), f.coeffs(B), f.coeffs(C)}, ""});
    }
  };
  if (f.card() <= 81) {
    for (Elem a = 0; a < f.card(); ++a)
      for (Elem b = 0; b < f.card(); ++b)
        for (Elem c = 0; c < f.card(); ++c) test(a, b, c);
  } else {
    Elem cap = std::min<Elem>(f.card(), 10);
    for (Elem a = 0; a < cap; ++a)
      for (Elem b = 0; b < cap; ++b)
        for (Elem c = 0; c < cap; ++c) test(a, b, c);
    std::mt19937_64 rng(0x5eedULL);
    for (int k = 0; k < 4096; ++k) {
      test(rng() % f.card(), rng() % f.card(), rng() % f.card());
    }
  }
  return r;
}

VerifyReport check_factorization_surface(const TowerCtx& t) {
  if (t.ext() != 2) throw std::logic_error("check_factorization_surface: requires a quadratic tower");
  VerifyReport r;
  r.q = t.q();
  r.ext = 2;
  r.check = "factorization-surface";
  const FieldCtx& f = t.top();

  auto identity = check_symmetric_identity(f);
  r.instances += identity.instances;
  r.violation_count += identity.violation_count;
  for (auto& v : identity.violations) {
    if (r.violations.size() < kMaxWitnesses) r.violations.push_back(std::move(v));
  }
  if (identity.violation_count) r.pass = false;

  const u64 e = t.q() - 1;
  auto pts = enumerate_surface(t);
  for (const auto& pt : pts) {
    if (pt.c[0] == 0 || pt.c[1] == 0 || pt.c[2] == 0 || pt.c[3] == 0) continue;
    ++r.instances;
    Elem pu = f.pow(pt.c[0], e), pv = f.pow(pt.c[1], e), pw = f.pow(pt.c[2], e);
    Elem prod = f.mul(f.mul(f.add(pu, pv), f.add(pu, pw)), f.add(pv, pw));
    if (prod != 0) {
      Violation v{"triple-product",
                  {f.coeffs(pt.c[0]), f.coeffs(pt.c[1]), f.coeffs(pt.c[2]), f.coeffs(pt.c[3])},
                  ""};
      add_violation(r, std::move(v));
    }
  }
  return r;
}

RemarkResult remark_counterexample() {
  RemarkResult res;
  auto f = FieldCtx::build(2, 4);
  for (Elem u = 1; u < 16; ++u) {
    for (Elem v = 1; v < 16; ++v) {
      Elem w = f->add(u, v);
      if (w == 0) continue;
      ++res.scanned;
      Elem prod = f->mul(f->mul(u, v), w);
      if (f->element_order(prod) == 15) {
        res.found = true;
        res.triple = {u, v, w};
        res.product = prod;
        res.product_order = 15;
        return res;
      }
    }
  }
  return res;
}

RemarkResult cube_survey_quartic(const PrimePower& pp) {
  RemarkResult res;
  auto f = FieldCtx::build(pp.p, 4 * pp.r);
  const u64 Q = f->card();
  auto pw = power_table(*f, pp.q - 1);
  auto consider = [&](Elem u, Elem v, Elem w) {
    ++res.scanned;
    if (f->add(f->add(pw[u], pw[v]), pw[w]) != 0) return false;
    if (u == 0 || v == 0 || w == 0) return false;
    Elem prod = f->mul(f->mul(u, v), w);
    if (is_nth_power(*f, prod, 3)) return false;
    res.found = true;
    res.triple = {u, v, w};
    res.product = prod;
    res.product_order = f->element_order(prod);
    return true;
  };
  if (consider(0, 0, 1)) return res;
  for (Elem z = 0; z < Q; ++z) {
    if (consider(0, 1, z)) return res;
  }
  for (Elem y = 0; y < Q; ++y) {
    for (Elem z = 0; z < Q; ++z) {
      if (consider(1, y, z)) return res;
    }
  }
  return res;
}

std::vector<VerifyReport> full_report(u64 q_max, u64 budget, unsigned workers) {
  std::vector<VerifyReport> out;
  for (u64 q : prime_powers_upto(q_max)) {
    const PrimePower pp = prime_power_from_q(q);
    TowerPtr towers[5] = {};
    auto get_tower = [&](unsigned ext) {
      if (!towers[ext]) towers[ext] = TowerCtx::build(pp, ext);
      return towers[ext];
    };

    for (unsigned ext = 1; ext <= 3; ++ext) {
      const std::string sfx = "-i" + std::to_string(ext);
      CurveCount formula{};
      bool have_formula = true;
      try {
        formula = curve_count_formula(pp, ext);
      } catch (const std::overflow_error&) {
        have_formula = false;
      }
      if (!have_formula || formula.total > budget) {
        std::string note = have_formula
                               ? "skipped: " + std::to_string(formula.total) + " points exceed budget " + std::to_string(budget)
                               : "skipped: count exceeds 64-bit range";
        out.push_back(skipped_row(q, ext, "curve-count" + sfx, note));
        out.push_back(skipped_row(q, ext, "curve-oracle" + sfx, note));
        out.push_back(skipped_row(q, ext, "cube-corollary" + sfx, note));
        continue;
      }
      auto t = get_tower(ext);
      auto pts = enumerate_curve(*t);
      out.push_back(count_row("curve-count" + sfx, q, ext, pts, formula.pattern, formula.total));
      u128 reps = curve_brute_representatives(pp, ext);
      if (reps <= budget) {
        auto brute = enumerate_curve_brute(*t, workers);
        out.push_back(oracle_row("curve-oracle" + sfx, *t, static_cast<u64>(reps), pts, brute));
      } else {
        out.push_back(skipped_row(q, ext, "curve-oracle" + sfx,
                                  "skipped: " + dec_string(reps) + " representatives exceed budget " +
                                      std::to_string(budget)));
      }
      out.push_back(check_cube_corollary(*t));
    }

    {
      SurfaceCount sformula{};
      bool have_formula = true;
      try {
        sformula = surface_count_formula(pp);
      } catch (const std::overflow_error&) {
        have_formula = false;
      }
      if (!have_formula || sformula.total > budget) {
        std::string note = have_formula
                               ? "skipped: " + std::to_string(sformula.total) + " points exceed budget " + std::to_string(budget)
                               : "skipped: count exceeds 64-bit range";
        out.push_back(skipped_row(q, 2, "surface-count", note));
        out.push_back(skipped_row(q, 2, "surface-oracle", note));
        out.push_back(skipped_row(q, 2, "square-corollary", note));
        out.push_back(skipped_row(q, 2, "factorization-surface", note));
      } else {
        auto t2 = get_tower(2);
        auto spts = enumerate_surface(*t2);
        out.push_back(count_row("surface-count", q, 2, spts, sformula.pattern, sformula.total));
        u128 sreps = surface_brute_representatives(pp);
        if (sreps <= budget) {
          auto brute = enumerate_surface_brute(*t2, workers);
          auto row = oracle_row("surface-oracle", *t2, static_cast<u64>(sreps), spts, brute.points);
          if (!(brute.pattern == sformula.pattern)) {
            add_violation(row, Violation{"pattern-mismatch", {},
                                         "brute " + pattern_str(brute.pattern) + ", formula " +
                                             pattern_str(sformula.pattern)});
          }
          out.push_back(std::move(row));
        } else {
          out.push_back(skipped_row(q, 2, "surface-oracle",
                                    "skipped: " + dec_string(sreps) + " representatives exceed budget " +
                                        std::to_string(budget)));
        }
        out.push_back(check_square_corollary(*t2));
        out.push_back(check_factorization_surface(*t2));
      }
    }

    {
      u128 q3 = static_cast<u128>(q) * q * q;
      if (q3 <= budget) {
        auto t3 = get_tower(3);
        out.push_back(check_factorization_cubic(*t3));
        VerifyReport kr;
        kr.q = q;
        kr.ext = 3;
        kr.check = "t-kernel-size";
        auto kernel = t3->t_kernel();
        kr.instances = kernel.size();
        if (kernel.size() != q * q) {
          add_violation(kr, Violation{"kernel-size", {},
                                      "kernel has " + std::to_string(kernel.size()) + " elements, expected " +
                                          std::to_string(q * q)});
        }
        out.push_back(std::move(kr));
      } else {
        std::string note = "skipped: field size " + dec_string(q3) + " exceeds budget " + std::to_string(budget);
        out.push_back(skipped_row(q, 3, "factorization-cubic", note));
        out.push_back(skipped_row(q, 3, "t-kernel-size", note));
      }
    }

    {
      VerifyReport gr;
      gr.q = q;
      gr.ext = 1;
      gr.check = "gcd-consistency";
      gr.instances = 1;
      u64 got = gcd_overlap(q);
      u64 want = (q % 3 == 1) ? 3 * (q - 1) : q - 1;
      if (got != want) {
        add_violation(gr, Violation{"gcd-mismatch", {},
                                    "gcd " + std::to_string(got) + ", expected " + std::to_string(want)});
      }
      out.push_back(std::move(gr));
    }

    if (q == 2) {
      VerifyReport rr;
      rr.q = 2;
      rr.ext = 4;
      rr.check = "remark-f16";
      auto res = remark_counterexample();
      rr.instances = res.scanned;
      if (res.found) {
        rr.note = "witness (" + std::to_string(res.triple[0]) + "," + std::to_string(res.triple[1]) + "," +
                  std::to_string(res.triple[2]) + ") with product of order " + std::to_string(res.product_order);
      } else {
        add_violation(rr, Violation{"no-witness", {}, "no order-15 coordinate product found"});
      }
      out.push_back(std::move(rr));
    }
    if (q >= 2 && q <= 4) {
      auto res = cube_survey_quartic(pp);
      auto row = skipped_row(q, 4, "cube-survey-i4", "");
      row.instances = res.scanned;
      row.note = res.found ? "coordinate product of order " + std::to_string(res.product_order) +
                                 " is not a cube; the cube property does not extend"
                           : "no counterexample found";
      out.push_back(std::move(row));
    }
  }
  return out;
}

bool all_pass(const std::vector<VerifyReport>& reports) {
  for (const auto& r : reports) {
    if (!r.informational && !r.pass) return false;
  }
  return true;
}

bool violation_replays(const VerifyReport& report, const Violation& v) {
  const PrimePower pp = prime_power_from_q(report.q);
  auto coords_of = [](const FieldCtx& f, const std::vector<std::vector<u64>>& items) {
    std::vector<Elem> out;
    out.reserve(items.size());
    for (const auto& it : items) out.push_back(f.from_coeffs(it));
    return out;
  };
  if (v.kind == "uvw-not-a-cube") {
    auto t = TowerCtx::build(pp, report.ext);
    auto c = coords_of(t->top(), v.items);
    Elem prod = t->top().mul(t->top().mul(c[0], c[1]), c[2]);
    return !is_nth_power(t->top(), prod, 3);
  }
  if (v.kind == "uvwx-not-a-square") {
    auto t = TowerCtx::build(pp, 2);
    auto c = coords_of(t->top(), v.items);
    Elem prod = t->top().mul(t->top().mul(c[0], c[1]), t->top().mul(c[2], c[3]));
    return !is_nth_power(t->top(), prod, 2);
  }
  if (v.kind == "factorization") {
    auto t = TowerCtx::build(pp, 3);
    const FieldCtx& f = t->top();
    const u64 q = pp.q;
    Elem V = f.from_coeffs(v.items[0]);
    const u64 e = q * q + q + 1;
    Elem lhs = f.add(f.pow(f.add(V, 1), e), 1);
    Elem t1 = f.add(f.add(f.pow(V, q + 1), V), 1);
    Elem Vi = f.inv(V);
    Elem t2 = f.add(f.add(f.pow(Vi, q + 1), Vi), 1);
    return lhs != f.mul(t1, t2);
  }
  if (v.kind == "symmetric-identity") {
    FieldPtr f;
    if (report.check == "factorization-surface") {
      f = TowerCtx::build(pp, 2)->top_ptr();
    } else {
      f = FieldCtx::build(pp.p, pp.r);
    }
    auto c = coords_of(*f, v.items);
    Elem lhs = f->mul(f->mul(f->add(c[0], c[1]), f->add(c[0], c[2])), f->add(c[1], c[2]));
    Elem e1 = f->add(f->add(c[0], c[1]), c[2]);
    Elem e2 = f->add(f->add(f->mul(c[0], c[1]), f->mul(c[1], c[2])), f->mul(c[2], c[0]));
    Elem rhs = f->sub(f->mul(e1, e2), f->mul(f->mul(c[0], c[1]), c[2]));
    return lhs != rhs;
  }
  if (v.kind == "triple-product") {
    auto t = TowerCtx::build(pp, 2);
    const FieldCtx& f = t->top();
    auto c = coords_of(f, v.items);
    const u64 e = pp.q - 1;
    Elem pu = f.pow(c[0], e), pv = f.pow(c[1], e), pw = f.pow(c[2], e);
    return f.mul(f.mul(f.add(pu, pv), f.add(pu, pw)), f.add(pv, pw)) != 0;
  }
  if (v.kind == "param-only" || v.kind == "brute-only") {
    auto t = TowerCtx::build(pp, report.ext);
    const FieldCtx& f = t->top();
    auto c = coords_of(f, v.items);
    if (c.size() == 3) {
      std::array<Elem, 3> a{c[0], c[1], c[2]};
      bool canonical = (a == normalize_coords<3>(f, a));
      bool on = on_curve(*t, a);
      return v.kind == "param-only" ? (!on || !canonical) : (on && canonical);
    }
    std::array<Elem, 4> a{c[0], c[1], c[2], c[3]};
    bool canonical = (a == normalize_coords<4>(f, a));
    bool on = on_surface(*t, a);
    return v.kind == "param-only" ? (!on || !canonical) : (on && canonical);
  }
  throw std::logic_error("violation_replays: unsupported witness kind " + v.kind);
}

}  // namespace fermat
