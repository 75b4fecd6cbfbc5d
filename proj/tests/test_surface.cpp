#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fermat/gf.hpp"
#include "fermat/surface.hpp"

using namespace fermat;
using u64 = std::uint64_t;

namespace {

TowerPtr tower2(u64 q) { return TowerCtx::build(prime_power_from_q(q), 2); }

std::vector<std::array<Elem, 4>> coords_of(const std::vector<ProjPoint3>& pts) {
  std::vector<std::array<Elem, 4>> out;
  out.reserve(pts.size());
  for (const auto& pt : pts) out.push_back(pt.c);
  return out;
}

}  // namespace

TEST_CASE("negation set") {
  auto t2 = tower2(2);
  CHECK(negation_set(*t2) == std::vector<Elem>{1});

  auto t3 = tower2(3);
  auto n3 = negation_set(*t3);
  CHECK(n3 == std::vector<Elem>{3, 6});
  const FieldCtx& f9 = t3->top();
  for (Elem s : n3) CHECK(f9.mul(s, s) == f9.neg(1));

  CHECK(negation_set(*tower2(5)).size() == 4);
  for (u64 q : prime_powers_upto(16)) {
    auto t = tower2(q);
    auto ns = negation_set(*t);
    CAPTURE(q);
    CHECK(ns.size() == q - 1);
    const Elem minus_one = t->top().neg(1);
    for (Elem s : ns) CHECK(t->top().pow(s, q - 1) == minus_one);
    if (q % 2 == 0) CHECK(ns == t->embedded_units());
  }
}

TEST_CASE("surface: frozen totals") {
  CHECK(enumerate_surface(*tower2(2)).size() == 21);
  CHECK(enumerate_surface(*tower2(3)).size() == 100);
  CHECK(enumerate_surface(*tower2(4)).size() == 369);
  CHECK(enumerate_surface(*tower2(5)).size() == 1112);
}

TEST_CASE("surface formula: frozen values and breakdown rule") {
  CHECK(surface_count_formula(prime_power_from_q(2)).total == 21);
  CHECK(surface_count_formula(prime_power_from_q(3)).total == 100);
  CHECK(surface_count_formula(prime_power_from_q(4)).total == 369);
  CHECK(surface_count_formula(prime_power_from_q(5)).total == 1112);
  CHECK(surface_count_formula(prime_power_from_q(7)).total == 4572);
  CHECK(surface_count_formula(prime_power_from_q(9)).total == 14128);
  CHECK(surface_count_formula(prime_power_from_q(13)).total == 67464);

  for (u64 q : prime_powers_upto(64)) {
    auto c = surface_count_formula(prime_power_from_q(q));
    CAPTURE(q);
    CHECK(c.pattern.two_zero == 6 * (q - 1));
    u64 one = q % 3 == 2 ? 8 * (q - 1) * (q - 1) : (q % 3 == 0 ? 4 * (q - 1) * (q - 1) : 0);
    CHECK(c.pattern.one_zero == one);
    CHECK(c.total == c.pattern.total());
  }
}

TEST_CASE("parametric surface equals the brute-force oracle") {
  for (u64 q : prime_powers_upto(9)) {
    auto t = tower2(q);
    auto param = enumerate_surface(*t);
    auto brute = enumerate_surface_brute(*t);
    CAPTURE(q);
    CHECK(coords_of(param) == coords_of(brute.points));
    auto formula = surface_count_formula(prime_power_from_q(q));
    CHECK(brute.pattern == formula.pattern);
    CHECK(zero_pattern<4>(param) == formula.pattern);
  }
}

TEST_CASE("parametric count matches the formula up to q = 32") {
  for (u64 q : prime_powers_upto(32)) {
    auto t = tower2(q);
    auto pts = enumerate_surface(*t);
    auto formula = surface_count_formula(prime_power_from_q(q));
    CAPTURE(q);
    CHECK(pts.size() == formula.total);
    CHECK(zero_pattern<4>(pts) == formula.pattern);
  }
}

TEST_CASE("every emitted point satisfies the equation and is canonical") {
  for (u64 q : prime_powers_upto(9)) {
    auto t = tower2(q);
    auto pts = enumerate_surface(*t);
    CAPTURE(q);
    for (const auto& pt : pts) {
      CHECK(on_surface(*t, pt.c));
      CHECK(normalize_coords<4>(t->top(), pt.c) == pt.c);
    }
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
  }
}

TEST_CASE("line closure: every point of every parametrized line is emitted") {
  constexpr std::array<std::array<unsigned, 4>, 3> pairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  for (u64 q : {2, 3, 4, 5}) {
    auto t = tower2(q);
    const FieldCtx& f = t->top();
    auto pts = coords_of(enumerate_surface(*t));
    auto negs = negation_set(*t);
    CAPTURE(q);
    for (const auto& pr : pairings) {
      for (Elem s : negs) {
        for (Elem tt : negs) {
          for (u64 rep = 0; rep <= f.card(); ++rep) {
            Elem a = rep == 0 ? 0 : 1;
            Elem b = rep == 0 ? 1 : static_cast<Elem>(rep - 1);
            std::array<Elem, 4> co{};
            co[pr[0]] = a;
            co[pr[1]] = f.mul(s, a);
            co[pr[2]] = b;
            co[pr[3]] = f.mul(tt, b);
            CHECK(std::binary_search(pts.begin(), pts.end(), normalize_coords<4>(f, co)));
          }
        }
      }
    }
  }
}

TEST_CASE("no two emitted representatives are projectively equivalent") {
  for (u64 q : {2, 3, 4, 5, 7}) {
    auto t = tower2(q);
    const FieldCtx& f = t->top();
    auto cs = coords_of(enumerate_surface(*t));
    CAPTURE(q);
    for (const auto& c : cs) {
      for (Elem lam = 2; lam < f.card(); ++lam) {
        std::array<Elem, 4> scaled{f.mul(lam, c[0]), f.mul(lam, c[1]), f.mul(lam, c[2]), f.mul(lam, c[3])};
        CHECK_FALSE(std::binary_search(cs.begin(), cs.end(), scaled));
      }
    }
  }
}

TEST_CASE("brute scan: representatives and worker independence") {
  CHECK(surface_brute_representatives(prime_power_from_q(2)) == 85);  // P^3(F_4)
  CHECK(dec_string(surface_brute_representatives(prime_power_from_q(9))) == "538084");

  auto t = tower2(3);
  auto one = enumerate_surface_brute(*t, 1);
  auto four = enumerate_surface_brute(*t, 4);
  CHECK(coords_of(one.points) == coords_of(four.points));
  CHECK(one.pattern == four.pattern);
}

TEST_CASE("surface requires the quadratic tower") {
  auto t3 = TowerCtx::build(prime_power_from_q(2), 3);
  CHECK_THROWS_AS(enumerate_surface(*t3), std::logic_error);
  CHECK_THROWS_AS(negation_set(*t3), std::logic_error);
}
