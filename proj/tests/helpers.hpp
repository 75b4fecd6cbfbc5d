#pragma once

// Test-side oracles and property suites. The polynomial code here is written
// independently of the library (trial division instead of Frobenius powers)
// so the two construction routes can check each other.

#include <cstdint>
#include <random>
#include <vector>

#include "fermat/gf.hpp"

namespace testutil {

using fermat::Elem;
using fermat::FieldCtx;
using u64 = std::uint64_t;

using Poly = std::vector<u64>;  // little-endian coefficients over Z_p

inline Poly poly_from_code(u64 code, u64 p, unsigned deg) {
  Poly f(deg + 1, 0);
  for (unsigned k = 0; k < deg; ++k) {
    f[k] = code % p;
    code /= p;
  }
  f[deg] = 1;
  return f;
}

// Remainder of a by monic-or-not b; both little-endian, entries reduced mod p.
inline Poly poly_rem(Poly a, const Poly& b, u64 p) {
  auto inv_mod = [p](u64 x) {
    u64 acc = 1, base = x % p, e = p - 2;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return acc;
  };
  const u64 lead_inv = inv_mod(b.back());
  while (a.size() >= b.size()) {
    u64 c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
    }
    a.pop_back();
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.size() == 1 && a[0] == 0) break;
  }
  return a;
}

inline bool is_zero_poly(const Poly& a) { return a.size() == 1 && a[0] == 0; }

// Irreducibility by trial division over every monic divisor candidate of
// degree 1..deg/2.
inline bool irreducible_by_trial_division(const Poly& f, u64 p) {
  unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 1) return true;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    u64 count = 1;
    for (unsigned k = 0; k < d; ++k) count *= p;
    for (u64 code = 0; code < count; ++code) {
      Poly g = poly_from_code(code, p, d);
      if (is_zero_poly(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

inline Poly least_irreducible_bruteforce(u64 p, unsigned deg) {
  u64 count = 1;
  for (unsigned k = 0; k < deg; ++k) count *= p;
  for (u64 code = 0; code < count; ++code) {
    Poly f = poly_from_code(code, p, deg);
    if (irreducible_by_trial_division(f, p)) return f;
  }
  return {};
}

// Associativity, commutativity, distributivity, identities and inverses over
// every triple of the field.
inline bool field_axioms_exhaustive(const FieldCtx& f) {
  const u64 Q = f.card();
  for (Elem a = 0; a < Q; ++a) {
    if (f.add(a, 0) != a || f.mul(a, 1) != a) return false;
    if (f.add(a, f.neg(a)) != 0) return false;
    if (a != 0 && f.mul(a, f.inv(a)) != 1) return false;
  }
  for (Elem a = 0; a < Q; ++a) {
    for (Elem b = 0; b < Q; ++b) {
      if (f.add(a, b) != f.add(b, a)) return false;
      if (f.mul(a, b) != f.mul(b, a)) return false;
      for (Elem c = 0; c < Q; ++c) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) return false;
        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
      }
    }
  }
  return true;
}

inline bool field_axioms_random(const FieldCtx& f, int trials, u64 seed = 0x5eed) {
  std::mt19937_64 rng(seed);
  const u64 Q = f.card();
  for (int k = 0; k < trials; ++k) {
    Elem a = rng() % Q, b = rng() % Q, c = rng() % Q;
    if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) return false;
    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
    if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) return false;
    if (a != 0 && f.mul(a, f.inv(a)) != 1) return false;
  }
  return true;
}

// (x+y)^p = x^p + y^p over every pair.
inline bool freshman_dream(const FieldCtx& f) {
  const u64 p = f.characteristic();
  for (Elem a = 0; a < f.card(); ++a) {
    for (Elem b = 0; b < f.card(); ++b) {
      if (f.pow(f.add(a, b), p) != f.add(f.pow(a, p), f.pow(b, p))) return false;
    }
  }
  return true;
}

}  // namespace testutil
