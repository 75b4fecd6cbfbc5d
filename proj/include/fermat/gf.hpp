#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fermat {

/// Decimal rendering for 128-bit counts (projective spaces outgrow 64 bits).
std::string dec_string(unsigned __int128 v);

/// Field element, encoded as sum_k coeff[k] * p^k with coefficients in [0, p).
/// Plain integer comparison of codes is the canonical element order
/// (coefficient vectors compared from the highest basis power down, zero first).
using Elem = std::uint64_t;

/// Support ceiling: every constructed field cardinality p^n must fit in 63 bits.
inline constexpr std::uint64_t kMaxCardinality = (std::uint64_t{1} << 63) - 1;

/// Log/exp multiplication tables are built for fields up to this cardinality.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

bool is_prime(std::uint64_t n);

/// q = p^r with p prime. Construction enforces q^3 <= kMaxCardinality so that
/// cubic extensions always stay within native integer range.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t q = 0;
};

PrimePower prime_power(std::uint64_t p, unsigned r);
PrimePower prime_power_from_q(std::uint64_t q);
std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit);

/// gcd(q^2 - 2q + 1, q^3 - 1): 3(q-1) when q = 1 mod 3, q-1 otherwise.
/// Structural cross-check for the overlap of the two cubic point families.
std::uint64_t gcd_overlap(std::uint64_t q);

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// GF(p^n) modeled as Z_p[X] modulo the lexicographically least monic
/// irreducible of degree n (coefficient codes compared as integers, so the
/// constant term is the least significant digit). Identical (p, n) inputs
/// always produce the identical field. Immutable after construction.
class FieldCtx {
 public:
  static FieldPtr build(std::uint64_t p, unsigned n);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t card() const { return q_; }
  /// Defining polynomial, little-endian, length degree()+1, leading 1.
  const std::vector<std::uint64_t>& modulus() const { return mod_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    Elem out = 0;
    std::uint64_t place = 1;
    while (a || b) {
      std::uint64_t s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      out += s * place;
      place *= p_;
      a /= p_;
      b /= p_;
    }
    return out;
  }

  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    Elem out = 0;
    std::uint64_t place = 1;
    while (a) {
      std::uint64_t d = a % p_;
      if (d) out += (p_ - d) * place;
      place *= p_;
      a /= p_;
    }
    return out;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (!log_.empty()) {
      if (a == 0 || b == 0) return 0;
      return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
    }
    return mul_slow(a, b);
  }

  /// Throws std::invalid_argument on zero.
  Elem inv(Elem a) const;

  /// Exponentiation by squaring; pow(0, 0) = 1.
  Elem pow(Elem a, std::uint64_t e) const;

  /// Multiplicative order; throws on zero.
  std::uint64_t element_order(Elem a) const;

  bool has_tables() const { return !log_.empty(); }
  /// Least generator of the unit group; only available with tables.
  Elem generator() const;

  std::vector<std::uint64_t> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<std::uint64_t>& c) const;

 private:
  FieldCtx() = default;
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned n_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> mod_;
  std::uint64_t mod_mask_ = 0;  // bit mask of mod_ when p == 2
  Elem gen_ = 0;
  std::vector<std::uint32_t> log_;  // log_[x] for x >= 1
  std::vector<std::uint32_t> exp_;  // g^k for k in [0, 2(q-1)]
};

/// True iff x is an n-th power in the field (zero always is). Throws on n = 0.
bool is_nth_power(const FieldCtx& f, Elem x, std::uint64_t n);

/// All x with x^3 = 1, sorted; size 3 iff 3 divides card-1, else {1}.
std::vector<Elem> cube_roots_of_unity(const FieldCtx& f);

/// Table of x^e for every x, indexed by element code.
std::vector<Elem> power_table(const FieldCtx& f, std::uint64_t e);

/// Basis of the null space of the row-major matrix over f (Gaussian
/// elimination, deterministic pivoting).
std::vector<std::vector<Elem>> kernel_basis(const FieldCtx& f,
                                            std::vector<std::vector<Elem>> mat);

class TowerCtx;
using TowerPtr = std::shared_ptr<const TowerCtx>;

/// A subfield pair GF(q) within GF(q^i), 1 <= i <= 4. The embedding sends the
/// base generator to the least root of the base modulus inside the top field;
/// for i = 1 it is the identity. Immutable and safe to share across threads.
class TowerCtx {
 public:
  static TowerPtr build(const PrimePower& pp, unsigned ext);

  const FieldCtx& base() const { return *base_; }
  const FieldCtx& top() const { return *top_; }
  FieldPtr base_ptr() const { return base_; }
  FieldPtr top_ptr() const { return top_; }
  unsigned ext() const { return ext_; }
  std::uint64_t q() const { return q_; }

  /// Images of the base basis powers 1, g, ..., g^{r-1} in the top field.
  const std::vector<Elem>& embed_table() const { return embed_pows_; }

  Elem embed(Elem a) const;
  Elem frobenius_q(Elem x) const { return top_->pow(x, q_); }
  bool in_base(Elem x) const { return frobenius_q(x) == x; }

  /// Embedded base units, ascending by top-field code.
  std::vector<Elem> embedded_units() const;

  /// x^{q^2} + x^q + x; requires ext == 3.
  Elem t_map(Elem x) const;

  /// Kernel of t_map as a GF(q)-linear map, computed by Gaussian elimination
  /// on its 3x3 matrix over the base field; sorted, size q^2. Requires ext == 3.
  std::vector<Elem> t_kernel() const;

 private:
  TowerCtx() = default;

  FieldPtr base_;
  FieldPtr top_;
  unsigned ext_ = 0;
  std::uint64_t q_ = 0;
  std::vector<Elem> embed_pows_;
  std::vector<Elem> embed_full_;  // full map when the base is small enough
};

}  // namespace fermat
