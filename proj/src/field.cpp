#include "fermat/gf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fermat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<u64> prime_factors(u64 m) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= m; d += (d == 2) ? 1 : 2) {
    if (m % d == 0) {
      fs.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) fs.push_back(m);
  return fs;
}

// ---- dense polynomial arithmetic over Z_p (little-endian coefficient vectors)

using Poly = std::vector<u64>;

void poly_trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + static_cast<u128>(a[i]) * b[j]) % p;
    }
  }
  const std::size_t n = f.size() - 1;  // f monic of degree n
  for (std::size_t i = prod.size(); i-- > n;) {
    u64 c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      u64 t = static_cast<u128>(c) * f[j] % p;
      prod[i - n + j] = (prod[i - n + j] + p - t) % p;
    }
  }
  prod.resize(n, 0);
  poly_trim(prod);
  return prod;
}

Poly poly_powmod_x(u128 e, const Poly& f, u64 p) {
  // X^e mod f
  Poly result{1};
  Poly base{0, 1};
  if (f.size() == 2) base = {(p - f[0]) % p};  // X = -c0 mod (X + c0)
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& b, u64 p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  u64 lead_inv = 1;
  {
    // b need not be monic here
    u64 lead = b.back() % p;
    u64 e = p - 2;
    u64 acc = 1, base = lead;
    while (e) {
      if (e & 1) acc = static_cast<u128>(acc) * base % p;
      base = static_cast<u128>(base) * base % p;
      e >>= 1;
    }
    lead_inv = acc;
  }
  while (a.size() > db && !(a.size() == 1 && a[0] == 0)) {
    u64 c = static_cast<u128>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        u64 t = static_cast<u128>(c) * b[j] % p;
        a[shift + j] = (a[shift + j] + p - t) % p;
      }
    }
    a.pop_back();
    if (a.empty()) {
      a.push_back(0);
      break;
    }
    poly_trim(a);
    if (a.size() == 1 && a[0] == 0) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Irreducibility of monic f of degree n over Z_p: X^{p^n} = X mod f and, for
// every prime l | n, gcd(X^{p^{n/l}} - X mod f, f) = 1.
bool poly_irreducible(const Poly& f, u64 p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  u128 pn = 1;
  for (unsigned k = 0; k < n; ++k) pn *= p;
  Poly xpn = poly_powmod_x(pn, f, p);
  Poly x{0, 1};
  poly_trim(xpn);
  if (xpn != x) return false;
  for (u64 l : prime_factors(n)) {
    u128 pd = 1;
    for (unsigned k = 0; k < n / l; ++k) pd *= p;
    Poly h = poly_powmod_x(pd, f, p);
    // h - X
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    poly_trim(h);
    Poly g = poly_gcd(f, h, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

}  // namespace

std::string dec_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePower prime_power(u64 p, unsigned r) {
  if (!is_prime(p)) throw std::invalid_argument("prime_power: p is not prime");
  if (r == 0) throw std::invalid_argument("prime_power: exponent must be positive");
  u128 q = 1;
  for (unsigned k = 0; k < r; ++k) {
    q *= p;
    if (q > kMaxCardinality) throw std::overflow_error("prime_power: q exceeds the support ceiling");
  }
  u128 q3 = q * q * q;
  if (q3 > kMaxCardinality) throw std::overflow_error("prime_power: q^3 exceeds the support ceiling");
  return PrimePower{p, r, static_cast<u64>(q)};
}

PrimePower prime_power_from_q(u64 q) {
  if (q < 2) throw std::invalid_argument("prime_power_from_q: q must be at least 2");
  u64 p = q;
  for (u64 d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned r = 0;
  u64 m = q;
  while (m % p == 0) {
    m /= p;
    ++r;
  }
  if (m != 1) throw std::invalid_argument("prime_power_from_q: q is not a prime power");
  return prime_power(p, r);
}

std::vector<u64> prime_powers_upto(u64 limit) {
  std::vector<u64> out;
  for (u64 q = 2; q <= limit; ++q) {
    u64 p = q;
    for (u64 d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    u64 m = q;
    while (m % p == 0) m /= p;
    if (m == 1) out.push_back(q);
  }
  return out;
}

u64 gcd_overlap(u64 q) {
  if (q < 2) throw std::invalid_argument("gcd_overlap: q must be at least 2");
  u64 a = (q - 1) * (q - 1);
  u64 b = q * q * q - 1;
  return std::gcd(a, b);
}

FieldPtr FieldCtx::build(u64 p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: p is not prime");
  if (n == 0) throw std::invalid_argument("build_field: degree must be positive");
  u128 q = 1;
  for (unsigned k = 0; k < n; ++k) {
    q *= p;
    if (q > kMaxCardinality) throw std::overflow_error("build_field: cardinality exceeds the support ceiling");
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = static_cast<u64>(q);

  // Least monic irreducible of degree n: candidates ordered by the integer
  // encoding of their lower coefficients.
  for (u64 code = 0;; ++code) {
    Poly f(n + 1, 0);
    u64 c = code;
    for (unsigned k = 0; k < n; ++k) {
      f[k] = c % p;
      c /= p;
    }
    f[n] = 1;
    if (poly_irreducible(f, p)) {
      ctx->mod_ = std::move(f);
      break;
    }
  }
  if (p == 2) {
    for (unsigned k = 0; k <= n; ++k) ctx->mod_mask_ |= ctx->mod_[k] << k;
  }
  if (ctx->q_ <= kTableLimit) ctx->build_tables();
  return ctx;
}

Elem FieldCtx::mul_slow(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (n_ == 1) return static_cast<u64>(static_cast<u128>(a) * b % p_);
  if (p_ == 2) {
    u64 r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & q_) a ^= mod_mask_;
    }
    return r;
  }
  u64 da[64] = {0}, db[64] = {0}, prod[128] = {0};
  unsigned la = 0, lb = 0;
  for (u64 x = a; x; x /= p_) da[la++] = x % p_;
  for (u64 x = b; x; x /= p_) db[lb++] = x % p_;
  for (unsigned i = 0; i < la; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < lb; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
  }
  for (unsigned i = la + lb - 1; i-- > n_;) {
    u64 c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < n_; ++j) {
      u64 t = c * mod_[j] % p_;
      prod[i - n_ + j] = (prod[i - n_ + j] + p_ - t) % p_;
    }
  }
  Elem out = 0;
  for (unsigned k = n_; k-- > 0;) out = out * p_ + prod[k];
  return out;
}

void FieldCtx::build_tables() {
  const u64 order = q_ - 1;
  if (order == 1) {
    gen_ = 1;
  } else {
    auto fs = prime_factors(order);
    for (Elem g = 2; g < q_; ++g) {
      bool primitive = true;
      for (u64 l : fs) {
        // slow-path pow: tables are not built yet
        Elem acc = 1, base = g;
        u64 e = order / l;
        while (e) {
          if (e & 1) acc = mul_slow(acc, base);
          base = mul_slow(base, base);
          e >>= 1;
        }
        if (acc == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen_ = g;
        break;
      }
    }
  }
  log_.assign(q_, 0);
  exp_.assign(2 * order + 1, 1);
  Elem x = 1;
  for (u64 k = 0; k < order; ++k) {
    exp_[k] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(k);
    x = mul_slow(x, gen_);
  }
  for (u64 k = order; k <= 2 * order; ++k) exp_[k] = exp_[k - order];
}

Elem FieldCtx::inv(Elem a) const {
  if (a == 0) throw std::invalid_argument("inv: zero has no inverse");
  if (!log_.empty()) return exp_[(q_ - 1) - log_[a]];
  return pow(a, q_ - 2);
}

Elem FieldCtx::pow(Elem a, u64 e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (!log_.empty()) {
    const u64 order = q_ - 1;
    u64 k = static_cast<u64>(static_cast<u128>(log_[a]) * (e % order) % order);
    return exp_[k];
  }
  Elem acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

std::uint64_t FieldCtx::element_order(Elem a) const {
  if (a == 0) throw std::invalid_argument("element_order: zero");
  u64 o = q_ - 1;
  for (u64 l : prime_factors(o)) {
    while (o % l == 0 && pow(a, o / l) == 1) o /= l;
  }
  return o;
}

Elem FieldCtx::generator() const {
  if (log_.empty()) throw std::logic_error("generator: field has no precomputed tables");
  return gen_;
}

std::vector<u64> FieldCtx::coeffs(Elem a) const {
  std::vector<u64> out(n_, 0);
  for (unsigned k = 0; k < n_ && a; ++k) {
    out[k] = a % p_;
    a /= p_;
  }
  return out;
}

Elem FieldCtx::from_coeffs(const std::vector<u64>& c) const {
  if (c.size() > n_) throw std::invalid_argument("from_coeffs: too many coefficients");
  Elem out = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] >= p_) throw std::invalid_argument("from_coeffs: coefficient out of range");
    out = out * p_ + c[k];
  }
  return out;
}

bool is_nth_power(const FieldCtx& f, Elem x, u64 n) {
  if (n == 0) throw std::invalid_argument("is_nth_power: n must be positive");
  if (x == 0) return true;
  u64 d = std::gcd(n, f.card() - 1);
  return f.pow(x, (f.card() - 1) / d) == 1;
}

std::vector<Elem> cube_roots_of_unity(const FieldCtx& f) {
  std::vector<Elem> out;
  if (f.has_tables()) {
    u64 order = f.card() - 1;
    u64 d = std::gcd<u64>(3, order);
    for (u64 k = 0; k < d; ++k) out.push_back(f.pow(f.generator(), k * (order / d)));
  } else {
    for (Elem x = 1; x < f.card() && out.size() < 3; ++x) {
      if (f.mul(f.mul(x, x), x) == 1) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> power_table(const FieldCtx& f, u64 e) {
  std::vector<Elem> out(f.card());
  out[0] = f.pow(0, e);
  for (Elem x = 1; x < f.card(); ++x) out[x] = f.pow(x, e);
  return out;
}

std::vector<std::vector<Elem>> kernel_basis(const FieldCtx& f,
                                            std::vector<std::vector<Elem>> mat) {
  const std::size_t rows = mat.size();
  const std::size_t cols = rows ? mat[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && mat[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(mat[rank], mat[piv]);
    Elem s = f.inv(mat[rank][c]);
    for (std::size_t j = c; j < cols; ++j) mat[rank][j] = f.mul(s, mat[rank][j]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || mat[r][c] == 0) continue;
      Elem factor = mat[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        mat[r][j] = f.sub(mat[r][j], f.mul(factor, mat[rank][j]));
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Elem> v(cols, 0);
    v[free_c] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      v[pivot_col[r]] = f.neg(mat[r][free_c]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fermat
