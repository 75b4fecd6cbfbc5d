#include "fermat/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Inverse of a square matrix over Z_p; rows/cols are small (at most 3 * degree).
std::vector<std::vector<u64>> modp_inverse(std::vector<std::vector<u64>> m, u64 p) {
  const std::size_t n = m.size();
  std::vector<std::vector<u64>> inv(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  auto scalar_inv = [p](u64 a) {
    u64 acc = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) acc = static_cast<u128>(acc) * base % p;
      base = static_cast<u128>(base) * base % p;
      e >>= 1;
    }
    return acc;
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("modp_inverse: singular matrix");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    u64 s = scalar_inv(m[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = static_cast<u128>(m[c][j]) * s % p;
      inv[c][j] = static_cast<u128>(inv[c][j]) * s % p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      u64 f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] = (m[r][j] + p - static_cast<u128>(f) * m[c][j] % p) % p;
        inv[r][j] = (inv[r][j] + p - static_cast<u128>(f) * inv[c][j] % p) % p;
      }
    }
  }
  return inv;
}

}  // namespace

TowerPtr TowerCtx::build(const PrimePower& pp, unsigned ext) {
  if (ext < 1 || ext > 4) throw std::invalid_argument("build_tower: extension degree must be 1..4");
  u128 topcard = 1;
  for (unsigned k = 0; k < pp.r * ext; ++k) {
    topcard *= pp.p;
    if (topcard > kMaxCardinality) throw std::overflow_error("build_tower: top cardinality exceeds the support ceiling");
  }

  auto t = std::shared_ptr<TowerCtx>(new TowerCtx());
  t->ext_ = ext;
  t->q_ = pp.q;
  t->base_ = FieldCtx::build(pp.p, pp.r);
  if (ext == 1) {
    t->top_ = t->base_;
    t->embed_pows_.assign(1, 1);
    if (pp.r > 1) {
      t->embed_pows_.resize(pp.r);
      Elem g = t->base_->from_coeffs(std::vector<u64>{0, 1});
      for (unsigned k = 1; k < pp.r; ++k) t->embed_pows_[k] = t->base_->mul(t->embed_pows_[k - 1], g);
    }
    return t;
  }
  t->top_ = FieldCtx::build(pp.p, pp.r * ext);

  // Least root of the base modulus inside the top field.
  const auto& f = t->base_->modulus();
  const FieldCtx& top = *t->top_;
  Elem root = 0;
  bool found = false;
  for (Elem x = 0; x < top.card(); ++x) {
    Elem acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = top.add(top.mul(acc, x), f[k]);
    if (acc == 0) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("build_tower: base modulus has no root in the top field");

  t->embed_pows_.assign(pp.r, 1);
  for (unsigned k = 1; k < pp.r; ++k) t->embed_pows_[k] = top.mul(t->embed_pows_[k - 1], root);
  if (pp.q <= kTableLimit) {
    t->embed_full_.resize(pp.q);
    for (Elem a = 0; a < pp.q; ++a) {
      Elem acc = 0;
      u64 x = a;
      for (unsigned k = 0; k < pp.r && x; ++k) {
        u64 c = x % pp.p;
        x /= pp.p;
        if (c) acc = top.add(acc, top.mul(c, t->embed_pows_[k]));
      }
      t->embed_full_[a] = acc;
    }
  }
  return t;
}

Elem TowerCtx::embed(Elem a) const {
  if (a >= base_->card()) throw std::invalid_argument("embed: not a base element");
  if (ext_ == 1) return a;
  if (!embed_full_.empty()) return embed_full_[a];
  Elem acc = 0;
  u64 x = a;
  const u64 p = base_->characteristic();
  for (unsigned k = 0; x; ++k) {
    u64 c = x % p;
    x /= p;
    if (c) acc = top_->add(acc, top_->mul(c, embed_pows_[k]));
  }
  return acc;
}

std::vector<Elem> TowerCtx::embedded_units() const {
  std::vector<Elem> out;
  out.reserve(q_ - 1);
  for (Elem a = 1; a < q_; ++a) out.push_back(embed(a));
  std::sort(out.begin(), out.end());
  return out;
}

Elem TowerCtx::t_map(Elem x) const {
  if (ext_ != 3) throw std::logic_error("t_map: requires a cubic tower");
  Elem y = frobenius_q(x);
  Elem z = frobenius_q(y);
  return top_->add(top_->add(z, y), x);
}

std::vector<Elem> TowerCtx::t_kernel() const {
  if (ext_ != 3) throw std::logic_error("t_kernel: requires a cubic tower");
  const FieldCtx& top = *top_;
  const FieldCtx& base = *base_;
  const u64 p = base.characteristic();
  const unsigned r = base.degree();
  const unsigned dim = 3 * r;

  // {beta^k * tau^j} is a Z_p basis of the top field, where beta generates the
  // embedded base field and tau is the top generator; tau has degree 3 over
  // the embedded GF(q), so {1, tau, tau^2} is a GF(q)-basis.
  Elem tau = top.from_coeffs(std::vector<u64>{0, 1});
  std::vector<Elem> gf_q_basis(3);
  gf_q_basis[0] = 1;
  gf_q_basis[1] = tau;
  gf_q_basis[2] = top.mul(tau, tau);

  std::vector<std::vector<u64>> m(dim, std::vector<u64>(dim, 0));
  for (unsigned j = 0; j < 3; ++j) {
    for (unsigned k = 0; k < r; ++k) {
      Elem b = top.mul(gf_q_basis[j], embed_pows_[k]);
      auto digits = top.coeffs(b);
      for (unsigned row = 0; row < dim; ++row) m[row][j * r + k] = digits[row];
    }
  }
  auto minv = modp_inverse(std::move(m), p);

  // GF(q)-coordinates of a top element with respect to {1, tau, tau^2}.
  auto coords = [&](Elem y) {
    auto digits = top.coeffs(y);
    std::vector<Elem> out(3, 0);
    for (unsigned j = 0; j < 3; ++j) {
      std::vector<u64> c(r, 0);
      for (unsigned k = 0; k < r; ++k) {
        u128 acc = 0;
        for (unsigned col = 0; col < dim; ++col) acc += static_cast<u128>(minv[j * r + k][col]) * digits[col];
        c[k] = static_cast<u64>(acc % p);
      }
      out[j] = base.from_coeffs(c);
    }
    return out;
  };

  // 3x3 matrix of the map over GF(q): column j = coords(T(tau^j)).
  std::vector<std::vector<Elem>> tmat(3, std::vector<Elem>(3, 0));
  for (unsigned j = 0; j < 3; ++j) {
    auto col = coords(t_map(gf_q_basis[j]));
    for (unsigned i = 0; i < 3; ++i) tmat[i][j] = col[i];
  }
  auto basis = kernel_basis(base, std::move(tmat));

  // All GF(q)-combinations of the kernel basis, mapped back to top elements.
  std::vector<Elem> out;
  const std::size_t dim_k = basis.size();
  std::vector<Elem> scalars(dim_k, 0);
  while (true) {
    Elem acc_coords[3] = {0, 0, 0};
    for (std::size_t b = 0; b < dim_k; ++b) {
      if (scalars[b] == 0) continue;
      for (unsigned j = 0; j < 3; ++j) {
        acc_coords[j] = base.add(acc_coords[j], base.mul(scalars[b], basis[b][j]));
      }
    }
    Elem y = 0;
    for (unsigned j = 0; j < 3; ++j) {
      if (acc_coords[j]) y = top.add(y, top.mul(embed(acc_coords[j]), gf_q_basis[j]));
    }
    out.push_back(y);
    std::size_t b = 0;
    while (b < dim_k) {
      if (++scalars[b] < base.card()) break;
      scalars[b] = 0;
      ++b;
    }
    if (b == dim_k) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fermat
