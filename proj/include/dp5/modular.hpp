#pragma once

// Dense univariate polynomials over a word-size prime field. Used for the
// splitting behaviour of a minimal polynomial modulo p.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "dp5/arith.hpp"

namespace dp5::modp {

using u64 = std::uint64_t;
/// Coefficients low degree first, no trailing zeros (zero polynomial = {}).
using Poly = std::vector<u64>;

inline u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

inline u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1u;
  }
  return r;
}

inline u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw DomainError("division-by-zero", "inverse of 0 mod p");
  return pow_mod(a, p - 2, p);
}

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

/// From integer coefficients given leading-first.
inline Poly from_leading_first(std::span<const Integer> coeffs, u64 p) {
  Poly f(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) f[coeffs.size() - 1 - i] = mod_u64(coeffs[i], p);
  trim(f);
  return f;
}

inline Poly sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

/// Returns (quotient, remainder).
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
  if (b.empty()) throw DomainError("division-by-zero", "polynomial division by zero");
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    u64 k = mul_mod(a.back(), lead_inv, p);
    q[shift] = k;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mul_mod(k, b[i], p)) % p;
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline Poly mod(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

inline Poly make_monic(Poly f, u64 p) {
  if (f.empty()) return f;
  u64 k = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, k, p);
  return f;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

/// Inverse of a modulo f (f and a coprime).
inline Poly inverse_mod(const Poly& a, const Poly& f, u64 p) {
  Poly r0 = f, r1 = mod(a, f, p), s0 = {}, s1 = {1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw DomainError("not-invertible", "polynomial is not a unit modulo f");
  u64 k = inv_mod(r0[0], p);
  for (auto& c : s0) c = mul_mod(c, k, p);
  trim(s0);
  return s0;
}

inline Poly derivative(const Poly& f, u64 p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul_mod(f[i], i % p, p));
  trim(d);
  return d;
}

/// base^e mod f.
inline Poly pow_mod(Poly base, Integer e, const Poly& f, u64 p) {
  Poly r = {1};
  base = mod(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base, p), f, p);
    e >>= 1;
    if (e > 0) base = mod(mul(base, base, p), f, p);
  }
  return r;
}

struct FactorPattern {
  bool separable = false;
  /// Degrees of the irreducible factors of the squarefree part (sorted);
  /// for separable f these are exactly the factor degrees.
  std::vector<unsigned> degrees;
  unsigned distinct_roots = 0;

  bool irreducible(unsigned n) const { return separable && degrees.size() == 1 && degrees[0] == n; }
  bool splits_completely(unsigned n) const {
    return separable && degrees.size() == n &&
           std::all_of(degrees.begin(), degrees.end(), [](unsigned d) { return d == 1; });
  }
};

/// Distinct-degree factorisation of the squarefree part of f (leading
/// coefficient nonzero mod p assumed).
inline FactorPattern factor_pattern(const Poly& f_in, u64 p) {
  FactorPattern out;
  Poly f = make_monic(f_in, p);
  Poly x = {0, 1};
  Poly xp_full = pow_mod(x, Integer(static_cast<unsigned long>(p)), f, p);
  out.distinct_roots = static_cast<unsigned>(std::max(0L, degree(gcd(f, sub(xp_full, x, p), p))));
  Poly df = derivative(f, p);
  if (df.empty()) return out;  // f is a p-th power; no further splitting
  Poly g = gcd(f, df, p);
  out.separable = degree(g) == 0;
  if (!out.separable) f = divmod(f, g, p).first;  // squarefree part (deg f < p case)
  Poly xp = x;
  for (unsigned d = 1; degree(f) > 0; ++d) {
    if (2 * d > static_cast<unsigned>(degree(f))) {
      out.degrees.push_back(static_cast<unsigned>(degree(f)));
      break;
    }
    xp = pow_mod(xp, Integer(static_cast<unsigned long>(p)), f, p);
    Poly h = gcd(f, sub(xp, x, p), p);
    for (long k = 0; k < degree(h) / static_cast<long>(d); ++k) out.degrees.push_back(d);
    if (degree(h) > 0) {
      f = divmod(f, h, p).first;
      xp = mod(xp, f, p);
    }
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

inline FactorPattern factor_pattern(std::span<const Integer> leading_first, u64 p) {
  return factor_pattern(from_leading_first(leading_first, p), p);
}

}  // namespace dp5::modp
