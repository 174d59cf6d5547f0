#pragma once

// Integer and rational scalars plus the small vector helpers shared by the
// lattice, field and model code.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dp5/errors.hpp"

namespace dp5 {

using Integer = mpz_class;
/// Always canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("division-by-zero", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least non-negative residue.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
  Integer r = mod_floor(a, Integer(static_cast<unsigned long>(m)));
  return r.get_ui();
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// gcd of all entries (0 for the zero vector).
inline Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline bool is_primitive(std::span<const Integer> v) { return content(v) == 1; }

/// Divides by the content and makes the first nonzero entry positive.
inline std::vector<Integer> primitive_part(std::span<const Integer> v) {
  std::vector<Integer> out(v.begin(), v.end());
  Integer g = content(v);
  if (g == 0) return out;
  for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

/// Clears denominators and returns the primitive integer vector on the same
/// rational line (first nonzero entry positive).
inline std::vector<Integer> primitive_from_rationals(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& x : v) ints.push_back(x.get_num() * (den / x.get_den()));
  return primitive_part(ints);
}

/// True when the two vectors span a line (or one of them is zero).
inline bool proportional(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

inline Integer parse_integer(const std::string& s) {
  Integer v;
  std::string t = s;
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  if (t.empty() || v.set_str(t, 10) != 0)
    throw UsageError("not an integer: '" + s + "'");
  return v;
}

}  // namespace dp5
