#pragma once

// K = Q[s]/(m) for a monic irreducible quintic m, with elements stored as
// rational coordinates on the power basis 1, a, a^2, a^3, a^4.

#include <array>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dp5/arith.hpp"
#include "dp5/modular.hpp"

namespace dp5 {

inline constexpr std::size_t kFieldDegree = 5;

class QuinticFieldSpec {
 public:
  /// `coefficients` are leading-first: {1, c4, c3, c2, c1, c0}.
  explicit QuinticFieldSpec(std::array<Integer, 6> coefficients, std::uint64_t search_limit = 20000)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_[0] != 1) throw DomainError("invalid-minpoly", "minimal polynomial must be monic of degree 5");
    for (std::uint64_t p = 3; p <= search_limit; p = next_prime(p + 1)) {
      if (modp::factor_pattern(std::span<const Integer>(coeffs_), p).irreducible(5)) {
        inert_prime_ = p;
        return;
      }
    }
    throw DomainError("invalid-minpoly", "no irreducible reduction found; polynomial looks reducible over Q");
  }

  const std::array<Integer, 6>& coefficients() const { return coeffs_; }

  /// Coefficient of s^k in m (k = 0..5).
  const Integer& coefficient_of_degree(std::size_t k) const { return coeffs_[5 - k]; }

  /// Smallest prime >= 3 modulo which m is irreducible; certifies
  /// irreducibility over Q and serves as the lifting prime.
  std::uint64_t inert_prime() const { return inert_prime_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < 6; ++i) out += (i ? "," : "") + coeffs_[i].get_str();
    return out;
  }

  friend bool operator==(const QuinticFieldSpec& a, const QuinticFieldSpec& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::array<Integer, 6> coeffs_;
  std::uint64_t inert_prime_ = 0;
};

using FieldPtr = std::shared_ptr<const QuinticFieldSpec>;

inline FieldPtr make_quintic_field(const std::array<Integer, 6>& coefficients) {
  return std::make_shared<const QuinticFieldSpec>(coefficients);
}

inline FieldPtr make_quintic_field(std::initializer_list<long> coefficients) {
  if (coefficients.size() != 6) throw UsageError("a quintic needs 6 coefficients");
  std::array<Integer, 6> c;
  std::size_t i = 0;
  for (long v : coefficients) c[i++] = v;
  return make_quintic_field(c);
}

namespace detail {

using QPoly = std::vector<Rational>;  // low degree first

inline void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational k = a.back() / b.back();
    q[shift] = k;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= k * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace detail

class NumberFieldElement {
 public:
  using Coords = std::array<Rational, kFieldDegree>;

  NumberFieldElement() = default;
  explicit NumberFieldElement(FieldPtr field) : field_(std::move(field)) {}
  NumberFieldElement(FieldPtr field, Coords coords) : field_(std::move(field)), c_(std::move(coords)) {}

  static NumberFieldElement from_rational(FieldPtr field, const Rational& r) {
    NumberFieldElement e(std::move(field));
    e.c_[0] = r;
    return e;
  }

  /// The class of s, i.e. the generator alpha.
  static NumberFieldElement generator(FieldPtr field) {
    NumberFieldElement e(std::move(field));
    e.c_[1] = 1;
    return e;
  }

  const FieldPtr& field() const { return field_; }
  const Coords& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < kFieldDegree; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  /// Largest power of alpha with a nonzero coordinate (-1 for zero).
  int degree() const {
    for (int i = kFieldDegree - 1; i >= 0; --i)
      if (c_[i] != 0) return i;
    return -1;
  }

  NumberFieldElement operator+(const NumberFieldElement& o) const {
    NumberFieldElement r = with_field(o);
    for (std::size_t i = 0; i < kFieldDegree; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }

  NumberFieldElement operator-(const NumberFieldElement& o) const {
    NumberFieldElement r = with_field(o);
    for (std::size_t i = 0; i < kFieldDegree; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }

  NumberFieldElement operator-() const {
    NumberFieldElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  NumberFieldElement operator*(const NumberFieldElement& o) const {
    NumberFieldElement r = with_field(o);
    std::array<Rational, 2 * kFieldDegree - 1> prod;
    for (std::size_t i = 0; i < kFieldDegree; ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < kFieldDegree; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    const auto& f = *r.field_;
    // s^5 = -(c4 s^4 + ... + c0)
    for (std::size_t k = prod.size() - 1; k >= kFieldDegree; --k) {
      if (prod[k] == 0) continue;
      Rational lead = prod[k];
      prod[k] = 0;
      for (std::size_t j = 0; j < kFieldDegree; ++j) prod[k - kFieldDegree + j] -= lead * f.coefficient_of_degree(j);
    }
    for (std::size_t i = 0; i < kFieldDegree; ++i) r.c_[i] = prod[i];
    return r;
  }

  NumberFieldElement operator*(const Rational& k) const {
    NumberFieldElement r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
  }
  NumberFieldElement operator*(const Integer& k) const { return *this * Rational(k); }
  NumberFieldElement operator*(long k) const { return *this * Rational(k); }

  NumberFieldElement inverse() const {
    if (is_zero()) throw DomainError("division-by-zero", "inverse of zero in K");
    const auto& f = *field_;
    detail::QPoly m(kFieldDegree + 1);
    for (std::size_t k = 0; k <= kFieldDegree; ++k) m[k] = f.coefficient_of_degree(k);
    detail::QPoly a(c_.begin(), c_.end());
    detail::trim(a);
    // Extended Euclid: track s with s*a = r (mod m).
    detail::QPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
      auto [q, rem] = detail::divmod(r0, r1);
      detail::QPoly s = detail::sub(s0, detail::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.size() != 1) throw DomainError("not-a-field", "element shares a factor with the minimal polynomial");
    NumberFieldElement out(field_);
    for (std::size_t i = 0; i < s0.size() && i < kFieldDegree; ++i) out.c_[i] = s0[i] / r0[0];
    return out;
  }

  NumberFieldElement operator/(const NumberFieldElement& o) const { return *this * o.inverse(); }

  NumberFieldElement pow(unsigned n) const {
    NumberFieldElement r = from_rational(field_, 1), b = *this;
    while (n) {
      if (n & 1u) r = r * b;
      n >>= 1u;
      if (n) b = b * b;
    }
    return r;
  }

  /// Image under the field endomorphism sending alpha to `alpha_image`.
  NumberFieldElement substitute_generator(const NumberFieldElement& alpha_image) const {
    NumberFieldElement r(field_), power = from_rational(field_, 1);
    for (std::size_t i = 0; i < kFieldDegree; ++i) {
      if (c_[i] != 0) r = r + power * c_[i];
      if (i + 1 < kFieldDegree) power = power * alpha_image;
    }
    return r;
  }

  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) { return a.c_ == b.c_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kFieldDegree; ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].get_str() + ")";
      if (i == 1) out += "*a";
      if (i > 1) out += "*a^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const NumberFieldElement& e) { return os << e.to_string(); }

 private:
  NumberFieldElement with_field(const NumberFieldElement& o) const {
    const FieldPtr& f = field_ ? field_ : o.field_;
    if (field_ && o.field_ && field_ != o.field_ && !(*field_ == *o.field_))
      throw UsageError("elements of different number fields");
    return NumberFieldElement(f);
  }

  FieldPtr field_;
  Coords c_{};
};

inline bool coefficient_is_zero(const NumberFieldElement& c) { return c.is_zero(); }

/// m(x) evaluated in K.
inline NumberFieldElement evaluate_minpoly(const NumberFieldElement& x) {
  const auto& f = *x.field();
  NumberFieldElement acc(x.field());
  for (std::size_t i = 0; i <= kFieldDegree; ++i)
    acc = acc * x + NumberFieldElement::from_rational(x.field(), f.coefficients()[i]);
  return acc;
}

}  // namespace dp5
