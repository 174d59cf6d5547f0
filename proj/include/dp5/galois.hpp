#pragma once

// Recovery of the Galois conjugates of the generator of a cyclic quintic
// field: Frobenius at an inert prime, Newton lifting over Z/p^k, rational
// reconstruction, exact verification.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "dp5/int_matrix.hpp"
#include "dp5/modular.hpp"
#include "dp5/number_field.hpp"

namespace dp5 {

struct GaloisOptions {
  unsigned start_exponent = 32;        // first reconstruction attempt at p^32
  std::size_t precision_cap_bits = 1u << 20;
  std::uint64_t prefilter_prime_bound = 200;
};

struct GaloisConjugates {
  /// beta[j-1] = sigma^j(alpha), j = 1..4.
  std::array<NumberFieldElement, 4> beta;
  std::uint64_t lifting_prime = 0;
  unsigned precision_exponent = 0;

  NumberFieldElement apply_sigma(const NumberFieldElement& x, unsigned times = 1) const {
    NumberFieldElement r = x;
    for (unsigned i = 0; i < times % 5; ++i) r = r.substitute_generator(beta[0]);
    return r;
  }

  /// alpha_0 = alpha, alpha_j = beta_j.
  NumberFieldElement root(unsigned j) const {
    j %= 5;
    return j == 0 ? NumberFieldElement::generator(beta[0].field()) : beta[j - 1];
  }
};

/// Power sums p_0..p_{count-1} of the roots of m (Newton identities).
inline std::vector<Integer> power_sums(const QuinticFieldSpec& f, std::size_t count) {
  std::vector<Integer> p(count);
  if (count) p[0] = 5;
  for (std::size_t k = 1; k < count; ++k) {
    Integer acc = 0;
    for (std::size_t j = 1; j <= std::min<std::size_t>(k - 1, 5); ++j) acc += f.coefficients()[j] * p[k - j];
    if (k <= 5) acc += static_cast<long>(k) * f.coefficients()[k];
    p[k] = -acc;
  }
  return p;
}

/// disc(m) = det of the Hankel matrix of power sums.
inline Integer discriminant(const QuinticFieldSpec& f) {
  auto p = power_sums(f, 9);
  IntMatrix h(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) h(i, j) = p[i + j];
  return determinant(h);
}

/// Necessary conditions for a cyclic quintic: square discriminant and every
/// unramified small prime either inert or totally split.
inline bool passes_cyclic_prefilter(const QuinticFieldSpec& f, std::uint64_t prime_bound = 200) {
  Integer disc = discriminant(f);
  if (disc <= 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return false;
  for (std::uint64_t p = 2; p <= prime_bound; p = next_prime(p + 1)) {
    if (mod_u64(disc, p) == 0) continue;
    auto pat = modp::factor_pattern(std::span<const Integer>(f.coefficients()), p);
    if (!pat.irreducible(5) && !pat.splits_completely(5)) return false;
  }
  return true;
}

namespace detail {

/// (Z/M)[s]/(m), coordinates low degree first.
struct LiftRing {
  const QuinticFieldSpec* f;
  Integer modulus;
  using Elt = std::array<Integer, 5>;

  Elt reduce(std::array<Integer, 9> prod) const {
    for (std::size_t k = 8; k >= 5; --k) {
      if (prod[k] == 0) continue;
      Integer lead = prod[k];
      prod[k] = 0;
      for (std::size_t j = 0; j < 5; ++j) prod[k - 5 + j] -= lead * f->coefficient_of_degree(j);
    }
    Elt out;
    for (std::size_t i = 0; i < 5; ++i) out[i] = mod_floor(prod[i], modulus);
    return out;
  }

  Elt mul(const Elt& a, const Elt& b) const {
    std::array<Integer, 9> prod;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) prod[i + j] += a[i] * b[j];
    return reduce(prod);
  }

  Elt sub(const Elt& a, const Elt& b) const {
    Elt r;
    for (std::size_t i = 0; i < 5; ++i) r[i] = mod_floor(a[i] - b[i], modulus);
    return r;
  }

  Elt constant(const Integer& c) const {
    Elt r;
    r[0] = mod_floor(c, modulus);
    return r;
  }

  /// Horner evaluation of integer coefficients given leading-first.
  Elt horner(std::span<const Integer> coeffs, const Elt& x) const {
    Elt acc{};
    for (const auto& c : coeffs) {
      acc = mul(acc, x);
      acc[0] = mod_floor(acc[0] + c, modulus);
    }
    return acc;
  }
};

inline modp::Poly to_modp(const LiftRing::Elt& e, std::uint64_t p) {
  modp::Poly r(5);
  for (std::size_t i = 0; i < 5; ++i) r[i] = mod_u64(e[i], p);
  modp::trim(r);
  return r;
}

inline LiftRing::Elt from_modp(const modp::Poly& a) {
  LiftRing::Elt r;
  for (std::size_t i = 0; i < a.size() && i < 5; ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

/// n/d with |n|, d <= bound and n = a*d mod M.
inline std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& modulus) {
  Integer bound;
  Integer half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = modulus, r1 = mod_floor(a, modulus), s0 = 0, s1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1 == 0 || abs(s1) > bound || gcd(r1, s1) != 1) return std::nullopt;
  return make_rational(r1, s1);
}

inline std::tuple<int, std::size_t, NumberFieldElement::Coords> height_key(const NumberFieldElement& e) {
  std::size_t bits = 0;
  for (const auto& c : e.coords())
    bits += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
  return {e.degree(), bits, e.coords()};
}

}  // namespace detail

/// Lifts the Frobenius conjugate s^p at the inert prime, then recovers the
/// rest by composition. sigma is the conjugate of least (degree, height,
/// coordinates); beta_j = sigma^j(alpha).
inline GaloisConjugates galois_conjugates(const FieldPtr& field, const GaloisOptions& opts = {}) {
  const QuinticFieldSpec& f = *field;
  if (!passes_cyclic_prefilter(f, opts.prefilter_prime_bound))
    throw DomainError("not-cyclic", "discriminant or splitting pattern rules out a cyclic quintic");

  const std::uint64_t p = f.inert_prime();
  const std::span<const Integer> mcoef(f.coefficients());
  std::vector<Integer> dcoef;  // m' leading-first
  for (std::size_t i = 0; i < 5; ++i) dcoef.push_back(f.coefficients()[i] * static_cast<long>(5 - i));

  modp::Poly mbar = modp::from_leading_first(mcoef, p);
  modp::Poly frob = modp::pow_mod(modp::Poly{0, 1}, Integer(static_cast<unsigned long>(p)), mbar, p);

  detail::LiftRing ring{&f, Integer(static_cast<unsigned long>(p))};
  detail::LiftRing::Elt beta = detail::from_modp(frob);
  detail::LiftRing::Elt dval = ring.horner(dcoef, beta);
  detail::LiftRing::Elt inv = detail::from_modp(modp::inverse_mod(detail::to_modp(dval, p), mbar, p));

  const Integer pz(static_cast<unsigned long>(p));
  unsigned k = 1;
  std::optional<NumberFieldElement> found;
  while (!found) {
    k *= 2;
    ring.modulus = pow_int(pz, k);
    if (mpz_sizeinbase(ring.modulus.get_mpz_t(), 2) > opts.precision_cap_bits)
      throw DomainError("not-cyclic", "precision cap reached without an exact conjugate");
    beta = ring.sub(beta, ring.mul(ring.horner(mcoef, beta), inv));
    dval = ring.horner(dcoef, beta);
    inv = ring.mul(inv, ring.sub(ring.constant(2), ring.mul(dval, inv)));
    if (k < opts.start_exponent) continue;

    NumberFieldElement::Coords coords;
    bool ok = true;
    for (std::size_t i = 0; i < 5 && ok; ++i) {
      auto r = detail::rational_reconstruction(beta[i], ring.modulus);
      if (r) coords[i] = *r;
      ok = r.has_value();
    }
    if (!ok) continue;
    NumberFieldElement candidate(field, coords);
    if (evaluate_minpoly(candidate).is_zero()) found = candidate;
  }

  const NumberFieldElement alpha = NumberFieldElement::generator(field);
  std::vector<NumberFieldElement> roots;
  NumberFieldElement cur = *found;
  while (!(cur == alpha)) {
    if (roots.size() == 4 || !evaluate_minpoly(cur).is_zero())
      throw DomainError("not-cyclic", "Frobenius conjugate does not generate a cyclic group of order 5");
    roots.push_back(cur);
    cur = cur.substitute_generator(*found);
  }
  if (roots.size() != 4) throw DomainError("not-cyclic", "Frobenius conjugate has order below 5");

  auto sigma = *std::min_element(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return detail::height_key(a) < detail::height_key(b);
  });
  GaloisConjugates out;
  out.lifting_prime = p;
  out.precision_exponent = k;
  cur = sigma;
  for (std::size_t j = 0; j < 4; ++j) {
    out.beta[j] = cur;
    cur = cur.substitute_generator(sigma);
  }
  if (!(cur == alpha)) throw DomainError("not-cyclic", "sigma^5 differs from the identity");
  return out;
}

}  // namespace dp5
