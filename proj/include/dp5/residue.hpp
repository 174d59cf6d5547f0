#pragma once

// Units modulo q (a prime or 25) up to fifth powers. Classes are indexed with
// the identity class first, the rest by their least member.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dp5/arith.hpp"
#include "dp5/modular.hpp"

namespace dp5 {

using ClassMask = std::uint32_t;

class ResidueClassGroup {
 public:
  using u64 = std::uint64_t;

  explicit ResidueClassGroup(u64 modulus) : q_(modulus) {
    if (!(modulus == 25 || (modulus <= 100000 && is_prime(modulus))))
      throw UsageError("unsupported modulus " + std::to_string(modulus) + " (expected a prime or 25)");
    class_of_.assign(q_, -1);
    inverse_.assign(q_, 0);
    for (u64 a = 1; a < q_; ++a) {
      if (std::gcd(a, q_) != 1) continue;
      units_.push_back(a);
      u64 f = 1;
      for (int i = 0; i < 5; ++i) f = f * a % q_;
      fifth_powers_.push_back(f);
      for (u64 b = 1; b < q_; ++b)
        if (a * b % q_ == 1) inverse_[a] = b;
    }
    std::sort(fifth_powers_.begin(), fifth_powers_.end());
    fifth_powers_.erase(std::unique(fifth_powers_.begin(), fifth_powers_.end()), fifth_powers_.end());
    for (u64 a : units_) {
      if (class_of_[a] >= 0) continue;
      std::vector<u64> coset;
      for (u64 f : fifth_powers_) coset.push_back(a * f % q_);
      std::sort(coset.begin(), coset.end());
      for (u64 c : coset) class_of_[c] = static_cast<int>(classes_.size());
      classes_.push_back(std::move(coset));
    }
    if (classes_.size() > 32) throw UsageError("too many classes for a mask");
  }

  u64 modulus() const { return q_; }
  const std::vector<u64>& units() const { return units_; }
  const std::vector<u64>& fifth_powers() const { return fifth_powers_; }
  const std::vector<std::vector<u64>>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  ClassMask full_mask() const { return classes_.size() == 32 ? ~0u : (1u << classes_.size()) - 1; }

  bool is_unit(u64 a) const { return class_of_[a % q_] >= 0; }
  /// Class index of a unit; identity class is 0.
  std::size_t class_of(u64 a) const {
    int c = class_of_[a % q_];
    if (c < 0) throw DomainError("not-a-unit", std::to_string(a) + " is not a unit mod " + std::to_string(q_));
    return static_cast<std::size_t>(c);
  }
  u64 inverse(u64 a) const {
    if (!is_unit(a)) throw DomainError("not-a-unit", std::to_string(a) + " is not invertible");
    return inverse_[a % q_];
  }

  /// Image of a class set under multiplication by the unit `k`.
  ClassMask translate(ClassMask mask, u64 k) const {
    ClassMask out = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (mask >> c & 1u) out |= 1u << class_of(classes_[c].front() * k % q_);
    return out;
  }

 private:
  u64 q_;
  std::vector<u64> units_;
  std::vector<u64> fifth_powers_;
  std::vector<std::vector<u64>> classes_;
  std::vector<int> class_of_;
  std::vector<u64> inverse_;
};

inline ResidueClassGroup fifth_power_classes(std::uint64_t q) { return ResidueClassGroup(q); }

struct InvariantImage {
  std::uint64_t prime = 0;
  std::uint64_t modulus = 0;
  ClassMask mask = 0;
  /// Unit values of h / l1 seen on the chart, when the image was computed
  /// from a finite value list (empty for the full-image shortcut).
  std::vector<std::uint64_t> values;

  bool contains_zero() const { return mask & 1u; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask)); }

  friend bool operator==(const InvariantImage& a, const InvariantImage& b) {
    return a.prime == b.prime && a.modulus == b.modulus && a.mask == b.mask;
  }
};

}  // namespace dp5
