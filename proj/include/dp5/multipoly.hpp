#pragma once

// Sparse multivariate polynomials keyed by exponent vector, generic in the
// coefficient domain. Terms are kept in graded-lexicographic order, largest
// first; zero coefficients are never stored.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dp5/arith.hpp"

namespace dp5 {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded-lex "greater": higher total degree first, then lexicographically
/// larger exponent vector (so x > y > z for variables in declaration order).
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// All exponent vectors of `degree` in `nvars` variables, largest first.
inline std::vector<Exponent> monomial_basis(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (nvars == 0) return {Exponent{}};
  rec(0, degree);
  return out;
}

inline bool coefficient_is_zero(const Integer& c) { return c == 0; }
inline bool coefficient_is_zero(const Rational& c) { return c == 0; }

template <class Coeff>
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Coeff, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Coeff& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }

  static MultiPoly variable(std::vector<std::string> vars, std::size_t index, const Coeff& one) {
    MultiPoly p(std::move(vars));
    Exponent e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.add_term(e, one);
    return p;
  }

  /// Builds sum_i coeffs[i] * basis[i].
  static MultiPoly from_coefficients(std::vector<std::string> vars, const std::vector<Exponent>& basis,
                                     const std::vector<Coeff>& coeffs) {
    if (basis.size() != coeffs.size()) throw UsageError("coefficient/basis length mismatch");
    MultiPoly p(std::move(vars));
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Coeff& c) {
    if (e.size() != vars_.size()) throw UsageError("exponent length does not match variable count");
    if (coefficient_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (coefficient_is_zero(it->second)) terms_.erase(it);
  }

  /// Coefficient of `e`, or `zero` when absent.
  Coeff coefficient(const Exponent& e, const Coeff& zero) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
  }

  std::vector<Coeff> coefficients_in(const std::vector<Exponent>& basis, const Coeff& zero) const {
    std::vector<Coeff> out;
    out.reserve(basis.size());
    for (const auto& e : basis) out.push_back(coefficient(e, zero));
    std::size_t found = 0;
    for (const auto& e : basis) found += terms_.count(e);
    if (found != terms_.size()) throw DomainError("basis-mismatch", "polynomial has terms outside the basis");
    return out;
  }

  bool is_homogeneous(unsigned degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return total_degree(t.first) == degree; });
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

  MultiPoly operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(vars_);
    Exponent e(vars_.size());
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  MultiPoly scaled(const Coeff& k) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  MultiPoly pow(unsigned n, const Coeff& one) const {
    MultiPoly r = constant(vars_, one), base = *this;
    while (n) {
      if (n & 1u) r = r * base;
      n >>= 1u;
      if (n) base = base * base;
    }
    return r;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(var) == 0) continue;
      Exponent d = e;
      d[var] -= 1;
      r.add_term(d, c * static_cast<long>(e[var]));
    }
    return r;
  }

  /// Evaluates at a point whose coordinates live in a ring `T` that accepts
  /// multiplication by `Coeff`.
  template <class T>
  T evaluate(const std::vector<T>& point, const T& zero, const T& one) const {
    if (point.size() != vars_.size()) throw UsageError("evaluation point has the wrong dimension");
    T sum = zero;
    for (const auto& [e, c] : terms_) {
      T term = one;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) term = term * point[i];
      sum = sum + term * c;
    }
    return sum;
  }

  /// Substitutes a polynomial for every variable; the images share one
  /// variable list.
  MultiPoly substitute(const std::vector<MultiPoly>& images, const Coeff& one) const {
    if (images.size() != vars_.size()) throw UsageError("substitution needs one image per variable");
    if (images.empty()) return *this;
    const auto& out_vars = images.front().vars_;
    MultiPoly r(out_vars);
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (const auto& [e, c] : terms_) {
      MultiPoly term = constant(out_vars, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(out_vars, one));
        while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
        if (e[i]) term = term * cache[e[i]];
      }
      r = r + term;
    }
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> MultiPoly<decltype(f(std::declval<const Coeff&>()))> {
    MultiPoly<decltype(f(std::declval<const Coeff&>()))> r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      os << (first ? "" : " + ") << '(' << c << ')';
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        os << '*' << vars_[i];
        if (e[i] > 1) os << '^' << e[i];
      }
      first = false;
    }
    return os.str();
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw UsageError("polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

using IntPoly = MultiPoly<Integer>;
using RatPoly = MultiPoly<Rational>;

/// Reduces integer coefficients into [0, n); the result is a polynomial over
/// Z/n represented by canonical residues.
inline IntPoly reduce_mod(const IntPoly& p, const Integer& n) {
  return p.map_coefficients([&](const Integer& c) { return mod_floor(c, n); });
}

}  // namespace dp5
