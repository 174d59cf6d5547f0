#pragma once

// Reductions X_p: point enumeration over F_p, singular points, lines,
// classification against the splitting of the minimal polynomial, and the
// affine chart of the singular fibre.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "dp5/model.hpp"
#include "dp5/modular.hpp"

namespace dp5 {

using Residues = std::array<std::uint64_t, 6>;

struct ProjPoint {
  std::uint64_t prime = 0;
  Residues coords{};

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 6; ++i) s += (i ? ":" : "") + std::to_string(coords[i]);
    return s + ")";
  }
};

/// Scales so the first nonzero coordinate is 1. Throws on the zero vector.
inline Residues normalize(Residues v, std::uint64_t p) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (v[i] % p == 0) continue;
    std::uint64_t k = modp::inv_mod(v[i] % p, p);
    for (auto& x : v) x = modp::mul_mod(x % p, k, p);
    return v;
  }
  throw DomainError("zero-point", "the zero vector is not a projective point");
}

/// The five quadrics reduced modulo n, as upper-triangular coefficient
/// tables c[k][i][j] (i <= j).
class QuadricsModN {
 public:
  using u64 = std::uint64_t;

  QuadricsModN(const DelPezzoModel& model, u64 modulus) : n_(modulus) {
    if (modulus < 2 || modulus > (1u << 20)) throw UsageError("modulus out of range");
    for (std::size_t k = 0; k < 5; ++k)
      for (const auto& [e, c] : model.quadrics[k].terms()) {
        std::size_t i = 6, j = 6;
        for (std::size_t v = 0; v < 6; ++v)
          for (unsigned t = 0; t < e[v]; ++t) (i == 6 ? i : j) = v;
        c_[k][i][j] = mod_u64(c, n_);
      }
  }

  u64 modulus() const { return n_; }
  u64 coefficient(std::size_t k, std::size_t i, std::size_t j) const { return c_[k][i][j]; }

  u64 value(std::size_t k, const Residues& u) const {
    u64 s = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      if (!u[i]) continue;
      u64 row = 0;
      for (std::size_t j = i; j < 6; ++j) row += c_[k][i][j] * u[j];
      s += (row % n_) * u[i];
    }
    return s % n_;
  }

  bool vanishes(const Residues& u) const {
    for (std::size_t k = 0; k < 5; ++k)
      if (value(k, u)) return false;
    return true;
  }

  /// Symmetric bilinear form B_k(P, Q) = Q_k(P + Q) - Q_k(P) - Q_k(Q).
  u64 polar(std::size_t k, const Residues& p, const Residues& q) const {
    u64 s = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i; j < 6; ++j)
        if (c_[k][i][j]) s = (s + c_[k][i][j] * ((p[i] * q[j] + p[j] * q[i]) % n_)) % n_;
    return s;
  }

  /// dQ_k/du_i at u.
  std::array<std::array<u64, 6>, 5> jacobian(const Residues& u) const {
    std::array<std::array<u64, 6>, 5> jac{};
    for (std::size_t k = 0; k < 5; ++k)
      for (std::size_t i = 0; i < 6; ++i) {
        u64 s = 0;
        for (std::size_t j = 0; j < 6; ++j) {
          u64 c = i <= j ? c_[k][i][j] : c_[k][j][i];
          if (i == j) c *= 2;
          s += c % n_ * u[j];
        }
        jac[k][i] = s % n_;
      }
    return jac;
  }

  /// Coefficients (A, B, C) of Q_k(prefix, t) = A + B t + C t^2 in the last
  /// coordinate t.
  std::array<u64, 3> in_last_coordinate(std::size_t k, const Residues& prefix) const {
    u64 a = 0, b = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      if (!prefix[i]) continue;
      u64 row = 0;
      for (std::size_t j = i; j < 5; ++j) row += c_[k][i][j] * prefix[j];
      a += (row % n_) * prefix[i];
      b += c_[k][i][5] * prefix[i];
    }
    return {a % n_, b % n_, c_[k][5][5]};
  }

 private:
  u64 n_;
  std::array<std::array<std::array<u64, 6>, 6>, 5> c_{};
};

/// Rank of a small matrix over F_p.
template <std::size_t R, std::size_t C>
std::size_t rank_mod_p(std::array<std::array<std::uint64_t, C>, R> m, std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && m[piv][col] % p == 0) ++piv;
    if (piv == R) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = modp::inv_mod(m[rank][col] % p, p);
    for (std::size_t r = 0; r < R; ++r) {
      if (r == rank || m[r][col] % p == 0) continue;
      std::uint64_t f = modp::mul_mod(m[r][col] % p, inv, p);
      for (std::size_t c = 0; c < C; ++c) m[r][c] = (m[r][c] % p + p - modp::mul_mod(f, m[rank][c] % p, p)) % p;
    }
    ++rank;
  }
  return rank;
}

struct EnumerationOptions {
  std::uint64_t bound = 50;
  unsigned threads = 1;
};

namespace detail {

/// Points with leading coordinate at index `lead`, whose first free
/// coordinate lies in [lo, hi).
inline void enumerate_block(const QuadricsModN& q, std::size_t lead, std::uint64_t lo, std::uint64_t hi,
                            std::vector<Residues>& out) {
  const std::uint64_t p = q.modulus();
  Residues u{};
  u[lead] = 1;
  if (lead == 5) {
    if (lo == 0 && q.vanishes(u)) out.push_back(u);
    return;
  }
  // Free coordinates lead+1 .. 4 are enumerated; coordinate 5 is solved.
  const std::size_t first = lead + 1;
  std::vector<std::uint64_t> sqrt_of(p, p);
  for (std::uint64_t t = 0; t < p; ++t) sqrt_of[t * t % p] = t;

  auto try_last = [&](Residues& v) {
    std::size_t k0 = 5;
    std::array<std::uint64_t, 3> abc{};
    for (std::size_t k = 0; k < 5 && k0 == 5; ++k) {
      abc = q.in_last_coordinate(k, v);
      if (abc[1] || abc[2]) k0 = k;
    }
    auto check = [&](std::uint64_t t) {
      v[5] = t;
      if (q.vanishes(v)) out.push_back(v);
    };
    if (k0 == 5) {
      for (std::size_t k = 0; k < 5; ++k)
        if (q.in_last_coordinate(k, v)[0]) return;
      for (std::uint64_t t = 0; t < p; ++t) check(t);
      return;
    }
    auto [a, b, c] = abc;
    if (p == 2) {
      check(0);
      check(1);
    } else if (c == 0) {
      check(modp::mul_mod(p - a, modp::inv_mod(b, p), p));
    } else {
      std::uint64_t disc = (b * b % p + p - 4 * a % p * c % p) % p;
      std::uint64_t s = sqrt_of[disc];
      if (s == p) return;
      std::uint64_t inv2c = modp::inv_mod(2 * c % p, p);
      std::uint64_t r1 = modp::mul_mod((p - b + s) % p, inv2c, p);
      std::uint64_t r2 = modp::mul_mod((2 * p - b - s) % p, inv2c, p);
      check(r1);
      if (r2 != r1) check(r2);
    }
    v[5] = 0;
  };

  if (first == 5) {
    if (lo == 0) try_last(u);
    return;
  }
  for (std::uint64_t x = lo; x < hi; ++x) {
    u[first] = x;
    // odometer over coordinates first+1 .. 4
    Residues v = u;
    while (true) {
      try_last(v);
      std::size_t i = 4;
      while (i > first && ++v[i] == p) v[i--] = 0;
      if (i == first) break;
    }
  }
}

}  // namespace detail

/// All points of X(F_p), normalized and sorted.
inline std::vector<ProjPoint> enumerate_fiber(const DelPezzoModel& model, std::uint64_t p,
                                              const EnumerationOptions& opts = {}) {
  if (!is_prime(p)) throw UsageError("fiber prime must be prime, got " + std::to_string(p));
  if (p > opts.bound)
    throw DomainError("bound-exceeded", "p = " + std::to_string(p) + " exceeds the enumeration bound " +
                                            std::to_string(opts.bound));
  QuadricsModN q(model, p);
  std::vector<std::vector<Residues>> parts;
  std::vector<std::pair<std::size_t, std::pair<std::uint64_t, std::uint64_t>>> jobs;
  for (std::size_t lead = 0; lead < 6; ++lead) {
    std::uint64_t range = lead < 5 ? p : 1;
    unsigned chunks = lead == 0 ? std::max(1u, opts.threads) : 1;
    for (unsigned c = 0; c < chunks; ++c) jobs.push_back({lead, {range * c / chunks, range * (c + 1) / chunks}});
  }
  parts.resize(jobs.size());
  auto run = [&](std::size_t j) { detail::enumerate_block(q, jobs[j].first, jobs[j].second.first, jobs[j].second.second, parts[j]); };
  if (opts.threads > 1) {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs.size(); ++j) pool.emplace_back(run, j);
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t j = 0; j < jobs.size(); ++j) run(j);
  }
  std::vector<ProjPoint> out;
  for (const auto& part : parts)
    for (const auto& r : part) out.push_back({p, r});
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_singular(const QuadricsModN& q, const Residues& u) {
  return rank_mod_p(q.jacobian(u), q.modulus()) < 3;
}

inline std::vector<ProjPoint> singular_points(const DelPezzoModel& model, const std::vector<ProjPoint>& fiber) {
  std::vector<ProjPoint> out;
  if (fiber.empty()) return out;
  QuadricsModN q(model, fiber.front().prime);
  for (const auto& pt : fiber)
    if (is_singular(q, pt.coords)) out.push_back(pt);
  return out;
}

struct Line {
  /// Two canonical spanning points: the two smallest F_p-points on the line.
  std::array<ProjPoint, 2> span;
  /// All p + 1 F_p-points, sorted.
  std::vector<ProjPoint> points;

  bool contains(const ProjPoint& pt) const { return std::binary_search(points.begin(), points.end(), pt); }
};

/// Points of the projective line through P and Q.
inline std::vector<ProjPoint> points_on_line(const ProjPoint& a, const ProjPoint& b) {
  const std::uint64_t p = a.prime;
  std::vector<ProjPoint> out{b};
  for (std::uint64_t t = 0; t < p; ++t) {
    Residues v;
    for (std::size_t i = 0; i < 6; ++i) v[i] = (a.coords[i] + t * b.coords[i]) % p;
    out.push_back({p, normalize(v, p)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True when every quadric restricts to the zero binary form on the line PQ
/// (P, Q already on X). This holds over every extension of F_p.
inline bool line_on_surface(const QuadricsModN& q, const Residues& a, const Residues& b) {
  for (std::size_t k = 0; k < 5; ++k)
    if (q.polar(k, a, b)) return false;
  return true;
}

inline std::vector<Line> find_lines(const DelPezzoModel& model, const std::vector<ProjPoint>& fiber) {
  std::vector<Line> lines;
  if (fiber.empty()) return lines;
  QuadricsModN q(model, fiber.front().prime);
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      if (std::any_of(lines.begin(), lines.end(),
                      [&](const Line& l) { return l.contains(fiber[i]) && l.contains(fiber[j]); }))
        continue;
      if (!line_on_surface(q, fiber[i].coords, fiber[j].coords)) continue;
      Line l;
      l.points = points_on_line(fiber[i], fiber[j]);
      l.span = {l.points[0], l.points[1]};
      lines.push_back(std::move(l));
    }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.span < b.span; });
  return lines;
}

struct FiberReport {
  std::uint64_t prime = 0;
  std::size_t point_count = 0;
  std::vector<ProjPoint> points;
  std::vector<ProjPoint> singular_points;
  std::vector<Line> lines;
  /// "split", "interesting", "singular" or "other".
  std::string classification;
  modp::FactorPattern minpoly_pattern;
};

inline FiberReport classify_fiber(const DelPezzoModel& model, std::uint64_t p, const EnumerationOptions& opts = {}) {
  FiberReport r;
  r.prime = p;
  r.points = enumerate_fiber(model, p, opts);
  r.point_count = r.points.size();
  r.singular_points = singular_points(model, r.points);
  r.lines = find_lines(model, r.points);
  r.minpoly_pattern = modp::factor_pattern(std::span<const Integer>(model.minpoly), p);

  auto inconsistent = [&](const std::string& what) {
    throw DomainError("fiber-inconsistent", "p = " + std::to_string(p) + ": " + what);
  };
  const auto& pat = r.minpoly_pattern;
  if (pat.irreducible(5)) {
    r.classification = "interesting";
    if (!r.lines.empty() || r.point_count != p * p + 1 || !r.singular_points.empty())
      inconsistent("inert prime but " + std::to_string(r.lines.size()) + " lines and " +
                   std::to_string(r.point_count) + " points");
  } else if (pat.splits_completely(5)) {
    r.classification = "split";
    if (r.lines.size() != 10 || r.point_count != p * p + 5 * p + 1 || !r.singular_points.empty())
      inconsistent("split prime but " + std::to_string(r.lines.size()) + " lines and " +
                   std::to_string(r.point_count) + " points");
  } else if (pat.separable) {
    r.classification = "other";
    if (!r.singular_points.empty()) inconsistent("separable reduction but singular points found");
  } else {
    r.classification = r.singular_points.empty() ? "other" : "singular";
  }
  return r;
}

struct ChartCertificate {
  std::uint64_t prime = 0;
  bool identity_holds = false;
  bool injective = false;
  std::size_t chart_points = 0;
  std::size_t line_points = 0;
  std::size_t fiber_points = 0;
  Line line;
};

/// The quadrics composed with (1, y, z, y^2, yz, y^3 + z^2), reduced mod p.
inline std::vector<IntPoly> chart_pullback(const DelPezzoModel& model, std::uint64_t p) {
  std::vector<std::string> vars{"y", "z"};
  auto one = IntPoly::constant(vars, 1);
  auto y = IntPoly::variable(vars, 0, 1), z = IntPoly::variable(vars, 1, 1);
  std::vector<IntPoly> chart{one, y, z, y * y, y * z, y * y * y + z * z};
  std::vector<IntPoly> out;
  for (const auto& q : model.quadrics)
    out.push_back(reduce_mod(q.substitute(chart, Integer(1)), Integer(static_cast<unsigned long>(p))));
  return out;
}

inline ChartCertificate verify_chart(const DelPezzoModel& model, std::uint64_t p, const EnumerationOptions& opts = {}) {
  const std::string name = model.fixture_name();
  if (!((name == "zeta11plus" && p == 11) || (name == "zeta25" && p == 5)))
    throw UsageError("the chart is only certified for zeta11plus at 11 and zeta25 at 5");
  auto fail = [&](const std::string& what) { throw DomainError("chart-failure", what); };

  ChartCertificate cert;
  cert.prime = p;
  for (const auto& poly : chart_pullback(model, p))
    if (!poly.is_zero()) fail("quadric does not vanish on the chart: " + poly.to_string());
  cert.identity_holds = true;

  std::set<ProjPoint> image;
  for (std::uint64_t y = 0; y < p; ++y)
    for (std::uint64_t z = 0; z < p; ++z)
      image.insert({p, {1, y, z, y * y % p, y * z % p, (y * y % p * y + z * z) % p}});
  cert.chart_points = image.size();
  cert.injective = image.size() == p * p;
  if (!cert.injective) fail("chart is not injective");

  auto fiber = enumerate_fiber(model, p, opts);
  auto lines = find_lines(model, fiber);
  if (lines.size() != 1) fail("expected exactly one line, found " + std::to_string(lines.size()));
  cert.line = lines.front();
  cert.line_points = cert.line.points.size();
  cert.fiber_points = fiber.size();
  std::set<ProjPoint> united(image);
  for (const auto& pt : cert.line.points) {
    if (image.count(pt)) fail("line meets the chart image at " + pt.to_string());
    united.insert(pt);
  }
  if (!std::equal(united.begin(), united.end(), fiber.begin(), fiber.end()))
    fail("chart image and line do not cover the fiber");
  return cert;
}

}  // namespace dp5
