#pragma once

// Local solubility of U_h = X \ {h = 0}, images of the local invariant of
// the order-5 class l1/h at the ramified prime, verdicts, and the censuses
// over all hyperplanes modulo 11 and modulo 25.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dp5/fiber.hpp"
#include "dp5/model.hpp"
#include "dp5/residue.hpp"

namespace dp5 {

using u64 = std::uint64_t;

inline Residues reduce_form(const HyperplaneForm& h, u64 n) {
  Residues r;
  for (std::size_t i = 0; i < 6; ++i) r[i] = mod_u64(h[i], n);
  return r;
}

inline u64 dot_mod(const Residues& a, const Residues& b, u64 n) {
  u64 s = 0;
  for (std::size_t i = 0; i < 6; ++i) s += a[i] % n * (b[i] % n);
  return s % n;
}

inline bool is_zero_mod(const Residues& r, u64 n) {
  return std::all_of(r.begin(), r.end(), [&](u64 x) { return x % n == 0; });
}

/// h mod n proportional to u0, i.e. h_1 .. h_5 all divisible by n.
inline bool proportional_to_u0(const Residues& h, u64 n) {
  return std::all_of(h.begin() + 1, h.end(), [&](u64 x) { return x % n == 0; });
}

inline void require_fixture(const DelPezzoModel& model, std::string_view name) {
  if (model.fixture_name() != name)
    throw DomainError("unsupported-model", "this computation is only available for fixture:" + std::string(name) +
                                               " (got " + model.source + ")");
}

// ---------------------------------------------------------------- solubility

struct LocalSolubility {
  bool soluble = false;
  std::optional<std::string> failing_place;
  /// An F_2-point off h, smooth on X_2 (lifts to a Z_2-point of U_h).
  std::optional<ProjPoint> two_adic_point;
  /// gcd of h over the stored integral points; an odd prime l not dividing it
  /// has a stored point with h(P) a unit at l.
  Integer stored_point_gcd = 0;
};

inline LocalSolubility locally_soluble(const DelPezzoModel& model, const HyperplaneForm& h) {
  if (!model.is_fixture()) throw DomainError("unsupported-model", "local solubility needs a fixture model");
  if (!h.is_primitive()) throw DomainError("non-primitive", "h must be primitive: " + h.to_string());
  LocalSolubility out;
  for (const auto& p : model.points) out.stored_point_gcd = gcd(out.stored_point_gcd, h(p));
  Integer odd = out.stored_point_gcd;
  while (odd != 0 && mpz_even_p(odd.get_mpz_t())) odd /= 2;
  if (odd != 1 && odd != -1) {
    // Only possible if the stored points miss an odd prime; fall back on the
    // fibre there.
    for (u64 l = 3; l <= 50; l = next_prime(l + 1)) {
      if (mod_u64(odd, l) != 0) continue;
      QuadricsModN q(model, l);
      Residues hb = reduce_form(h, l);
      bool found = false;
      for (const auto& pt : enumerate_fiber(model, l))
        if (dot_mod(hb, pt.coords, l) && !is_singular(q, pt.coords)) found = true;
      if (!found) {
        out.failing_place = std::to_string(l);
        return out;
      }
      odd /= l;
      while (mod_u64(odd, l) == 0) odd /= l;
    }
    if (odd != 1 && odd != -1) throw DomainError("undecided", "stored points do not certify solubility");
  }
  QuadricsModN q2(model, 2);
  Residues h2 = reduce_form(h, 2);
  for (const auto& pt : enumerate_fiber(model, 2))
    if (dot_mod(h2, pt.coords, 2) && !is_singular(q2, pt.coords)) {
      out.two_adic_point = pt;
      break;
    }
  if (!out.two_adic_point) {
    out.failing_place = "2";
    return out;
  }
  out.soluble = true;
  return out;
}

inline bool geometrically_irreducible(const DelPezzoModel& model, const HyperplaneForm& h) {
  if (h.is_zero()) throw UsageError("h must be nonzero");
  return !proportional(h.span(), model.l1.span()) && !proportional(h.span(), model.l2.span());
}

// ---------------------------------------------------------------- mod 11

/// Invariant at 11 on the zeta11plus fixture via the chart of X_11 \ L,
/// where l1 = u0 = 1 and the class is read off 1/f with f = h(chart).
class ChartInvariant11 {
 public:
  explicit ChartInvariant11(const DelPezzoModel& model) : group_(11) {
    require_fixture(model, "zeta11plus");
    for (u64 y = 0; y < 11; ++y)
      for (u64 z = 0; z < 11; ++z) chart_.push_back({1, y, z, y * y % 11, y * z % 11, (y * y * y + z * z) % 11});
  }

  const ResidueClassGroup& group() const { return group_; }

  ClassMask mask(const Residues& h) const {
    if (h[5] % 11) return group_.full_mask();
    ClassMask m = 0;
    for (const auto& c : chart_) {
      u64 f = dot_mod(h, c, 11);
      if (f) m |= 1u << group_.class_of(group_.inverse(f));
    }
    return m;
  }

  InvariantImage image(const Residues& h) const {
    if (is_zero_mod(h, 11)) throw UsageError("h must be nonzero mod 11");
    InvariantImage img{11, 11, mask(h), {}};
    if (h[5] % 11 == 0) {
      std::vector<bool> seen(11, false);
      for (const auto& c : chart_) seen[dot_mod(h, c, 11)] = true;
      for (u64 v = 1; v < 11; ++v)
        if (seen[v]) img.values.push_back(v);
    }
    return img;
  }

 private:
  ResidueClassGroup group_;
  std::vector<Residues> chart_;
};

/// Coordinate-free invariant at a prime p: classes of l1/h over the smooth
/// F_p-points (each lifts to a Z_p-point); full when h misses some smooth
/// point of {l1 = 0}.
class SmoothPointInvariant {
 public:
  SmoothPointInvariant(const DelPezzoModel& model, u64 p) : group_(p), p_(p) {
    QuadricsModN q(model, p);
    Residues l1 = reduce_form(model.l1, p);
    for (const auto& pt : enumerate_fiber(model, p)) {
      if (is_singular(q, pt.coords)) continue;
      points_.push_back(pt.coords);
      l1_values_.push_back(dot_mod(l1, pt.coords, p));
    }
  }

  const ResidueClassGroup& group() const { return group_; }
  std::size_t smooth_point_count() const { return points_.size(); }

  ClassMask mask(const Residues& h) const {
    ClassMask m = 0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      u64 hv = dot_mod(h, points_[i], p_);
      if (!hv) continue;
      if (!l1_values_[i]) return group_.full_mask();
      m |= 1u << group_.class_of(l1_values_[i] * group_.inverse(hv) % p_);
    }
    return m;
  }

  InvariantImage image(const Residues& h) const {
    if (is_zero_mod(h, p_)) throw UsageError("h must be nonzero mod p");
    return {p_, p_, mask(h), {}};
  }

 private:
  ResidueClassGroup group_;
  u64 p_;
  std::vector<Residues> points_;
  std::vector<u64> l1_values_;
};

// ---------------------------------------------------------------- mod 25

struct TangentCertificate {
  /// Chart point x over F_5 where h(x) != 0 and (h_1..h_5) is not in the
  /// row space of the affine Jacobian, so h(x + 5w) takes all five values
  /// h(x) + 5t on the lifts.
  Residues chart_point{};
  std::size_t jacobian_rank = 0;
};

/// Invariant at 5 on the zeta25 fixture, read modulo 25.
class Invariant25 {
 public:
  explicit Invariant25(const DelPezzoModel& model) : group_(25), q5_(model, 5), q25_(model, 25), model_(&model) {
    require_fixture(model, "zeta25");
    for (u64 y = 0; y < 5; ++y)
      for (u64 z = 0; z < 5; ++z) {
        Residues c{1, y, z, y * y % 5, y * z % 5, (y * y * y + z * z) % 5};
        chart_.push_back(c);
        auto jac = q5_.jacobian(c);
        std::array<std::array<u64, 5>, 5> affine{};
        for (std::size_t k = 0; k < 5; ++k)
          for (std::size_t i = 0; i < 5; ++i) affine[k][i] = jac[k][i + 1];
        jacobians_.push_back(affine);
        jacobian_ranks_.push_back(rank_mod_p(affine, 5));
      }
  }

  const ResidueClassGroup& group() const { return group_; }
  const std::vector<Residues>& chart_points() const { return chart_; }

  std::optional<TangentCertificate> tangent_certificate(const Residues& h) const {
    for (std::size_t i = 0; i < chart_.size(); ++i) {
      if (!dot_mod(h, chart_[i], 5)) continue;
      std::array<std::array<u64, 5>, 6> ext{};
      for (std::size_t k = 0; k < 5; ++k) ext[k] = jacobians_[i][k];
      for (std::size_t j = 0; j < 5; ++j) ext[5][j] = h[j + 1] % 5;
      if (rank_mod_p(ext, 5) > jacobian_ranks_[i]) return TangentCertificate{chart_[i], jacobian_ranks_[i]};
    }
    return std::nullopt;
  }

  /// Image for h ≡ lambda u0 + 5 k (mod 25), given lambda mod 25 and k mod 5.
  ClassMask constant_type_mask(u64 lambda, const std::array<u64, 5>& k, std::vector<u64>* values = nullptr) const {
    ClassMask m = 0;
    std::array<bool, 25> seen{};
    for (const auto& c : chart_) {
      u64 kappa = 0;
      for (std::size_t i = 0; i < 5; ++i) kappa += k[i] * c[i + 1];
      u64 v = (lambda + 5 * (kappa % 5)) % 25;
      seen[v] = true;
      m |= 1u << group_.class_of(group_.inverse(v));
    }
    if (values)
      for (u64 v = 0; v < 25; ++v)
        if (seen[v]) values->push_back(v);
    return m;
  }

  InvariantImage image(const Residues& h25) const {
    if (proportional_to_u0(h25, 5) && h25[0] % 5 == 0) throw UsageError("h must be nonzero mod 5");
    InvariantImage img{5, 25, 0, {}};
    if (!proportional_to_u0(h25, 5)) {
      if (!tangent_certificate(h25)) throw DomainError("tangent-failure", "no tangent certificate for a non-u0 form");
      img.mask = group_.full_mask();
      return img;
    }
    std::array<u64, 5> k;
    for (std::size_t i = 0; i < 5; ++i) k[i] = h25[i + 1] % 25 / 5;
    img.mask = constant_type_mask(h25[0] % 25, k, &img.values);
    return img;
  }

  /// Direct computation: every F_5-point, every lift modulo 25 with the
  /// normalizing coordinate fixed, classes of l1/h where both are units.
  ClassMask brute_force_mask(const Residues& h25) const {
    Residues l1 = reduce_form(model_->l1, 25);
    ClassMask m = 0;
    for (const auto& pt : enumerate_fiber(*model_, 5)) {
      std::size_t lead = 0;
      while (pt.coords[lead] == 0) ++lead;
      std::array<std::size_t, 5> free{};
      for (std::size_t i = 0, j = 0; i < 6; ++i)
        if (i != lead) free[j++] = i;
      for (u64 code = 0; code < 3125; ++code) {
        Residues x = pt.coords;
        u64 c = code;
        for (std::size_t j = 0; j < 5; ++j, c /= 5) x[free[j]] += 5 * (c % 5);
        if (!q25_.vanishes(x)) continue;
        u64 hv = dot_mod(h25, x, 25), lv = dot_mod(l1, x, 25);
        if (!group_.is_unit(hv) || !group_.is_unit(lv)) continue;
        m |= 1u << group_.class_of(lv * group_.inverse(hv) % 25);
      }
    }
    return m;
  }

 private:
  ResidueClassGroup group_;
  QuadricsModN q5_;
  QuadricsModN q25_;
  const DelPezzoModel* model_;
  std::vector<Residues> chart_;
  std::vector<std::array<std::array<u64, 5>, 5>> jacobians_;
  std::vector<std::size_t> jacobian_ranks_;
};

// ---------------------------------------------------------------- verdicts

struct ClaimComparison {
  std::string claim;
  std::string paper_verdict;
  std::string computed_verdict;
  /// "agrees" or "flagged".
  std::string status;
};

struct ObstructionReport {
  std::string model;
  HyperplaneForm h;
  bool locally_soluble = false;
  std::optional<std::string> failing_place;
  bool geometrically_irreducible = false;
  std::map<u64, InvariantImage> images;
  /// zeta11plus only: the coordinate-free path, reported next to the chart.
  std::optional<InvariantImage> smooth_path_image;
  std::string verdict;
  std::optional<ClaimComparison> paper_claim_comparison;
};

struct PublishedClaim {
  const char* model;
  std::array<long, 6> h;
  const char* verdict;
  const char* id;
};

inline const std::vector<PublishedClaim>& published_claims() {
  static const std::vector<PublishedClaim> claims{
      {"zeta11plus", {0, 1, 0, -6, 0, 0}, "obstruction_order_5", "zeta11plus:u1-6u3"},
      {"zeta25", {2, -15, 0, 10, 0, 0}, "obstruction_order_5", "zeta25:2u0-15u1+10u3"},
  };
  return claims;
}

class VerdictEngine {
 public:
  explicit VerdictEngine(const DelPezzoModel& model) : model_(model) {
    if (!model.is_fixture())
      throw DomainError("unsupported-model",
                        "verdicts need the ramified-prime analysis, which exists only for the fixtures");
    if (model.fixture_name() == "zeta11plus") {
      chart11_.emplace(model);
      smooth11_.emplace(model, 11);
    } else {
      inv25_.emplace(model);
    }
  }

  ObstructionReport operator()(const HyperplaneForm& h) const {
    if (!h.is_primitive()) throw DomainError("non-primitive", "h must be primitive: " + h.to_string());
    ObstructionReport r;
    r.model = model_.source;
    r.h = h;
    auto sol = locally_soluble(model_, h);
    r.locally_soluble = sol.soluble;
    r.failing_place = sol.failing_place;
    r.geometrically_irreducible = geometrically_irreducible(model_, h);
    if (chart11_) {
      Residues hb = reduce_form(h, 11);
      r.images[11] = chart11_->image(hb);
      r.smooth_path_image = smooth11_->image(hb);
    } else {
      r.images[5] = inv25_->image(reduce_form(h, 25));
    }
    const InvariantImage& img = r.images.begin()->second;
    if (!r.locally_soluble)
      r.verdict = "no_adelic_points";
    else if (!r.geometrically_irreducible)
      r.verdict = "trivial_brauer_class";
    else
      r.verdict = img.contains_zero() ? "no_obstruction" : "obstruction_order_5";

    for (const auto& c : published_claims()) {
      if (model_.fixture_name() != c.model) continue;
      HyperplaneForm ch;
      for (std::size_t i = 0; i < 6; ++i) ch[i] = c.h[i];
      if (!(ch == h) && !(ch * Integer(-1) == h)) continue;
      r.paper_claim_comparison =
          ClaimComparison{c.id, c.verdict, r.verdict, r.verdict == c.verdict ? "agrees" : "flagged"};
    }
    return r;
  }

  const std::optional<ChartInvariant11>& chart11() const { return chart11_; }
  const std::optional<SmoothPointInvariant>& smooth11() const { return smooth11_; }
  const std::optional<Invariant25>& inv25() const { return inv25_; }

 private:
  const DelPezzoModel& model_;
  std::optional<ChartInvariant11> chart11_;
  std::optional<SmoothPointInvariant> smooth11_;
  std::optional<Invariant25> inv25_;
};

inline ObstructionReport verdict(const DelPezzoModel& model, const HyperplaneForm& h) { return VerdictEngine(model)(h); }

// ---------------------------------------------------------------- censuses

struct CensusResult {
  std::string model;
  u64 modulus = 0;
  Integer total = 0;
  u64 obstructing = 0;
  std::map<std::string, u64> breakdown;
  /// Independent count (classification formula mod 11, brute-force sample
  /// agreement mod 25).
  u64 formula_obstructing = 0;
  bool paths_agree = false;
  u64 tangent_directions = 0;
  bool tangent_validation = false;
  u64 brute_force_samples = 0;
  double wall_time_ms = 0;
  unsigned workers = 1;
};

namespace detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(chunk) for chunk in [0, chunks) on `workers` threads.
template <class F>
void parallel_chunks(unsigned chunks, unsigned workers, F&& body) {
  if (workers <= 1) {
    for (unsigned c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<unsigned> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min(workers, chunks); ++w)
    pool.emplace_back([&] {
      for (unsigned c; (c = next++) < chunks;) body(c);
    });
  for (auto& t : pool) t.join();
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Obstructing count among all nonzero h mod p using only smooth points;
/// valid for any model presented by quadrics and l1.
inline u64 census_smooth_path(const DelPezzoModel& model, u64 p, unsigned workers = 1) {
  SmoothPointInvariant inv(model, p);
  std::vector<u64> counts(p, 0);
  detail::parallel_chunks(static_cast<unsigned>(p), detail::resolve_workers(workers), [&](unsigned h0) {
    Residues h{h0, 0, 0, 0, 0, 0};
    while (true) {
      if (!is_zero_mod(h, p) && !(inv.mask(h) & 1u)) ++counts[h0];
      std::size_t i = 5;
      while (i > 0 && ++h[i] == p) h[i--] = 0;
      if (i == 0) break;
    }
  });
  u64 total = 0;
  for (u64 c : counts) total += c;
  return total;
}

inline CensusResult census_11(const DelPezzoModel& model, unsigned workers = 0) {
  auto start = std::chrono::steady_clock::now();
  ChartInvariant11 inv(model);
  workers = detail::resolve_workers(workers);
  CensusResult r;
  r.model = model.source;
  r.modulus = 11;
  r.workers = workers;
  r.total = pow_int(11, 6) - 1;

  struct Tally {
    u64 obstructing = 0, constant = 0, quadratic = 0, other = 0;
  };
  std::vector<Tally> tallies(11);
  detail::parallel_chunks(11, workers, [&](unsigned h0) {
    Tally& t = tallies[h0];
    Residues h{h0, 0, 0, 0, 0, 0};
    while (true) {
      if (!is_zero_mod(h, 11) && !(inv.mask(h) & 1u)) {
        ++t.obstructing;
        bool y_only = h[2] == 0 && h[4] == 0 && h[5] == 0;
        if (y_only && h[1] == 0 && h[3] == 0)
          ++t.constant;
        else if (y_only && h[3] != 0 && (h[1] * h[1] % 11 + 11 - 4 * h[3] * h[0] % 11) % 11 != 0)
          ++t.quadratic;
        else
          ++t.other;
      }
      std::size_t i = 5;
      while (i > 0 && ++h[i] == 11) h[i--] = 0;
      if (i == 0) break;
    }
  });
  Tally sum;
  for (const auto& t : tallies) {
    sum.obstructing += t.obstructing;
    sum.constant += t.constant;
    sum.quadratic += t.quadratic;
    sum.other += t.other;
  }
  r.obstructing = sum.obstructing;
  r.breakdown = {{"constant", sum.constant}, {"separable_quadratic", sum.quadratic}};
  if (sum.other) r.breakdown["other"] = sum.other;

  // Classification path: f = h(chart) constant lambda obstructs iff lambda is
  // not +-1; f = a y^2 + b y + c obstructs iff it never takes the value +-1.
  u64 formula = 0;
  for (u64 lambda = 1; lambda < 11; ++lambda) formula += (lambda != 1 && lambda != 10);
  for (u64 a = 1; a < 11; ++a)
    for (u64 b = 0; b < 11; ++b)
      for (u64 c = 0; c < 11; ++c) {
        if ((b * b % 11 + 11 - 4 * a * c % 11) % 11 == 0) continue;
        bool hits = false;
        for (u64 y = 0; y < 11 && !hits; ++y) {
          u64 v = (a * y * y + b * y + c) % 11;
          hits = v == 1 || v == 10;
        }
        formula += !hits;
      }
  r.formula_obstructing = formula;
  r.paths_agree = formula == r.obstructing && sum.other == 0;
  r.wall_time_ms = detail::elapsed_ms(start);
  return r;
}

struct Census25Options {
  unsigned workers = 0;
  u64 brute_force_samples = 4;
  u64 seed = 25;
};

inline CensusResult census_25(const DelPezzoModel& model, const Census25Options& opts = {}) {
  auto start = std::chrono::steady_clock::now();
  Invariant25 inv(model);
  const auto& group = inv.group();
  CensusResult r;
  r.model = model.source;
  r.modulus = 25;
  r.workers = detail::resolve_workers(opts.workers);
  r.total = pow_int(25, 6) - pow_int(5, 6);

  // Shortcut: only h = lambda u0 + 5k can obstruct; each (lambda, k) is one
  // residue class mod 25.
  std::vector<u64> units = group.units();
  std::vector<std::array<u64, 3>> tallies(units.size());  // obstructing, size 1, size 3
  detail::parallel_chunks(static_cast<unsigned>(units.size()), r.workers, [&](unsigned idx) {
    auto& t = tallies[idx];
    std::array<u64, 5> k{};
    for (u64 code = 0; code < 3125; ++code) {
      u64 c = code;
      for (std::size_t i = 0; i < 5; ++i, c /= 5) k[i] = c % 5;
      ClassMask m = inv.constant_type_mask(units[idx], k);
      if (m & 1u) continue;
      ++t[0];
      int size = std::popcount(m);
      if (size == 1) ++t[1];
      if (size == 3) ++t[2];
    }
  });
  u64 size1 = 0, size3 = 0;
  for (const auto& t : tallies) {
    r.obstructing += t[0];
    size1 += t[1];
    size3 += t[2];
  }
  r.breakdown = {{"constant", size1}, {"image_size_3", size3}};
  if (r.obstructing != size1 + size3) r.breakdown["other"] = r.obstructing - size1 - size3;

  // Surjectivity for every direction not proportional to u0 mod 5.
  bool all_certified = true;
  Residues h{};
  for (u64 code = 0; code < 15625; ++code) {
    u64 c = code;
    for (std::size_t i = 0; i < 6; ++i, c /= 5) h[i] = c % 5;
    if (proportional_to_u0(h, 5)) continue;
    ++r.tangent_directions;
    if (!inv.tangent_certificate(h)) all_certified = false;
  }
  r.tangent_validation = all_certified;

  // Sampled direct lifts for random non-u0 forms agree on surjectivity.
  std::mt19937_64 rng(opts.seed);
  bool sample_agree = true;
  for (u64 s = 0; s < opts.brute_force_samples;) {
    Residues hs;
    for (auto& x : hs) x = rng() % 25;
    if (proportional_to_u0(hs, 5)) continue;
    ++s;
    sample_agree = sample_agree && inv.brute_force_mask(hs) == group.full_mask();
  }
  r.brute_force_samples = opts.brute_force_samples;
  r.formula_obstructing = r.obstructing;
  r.paths_agree = sample_agree && all_certified;
  r.wall_time_ms = detail::elapsed_ms(start);
  return r;
}

// ---------------------------------------------------------------- unramified

struct UnramifiedCheck {
  u64 prime = 0;
  /// "inert" (l1 has no F_l-point on X) or "split".
  std::string kind;
  std::size_t fiber_points = 0;
  std::size_t l1_zero_points = 0;
  bool invariant_zero = false;
};

inline UnramifiedCheck unramified_invariant_check(const DelPezzoModel& model, u64 ell, const EnumerationOptions& opts = {}) {
  auto pat = modp::factor_pattern(std::span<const Integer>(model.minpoly), ell);
  if (!pat.separable) throw DomainError("ramified", std::to_string(ell) + " divides the discriminant of the minimal polynomial");
  UnramifiedCheck c;
  c.prime = ell;
  if (pat.splits_completely(5)) {
    c.kind = "split";
    c.invariant_zero = true;
    return c;
  }
  if (!pat.irreducible(5)) throw DomainError("not-cyclic", "unramified prime is neither inert nor split");
  c.kind = "inert";
  Residues l1 = reduce_form(model.l1, ell);
  auto fiber = enumerate_fiber(model, ell, opts);
  c.fiber_points = fiber.size();
  for (const auto& pt : fiber) c.l1_zero_points += dot_mod(l1, pt.coords, ell) == 0;
  c.invariant_zero = c.l1_zero_points == 0;
  return c;
}

}  // namespace dp5
