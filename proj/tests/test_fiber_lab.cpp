#include <gtest/gtest.h>

#include <set>

#include "dp5/fiber.hpp"

using namespace dp5;

namespace {

const DelPezzoModel& zeta11() {
  static const DelPezzoModel m = fixture("zeta11plus");
  return m;
}

const DelPezzoModel& zeta25() {
  static const DelPezzoModel m = fixture("zeta25");
  return m;
}

// Naive oracle: every normalized vector of P^5(F_p), evaluated with exact
// integer arithmetic on the published quadrics.
std::size_t brute_force_count(const DelPezzoModel& model, std::uint64_t p) {
  std::size_t count = 0;
  std::vector<Integer> pt(6);
  for (std::size_t lead = 0; lead < 6; ++lead) {
    std::size_t free = 5 - lead;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = 0; i < 6; ++i) pt[i] = 0;
      pt[lead] = 1;
      for (std::size_t i = lead + 1; i < 6; ++i) {
        pt[i] = static_cast<unsigned long>(c % p);
        c /= p;
      }
      bool on = true;
      for (const auto& q : model.quadrics)
        if (mod_floor(q.evaluate<Integer>(pt, 0, 1), static_cast<unsigned long>(p)) != 0) {
          on = false;
          break;
        }
      count += on;
    }
  }
  return count;
}

}  // namespace

TEST(Enumerate, TwoAdicFibersHaveFivePoints) {
  auto f11 = enumerate_fiber(zeta11(), 2);
  EXPECT_EQ(f11.size(), 5u);
  for (const auto& pt : f11) EXPECT_EQ((pt.coords[2] + pt.coords[5]) % 2, 0u);
  auto f25 = enumerate_fiber(zeta25(), 2);
  EXPECT_EQ(f25.size(), 5u);
  for (const auto& pt : f25) EXPECT_EQ((pt.coords[2] + pt.coords[3]) % 2, 0u);
}

TEST(Enumerate, AgreesWithBruteForceOracle) {
  for (std::uint64_t p : {2, 3, 5}) {
    EXPECT_EQ(enumerate_fiber(zeta11(), p).size(), brute_force_count(zeta11(), p)) << p;
    EXPECT_EQ(enumerate_fiber(zeta25(), p).size(), brute_force_count(zeta25(), p)) << p;
  }
  EXPECT_EQ(enumerate_fiber(zeta11(), 7).size(), brute_force_count(zeta11(), 7));
}

TEST(Enumerate, SplitPrimeWeilCount) { EXPECT_EQ(enumerate_fiber(zeta11(), 23).size(), 23u * 23 + 5 * 23 + 1); }

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  EXPECT_EQ(enumerate_fiber(zeta11(), 11, {50, 1}), enumerate_fiber(zeta11(), 11, {50, 3}));
}

TEST(Enumerate, BoundAndPrimality) {
  EXPECT_THROW(enumerate_fiber(zeta11(), 53), DomainError);
  EXPECT_THROW(enumerate_fiber(zeta11(), 9), UsageError);
}

TEST(Singular, CountsAtRamifiedAndGoodPrimes) {
  EXPECT_EQ(singular_points(zeta11(), enumerate_fiber(zeta11(), 11)).size(), 1u);
  EXPECT_TRUE(singular_points(zeta11(), enumerate_fiber(zeta11(), 2)).empty());
  EXPECT_EQ(singular_points(zeta25(), enumerate_fiber(zeta25(), 5)).size(), 1u);
}

TEST(Singular, SmoothPointsHaveJacobianRankThree) {
  for (std::uint64_t p : {7, 11, 23}) {
    QuadricsModN q(zeta11(), p);
    for (const auto& pt : enumerate_fiber(zeta11(), p)) {
      auto r = rank_mod_p(q.jacobian(pt.coords), p);
      EXPECT_TRUE(r == 3 || (p == 11 && r < 3));
    }
  }
}

TEST(Lines, SplitFiberHasTenLines) {
  auto fiber = enumerate_fiber(zeta11(), 23);
  auto lines = find_lines(zeta11(), fiber);
  EXPECT_EQ(lines.size(), 10u);
  std::set<ProjPoint> pts(fiber.begin(), fiber.end());
  for (const auto& l : lines) {
    EXPECT_EQ(l.points.size(), 24u);
    for (const auto& pt : l.points) EXPECT_TRUE(pts.count(pt));
  }
}

TEST(Lines, SingularFiberHasOneLineThroughTheSingularPoint) {
  auto fiber = enumerate_fiber(zeta11(), 11);
  auto lines = find_lines(zeta11(), fiber);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].points.size(), 12u);
  auto sing = singular_points(zeta11(), fiber);
  ASSERT_EQ(sing.size(), 1u);
  EXPECT_TRUE(lines[0].contains(sing[0]));
}

TEST(Lines, InertFiberHasNone) { EXPECT_TRUE(find_lines(zeta11(), enumerate_fiber(zeta11(), 2)).empty()); }

TEST(Classify, Examples) {
  auto r7 = classify_fiber(zeta11(), 7);
  EXPECT_EQ(r7.classification, "interesting");
  EXPECT_EQ(r7.point_count, 50u);
  EXPECT_EQ(classify_fiber(zeta11(), 11).classification, "singular");
  EXPECT_EQ(classify_fiber(zeta11(), 23).classification, "split");
  auto z7 = classify_fiber(zeta25(), 7);
  EXPECT_EQ(z7.classification, "singular");
  EXPECT_FALSE(z7.singular_points.empty());
}

TEST(Classify, WeilCountsUpToTwentyFive) {
  for (const auto* m : {&zeta11(), &zeta25()})
    for (std::uint64_t p = 2; p <= 25; p = next_prime(p + 1)) {
      auto r = classify_fiber(*m, p);
      if (!r.minpoly_pattern.separable) continue;
      if (r.classification == "interesting") {
        EXPECT_EQ(r.point_count, p * p + 1);
      } else {
        EXPECT_EQ(r.point_count, p * p + 5 * p + 1) << m->source << " p=" << p;
      }
    }
}

TEST(Chart, ZetaElevenCertificate) {
  auto cert = verify_chart(zeta11(), 11);
  EXPECT_TRUE(cert.identity_holds);
  EXPECT_EQ(cert.chart_points, 121u);
  EXPECT_EQ(cert.line_points, 12u);
  EXPECT_EQ(cert.fiber_points, 133u);
}

TEST(Chart, ZetaTwentyFiveCertificate) {
  auto cert = verify_chart(zeta25(), 5);
  EXPECT_EQ(cert.chart_points, 25u);
  EXPECT_EQ(cert.line_points, 6u);
  EXPECT_EQ(cert.fiber_points, 31u);
}

TEST(Chart, SingleQuadricIdentity) {
  std::vector<std::string> vars{"y", "z"};
  auto y = IntPoly::variable(vars, 0, 1), z = IntPoly::variable(vars, 1, 1);
  auto lhs = y * (y * y * y + z * z) - z * (y * z) - y.pow(4, 1);
  EXPECT_TRUE(lhs.is_zero());
  EXPECT_TRUE(chart_pullback(zeta11(), 11)[4].is_zero());
}

TEST(Chart, WrongPrimeIsRejected) { EXPECT_THROW(verify_chart(zeta11(), 5), UsageError); }
