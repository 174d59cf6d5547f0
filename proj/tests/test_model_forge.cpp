#include <gtest/gtest.h>

#include <random>

#include "dp5/fiber.hpp"
#include "dp5/model.hpp"

using namespace dp5;

namespace {

FieldPtr zeta11_field() { return make_quintic_field({1, 1, -4, -3, 3, 1}); }
FieldPtr zeta25_field() { return make_quintic_field({1, -20, 100, -125, 50, -5}); }

const DelPezzoModel& constructed_zeta11() {
  static const DelPezzoModel m = build_model(zeta11_field());
  return m;
}

IntMatrix times_column(const IntMatrix& a, const std::vector<Integer>& v) {
  IntMatrix col(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
  return a * col;
}

std::vector<Integer> mod_vector(std::span<const Integer> v, long n) {
  std::vector<Integer> out;
  for (const auto& x : v) out.push_back(mod_floor(x, n));
  return out;
}

}  // namespace

TEST(DoubleVanishing, Zeta11KernelHasRankSix) {
  IntMatrix m = double_vanishing_matrix(zeta11_field());
  EXPECT_EQ(m.rows(), 15u);
  EXPECT_EQ(m.cols(), 21u);
  IntMatrix k = saturated_kernel(m);
  EXPECT_EQ(k.rows(), 6u);
  for (const auto& d : snf(k).divisors) EXPECT_EQ(d, 1);
}

TEST(DoubleVanishing, KernelMembersAreSingularAtTheOrbitPoint) {
  auto field = zeta11_field();
  auto sys = quintic_system(field);
  auto alpha = NumberFieldElement::generator(field);
  std::vector<NumberFieldElement> pt{alpha * alpha, alpha, NumberFieldElement::from_rational(field, 1)};
  const NumberFieldElement zero(field);
  for (std::size_t i = 0; i < 6; ++i) {
    auto q = sys.quintic(i).map_coefficients([&](const Integer& c) { return NumberFieldElement::from_rational(field, c); });
    EXPECT_TRUE(q.evaluate(pt, zero, pt[2]).is_zero());
    EXPECT_TRUE(q.derivative(0).evaluate(pt, zero, pt[2]).is_zero());
    EXPECT_TRUE(q.derivative(1).evaluate(pt, zero, pt[2]).is_zero());
    // conjugate points impose nothing new
    auto g = galois_conjugates(field);
    for (unsigned j = 1; j < 5; ++j) {
      auto r = g.root(j);
      std::vector<NumberFieldElement> pj{r * r, r, pt[2]};
      EXPECT_TRUE(q.evaluate(pj, zero, pt[2]).is_zero());
    }
  }
}

TEST(DoubleVanishing, GenericQuinticIsNotInKernel) {
  IntMatrix m = double_vanishing_matrix(zeta11_field());
  std::vector<Integer> v(21, 0);
  v[20] = 1;  // z^5 does not pass through (a^2 : a : 1)
  EXPECT_FALSE(times_column(m, v).is_zero());
}

TEST(DoubleVanishing, LineProductQuinticLiesInKernel) {
  const auto& model = constructed_zeta11();
  IntMatrix m = double_vanishing_matrix(model.system->field);
  // l1 expressed back in the monomial basis
  std::vector<Integer> quintic(21, 0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t c = 0; c < 21; ++c) quintic[c] += model.l1[i] * model.system->basis(i, c);
  EXPECT_TRUE(times_column(m, quintic).is_zero());
}

TEST(BuildModel, Zeta11KernelRanksAndPullback) {
  const auto& model = constructed_zeta11();
  EXPECT_EQ(model.system->basis.rows(), 6u);
  EXPECT_EQ(model.quadrics.size(), 5u);
  for (const auto& pb : pullback(model)) EXPECT_TRUE(pb.is_zero());
  for (const auto& q : model.quadrics) EXPECT_TRUE(q.is_homogeneous(2));
}

TEST(BuildModel, Zeta11LineProductsCollapseModEleven) {
  const auto& model = constructed_zeta11();
  EXPECT_TRUE(proportional(mod_vector(model.l1.span(), 11), mod_vector(model.l2.span(), 11)));
  auto f = fixture("zeta11plus");
  EXPECT_TRUE(proportional(mod_vector(f.l1.span(), 11), mod_vector(f.l2.span(), 11)));
}

TEST(BuildModel, Zeta25HasFivePrimitiveQuadrics) {
  auto model = build_model(zeta25_field());
  ASSERT_EQ(model.quadrics.size(), 5u);
  for (const auto& pb : pullback(model)) EXPECT_TRUE(pb.is_zero());
  EXPECT_NO_THROW(model.validate());
}

TEST(BuildModel, DegenerateRankIsRejected) {
  try {
    require_rank(IntMatrix::identity(5), 6, "quintic system");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "degenerate-orbit");
  }
}

TEST(LineProducts, TwelveCyclesTwoRational) {
  auto field = zeta11_field();
  auto g = galois_conjugates(field);
  auto sys = quintic_system(field);
  auto lp = find_line_products(g, sys);
  EXPECT_EQ(lp.cycles_examined, 12u);
  EXPECT_EQ(lp.rational_cycles, 2u);
  EXPECT_TRUE(lp.l1.is_primitive());
  EXPECT_FALSE(proportional(lp.l1.span(), lp.l2.span()));
}

TEST(LineProducts, SigmaPermutesTheLines) {
  auto field = zeta11_field();
  auto g = galois_conjugates(field);
  auto one = NumberFieldElement::from_rational(field, 1);
  std::array<std::array<NumberFieldElement, 3>, 5> pts;
  for (unsigned i = 0; i < 5; ++i) pts[i] = {g.root(i) * g.root(i), g.root(i), one};
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j) {
      auto line = detail::line_through(pts[i], pts[j]);
      auto image = detail::line_through(pts[(i + 1) % 5], pts[(j + 1) % 5]);
      for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(g.apply_sigma(line[v]), image[v]);
    }
}

TEST(Fixture, PublishedPointsLieOnBothModels) {
  for (const char* name : {"zeta11plus", "zeta25"}) {
    auto m = fixture(name);
    ASSERT_EQ(m.points.size(), 7u);
    for (const auto& p : m.points) {
      std::vector<Integer> pt(p.begin(), p.end());
      for (const auto& q : m.quadrics) EXPECT_EQ(q.evaluate<Integer>(pt, 0, 1), 0) << name;
    }
    EXPECT_EQ(lattice_index(fixture_points(name)), Integer(2)) << name;
  }
}

TEST(Fixture, Zeta11SpotChecks) {
  auto m = fixture("zeta11plus");
  auto q = parse_quadric("u1u4-u2u3-11u2u4-77u4^2+55u4u5-11u5^2");
  EXPECT_EQ(m.quadrics[3], q);
  EXPECT_EQ(q.evaluate<Integer>({-693, -88, -11, 0, 1, 1}, 0, 1), 0);
  for (const auto& quad : m.quadrics) EXPECT_EQ(quad.evaluate<Integer>({1, 0, 0, 0, 0, 0}, 0, 1), 0);
  EXPECT_EQ(m.l1, (HyperplaneForm{1, 22, -363, 165, -1859, 484}));
}

TEST(Fixture, Zeta25L1IsU0ModTwentyFive) {
  auto m = fixture("zeta25");
  EXPECT_EQ(mod_vector(m.l1.span(), 25), (std::vector<Integer>{1, 0, 0, 0, 0, 0}));
}

TEST(Fixture, UnknownNameIsUsageError) { EXPECT_THROW(fixture("zeta7"), UsageError); }

TEST(Fixture, ParserRoundTripsCoefficients) {
  auto q = parse_quadric("u0u3+22u0u4-u1^2-215501u4^2");
  EXPECT_EQ(q.coefficient({0, 0, 0, 0, 2, 0}, 0), -215501);
  EXPECT_EQ(q.coefficient({0, 2, 0, 0, 0, 0}, 0), -1);
  EXPECT_EQ(q.term_count(), 4u);
  EXPECT_THROW(parse_quadric("u0u9"), UsageError);
}

TEST(BuildModel, FiberCountsMatchFixture) {
  const auto& built = constructed_zeta11();
  auto fix = fixture("zeta11plus");
  for (std::uint64_t p : {2, 3, 7, 23})
    EXPECT_EQ(enumerate_fiber(built, p).size(), enumerate_fiber(fix, p).size()) << "p = " << p;
}
