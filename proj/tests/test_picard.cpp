#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "dp5/picard.hpp"

using namespace dp5;

namespace {

const IntMatrix kPrintedAction{{2, 1, 1, 3}, {-1, -1, 0, -1}, {-1, -1, -1, -1}, {-1, 0, -1, -1}};

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

}  // namespace

TEST(Lattice, SignatureAndCanonicalSquare) {
  EXPECT_EQ(PicLattice::square(PicLattice::canonical), 5);
  EXPECT_EQ(PicLattice::square(PicLattice::exceptional(0)), 1);
  EXPECT_EQ(PicLattice::square(PicLattice::exceptional(3)), -1);
}

TEST(MinusOneClasses, ExactlyTen) {
  auto classes = minus_one_classes();
  EXPECT_EQ(classes.size(), 10u);
  EXPECT_EQ(classes[0], (PicClass{0, 1, 0, 0, 0}));
  PicClass l12{1, -1, -1, 0, 0};
  EXPECT_EQ(PicLattice::square(l12), -1);
  EXPECT_EQ(PicLattice::dot(l12, PicLattice::canonical), -1);
  EXPECT_NE(std::find(classes.begin(), classes.end(), l12), classes.end());
}

TEST(MinusOneClasses, WiderSearchFindsNothingNew) { EXPECT_EQ(minus_one_classes(5).size(), 10u); }

TEST(Petersen, RegularWithFifteenEdgesAndSymmetricGroup) {
  auto g = petersen_graph(minus_one_classes());
  EXPECT_EQ(g.edges.size(), 15u);
  for (std::size_t v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
  EXPECT_EQ(g.automorphisms.size(), 120u);
  EXPECT_TRUE(g.pair_model_matches);
  EXPECT_TRUE(g.automorphisms_extend);
}

TEST(Petersen, AutomorphismsFormAGroup) {
  auto g = petersen_graph(minus_one_classes());
  std::set<Permutation> all(g.automorphisms.begin(), g.automorphisms.end());
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    const auto& a = g.automorphisms[rng() % 120];
    const auto& b = g.automorphisms[rng() % 120];
    Permutation ab(10);
    for (std::size_t i = 0; i < 10; ++i) ab[i] = a[b[i]];
    EXPECT_TRUE(all.count(ab));
  }
}

TEST(Sigma, ImageOfL0AndOrder) {
  auto s = interesting_sigma();
  for (std::size_t r = 0; r < 5; ++r) EXPECT_EQ(s.matrix(r, 0), (std::array<long, 5>{2, -1, -1, -1, 0})[r]);
  EXPECT_EQ(s.order, 5u);
  EXPECT_TRUE(preserves_form(s.matrix));
  EXPECT_TRUE(fixes_canonical(s.matrix));
}

TEST(Sigma, TwoOrbitsAreThePentagons) {
  auto s = interesting_sigma();
  auto g = petersen_graph(minus_one_classes());
  ASSERT_EQ(s.orbits.size(), 2u);
  for (const auto& orbit : s.orbits) {
    ASSERT_EQ(orbit.size(), 5u);
    // Each orbit spans a 5-cycle of the graph (in orbit order or as a pentagram).
    for (std::size_t k = 0; k < 5; ++k) {
      bool near = g.adjacent[orbit[k]][orbit[(k + 1) % 5]];
      EXPECT_EQ(g.adjacent[orbit[k]][orbit[(k + 2) % 5]], !near);
      EXPECT_EQ(g.adjacent[orbit[0]][orbit[1]], near);
    }
  }
  std::set<std::size_t> all(s.orbits[0].begin(), s.orbits[0].end());
  all.insert(s.orbits[1].begin(), s.orbits[1].end());
  EXPECT_EQ(all.size(), 10u);
}

TEST(PicU, MatchesPrintedMatrix) {
  auto u = pic_u_action(interesting_sigma().matrix);
  EXPECT_EQ(u.matrix, kPrintedAction);
  EXPECT_EQ(determinant(u.matrix), 1);
  EXPECT_EQ(u.order, 5u);
}

TEST(PicU, NormMapVanishes) {
  IntMatrix id = IntMatrix::identity(4), sum(4, 4), power = id;
  for (int k = 0; k < 5; ++k) {
    sum = sum + power;
    power = power * kPrintedAction;
  }
  EXPECT_TRUE(sum.is_zero());
}

TEST(PicU, RejectsActionMovingK) {
  IntMatrix swap = IntMatrix::identity(5);
  swap(0, 0) = 0;
  swap(0, 1) = 1;
  swap(1, 1) = 0;
  swap(1, 0) = 1;
  EXPECT_THROW(pic_u_action(swap), DomainError);
}

TEST(H1, PrintedActionGivesZ5) {
  auto h = h1_cyclic(kPrintedAction);
  EXPECT_EQ(h.order, 5u);
  EXPECT_TRUE(h.norm_vanishes);
  EXPECT_EQ(h.divisors, (std::vector<Integer>{5}));
  EXPECT_EQ(h.image, (IntMatrix{{1, 0, 0, 2}, {0, 1, 0, 4}, {0, 0, 1, 4}, {0, 0, 0, 5}}));
  EXPECT_EQ(h.to_string(), "Z/5Z");
}

TEST(H1, TrivialActionTreatedAsOrderFive) {
  EXPECT_TRUE(h1_cyclic(IntMatrix::identity(4), 5).trivial());
  EXPECT_TRUE(h1_cyclic(IntMatrix::identity(4)).trivial());
}

TEST(H1, CyclicPermutationModuleIsTrivial) {
  EXPECT_TRUE(h1_cyclic(permutation_matrix({1, 2, 3, 4, 0})).trivial());
}

TEST(H1, SingleOrbitPermutationModulesAreTrivial) {
  std::mt19937 rng(11);
  for (std::size_t n = 2; n <= 8; ++n)
    for (int t = 0; t < 5; ++t) {
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<std::size_t> perm(n);
      for (std::size_t k = 0; k < n; ++k) perm[order[k]] = order[(k + 1) % n];
      EXPECT_TRUE(h1_cyclic(permutation_matrix(perm)).trivial()) << n;
    }
}

TEST(H1, SignActionOnZ) {
  // Z with s = -1: ker(1 + s) = Z, im(1 - s) = 2Z.
  EXPECT_EQ(h1_cyclic(IntMatrix{{-1}}).divisors, (std::vector<Integer>{2}));
}

TEST(H1, InfiniteOrderIsRejected) {
  EXPECT_THROW(h1_cyclic(IntMatrix{{1, 1}, {0, 1}}), DomainError);
  EXPECT_THROW(h1_cyclic(kPrintedAction, 3), DomainError);
}

TEST(H1, ConjugationInvariance) {
  // Conjugating by a unimodular change of basis leaves the group unchanged.
  IntMatrix p{{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 3, 1, 0}, {1, 0, 0, 1}};
  IntMatrix pinv{{1, -2, 0, 0}, {0, 1, 0, 0}, {0, -3, 1, 0}, {-1, 2, 0, 1}};
  ASSERT_EQ(p * pinv, IntMatrix::identity(4));
  EXPECT_EQ(h1_cyclic(p * kPrintedAction * pinv).divisors, (std::vector<Integer>{5}));
}

TEST(Report, EndToEnd) {
  auto r = cohomology_report();
  EXPECT_EQ(r.minus_one_classes.size(), 10u);
  EXPECT_EQ(r.petersen.automorphisms.size(), 120u);
  EXPECT_EQ(r.h1.divisors, (std::vector<Integer>{5}));
}
