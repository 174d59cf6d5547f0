// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dp5/cli.hpp"

using namespace dp5;
using nlohmann::json;

namespace {

struct Check {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Check&)> body;
};

const DelPezzoModel& z11() {
  static const DelPezzoModel m = fixture("zeta11plus");
  return m;
}
const DelPezzoModel& z25() {
  static const DelPezzoModel m = fixture("zeta25");
  return m;
}

bool on_mod2_hyperplane(const std::vector<ProjPoint>& pts, std::size_t i, std::size_t j) {
  for (const auto& p : pts)
    if ((p.coords[i] + p.coords[j]) % 2) return false;
  return true;
}

void fixture_geometry_11(Check& c) {
  auto f2 = enumerate_fiber(z11(), 2);
  c.equal(f2.size(), 5u, "#X(F2)");
  c.require(on_mod2_hyperplane(f2, 2, 5), "F2-points on u2+u5=0");
  auto r11 = classify_fiber(z11(), 11);
  c.equal(r11.singular_points.size(), 1u, "singular points at 11");
  c.equal(r11.lines.size(), 1u, "lines at 11");
  c.require(r11.lines.size() == 1 && r11.singular_points.size() == 1 && r11.lines[0].contains(r11.singular_points[0]),
            "singular point lies on the line");
  auto cert = verify_chart(z11(), 11);
  c.require(cert.identity_holds && cert.injective, "chart identity certificate");
  c.equal(cert.fiber_points, 133u, "chart + line cover the fibre");
  auto r23 = classify_fiber(z11(), 23);
  c.equal(r23.point_count, 645u, "#X(F23)");
  c.equal(r23.lines.size(), 10u, "lines at 23");
  auto r7 = classify_fiber(z11(), 7);
  c.equal(r7.point_count, 50u, "#X(F7)");
  c.equal(r7.lines.size(), 0u, "lines at 7");
}

void fixture_geometry_25(Check& c) {
  auto f2 = enumerate_fiber(z25(), 2);
  c.equal(f2.size(), 5u, "#X(F2)");
  c.require(on_mod2_hyperplane(f2, 2, 3), "F2-points on u2+u3=0");
  auto r5 = classify_fiber(z25(), 5);
  c.equal(r5.singular_points.size(), 1u, "singular points at 5");
  c.equal(r5.lines.size(), 1u, "lines at 5");
  c.require(r5.lines.size() == 1 && r5.singular_points.size() == 1 && r5.lines[0].contains(r5.singular_points[0]),
            "singular point lies on the line");
  auto cert = verify_chart(z25(), 5);
  c.require(cert.identity_holds && cert.injective, "chart identity certificate");
  c.equal(cert.fiber_points, 31u, "chart + line cover the fibre");
}

void property_suites(Check& c) {
  std::mt19937_64 rng(10);
  VerdictEngine e11(z11()), e25(z25());
  const auto& inv11 = *e11.chart11();
  const auto& smooth = *e11.smooth11();
  const auto& inv25 = *e25.inv25();

  std::size_t bad = 0;
  for (int i = 0; i < 500; ++i) {
    Residues h;
    do {
      for (auto& x : h) x = rng() % 11;
    } while (is_zero_mod(h, 11));
    u64 lambda = 1 + rng() % 10;
    Residues s;
    for (std::size_t j = 0; j < 6; ++j) s[j] = h[j] * lambda % 11;
    bad += inv11.mask(s) != inv11.group().translate(inv11.mask(h), inv11.group().inverse(lambda));
  }
  for (int i = 0; i < 500; ++i) {
    Residues h;
    do {
      for (auto& x : h) x = rng() % 25;
      if (rng() % 2)
        for (std::size_t j = 1; j < 6; ++j) h[j] = 5 * (h[j] % 5);
    } while (h[0] % 5 == 0 && proportional_to_u0(h, 5));
    const auto& g = inv25.group();
    u64 mu = g.units()[rng() % g.units().size()];
    Residues s;
    for (std::size_t j = 0; j < 6; ++j) s[j] = h[j] * mu % 25;
    bad += inv25.image(s).mask != g.translate(inv25.image(h).mask, g.inverse(mu));
  }
  c.equal(bad, 0u, "scaling equivariance failures");

  std::size_t disagree = 0;
  for (int i = 0; i < 100000; ++i) {
    Residues h;
    do {
      for (auto& x : h) x = rng() % 11;
      if (i % 2) h[5] = 0;
    } while (is_zero_mod(h, 11));
    disagree += inv11.mask(h) != smooth.mask(h);
  }
  c.equal(disagree, 0u, "chart vs smooth-point disagreements");

  for (int k = 0; k < 3; ++k)
    c.equal(census_smooth_path(change_coordinates(z11(), random_invertible_mod(6, 11, rng)), 11), 228u,
            "census after coordinate change " + std::to_string(k));

  std::size_t law_failures = 0;
  for (int k = 0; k < 1000; ++k) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<long>(rng() % 61) - 30;
    auto h = hnf(a);
    auto s = snf(a);
    auto ker = saturated_kernel(a);
    Integer du = determinant(h.U);
    bool ok = h.U * a == h.H && (du == 1 || du == -1);
    for (std::size_t r = 0; r < h.rank; ++r) {
      std::size_t pc = h.pivot_cols[r];
      ok = ok && h.H(r, pc) > 0;
      for (std::size_t above = 0; above < r; ++above) ok = ok && h.H(above, pc) >= 0 && h.H(above, pc) < h.H(r, pc);
    }
    ok = ok && s.U * a * s.V == s.D && s.rank == h.rank;
    for (std::size_t i = 1; i < s.divisors.size(); ++i) ok = ok && s.divisors[i] % s.divisors[i - 1] == 0;
    ok = ok && (a * ker.transpose()).is_zero() && ker.rows() + h.rank == cols;
    if (ker.rows()) for (const auto& d : snf(ker).divisors) ok = ok && d == 1;
    law_failures += !ok;
  }
  c.equal(law_failures, 0u, "normal form law failures");
}

void flagged_report(Check& c) {
  std::ostringstream out, err;
  int status = cli::run({"verify-paper", "--fast"}, out, err);
  c.equal(status, 0, "verify-paper exit status");
  json doc = json::parse(out.str());
  VerdictEngine e11(z11());
  auto direct = e11({0, 1, 0, -6, 0, 0});
  bool saw_u1 = false, saw_25 = false;
  for (const auto& row : doc["claims"]) {
    if (row["claim"] == "flagged.zeta11plus.u1-6u3") {
      saw_u1 = true;
      c.equal(row["status"].get<std::string>(), std::string("flagged"), "u1-6u3 status");
      c.equal(row["published"].get<std::string>(), std::string("obstruction_order_5"), "u1-6u3 published verdict");
      c.equal(row["computed"]["chart_path"].get<std::string>(), direct.verdict, "chart path verdict");
      c.equal(row["computed"]["smooth_point_path"].get<std::string>(), direct.verdict, "smooth path verdict");
      c.require(row["computed"]["paths_agree"].get<bool>(), "both paths agree");
    }
    if (row["claim"] == "flagged.zeta25.mod25_condition") {
      saw_25 = true;
      c.equal(row["status"].get<std::string>(), std::string("flagged"), "mod-25 condition status");
      c.equal(row["computed"]["obstructing"].get<u64>(), 176u, "mod-25 resolved count");
      c.equal(row["computed"]["classes_outside_shape"].get<u64>(), 0u, "mod-25 shape rule");
    }
  }
  c.require(saw_u1, "flagged u1-6u3 entry present");
  c.require(saw_25, "flagged mod-25 entry present");
  c.equal(doc["summary"]["fail"].get<int>(), 0, "failing claims");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "H^1 of the cyclic action on Pic U is Z/5", 1.0,
       [](Check& c) {
         IntMatrix printed{{2, 1, 1, 3}, {-1, -1, 0, -1}, {-1, -1, -1, -1}, {-1, 0, -1, -1}};
         auto h = h1_cyclic(printed);
         c.equal(h.to_string(), std::string("Z/5Z"), "H^1");
         c.require(h.image == IntMatrix{{1, 0, 0, 2}, {0, 1, 0, 4}, {0, 0, 1, 4}, {0, 0, 0, 5}}, "im(1 - s) HNF");
       }},
      {2, "ten (-1)-classes, Petersen graph with 120 automorphisms", 5.0,
       [](Check& c) {
         auto classes = minus_one_classes();
         c.equal(classes.size(), 10u, "(-1)-classes");
         c.equal(petersen_graph(classes).automorphisms.size(), 120u, "automorphisms");
         auto s = interesting_sigma();
         c.require(preserves_form(s.matrix) && fixes_canonical(s.matrix), "sigma is an isometry fixing K");
       }},
      {3, "zeta11plus fibres at 2, 7, 11, 23", 120.0, fixture_geometry_11},
      {4, "zeta25 fibres at 2 and 5", 30.0, fixture_geometry_25},
      {5, "census mod 11", 300.0,
       [](Check& c) {
         auto r = census_11(z11(), 1);
         c.equal(r.total, Integer(1771560), "total");
         c.equal(r.obstructing, 228u, "obstructing");
         c.require(r.breakdown == std::map<std::string, u64>{{"constant", 8}, {"separable_quadratic", 220}}, "breakdown");
         c.require(r.paths_agree && r.formula_obstructing == 228, "brute force and classification agree");
         auto r8 = census_11(z11(), 8);
         c.require(r8.obstructing == r.obstructing && r8.breakdown == r.breakdown, "8 workers give the same census");
       }},
      {6, "census mod 25 with tangent validation", 120.0,
       [](Check& c) {
         auto r = census_25(z25(), {1, 4, 25});
         c.equal(r.total, Integer(244125000), "total");
         c.equal(r.obstructing, 176u, "obstructing");
         c.require(r.breakdown == std::map<std::string, u64>{{"constant", 16}, {"image_size_3", 160}}, "breakdown");
         c.equal(r.tangent_directions, 15620u, "tangent directions");
         c.require(r.tangent_validation, "tangent surjectivity");
       }},
      {7, "explicit verdicts", 10.0,
       [](Check& c) {
         VerdictEngine e25(z25()), e11(z11());
         auto r = e25({2, -15, 0, 10, 0, 0});
         c.equal(r.verdict, std::string("obstruction_order_5"), "2u0-15u1+10u3");
         c.require(r.images.at(5).values == std::vector<u64>{2, 12, 22}, "image values {2,12,22}");
         c.equal(e11(z11().l1).verdict, std::string("trivial_brauer_class"), "h = l1 on zeta11plus");
         c.equal(e25(z25().l1).verdict, std::string("trivial_brauer_class"), "h = l1 on zeta25");
         c.equal(e25({0, 0, 1, 1, 0, 0}).verdict, std::string("no_adelic_points"), "u2+u3 on zeta25");
         c.equal(e25({2, 4, 3, 1, 0, 6}).verdict, std::string("no_adelic_points"), "h = u2+u3 mod 2 on zeta25");
       }},
      {8, "model construction from the minimal polynomial", 60.0,
       [](Check& c) {
         auto field = make_quintic_field({1, 1, -4, -3, 3, 1});
         auto sys = quintic_system(field);
         c.equal(sys.basis.rows(), 6u, "quintic kernel rank");
         c.equal(saturated_kernel(substitution_matrix(sys)).rows(), 5u, "quadric kernel rank");
         auto lp = find_line_products(galois_conjugates(field), sys);
         c.equal(lp.rational_cycles, 2u, "rational two-factor products");
         auto built = build_model(field);
         for (std::uint64_t p : {2, 3, 7, 23})
           c.equal(enumerate_fiber(built, p).size(), enumerate_fiber(z11(), p).size(), "count at " + std::to_string(p));
       }},
      {9, "Galois recovery", 30.0,
       [](Check& c) {
         auto f11 = make_quintic_field({1, 1, -4, -3, 3, 1});
         auto alpha = NumberFieldElement::generator(f11);
         auto g = galois_conjugates(f11);
         c.require(g.beta[0] == alpha * alpha - NumberFieldElement::from_rational(f11, 2), "sigma(a) = a^2 - 2");
         c.require(evaluate_minpoly(alpha * alpha - NumberFieldElement::from_rational(f11, 2)).is_zero(), "m(a^2 - 2) = 0");
         auto f25 = make_quintic_field({1, -20, 100, -125, 50, -5});
         auto g25 = galois_conjugates(f25);
         std::set<std::string> roots;
         for (unsigned j = 1; j < 5; ++j) {
           c.require(evaluate_minpoly(g25.root(j)).is_zero(), "root " + std::to_string(j));
           roots.insert(g25.root(j).to_string());
         }
         c.equal(roots.size(), 4u, "distinct conjugates");
       }},
      {10, "property suites", 300.0, property_suites},
      {11, "flagged-claim report", 10.0, flagged_report},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_s) check.failures.push_back("over budget");
    bool ok = check.failures.empty();
    failed += !ok;
    std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), secs,
                cr.budget_s);
    for (const auto& f : check.failures) std::printf("         %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed ? 1 : 0;
}
