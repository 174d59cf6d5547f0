#pragma once

// Integral models X in P^5 of interesting quintic del Pezzo surfaces: the
// quintic linear system through the doubled Galois orbit, the quadrics it
// satisfies, and the two rational line-product sections.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dp5/fixtures.hpp"
#include "dp5/galois.hpp"
#include "dp5/int_matrix.hpp"
#include "dp5/multipoly.hpp"
#include "dp5/number_field.hpp"

namespace dp5 {

inline const std::vector<std::string>& plane_variables() {
  static const std::vector<std::string> vars{"x", "y", "z"};
  return vars;
}

inline const std::vector<Exponent>& quintic_basis() {
  static const auto basis = monomial_basis(3, 5);
  return basis;
}

inline const std::vector<Exponent>& decic_basis() {
  static const auto basis = monomial_basis(3, 10);
  return basis;
}

inline const std::vector<Exponent>& quadric_basis() {
  static const auto basis = monomial_basis(6, 2);
  return basis;
}

/// h = sum h_i u_i.
struct HyperplaneForm {
  std::array<Integer, 6> coeffs{};

  HyperplaneForm() = default;
  explicit HyperplaneForm(std::array<Integer, 6> c) : coeffs(std::move(c)) {}
  HyperplaneForm(std::initializer_list<long> c) {
    if (c.size() != 6) throw UsageError("a hyperplane form needs 6 coefficients");
    std::size_t i = 0;
    for (long v : c) coeffs[i++] = v;
  }
  static HyperplaneForm from_vector(std::span<const Integer> v) {
    if (v.size() != 6) throw UsageError("a hyperplane form needs 6 coefficients");
    HyperplaneForm h;
    std::copy(v.begin(), v.end(), h.coeffs.begin());
    return h;
  }

  const Integer& operator[](std::size_t i) const { return coeffs[i]; }
  Integer& operator[](std::size_t i) { return coeffs[i]; }
  std::span<const Integer> span() const { return coeffs; }

  bool is_zero() const { return content(coeffs) == 0; }
  bool is_primitive() const { return dp5::is_primitive(coeffs); }

  Integer operator()(std::span<const Integer> point) const {
    Integer s = 0;
    for (std::size_t i = 0; i < 6; ++i) s += coeffs[i] * point[i];
    return s;
  }

  HyperplaneForm operator*(const Integer& k) const {
    HyperplaneForm r = *this;
    for (auto& c : r.coeffs) c *= k;
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + coeffs[i].get_str();
    return s;
  }

  friend bool operator==(const HyperplaneForm&, const HyperplaneForm&) = default;
};

/// Six quintics spanning the forms that are singular at every point of the
/// orbit; rows of `basis` are coordinates in quintic_basis().
struct QuinticSystem {
  FieldPtr field;
  IntMatrix basis;

  IntPoly quintic(std::size_t i) const {
    return IntPoly::from_coefficients(plane_variables(), quintic_basis(), basis.row_vector(i));
  }
};

struct DelPezzoModel {
  /// "fixture:<name>" or "constructed".
  std::string source;
  std::array<Integer, 6> minpoly{};
  std::vector<IntPoly> quadrics;
  HyperplaneForm l1;
  HyperplaneForm l2;
  std::optional<QuinticSystem> system;
  /// Known integral points (fixtures only).
  std::vector<std::array<Integer, 6>> points;

  bool is_fixture() const { return source.rfind("fixture:", 0) == 0; }
  std::string fixture_name() const { return is_fixture() ? source.substr(8) : std::string(); }

  /// 5 x 21 coefficient matrix in quadric_basis().
  IntMatrix quadric_matrix() const {
    std::vector<std::vector<Integer>> rows;
    for (const auto& q : quadrics) rows.push_back(q.coefficients_in(quadric_basis(), Integer(0)));
    return IntMatrix::from_rows(rows, quadric_basis().size());
  }

  /// Checks the structural invariants; throws DomainError("invalid-model").
  void validate() const {
    if (quadrics.size() != 5) throw DomainError("invalid-model", "expected five quadrics");
    for (const auto& q : quadrics) {
      if (q.variables() != projective_variables() || !q.is_homogeneous(2) || q.is_zero())
        throw DomainError("invalid-model", "quadrics must be nonzero quadratic forms in u0..u5");
      std::vector<Integer> c;
      for (const auto& [e, v] : q.terms()) c.push_back(v);
      if (!is_primitive(c)) throw DomainError("invalid-model", "quadric is not primitive: " + q.to_string());
    }
    if (!l1.is_primitive() || !l2.is_primitive()) throw DomainError("invalid-model", "l1 and l2 must be primitive");
    if (proportional(l1.span(), l2.span())) throw DomainError("invalid-model", "l1 and l2 are proportional");
  }
};

/// The three conditions f, df/dx, df/dy at (a^2, a, 1) on a general quintic,
/// each split over the power basis: row 5*k + t is coordinate t of condition k.
inline IntMatrix double_vanishing_matrix(const FieldPtr& field) {
  const auto& basis = quintic_basis();
  std::vector<NumberFieldElement> alpha_pow{NumberFieldElement::from_rational(field, 1)};
  const auto alpha = NumberFieldElement::generator(field);
  for (int i = 1; i <= 10; ++i) alpha_pow.push_back(alpha_pow.back() * alpha);

  IntMatrix m(15, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const unsigned a = basis[j][0], b = basis[j][1];
    std::array<NumberFieldElement, 3> cond{
        alpha_pow[2 * a + b],
        a ? alpha_pow[2 * (a - 1) + b] * static_cast<long>(a) : NumberFieldElement(field),
        b ? alpha_pow[2 * a + b - 1] * static_cast<long>(b) : NumberFieldElement(field)};
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t t = 0; t < 5; ++t) {
        const Rational& c = cond[k][t];
        if (c.get_den() != 1) throw DomainError("invalid-minpoly", "non-integral power basis coordinate");
        m(5 * k + t, j) = c.get_num();
      }
  }
  return m;
}

/// Throws "degenerate-orbit" unless the kernel basis has the expected rank.
inline const IntMatrix& require_rank(const IntMatrix& kernel, std::size_t expected, const std::string& what) {
  if (kernel.rows() != expected)
    throw DomainError("degenerate-orbit", what + " has rank " + std::to_string(kernel.rows()) + ", expected " +
                                              std::to_string(expected));
  return kernel;
}

inline QuinticSystem quintic_system(const FieldPtr& field) {
  return {field, require_rank(saturated_kernel(double_vanishing_matrix(field)), 6, "quintic system")};
}

/// 66 x 21 matrix sending the quadratic monomial u_i u_j to q_i q_j.
inline IntMatrix substitution_matrix(const QuinticSystem& sys) {
  std::vector<IntPoly> q;
  for (std::size_t i = 0; i < 6; ++i) q.push_back(sys.quintic(i));
  const auto& quad = quadric_basis();
  const auto& dec = decic_basis();
  IntMatrix m(dec.size(), quad.size());
  for (std::size_t c = 0; c < quad.size(); ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < 6; ++v)
      for (unsigned k = 0; k < quad[c][v]; ++k) idx.push_back(v);
    auto coeffs = (q[idx[0]] * q[idx[1]]).coefficients_in(dec, Integer(0));
    for (std::size_t r = 0; r < dec.size(); ++r) m(r, c) = coeffs[r];
  }
  return m;
}

struct LineProducts {
  HyperplaneForm l1;  // pentagon {i, i+1}
  HyperplaneForm l2;  // pentagram {i, i+2}
  std::size_t cycles_examined = 0;
  std::size_t rational_cycles = 0;
};

namespace detail {

using KPoly = MultiPoly<NumberFieldElement>;

/// Coefficients (a, b, c) of the line a x + b y + c z through P and Q.
inline std::array<NumberFieldElement, 3> line_through(const std::array<NumberFieldElement, 3>& p,
                                                      const std::array<NumberFieldElement, 3>& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

/// The 12 Hamiltonian cycles of K5, as vertex orders starting at 0.
inline std::vector<std::array<unsigned, 5>> five_cycles() {
  std::vector<std::array<unsigned, 5>> out;
  std::array<unsigned, 4> rest{1, 2, 3, 4};
  do {
    if (rest[0] < rest[3]) out.push_back({0, rest[0], rest[1], rest[2], rest[3]});
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace detail

inline LineProducts find_line_products(const GaloisConjugates& galois, const QuinticSystem& sys) {
  const FieldPtr& field = sys.field;
  const auto& vars = plane_variables();
  const auto one = NumberFieldElement::from_rational(field, 1);

  std::array<std::array<NumberFieldElement, 3>, 5> pts;
  for (unsigned i = 0; i < 5; ++i) {
    auto r = galois.root(i);
    pts[i] = {r * r, r, one};
  }
  std::array<std::array<detail::KPoly, 5>, 5> lines;
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) {
      if (i == j) continue;
      auto abc = detail::line_through(pts[i], pts[j]);
      detail::KPoly form(vars);
      for (std::size_t v = 0; v < 3; ++v) form = form + detail::KPoly::variable(vars, v, one).scaled(abc[v]);
      lines[i][j] = form;
    }

  LineProducts out;
  const std::array<unsigned, 5> pentagon{0, 1, 2, 3, 4}, pentagram{0, 2, 4, 1, 3};
  std::optional<HyperplaneForm> found_pentagon, found_pentagram;
  for (const auto& cyc : detail::five_cycles()) {
    ++out.cycles_examined;
    detail::KPoly prod = detail::KPoly::constant(vars, one);
    for (std::size_t e = 0; e < 5; ++e) prod = prod * lines[cyc[e]][cyc[(e + 1) % 5]];
    bool rational = std::all_of(prod.terms().begin(), prod.terms().end(),
                                [](const auto& t) { return t.second.is_rational(); });
    if (!rational) continue;
    ++out.rational_cycles;
    std::vector<Rational> coeffs;
    for (const auto& e : quintic_basis()) coeffs.push_back(prod.coefficient(e, NumberFieldElement(field))[0]);
    auto quintic = primitive_from_rationals(coeffs);
    auto coords = solve_in_hermite_basis(sys.basis, quintic);
    if (!coords) throw DomainError("rationality-failure", "line product is not in the quintic system");
    auto form = HyperplaneForm::from_vector(primitive_part(*coords));
    if (cyc == pentagon) found_pentagon = form;
    if (cyc == pentagram) found_pentagram = form;
  }
  if (out.rational_cycles != 2 || !found_pentagon || !found_pentagram)
    throw DomainError("rationality-failure", std::to_string(out.rational_cycles) + " rational two-factor products, expected 2");
  out.l1 = *found_pentagon;
  out.l2 = *found_pentagram;
  return out;
}

inline DelPezzoModel build_model(const FieldPtr& field, const GaloisOptions& opts = {}) {
  GaloisConjugates galois = galois_conjugates(field, opts);
  QuinticSystem sys = quintic_system(field);
  IntMatrix relations = require_rank(saturated_kernel(substitution_matrix(sys)), 5, "quadric relation lattice");
  DelPezzoModel model;
  model.source = "constructed";
  model.minpoly = field->coefficients();
  for (std::size_t r = 0; r < 5; ++r)
    model.quadrics.push_back(
        IntPoly::from_coefficients(projective_variables(), quadric_basis(), relations.row_vector(r)));
  auto lp = find_line_products(galois, sys);
  model.l1 = lp.l1;
  model.l2 = lp.l2;
  model.system = std::move(sys);
  model.validate();
  return model;
}

inline DelPezzoModel build_model(const std::array<Integer, 6>& minpoly, const GaloisOptions& opts = {}) {
  return build_model(make_quintic_field(minpoly), opts);
}

inline DelPezzoModel fixture(std::string_view name) {
  const FixtureData& data = fixture_data(name);
  DelPezzoModel m;
  m.source = "fixture:" + data.name;
  std::copy(data.minpoly.begin(), data.minpoly.end(), m.minpoly.begin());
  for (const char* q : data.quadrics) m.quadrics.push_back(parse_quadric(q));
  std::copy(data.l1.begin(), data.l1.end(), m.l1.coeffs.begin());
  std::copy(data.l2.begin(), data.l2.end(), m.l2.coeffs.begin());
  for (const auto& p : data.points) {
    std::array<Integer, 6> pt;
    std::copy(p.begin(), p.end(), pt.begin());
    m.points.push_back(pt);
  }
  m.validate();
  return m;
}

/// Each quadric composed with the parametrization, as polynomials in x, y, z.
inline std::vector<IntPoly> pullback(const DelPezzoModel& model) {
  if (!model.system) throw UsageError("pullback needs a constructed model");
  std::vector<IntPoly> q;
  for (std::size_t i = 0; i < 6; ++i) q.push_back(model.system->quintic(i));
  std::vector<IntPoly> out;
  for (const auto& quad : model.quadrics) out.push_back(quad.substitute(q, Integer(1)));
  return out;
}

/// The model pulled back along u -> A u: quadrics q(A u), forms l(A u).
/// Stored points and the quintic system are dropped.
inline DelPezzoModel change_coordinates(const DelPezzoModel& model, const IntMatrix& a) {
  if (a.rows() != 6 || a.cols() != 6) throw UsageError("coordinate change must be 6x6");
  const auto vars = projective_variables();
  std::vector<IntPoly> images;
  for (std::size_t i = 0; i < 6; ++i) {
    IntPoly row(vars);
    for (std::size_t j = 0; j < 6; ++j) row = row + IntPoly::variable(vars, j, Integer(1)).scaled(a(i, j));
    images.push_back(row);
  }
  DelPezzoModel out;
  out.source = "transformed:" + model.source;
  out.minpoly = model.minpoly;
  for (const auto& q : model.quadrics) out.quadrics.push_back(q.substitute(images, Integer(1)));
  auto pull = [&](const HyperplaneForm& l) {
    HyperplaneForm r;
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t i = 0; i < 6; ++i) r[j] += l[i] * a(i, j);
    return r;
  };
  out.l1 = pull(model.l1);
  out.l2 = pull(model.l2);
  return out;
}

}  // namespace dp5
