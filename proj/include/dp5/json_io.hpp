#pragma once

// JSON documents for models and reports. Objects use sorted keys, so output is
// byte-stable across runs. Integers that do not fit in 64 bits are written as
// decimal strings; readers accept either form.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dp5/obstruction.hpp"
#include "dp5/picard.hpp"

namespace dp5::io {

using nlohmann::json;

inline json integer(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline Integer read_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw DomainError("invalid-model", "expected an integer, got " + j.dump());
}

template <class Range>
json integers(const Range& r) {
  json out = json::array();
  for (const auto& x : r) out.push_back(integer(Integer(x)));
  return out;
}

inline json matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(integers(m.row_vector(r)));
  return out;
}

inline json point(const ProjPoint& p) { return json(p.coords); }

// ------------------------------------------------------------------ models

inline json to_json(const DelPezzoModel& m) {
  json q = json::array();
  IntMatrix qm = m.quadric_matrix();
  for (std::size_t r = 0; r < qm.rows(); ++r) q.push_back(integers(qm.row_vector(r)));
  return {{"source", m.source},
          {"minpoly", integers(m.minpoly)},
          {"quadrics", q},
          {"l1", integers(m.l1.coeffs)},
          {"l2", integers(m.l2.coeffs)}};
}

inline HyperplaneForm read_form(const json& j) {
  if (!j.is_array() || j.size() != 6) throw DomainError("invalid-model", "a linear form needs 6 coefficients");
  HyperplaneForm h;
  for (std::size_t i = 0; i < 6; ++i) h[i] = read_integer(j[i]);
  return h;
}

inline DelPezzoModel model_from_json(const json& j) {
  try {
    DelPezzoModel m;
    m.source = j.value("source", std::string("constructed"));
    if (m.is_fixture()) {
      // Fixture documents round-trip to the hardcoded data, which also
      // carries the stored points.
      DelPezzoModel f = fixture(m.fixture_name());
      if (!(to_json(f) == j)) throw DomainError("invalid-model", "document does not match " + m.source);
      return f;
    }
    const auto& mp = j.at("minpoly");
    if (!mp.is_array() || mp.size() != 6) throw DomainError("invalid-model", "minpoly needs 6 coefficients");
    for (std::size_t i = 0; i < 6; ++i) m.minpoly[i] = read_integer(mp[i]);
    const auto& basis = quadric_basis();
    for (const auto& row : j.at("quadrics")) {
      if (!row.is_array() || row.size() != basis.size())
        throw DomainError("invalid-model", "each quadric needs " + std::to_string(basis.size()) + " coefficients");
      std::vector<Integer> c;
      for (const auto& x : row) c.push_back(read_integer(x));
      m.quadrics.push_back(IntPoly::from_coefficients(projective_variables(), basis, c));
    }
    m.l1 = read_form(j.at("l1"));
    m.l2 = read_form(j.at("l2"));
    m.validate();
    return m;
  } catch (const json::exception& e) {
    throw DomainError("invalid-model", e.what());
  }
}

/// "fixture:<name>" or a path to a model document.
inline DelPezzoModel load_model(const std::string& selector) {
  if (selector.rfind("fixture:", 0) == 0) return fixture(selector.substr(8));
  std::ifstream in(selector);
  if (!in) throw UsageError("cannot open model file " + selector);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("invalid-model", selector + ": " + e.what());
  }
  return model_from_json(j);
}

inline void write_document(const json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

// ------------------------------------------------------------------ fibers

inline json to_json(const Line& l) {
  json pts = json::array();
  for (const auto& p : l.points) pts.push_back(point(p));
  return {{"span", {point(l.span[0]), point(l.span[1])}}, {"point_count", l.points.size()}};
}

inline json to_json(const FiberReport& r, bool with_points = false) {
  json sing = json::array(), lines = json::array();
  for (const auto& p : r.singular_points) sing.push_back(point(p));
  for (const auto& l : r.lines) lines.push_back(to_json(l));
  json out{{"prime", r.prime},
           {"point_count", r.point_count},
           {"classification", r.classification},
           {"singular_points", sing},
           {"lines", lines},
           {"minpoly_factor_degrees", r.minpoly_pattern.degrees}};
  if (with_points) {
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(point(p));
    out["points"] = pts;
  }
  return out;
}

inline json to_json(const ChartCertificate& c) {
  return {{"prime", c.prime},           {"identity_holds", c.identity_holds}, {"injective", c.injective},
          {"chart_points", c.chart_points}, {"line_points", c.line_points},   {"fiber_points", c.fiber_points},
          {"line", to_json(c.line)}};
}

// ------------------------------------------------------------- obstruction

inline json to_json(const InvariantImage& img) {
  ResidueClassGroup g(img.modulus);
  json classes = json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c)
    if (img.mask >> c & 1u) classes.push_back(g.classes()[c]);
  json out{{"modulus", img.modulus}, {"classes", classes}, {"contains_zero", img.contains_zero()}, {"size", img.size()}};
  if (!img.values.empty()) out["values"] = img.values;
  return out;
}

inline json to_json(const LocalSolubility& s) {
  json out{{"locally_soluble", s.soluble}, {"stored_point_gcd", integer(s.stored_point_gcd)}};
  if (s.failing_place) out["failing_place"] = *s.failing_place;
  if (s.two_adic_point) out["two_adic_point"] = point(*s.two_adic_point);
  return out;
}

inline json to_json(const ObstructionReport& r) {
  json images = json::object();
  for (const auto& [p, img] : r.images) images[std::to_string(p)] = to_json(img);
  json out{{"model", r.model},
           {"h", integers(r.h.coeffs)},
           {"locally_soluble", r.locally_soluble},
           {"geometrically_irreducible", r.geometrically_irreducible},
           {"images", images},
           {"verdict", r.verdict}};
  if (r.failing_place) out["failing_place"] = *r.failing_place;
  if (r.smooth_path_image) out["smooth_path_image"] = to_json(*r.smooth_path_image);
  if (r.paper_claim_comparison) {
    const auto& c = *r.paper_claim_comparison;
    out["paper_claim_comparison"] = {
        {"claim", c.claim}, {"paper_verdict", c.paper_verdict}, {"computed_verdict", c.computed_verdict}, {"status", c.status}};
  }
  return out;
}

inline json to_json(const CensusResult& r) {
  json out{{"model", r.model},
           {"modulus", r.modulus},
           {"total", integer(r.total)},
           {"obstructing", r.obstructing},
           {"breakdown", r.breakdown},
           {"independent_obstructing", r.formula_obstructing},
           {"paths_agree", r.paths_agree},
           {"wall_time_ms", static_cast<long>(r.wall_time_ms)},
           {"workers", r.workers}};
  if (r.modulus == 25)
    out["tangent_validation"] = {{"directions", r.tangent_directions},
                                 {"passed", r.tangent_validation},
                                 {"brute_force_samples", r.brute_force_samples}};
  return out;
}

inline json to_json(const UnramifiedCheck& c) {
  return {{"prime", c.prime},
          {"kind", c.kind},
          {"fiber_points", c.fiber_points},
          {"l1_zero_points", c.l1_zero_points},
          {"invariant_zero", c.invariant_zero}};
}

// --------------------------------------------------------------- cohomology

inline json to_json(const CyclicCohomology& h) {
  return {{"order", h.order},
          {"divisors", integers(h.divisors)},
          {"group", h.to_string()},
          {"norm_vanishes", h.norm_vanishes},
          {"image_hnf", matrix(h.image)},
          {"kernel_basis", matrix(h.kernel)}};
}

inline json to_json(const CohomologyReport& r) {
  json classes = json::array(), names = json::array(), edges = json::array();
  for (const auto& c : r.minus_one_classes) {
    classes.push_back(c);
    names.push_back(PicLattice::name(c));
  }
  for (const auto& [a, b] : r.petersen.edges) edges.push_back({a, b});
  return {{"minus_one_classes", classes},
          {"class_names", names},
          {"petersen",
           {{"edges", edges},
            {"aut_order", r.petersen.automorphisms.size()},
            {"pair_model_matches", r.petersen.pair_model_matches},
            {"automorphisms_extend", r.petersen.automorphisms_extend}}},
          {"sigma", matrix(r.sigma.matrix)},
          {"sigma_order", r.sigma.order},
          {"sigma_orbits", r.sigma.orbits},
          {"sigma_pic_u", matrix(r.sigma_u.matrix)},
          {"h1", to_json(r.h1)}};
}

}  // namespace dp5::io
