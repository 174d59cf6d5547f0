#pragma once

// Command-line front end. run() never exits the process; it returns
// 0 (success), 1 (verify-paper found a failing claim), 2 (usage error) or
// 3 (model or domain error).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dp5/verify.hpp"

namespace dp5::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, domain = 3 };

inline std::vector<Integer> parse_integer_list(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_integer(item));
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not an integer");
    }
  }
  if (out.size() != expected)
    throw UsageError(what + " needs " + std::to_string(expected) + " comma-separated integers, got " + std::to_string(out.size()));
  return out;
}

inline HyperplaneForm parse_form(const std::string& text) {
  auto v = parse_integer_list(text, 6, "--h");
  HyperplaneForm h;
  for (std::size_t i = 0; i < 6; ++i) h[i] = v[i];
  if (h.is_zero()) throw UsageError("--h must be nonzero");
  return h;
}

struct Config {
  std::string model = "fixture:zeta11plus";
  std::string h;
  std::string minpoly;
  std::string output;
  std::uint64_t prime = 0;
  std::uint64_t modulus = 0;
  std::uint64_t bound = 50;
  unsigned jobs = 0;
  bool lines = false;
  bool singular = false;
  bool points = false;
  bool fast = false;
};

namespace detail {

inline io::json invariants(const DelPezzoModel& model, const HyperplaneForm& h, std::uint64_t modulus) {
  const std::string name = model.fixture_name();
  if (modulus == 0) {
    if (!model.is_fixture()) throw UsageError("--modulus is required for constructed models");
    modulus = fixture_data(name).invariant_modulus;
  }
  io::json out{{"model", model.source}, {"h", io::integers(h.coeffs)}, {"modulus", modulus}};
  if (modulus == 25) {
    Invariant25 inv(model);
    Residues hb = reduce_form(h, 25);
    out["image"] = io::to_json(inv.image(hb));
    if (auto cert = inv.tangent_certificate(hb)) out["path"] = "tangent_certificate";
    else out["path"] = "chart";
    return out;
  }
  if (!is_prime(modulus)) throw UsageError("--modulus must be a prime or 25");
  Residues hb = reduce_form(h, modulus);
  if (is_zero_mod(hb, modulus)) throw DomainError("non-unit", "h vanishes identically mod " + std::to_string(modulus));
  SmoothPointInvariant smooth(model, modulus);
  out["smooth_path_image"] = io::to_json(smooth.image(hb));
  if (name == "zeta11plus" && modulus == 11) {
    ChartInvariant11 chart(model);
    auto img = chart.image(hb);
    out["image"] = io::to_json(img);
    out["paths_agree"] = img == smooth.image(hb);
  } else {
    out["image"] = out["smooth_path_image"];
  }
  return out;
}

inline io::json census(const DelPezzoModel& model, std::uint64_t modulus, unsigned jobs) {
  const std::string name = model.fixture_name();
  if (modulus == 0) {
    if (!model.is_fixture()) throw UsageError("--modulus is required for constructed models");
    modulus = fixture_data(name).invariant_modulus;
  }
  if (modulus == 11 && name == "zeta11plus") return io::to_json(census_11(model, jobs));
  if (modulus == 25) return io::to_json(census_25(model, {jobs, 4, 25}));
  if (!is_prime(modulus) || modulus > 13) throw UsageError("--modulus must be 11, 25, or a prime up to 13");
  auto start = std::chrono::steady_clock::now();
  u64 count = census_smooth_path(model, modulus, jobs);
  io::json out{{"model", model.source},
               {"modulus", modulus},
               {"total", io::integer(pow_int(Integer(static_cast<unsigned long>(modulus)), 6) - 1)},
               {"obstructing", count},
               {"path", "smooth_point"},
               {"wall_time_ms", static_cast<long>(::dp5::detail::elapsed_ms(start))},
               {"workers", ::dp5::detail::resolve_workers(jobs)}};
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Integral points, fibres and Brauer-Manin obstructions on quintic del Pezzo models", "dp5"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Config cfg;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "fixture:zeta11plus, fixture:zeta25, or a model JSON file")->capture_default_str();
  };
  auto add_h = [&](CLI::App* sub) {
    sub->add_option("--h", cfg.h, "six comma-separated integers h0,...,h5 (use --h=-1,... for a leading minus)")->required();
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", cfg.output, "write the JSON document here"); };

  auto* construct = app.add_subcommand("construct", "build a model from a cyclic quintic minimal polynomial");
  construct->add_option("--minpoly", cfg.minpoly, "c5,c4,c3,c2,c1,c0 (leading coefficient first)")->required();
  add_output(construct);

  auto* fiber = app.add_subcommand("fiber", "enumerate and classify the fibre over F_p");
  add_model(fiber);
  fiber->add_option("--prime,-p", cfg.prime, "the prime p")->required();
  fiber->add_option("--bound", cfg.bound, "largest prime accepted")->capture_default_str();
  fiber->add_option("--jobs,-j", cfg.jobs, "worker threads (0 = all cores)");
  fiber->add_flag("--lines", cfg.lines, "report lines");
  fiber->add_flag("--singular", cfg.singular, "report singular points");
  fiber->add_flag("--points", cfg.points, "include every point");
  add_output(fiber);

  auto* chart = app.add_subcommand("chart", "affine chart certificate at the ramified prime");
  add_model(chart);
  chart->add_option("--prime,-p", cfg.prime, "the ramified prime (11 or 5)")->required();
  add_output(chart);

  auto* solubility = app.add_subcommand("solubility", "local solubility of the complement of h = 0");
  add_model(solubility);
  add_h(solubility);
  add_output(solubility);

  auto* invariants = app.add_subcommand("invariants", "image of the local invariant map");
  add_model(invariants);
  add_h(invariants);
  invariants->add_option("--modulus", cfg.modulus, "11, 25, or another prime (smooth-point path)");
  add_output(invariants);

  auto* verdict_cmd = app.add_subcommand("verdict", "full obstruction report for h");
  add_model(verdict_cmd);
  add_h(verdict_cmd);
  add_output(verdict_cmd);

  auto* census_cmd = app.add_subcommand("census", "count obstructing hyperplane classes");
  add_model(census_cmd);
  census_cmd->add_option("--modulus", cfg.modulus, "11 or 25 (defaults to the model's)");
  census_cmd->add_option("--jobs,-j", cfg.jobs, "worker threads (0 = all cores)");
  add_output(census_cmd);

  auto* unramified = app.add_subcommand("unramified", "check the invariant vanishes at an unramified prime");
  add_model(unramified);
  unramified->add_option("--prime,-p", cfg.prime, "the prime")->required();
  add_output(unramified);

  auto* cohomology = app.add_subcommand("cohomology", "Picard lattice, Petersen graph and H^1 of the cyclic action");
  add_output(cohomology);

  auto* verify = app.add_subcommand("verify-paper", "recompute every published value and tabulate the comparison");
  verify->add_flag("--fast", cfg.fast, "smaller random samples for the property checks");
  verify->add_option("--jobs,-j", cfg.jobs, "worker threads (0 = all cores)");
  add_output(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    io::json doc;
    int status = ok;
    if (construct->parsed()) {
      auto c = parse_integer_list(cfg.minpoly, 6, "--minpoly");
      std::array<Integer, 6> mp;
      std::copy(c.begin(), c.end(), mp.begin());
      doc = io::to_json(build_model(mp));
    } else if (fiber->parsed()) {
      auto model = io::load_model(cfg.model);
      if (!is_prime(cfg.prime)) throw UsageError(std::to_string(cfg.prime) + " is not prime");
      auto r = classify_fiber(model, cfg.prime, {cfg.bound, cfg.jobs});
      doc = io::to_json(r, cfg.points);
      doc["model"] = model.source;
      if (!cfg.lines) doc.erase("lines"), doc["line_count"] = r.lines.size();
      if (!cfg.singular) doc.erase("singular_points"), doc["singular_point_count"] = r.singular_points.size();
    } else if (chart->parsed()) {
      doc = io::to_json(verify_chart(io::load_model(cfg.model), cfg.prime));
    } else if (solubility->parsed()) {
      auto model = io::load_model(cfg.model);
      auto h = parse_form(cfg.h);
      doc = io::to_json(locally_soluble(model, h));
      doc["model"] = model.source;
      doc["h"] = io::integers(h.coeffs);
    } else if (invariants->parsed()) {
      doc = detail::invariants(io::load_model(cfg.model), parse_form(cfg.h), cfg.modulus);
    } else if (verdict_cmd->parsed()) {
      auto model = io::load_model(cfg.model);
      doc = io::to_json(verdict(model, parse_form(cfg.h)));
    } else if (census_cmd->parsed()) {
      doc = detail::census(io::load_model(cfg.model), cfg.modulus, cfg.jobs);
    } else if (unramified->parsed()) {
      auto model = io::load_model(cfg.model);
      doc = io::to_json(unramified_invariant_check(model, cfg.prime));
      doc["model"] = model.source;
    } else if (cohomology->parsed()) {
      doc = io::to_json(cohomology_report());
    } else if (verify->parsed()) {
      auto report = verify_claims({cfg.fast, cfg.jobs});
      doc = to_json(report);
      status = report.ok() ? ok : mismatch;
    }

    if (cfg.output.empty()) {
      io::write_document(doc, out);
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw UsageError("cannot write " + cfg.output);
      io::write_document(doc, file);
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return domain;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace dp5::cli
