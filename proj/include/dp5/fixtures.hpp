#pragma once

// Published integral models of the two interesting quintic del Pezzo
// surfaces, plus a few integral points on each.

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "dp5/arith.hpp"
#include "dp5/multipoly.hpp"

namespace dp5 {

inline const std::vector<std::string>& projective_variables() {
  static const std::vector<std::string> vars{"u0", "u1", "u2", "u3", "u4", "u5"};
  return vars;
}

/// Parses sums of monomials such as "u0u3+22u0u4-u1^2" in u0..u5.
inline IntPoly parse_quadric(std::string_view text) {
  IntPoly out(projective_variables());
  std::size_t i = 0;
  auto read_number = [&] {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  while (i < text.size()) {
    Integer sign = 1;
    if (text[i] == '+' || text[i] == '-') sign = text[i++] == '-' ? -1 : 1;
    std::string digits = read_number();
    Integer coeff = digits.empty() ? Integer(1) : parse_integer(digits);
    Exponent e(6, 0);
    while (i < text.size() && text[i] == 'u') {
      ++i;
      std::string idx = read_number();
      if (idx.size() != 1 || idx[0] > '5') throw UsageError("bad variable in '" + std::string(text) + "'");
      unsigned power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        power = static_cast<unsigned>(std::stoul(read_number()));
      }
      e[idx[0] - '0'] += power;
    }
    if (i < text.size() && text[i] != '+' && text[i] != '-')
      throw UsageError("unexpected character in '" + std::string(text) + "'");
    out.add_term(e, sign * coeff);
  }
  return out;
}

struct FixtureData {
  std::string name;
  std::array<long, 6> minpoly;
  std::array<const char*, 5> quadrics;
  std::array<long, 6> l1;
  std::array<long, 6> l2;
  std::vector<std::array<long, 6>> points;
  /// The single prime where the Brauer class can have a nonzero invariant,
  /// and the modulus its invariant is read off at.
  unsigned ramified_prime;
  unsigned invariant_modulus;
  /// h mod 2 whose hyperplane section contains every point of the fiber at 2.
  std::array<long, 6> bad_class_mod2;
};

inline const std::vector<FixtureData>& fixture_table() {
  static const std::vector<FixtureData> table{
      {"zeta11plus",
       {1, 1, -4, -3, 3, 1},
       {"u0u3+22u0u4+121u0u5-u1^2-121u1u3+2662u1u4-36355u2u4-9306u2u5+10494u3u4-242u3u5-215501u4^2+68123u4u5-"
        "13794u5^2",
        "u0u4+11u0u5-u1u2-11u1u3+242u1u4-3223u2u4-847u2u5+902u3u4-11u3u5-19272u4^2+6413u4u5-1331u5^2",
        "u0u5-u1u3+22u1u4-u2^2-286u2u4-77u2u5+77u3u4-1694u4^2+572u4u5-121u5^2",
        "u1u4-u2u3-11u2u4-77u4^2+55u4u5-11u5^2",
        "u1u5-u2u4-11u2u5-u3^2+11u3u4-44u4^2"},
       {1, 22, -363, 165, -1859, 484},
       {1, 22, -352, 143, -1595, 363},
       {{1, 0, 0, 0, 0, 0},
        {-693, -88, -11, 0, 1, 1},
        {-725, -120, -11, 1, 0, 1},
        {967, 122, 11, -1, 0, 1},
        {-3345, -328, -46, -4, 4, 4},
        {-3497, -331, -34, 1, 1, 0},
        {-6138, -407, -44, 0, 1, 0}},
       11,
       11,
       {0, 0, 1, 0, 0, 1}},
      {"zeta25",
       {1, -20, 100, -125, 50, -5},
       {"u0u3+40u0u4+400u0u5-u1^2-400u1u3+16000u1u4-365050u2u4-49995u2u5+51985u3u4-200u3u5-2029975u4^2+"
        "392250u4u5-39375u5^2",
        "u0u4+20u0u5-u1u2-20u1u3+800u1u4-18125u2u4-2500u2u5+2550u3u4-5u3u5-101015u4^2+19800u4u5-2000u5^2",
        "u0u5-u1u3+40u1u4-u2^2-900u2u4-125u2u5+125u3u4-5000u4^2+985u4u5-100u5^2",
        "u1u4-u2u3-20u2u4-125u4^2+50u4u5-5u5^2",
        "u1u5-u2u4-20u2u5-u3^2+20u3u4-100u4^2"},
       {1, 25, -700, 200, -3425, 575},
       {1, 75, -1675, 375, -5175, 575},
       {{1, 0, 0, 0, 0, 0},
        {1, 5, -1, 5, 0, 1},
        {1, 45, 1, -5, 0, 1},
        {674, 144, 9, -1, -1, -2},
        {885, 155, 10, 0, -1, -2},
        {1243, 196, 12, 2, -1, -3},
        {1424, 242, 13, 1, -1, -6}},
       5,
       25,
       {0, 0, 1, 1, 0, 0}},
  };
  return table;
}

inline const FixtureData& fixture_data(std::string_view name) {
  for (const auto& f : fixture_table())
    if (f.name == name) return f;
  throw UsageError("unknown fixture '" + std::string(name) + "' (expected zeta11plus or zeta25)");
}

inline std::vector<std::vector<Integer>> fixture_points(std::string_view name) {
  std::vector<std::vector<Integer>> out;
  for (const auto& p : fixture_data(name).points) out.emplace_back(p.begin(), p.end());
  return out;
}

/// Minimal polynomial (leading-first) of zeta + zeta^-1 for an odd prime ell,
/// from 1 + sum_{k=1}^{(ell-1)/2} (zeta^k + zeta^-k) = 0 and the recursion
/// zeta^(k+1) + zeta^-(k+1) = a (zeta^k + zeta^-k) - (zeta^(k-1) + zeta^-(k-1)).
inline std::vector<Integer> real_cyclotomic_minpoly(unsigned ell) {
  if (ell < 3 || !is_prime(ell)) throw UsageError("real_cyclotomic_minpoly needs an odd prime");
  using P = std::vector<Integer>;  // low degree first
  auto add = [](P a, const P& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };
  P prev{2}, cur{0, 1}, sum{1};
  sum = add(sum, cur);
  for (unsigned k = 2; k <= (ell - 1) / 2; ++k) {
    P next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    sum = add(sum, next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return P(sum.rbegin(), sum.rend());
}

}  // namespace dp5
