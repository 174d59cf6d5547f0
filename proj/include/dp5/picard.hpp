#pragma once

// Picard lattice of a quintic del Pezzo surface in the basis L0..L4 (L0 the
// pullback of a line, L1..L4 the exceptional classes), its ten (-1)-classes,
// their intersection graph and the cyclic action of the order-5 generator.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dp5/int_matrix.hpp"

namespace dp5 {

using PicClass = std::array<long, 5>;

class PicLattice {
 public:
  static constexpr std::size_t rank = 5;
  static constexpr std::array<long, 5> form_diagonal{1, -1, -1, -1, -1};
  static constexpr PicClass canonical{-3, 1, 1, 1, 1};

  static long dot(const PicClass& a, const PicClass& b) {
    long s = 0;
    for (std::size_t i = 0; i < rank; ++i) s += form_diagonal[i] * a[i] * b[i];
    return s;
  }
  static long square(const PicClass& a) { return dot(a, a); }

  static PicClass exceptional(int i) {
    PicClass v{};
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  }
  /// L_ij = L0 - L_i - L_j, the strict transform of the line through two blown-up points.
  static PicClass line_through(int i, int j) {
    PicClass v{1, 0, 0, 0, 0};
    v[static_cast<std::size_t>(i)] = -1;
    v[static_cast<std::size_t>(j)] = -1;
    return v;
  }

  static IntMatrix gram() {
    IntMatrix g(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) g(i, i) = form_diagonal[i];
    return g;
  }

  /// "L3", "L14", or the coordinate vector for anything else.
  static std::string name(const PicClass& v) {
    for (int i = 1; i <= 4; ++i)
      if (v == exceptional(i)) return "L" + std::to_string(i);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        if (v == line_through(i, j)) return "L" + std::to_string(i) + std::to_string(j);
    std::string s = "(";
    for (std::size_t i = 0; i < rank; ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  }
};

/// Exhaustive search over coefficient vectors in [-bound, bound]^5; returned
/// in the order L1..L4, L12, L13, L14, L23, L24, L34.
inline std::vector<PicClass> minus_one_classes(long bound = 3) {
  std::vector<PicClass> found;
  PicClass v{};
  const long width = 2 * bound + 1;
  long total = 1;
  for (std::size_t i = 0; i < PicLattice::rank; ++i) total *= width;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (std::size_t i = 0; i < PicLattice::rank; ++i) {
      v[i] = c % width - bound;
      c /= width;
    }
    if (PicLattice::square(v) == -1 && PicLattice::dot(v, PicLattice::canonical) == -1) found.push_back(v);
  }
  std::vector<PicClass> ordered;
  for (int i = 1; i <= 4; ++i) ordered.push_back(PicLattice::exceptional(i));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) ordered.push_back(PicLattice::line_through(i, j));
  std::vector<PicClass> sorted_found = found, sorted_expected = ordered;
  std::sort(sorted_found.begin(), sorted_found.end());
  std::sort(sorted_expected.begin(), sorted_expected.end());
  if (sorted_found != sorted_expected)
    throw DomainError("lattice-mismatch", "(-1)-class search found " + std::to_string(found.size()) + " classes");
  return ordered;
}

inline std::size_t class_index(const std::vector<PicClass>& classes, const PicClass& v) {
  auto it = std::find(classes.begin(), classes.end(), v);
  if (it == classes.end()) throw DomainError("lattice-mismatch", PicLattice::name(v) + " is not a (-1)-class");
  return static_cast<std::size_t>(it - classes.begin());
}

using Permutation = std::vector<std::size_t>;

/// Matrix (acting on column vectors) sending classes[k] to classes[perm[k]],
/// built from the unimodular basis L1, L2, L3, L4, L12 using L0 = L12 + L1 + L2.
/// Throws if the result does not respect every class.
inline IntMatrix lattice_map(const std::vector<PicClass>& classes, const Permutation& perm) {
  auto image = [&](const PicClass& v) { return classes[perm[class_index(classes, v)]]; };
  IntMatrix m(5, 5);
  PicClass l0{};
  for (int b : {1, 2}) {
    auto im = image(PicLattice::exceptional(b));
    for (std::size_t r = 0; r < 5; ++r) l0[r] += im[r];
  }
  auto im12 = image(PicLattice::line_through(1, 2));
  for (std::size_t r = 0; r < 5; ++r) m(r, 0) = l0[r] + im12[r];
  for (int i = 1; i <= 4; ++i) {
    auto im = image(PicLattice::exceptional(i));
    for (std::size_t r = 0; r < 5; ++r) m(r, static_cast<std::size_t>(i)) = im[r];
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    IntMatrix col(5, 1);
    for (std::size_t r = 0; r < 5; ++r) col(r, 0) = classes[k][r];
    IntMatrix out = m * col;
    for (std::size_t r = 0; r < 5; ++r)
      if (out(r, 0) != classes[perm[k]][r])
        throw DomainError("lattice-mismatch", "permutation is not induced by a lattice map");
  }
  return m;
}

inline bool preserves_form(const IntMatrix& m) { return m.transpose() * PicLattice::gram() * m == PicLattice::gram(); }

inline bool fixes_canonical(const IntMatrix& m) {
  IntMatrix k(5, 1);
  for (std::size_t r = 0; r < 5; ++r) k(r, 0) = PicLattice::canonical[r];
  return m * k == k;
}

struct PetersenGraph {
  std::vector<PicClass> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<bool>> adjacent;
  std::vector<Permutation> automorphisms;
  /// Vertex label as a 2-subset of {1..5}; adjacency is disjointness.
  std::vector<std::pair<int, int>> pair_labels;
  bool pair_model_matches = false;
  bool automorphisms_extend = false;

  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::count(adjacent[v].begin(), adjacent[v].end(), true)); }
};

namespace detail {

inline void extend_automorphism(const std::vector<std::vector<bool>>& adj, Permutation& perm, std::vector<bool>& used,
                                std::size_t k, std::vector<Permutation>& out) {
  const std::size_t n = adj.size();
  if (k == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (used[t]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) ok = adj[k][j] == adj[t][perm[j]];
    if (!ok) continue;
    used[t] = true;
    perm[k] = t;
    extend_automorphism(adj, perm, used, k + 1, out);
    used[t] = false;
  }
}

}  // namespace detail

inline PetersenGraph petersen_graph(const std::vector<PicClass>& classes) {
  PetersenGraph g;
  g.vertices = classes;
  const std::size_t n = classes.size();
  g.adjacent.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (PicLattice::dot(classes[a], classes[b]) == 1) {
        g.adjacent[a][b] = g.adjacent[b][a] = true;
        g.edges.emplace_back(a, b);
      }

  Permutation perm(n);
  std::vector<bool> used(n, false);
  detail::extend_automorphism(g.adjacent, perm, used, 0, g.automorphisms);

  // L_i <-> {i,5}; L_ij <-> the complement of {i,j} in {1,2,3,4}.
  for (const auto& v : classes) {
    if (v[0] == 0) {
      int i = static_cast<int>(std::find(v.begin(), v.end(), 1) - v.begin());
      g.pair_labels.emplace_back(i, 5);
    } else {
      std::vector<int> rest;
      for (int i = 1; i <= 4; ++i)
        if (v[static_cast<std::size_t>(i)] == 0) rest.push_back(i);
      g.pair_labels.emplace_back(rest.at(0), rest.at(1));
    }
  }
  g.pair_model_matches = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      auto [i, j] = g.pair_labels[a];
      auto [k, l] = g.pair_labels[b];
      bool disjoint = i != k && i != l && j != k && j != l;
      if (disjoint != g.adjacent[a][b]) g.pair_model_matches = false;
    }

  g.automorphisms_extend = true;
  for (const auto& p : g.automorphisms) {
    IntMatrix m = lattice_map(classes, p);
    if (!preserves_form(m) || !fixes_canonical(m)) g.automorphisms_extend = false;
  }
  return g;
}

inline std::size_t matrix_order(const IntMatrix& m, std::size_t bound = 60) {
  IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix power = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (power == id) return k;
    power = power * m;
  }
  throw DomainError("infinite-order", "matrix has no order up to " + std::to_string(bound));
}

struct GaloisAction {
  IntMatrix matrix;
  std::size_t order = 0;
  /// Orbits on the (-1)-classes, as index lists in cycle order (5x5 case only).
  std::vector<std::vector<std::size_t>> orbits;
};

/// The order-5 action whose two orbits on the (-1)-classes are
/// L1 -> L12 -> L2 -> L23 -> L14 and L3 -> L4 -> L13 -> L34 -> L24.
inline GaloisAction interesting_sigma() {
  auto classes = minus_one_classes();
  auto L = [](int i) { return PicLattice::exceptional(i); };
  auto LL = [](int i, int j) { return PicLattice::line_through(i, j); };
  const std::vector<std::vector<PicClass>> cycles{{L(1), LL(1, 2), L(2), LL(2, 3), LL(1, 4)},
                                                  {L(3), L(4), LL(1, 3), LL(3, 4), LL(2, 4)}};
  Permutation perm(classes.size());
  std::vector<std::vector<std::size_t>> orbits;
  for (const auto& cyc : cycles) {
    std::vector<std::size_t> orbit;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      orbit.push_back(class_index(classes, cyc[k]));
      perm[class_index(classes, cyc[k])] = class_index(classes, cyc[(k + 1) % cyc.size()]);
    }
    orbits.push_back(std::move(orbit));
  }
  GaloisAction out{lattice_map(classes, perm), 0, std::move(orbits)};
  out.order = matrix_order(out.matrix);
  if (!preserves_form(out.matrix) || !fixes_canonical(out.matrix))
    throw DomainError("lattice-mismatch", "sigma is not an isometry fixing K");
  return out;
}

/// Action on Pic / Z K in the basis [L0],[L1],[L2],[L3], using [L4] = 3[L0]-[L1]-[L2]-[L3].
/// Columns are images of basis vectors.
inline GaloisAction pic_u_action(const IntMatrix& sigma) {
  if (sigma.rows() != 5 || sigma.cols() != 5) throw UsageError("expected a 5x5 action");
  if (!fixes_canonical(sigma)) throw DomainError("sigma-moves-K", "action does not fix the canonical class");
  IntMatrix out(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    const Integer& l4 = sigma(4, c);
    out(0, c) = sigma(0, c) + 3 * l4;
    for (std::size_t r = 1; r < 4; ++r) out(r, c) = sigma(r, c) - l4;
  }
  return {out, matrix_order(out), {}};
}

struct CyclicCohomology {
  std::size_t order = 0;
  bool norm_vanishes = false;
  IntMatrix kernel;         // rows: HNF basis of ker(1 + s + ... + s^(d-1))
  IntMatrix image;          // rows: HNF basis of im(1 - s)
  /// Invariants of ker/im: entries > 1 are torsion orders, 0 marks a free summand.
  std::vector<Integer> divisors;

  bool trivial() const { return divisors.empty(); }
  std::string to_string() const {
    if (divisors.empty()) return "0";
    std::string s;
    for (const auto& d : divisors) s += (s.empty() ? "" : " + ") + (d == 0 ? std::string("Z") : "Z/" + d.get_str() + "Z");
    return s;
  }
};

/// H^1 of the cyclic group generated by `action` (acting on column vectors).
/// With `order` given, the action must satisfy action^order = 1.
inline CyclicCohomology h1_cyclic(const IntMatrix& action, std::optional<std::size_t> order = std::nullopt) {
  const std::size_t n = action.rows();
  if (action.cols() != n) throw UsageError("action must be square");
  CyclicCohomology out;
  IntMatrix id = IntMatrix::identity(n);
  if (order) {
    IntMatrix power = id;
    for (std::size_t k = 0; k < *order; ++k) power = power * action;
    if (*order == 0 || !(power == id))
      throw DomainError("infinite-order", "action does not have order dividing " + std::to_string(*order));
    out.order = *order;
  } else {
    out.order = matrix_order(action);
  }

  IntMatrix norm(n, n), power = id;
  for (std::size_t k = 0; k < out.order; ++k) {
    norm = norm + power;
    power = power * action;
  }
  out.norm_vanishes = norm.is_zero();
  out.kernel = saturated_kernel(norm);

  HermiteForm im = hnf((id - action).transpose());
  out.image = im.H.row_slice(0, im.rank);

  const std::size_t k = out.kernel.rows();
  IntMatrix coords(im.rank, k);
  for (std::size_t r = 0; r < im.rank; ++r) {
    auto row = out.image.row_vector(r);
    auto c = solve_in_hermite_basis(out.kernel, row);
    if (!c) throw DomainError("lattice-mismatch", "im(1 - s) is not inside ker(norm)");
    for (std::size_t j = 0; j < k; ++j) coords(r, j) = (*c)[j];
  }
  SmithForm s = snf(coords);
  for (const auto& d : s.divisors)
    if (d != 1) out.divisors.push_back(d);
  for (std::size_t f = s.rank; f < k; ++f) out.divisors.push_back(0);
  return out;
}

struct CohomologyReport {
  std::vector<PicClass> minus_one_classes;
  PetersenGraph petersen;
  GaloisAction sigma;
  GaloisAction sigma_u;
  CyclicCohomology h1;
};

inline CohomologyReport cohomology_report() {
  CohomologyReport r;
  r.minus_one_classes = minus_one_classes();
  r.petersen = petersen_graph(r.minus_one_classes);
  r.sigma = interesting_sigma();
  r.sigma_u = pic_u_action(r.sigma.matrix);
  r.h1 = h1_cyclic(r.sigma_u.matrix);
  return r;
}

}  // namespace dp5
