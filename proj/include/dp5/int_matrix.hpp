#pragma once

// Arbitrary-precision integer matrices and the unimodular normal forms built
// on them. Conventions: row Hermite form with positive pivots and entries
// above each pivot reduced into [0, pivot); Smith form D = U*A*V with
// d1 | d2 | ... and nonnegative diagonal.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "dp5/arith.hpp"

namespace dp5 {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw UsageError("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0) {
    IntMatrix m(rows.size(), rows.empty() ? cols : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw UsageError("ragged row list");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.cols_);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::vector<Integer> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  std::vector<std::vector<Integer>> to_rows() const {
    std::vector<std::vector<Integer>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows [first, last) as a new matrix.
  IntMatrix row_slice(std::size_t first, std::size_t last) const {
    IntMatrix m(last - first, cols_);
    std::copy(data_.begin() + first * cols_, data_.begin() + last * cols_, m.data_.begin());
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix dimension mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix dimension mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? "," : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct HermiteForm {
  IntMatrix H;  // = U * A
  IntMatrix U;  // unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

inline HermiteForm hnf(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.rows()), 0, {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r.. until one nonzero remains.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == m) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

struct SmithForm {
  IntMatrix D;  // = U * A * V
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;
  /// The nonzero diagonal entries d1 | d2 | ... | d_rank.
  std::vector<Integer> divisors;
};

inline SmithForm snf(const IntMatrix& a) {
  SmithForm out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), 0, {}};
  IntMatrix& d = out.D;
  const std::size_t m = d.rows(), n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (bi == m || abs(d(i, j)) < abs(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    d.swap_rows(t, bi);
    out.U.swap_rows(t, bi);
    d.swap_cols(t, bj);
    out.V.swap_cols(t, bj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = trunc_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        out.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = trunc_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        out.V.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; make it the pivot.
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi2, bj2))) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi2, bj2))) {
            bi2 = t;
            bj2 = j;
          }
        d.swap_rows(t, bi2);
        out.U.swap_rows(t, bi2);
        d.swap_cols(t, bj2);
        out.V.swap_cols(t, bj2);
        continue;
      }
      // Divisibility: the pivot must divide the whole trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      d.add_row_multiple(t, bad, 1);
      out.U.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      out.U.negate_row(t);
    }
    out.divisors.push_back(d(t, t));
    ++out.rank;
  }
  return out;
}

/// Basis (as rows, in Hermite form) of {v in Z^cols : A v = 0}. The integer
/// kernel is saturated in Z^cols by construction.
inline IntMatrix saturated_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(n);
  HermiteForm h = hnf(a.transpose());
  if (h.rank == n) return IntMatrix(0, n);
  IntMatrix basis = h.U.row_slice(h.rank, n);
  return hnf(basis).H;
}

/// Index of the lattice spanned by `vectors` in Z^n, or nullopt when the
/// span has rank < n (infinite index).
inline std::optional<Integer> lattice_index(const std::vector<std::vector<Integer>>& vectors) {
  if (vectors.empty()) throw UsageError("lattice_index needs at least one vector");
  IntMatrix m = IntMatrix::from_rows(vectors);
  SmithForm s = snf(m);
  if (s.rank < m.cols()) return std::nullopt;
  Integer idx = 1;
  for (const auto& d : s.divisors) idx *= d;
  return idx;
}

/// Coordinates c with c * basis = v, where `basis` is in row Hermite form.
/// Returns nullopt when v is not in the row lattice.
inline std::optional<std::vector<Integer>> solve_in_hermite_basis(const IntMatrix& basis,
                                                                  std::span<const Integer> v) {
  if (v.size() != basis.cols()) throw UsageError("vector length mismatch");
  std::vector<Integer> rest(v.begin(), v.end());
  std::vector<Integer> coords(basis.rows());
  std::size_t col = 0;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    while (col < basis.cols() && basis(r, col) == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    if (col == basis.cols()) break;
    if (rest[col] % basis(r, col) != 0) return std::nullopt;
    coords[r] = rest[col] / basis(r, col);
    for (std::size_t c = 0; c < basis.cols(); ++c) rest[c] -= coords[r] * basis(r, c);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

}  // namespace dp5
