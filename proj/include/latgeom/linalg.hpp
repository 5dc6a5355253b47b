#pragma once

// Dense exact linear algebra over Rat, sized for the small systems that
// arise in dimension <= 4 polytope work.

#include "latgeom/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace latgeom {

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline RatVec rat_vec(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw dimension_error("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw dimension_error("vec_add: size mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw dimension_error("vec_sub: size mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

inline RatVec vec_neg(const RatVec& a) { return vec_scale(Rat(-1), a); }

inline bool is_zero_vec(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> entries;  // row-major

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c) {}

  Rat& at(int r, int c) { return entries[std::size_t(r) * cols + c]; }
  const Rat& at(int r, int c) const { return entries[std::size_t(r) * cols + c]; }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RatMatrix from_columns(const std::vector<RatVec>& columns) {
    if (columns.empty()) return RatMatrix();
    RatMatrix m(int(columns[0].size()), int(columns.size()));
    for (int c = 0; c < m.cols; ++c) {
      if (int(columns[c].size()) != m.rows)
        throw dimension_error("from_columns: ragged column heights");
      for (int r = 0; r < m.rows; ++r) m.at(r, c) = columns[c][r];
    }
    return m;
  }

  static RatMatrix from_rows(const std::vector<RatVec>& rws) {
    if (rws.empty()) return RatMatrix();
    RatMatrix m(int(rws.size()), int(rws[0].size()));
    for (int r = 0; r < m.rows; ++r) {
      if (int(rws[r].size()) != m.cols) throw dimension_error("from_rows: ragged row widths");
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = rws[r][c];
    }
    return m;
  }

  RatVec row(int r) const {
    RatVec out(cols);
    for (int c = 0; c < cols; ++c) out[c] = at(r, c);
    return out;
  }

  RatVec column(int c) const {
    RatVec out(rows);
    for (int r = 0; r < rows; ++r) out[r] = at(r, c);
    return out;
  }

  bool operator==(const RatMatrix& other) const {
    return rows == other.rows && cols == other.cols && entries == other.entries;
  }
};

inline RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
  if (int(v.size()) != m.cols) throw dimension_error("mat_vec: size mismatch");
  RatVec out(m.rows);
  for (int r = 0; r < m.rows; ++r) {
    Rat s = 0;
    for (int c = 0; c < m.cols; ++c) s += m.at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols != b.rows) throw dimension_error("mat_mul: size mismatch");
  RatMatrix out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < b.cols; ++c) {
      Rat s = 0;
      for (int k = 0; k < a.cols; ++k) s += a.at(r, k) * b.at(k, c);
      out.at(r, c) = s;
    }
  return out;
}

inline RatMatrix transpose(const RatMatrix& m) {
  RatMatrix out(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  return out;
}

// Bareiss fraction-free elimination; exact for any rational matrix.
inline Rat det(const RatMatrix& m) {
  if (m.rows != m.cols) throw dimension_error("det: matrix not square");
  int n = m.rows;
  if (n == 0) return 1;
  RatMatrix a = m;
  Rat prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

// Reduced row echelon form in place; returns the pivot column indices.
inline std::vector<int> rref(RatMatrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
    Rat inv = 1 / a.at(r, c);
    for (int j = c; j < a.cols; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(RatMatrix a) { return int(rref(a).size()); }

// Basis of the right null space {v : m v = 0}.
inline std::vector<RatVec> nullspace(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves a x = b for square a; nullopt when a is singular.
inline std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& b) {
  if (a.rows != a.cols) throw dimension_error("solve_linear: matrix not square");
  if (int(b.size()) != a.rows) throw dimension_error("solve_linear: rhs size mismatch");
  int n = a.rows;
  RatMatrix aug(n, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (aug.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != c)
      for (int j = 0; j <= n; ++j) std::swap(aug.at(c, j), aug.at(pivot, j));
    Rat inv = 1 / aug.at(c, c);
    for (int j = c; j <= n; ++j) aug.at(c, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || aug.at(i, c) == 0) continue;
      Rat f = aug.at(i, c);
      for (int j = c; j <= n; ++j) aug.at(i, j) -= f * aug.at(c, j);
    }
  }
  RatVec x(n);
  for (int r = 0; r < n; ++r) x[r] = aug.at(r, n);
  return x;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows != m.cols) throw dimension_error("inverse: matrix not square");
  int n = m.rows;
  RatMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (int(pivots.size()) != n || pivots.back() >= n) return std::nullopt;
  RatMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

inline bool is_integral(const RatMatrix& m) {
  for (const Rat& e : m.entries)
    if (!is_integer(e)) return false;
  return true;
}

inline bool is_integral(const RatVec& v) {
  for (const Rat& e : v)
    if (!is_integer(e)) return false;
  return true;
}

// Integer entries and determinant +-1, i.e. a lattice automorphism.
inline bool is_unimodular(const RatMatrix& m) {
  if (m.rows != m.cols) return false;
  if (!is_integral(m)) return false;
  Rat d = det(m);
  return d == 1 || d == -1;
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace latgeom
