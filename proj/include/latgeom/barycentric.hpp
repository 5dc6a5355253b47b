#pragma once

// Barycentric coordinates on a fixed simplex and the finite residue grid
// that covers the standard simplex with half-open cells.
//
// Coordinates are indexed 0..d in the order of the simplex's vertex list.
// A cell is determined by flooring the first d coordinates to multiples of
// 1/n; the final coordinate is forced by the affine constraint.

#include "latgeom/lattice.hpp"

#include <algorithm>
#include <vector>

namespace latgeom {

// beta(x) = M^{-1} (x; 1) where M stacks the vertices over a row of ones.
struct BaryMap {
  int dim = 0;
  RatMatrix to_bary;  // (d+1) x (d+1)

  RatVec apply(const RatVec& x) const {
    if (int(x.size()) != dim) throw dimension_error("barycentric map: wrong point dimension");
    RatVec ext = x;
    ext.push_back(Rat(1));
    return mat_vec(to_bary, ext);
  }
};

inline BaryMap make_bary_map(const Simplex& s) {
  int d = s.dim;
  RatMatrix m(d + 1, d + 1);
  for (int c = 0; c <= d; ++c) {
    for (int r = 0; r < d; ++r) m.at(r, c) = s.vertices[c][r];
    m.at(d, c) = 1;
  }
  auto inv = inverse(m);
  if (!inv) throw degeneracy_error("simplex vertices are affinely dependent");
  return BaryMap{d, std::move(*inv)};
}

inline RatVec bary_of_point(const Simplex& s, const RatVec& x) { return make_bary_map(s).apply(x); }

inline RatVec point_of_bary(const Simplex& s, const RatVec& b) {
  if (int(b.size()) != s.dim + 1) throw dimension_error("barycentric vector needs dim+1 entries");
  Rat sum = 0;
  for (const Rat& e : b) sum += e;
  if (sum != 1) throw precondition_error("barycentric coordinates must sum to one");
  RatVec x(s.dim, Rat(0));
  for (int i = 0; i <= s.dim; ++i) x = vec_add(x, vec_scale(b[i], s.vertices[i]));
  return x;
}

// Grid resolution: n(rho) = ceil((d+1)/rho).
inline Int n_of_rho(int d, const Rat& rho) {
  if (rho <= 0) throw precondition_error("rho must be positive");
  return ceil_rat(Rat(d + 1) / rho);
}

struct CoveringGrid {
  int dim = 0;
  Rat rho;
  Int n;
  std::vector<RatVec> residues;  // ascending lexicographic order
};

// All barycentric vectors with entries in (1/n) * Z, nonnegative, summing
// to one: the compositions of n into d+1 parts, scaled by 1/n.
inline CoveringGrid build_grid(int d, const Rat& rho) {
  check_dim(d);
  CoveringGrid g;
  g.dim = d;
  g.rho = rho;
  g.n = n_of_rho(d, rho);
  if (binomial(Int(d) + g.n, d) > 2000000) throw error("covering grid is too large");
  long long n = g.n.convert_to<long long>();
  std::vector<long long> parts(d + 1, 0);
  auto emit = [&] {
    RatVec r(d + 1);
    for (int i = 0; i <= d; ++i) r[i] = make_rat(parts[i], n);
    g.residues.push_back(std::move(r));
  };
  // odometer over the first d parts; the last absorbs the remainder
  std::vector<long long> head(d, 0);
  while (true) {
    long long used = 0;
    for (long long h : head) used += h;
    if (used <= n) {
      for (int i = 0; i < d; ++i) parts[i] = head[i];
      parts[d] = n - used;
      emit();
    }
    int i = d - 1;
    while (i >= 0 && head[i] == n) {
      head[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++head[i];
  }
  std::sort(g.residues.begin(), g.residues.end(), lex_less);
  return g;
}

// Floors the first d coordinates to the grid; the point must lie in the
// standard simplex (all coordinates nonnegative, summing to one).
inline RatVec cell_of(const CoveringGrid& g, const RatVec& b) {
  if (int(b.size()) != g.dim + 1) throw dimension_error("barycentric vector needs dim+1 entries");
  Rat sum = 0;
  for (const Rat& e : b) {
    if (e < 0) throw precondition_error("cell_of requires nonnegative barycentric coordinates");
    sum += e;
  }
  if (sum != 1) throw precondition_error("barycentric coordinates must sum to one");
  RatVec r(g.dim + 1);
  Rat head = 0;
  for (int i = 0; i < g.dim; ++i) {
    r[i] = Rat(floor_rat(Rat(g.n) * b[i])) / Rat(g.n);
    head += r[i];
  }
  r[g.dim] = 1 - head;
  auto it = std::lower_bound(g.residues.begin(), g.residues.end(), r, lex_less);
  if (it == g.residues.end() || *it != r) throw error("cell_of produced a vector off the grid");
  return r;
}

// Half-open cell membership in the first d coordinates.
inline bool in_half_open_cell(const CoveringGrid& g, const RatVec& residue, const RatVec& b) {
  Rat width = Rat(1) / Rat(g.n);
  for (int i = 0; i < g.dim; ++i) {
    Rat delta = b[i] - residue[i];
    if (delta < 0 || delta >= width) return false;
  }
  return true;
}

struct Separation {
  int index = -1;  // coordinate achieving the maximum, lowest such index
  Rat value;
};

// Largest coordinate-wise excess of beta(u) over beta(w) for two distinct
// lattice points of a centered simplex.
inline Separation lemma1_separation(const Simplex& s, const LatPoint& u, const LatPoint& w) {
  if (u == w) throw precondition_error("separation needs two distinct points");
  if (!is_zero_vec(centroid(s)))
    throw precondition_error("separation requires a simplex centered at the origin");
  BaryMap map = make_bary_map(s);
  RatVec bu = map.apply(to_rat_point(u));
  RatVec bw = map.apply(to_rat_point(w));
  for (const RatVec* b : {&bu, &bw})
    for (const Rat& e : *b)
      if (e < 0) throw precondition_error("separation points must lie in the simplex");
  Separation best;
  for (int i = 0; i <= s.dim; ++i) {
    Rat diff = bu[i] - bw[i];
    if (best.index < 0 || diff > best.value) {
      best.index = i;
      best.value = diff;
    }
  }
  return best;
}

}  // namespace latgeom
