#pragma once

// Exact convex polytope geometry in ambient dimension 1..4.
//
// Conversions between vertex and halfspace descriptions use brute-force
// d-subset enumeration, which is simple, exact, and fast at this scale.
// Polytope vertex lists are kept lexicographically sorted so that equal
// bodies compare equal; hull2d is the one exception (counterclockwise).

#include "latgeom/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace latgeom {

inline void check_dim(int dim) {
  if (dim < 1 || dim > 4) throw dimension_error("supported ambient dimensions are 1..4");
}

// Closed halfspace {x : normal . x <= offset}.
struct HalfSpace {
  RatVec normal;
  Rat offset;
};

inline HalfSpace make_halfspace(RatVec normal, Rat offset) {
  if (is_zero_vec(normal)) throw precondition_error("halfspace normal must be nonzero");
  return HalfSpace{std::move(normal), std::move(offset)};
}

struct HRep {
  int dim = 0;
  std::vector<HalfSpace> halfspaces;
};

inline HRep make_hrep(int dim, std::vector<HalfSpace> halfspaces) {
  check_dim(dim);
  for (const HalfSpace& hs : halfspaces) {
    if (int(hs.normal.size()) != dim) throw dimension_error("halfspace normal has wrong dimension");
    if (is_zero_vec(hs.normal)) throw precondition_error("halfspace normal must be nonzero");
  }
  return HRep{dim, std::move(halfspaces)};
}

// Bounded convex polytope as its irredundant vertex list.
struct Polytope {
  int dim = 0;
  std::vector<RatVec> vertices;
};

// Nondegenerate simplex; vertex order is significant (barycentric indexing).
struct Simplex {
  int dim = 0;
  std::vector<RatVec> vertices;
};

enum class Membership { interior, boundary, outside };

namespace detail {

template <class F>
void for_each_subset(int m, int k, F&& f) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  if (k == 0) {
    f(idx);
    return;
  }
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Scales (normal, offset) to coprime integers; dedup key and canonical form.
inline std::pair<IntVec, Int> primitive_form(const RatVec& normal, const Rat& offset) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Int mult = 1;
  for (const Rat& e : normal) mult = lcm(mult, rat_den(e));
  mult = lcm(mult, rat_den(offset));
  IntVec a(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) a[i] = rat_num(normal[i] * Rat(mult));
  Int b = rat_num(offset * Rat(mult));
  Int g = 0;
  for (const Int& e : a) g = gcd(g, abs(e));
  g = gcd(g, abs(b));
  if (g == 0) throw precondition_error("halfspace normal must be nonzero");
  for (Int& e : a) e /= g;
  b /= g;
  return {std::move(a), std::move(b)};
}

inline IntVec facet_key(const RatVec& normal, const Rat& offset) {
  auto [a, b] = primitive_form(normal, offset);
  a.push_back(b);
  return a;
}

inline HalfSpace from_primitive(IntVec a, const Int& b) {
  RatVec n(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) n[i] = Rat(a[i]);
  return HalfSpace{std::move(n), Rat(b)};
}

}  // namespace detail

inline int affine_rank(const std::vector<RatVec>& points) {
  if (points.empty()) return -1;
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return rank(RatMatrix::from_rows(diffs));
}

inline std::vector<RatVec> sorted_unique(std::vector<RatVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Irredundant facet description of the hull of a full-dimensional point set.
// Every facet hyperplane passes through dim affinely independent points, so
// enumerating dim-subsets finds them all; facets are deduplicated and sorted
// by primitive integer form.
inline HRep supporting_hrep(int dim, const std::vector<RatVec>& points) {
  check_dim(dim);
  for (const RatVec& p : points)
    if (int(p.size()) != dim) throw dimension_error("point has wrong dimension");
  if (affine_rank(points) != dim)
    throw degeneracy_error("point set does not span the ambient dimension");
  std::set<IntVec> seen;
  std::vector<std::pair<IntVec, Int>> facets;
  int m = int(points.size());
  detail::for_each_subset(m, dim, [&](const std::vector<int>& idx) {
    std::vector<RatVec> diffs;
    for (int i = 1; i < dim; ++i) diffs.push_back(vec_sub(points[idx[i]], points[idx[0]]));
    RatMatrix mat = dim == 1 ? RatMatrix(0, 1) : RatMatrix::from_rows(diffs);
    std::vector<RatVec> ns = nullspace(mat);
    if (ns.size() != 1) return;
    RatVec normal = ns[0];
    Rat offset = dot(normal, points[idx[0]]);
    bool above = false, below = false;
    for (const RatVec& p : points) {
      Rat v = dot(normal, p);
      if (v > offset) above = true;
      else if (v < offset) below = true;
      if (above && below) return;
    }
    if (above) {
      normal = vec_neg(normal);
      offset = -offset;
    }
    auto [a, b] = detail::primitive_form(normal, offset);
    IntVec key = a;
    key.push_back(b);
    if (seen.insert(std::move(key)).second) facets.emplace_back(std::move(a), std::move(b));
  });
  std::sort(facets.begin(), facets.end());
  HRep h;
  h.dim = dim;
  for (auto& [a, b] : facets) h.halfspaces.push_back(detail::from_primitive(std::move(a), b));
  return h;
}

inline HRep to_hrep(const Polytope& p) { return supporting_hrep(p.dim, p.vertices); }

namespace detail {

inline std::vector<RatVec> basic_feasible_points(const HRep& h) {
  int d = h.dim;
  int m = int(h.halfspaces.size());
  std::vector<RatVec> found;
  for_each_subset(m, d, [&](const std::vector<int>& idx) {
    RatMatrix a(d, d);
    RatVec b(d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) a.at(i, j) = h.halfspaces[idx[i]].normal[j];
      b[i] = h.halfspaces[idx[i]].offset;
    }
    std::optional<RatVec> x = solve_linear(a, b);
    if (!x) return;
    for (const HalfSpace& hs : h.halfspaces)
      if (dot(hs.normal, *x) > hs.offset) return;
    found.push_back(std::move(*x));
  });
  return sorted_unique(std::move(found));
}

// True when {x : Ax <= 0} contains a nonzero vector.  With full-rank A the
// cone is pointed and any extreme ray is tight on d-1 independent rows.
inline bool has_recession_direction(const HRep& h) {
  int d = h.dim;
  int m = int(h.halfspaces.size());
  std::vector<RatVec> rows;
  for (const HalfSpace& hs : h.halfspaces) rows.push_back(hs.normal);
  if (rows.empty() || rank(RatMatrix::from_rows(rows)) < d) return true;
  bool unbounded = false;
  for_each_subset(m, d - 1, [&](const std::vector<int>& idx) {
    if (unbounded) return;
    std::vector<RatVec> sub;
    for (int i : idx) sub.push_back(h.halfspaces[i].normal);
    RatMatrix mat = sub.empty() ? RatMatrix(0, d) : RatMatrix::from_rows(sub);
    std::vector<RatVec> ns = nullspace(mat);
    if (ns.size() != 1) return;
    for (const RatVec& ray : {ns[0], vec_neg(ns[0])}) {
      bool ok = true;
      for (const HalfSpace& hs : h.halfspaces)
        if (dot(hs.normal, ray) > 0) {
          ok = false;
          break;
        }
      if (ok) {
        unbounded = true;
        return;
      }
    }
  });
  return unbounded;
}

}  // namespace detail

// Vertices of a bounded full-dimensional H-polytope, sorted.
inline Polytope vertex_enum(const HRep& h) {
  check_dim(h.dim);
  std::vector<RatVec> verts = detail::basic_feasible_points(h);
  if (detail::has_recession_direction(h)) {
    if (!verts.empty()) throw unbounded_error("H-representation describes an unbounded set");
    throw unbounded_error("H-representation describes an unbounded or empty set");
  }
  if (verts.empty()) throw infeasible_error("H-representation is infeasible");
  if (affine_rank(verts) != h.dim)
    throw degeneracy_error("H-representation describes a lower-dimensional set");
  return Polytope{h.dim, std::move(verts)};
}

inline Membership membership(const HRep& h, const RatVec& x) {
  if (int(x.size()) != h.dim) throw dimension_error("point has wrong dimension");
  bool on_boundary = false;
  for (const HalfSpace& hs : h.halfspaces) {
    Rat v = dot(hs.normal, x);
    if (v > hs.offset) return Membership::outside;
    if (v == hs.offset) on_boundary = true;
  }
  return on_boundary ? Membership::boundary : Membership::interior;
}

// Minkowski gauge of a body whose interior contains the origin:
// gauge(z) = min {t >= 0 : z in t*K} = max_i (a_i . z) / b_i, clamped at 0.
inline Rat gauge(const HRep& h, const RatVec& z) {
  if (int(z.size()) != h.dim) throw dimension_error("point has wrong dimension");
  Rat best = 0;
  for (const HalfSpace& hs : h.halfspaces) {
    if (hs.offset <= 0)
      throw precondition_error("gauge requires the origin in the interior (all offsets positive)");
    Rat v = dot(hs.normal, z) / hs.offset;
    if (v > best) best = v;
  }
  return best;
}

struct ClipResult {
  enum class Kind { full_dim, lower_dim, empty } kind = Kind::empty;
  Polytope poly;  // vertices of the clipped set when nonempty
  HRep hrep;      // irredundant facets when full-dimensional
};

namespace detail {

inline ClipResult from_halfspaces(int dim, const std::vector<HalfSpace>& halfspaces) {
  std::set<IntVec> seen;
  HRep combined;
  combined.dim = dim;
  for (const HalfSpace& hs : halfspaces) {
    auto [a, b] = primitive_form(hs.normal, hs.offset);
    IntVec key = a;
    key.push_back(b);
    if (seen.insert(std::move(key)).second)
      combined.halfspaces.push_back(from_primitive(std::move(a), b));
  }
  std::vector<RatVec> verts = basic_feasible_points(combined);
  ClipResult result;
  if (verts.empty()) {
    result.kind = ClipResult::Kind::empty;
    return result;
  }
  if (affine_rank(verts) < dim) {
    result.kind = ClipResult::Kind::lower_dim;
    result.poly = Polytope{dim, std::move(verts)};
    return result;
  }
  result.kind = ClipResult::Kind::full_dim;
  result.hrep = supporting_hrep(dim, verts);
  result.poly = Polytope{dim, std::move(verts)};
  return result;
}

}  // namespace detail

// Intersection of a bounded body with one additional halfspace.
inline ClipResult clip(const HRep& h, const HalfSpace& hs) {
  check_dim(h.dim);
  if (int(hs.normal.size()) != h.dim) throw dimension_error("halfspace has wrong dimension");
  if (is_zero_vec(hs.normal)) throw precondition_error("halfspace normal must be nonzero");
  std::vector<HalfSpace> all = h.halfspaces;
  all.push_back(hs);
  return detail::from_halfspaces(h.dim, all);
}

inline Polytope translate(const Polytope& p, const RatVec& t) {
  if (int(t.size()) != p.dim) throw dimension_error("translation has wrong dimension");
  std::vector<RatVec> verts;
  verts.reserve(p.vertices.size());
  for (const RatVec& v : p.vertices) verts.push_back(vec_add(v, t));
  return Polytope{p.dim, sorted_unique(std::move(verts))};
}

inline Polytope reflect(const Polytope& p) {
  std::vector<RatVec> verts;
  verts.reserve(p.vertices.size());
  for (const RatVec& v : p.vertices) verts.push_back(vec_neg(v));
  return Polytope{p.dim, sorted_unique(std::move(verts))};
}

inline Polytope scale(const Polytope& p, const Rat& c) {
  if (c == 0) throw precondition_error("scale factor must be nonzero");
  std::vector<RatVec> verts;
  verts.reserve(p.vertices.size());
  for (const RatVec& v : p.vertices) verts.push_back(vec_scale(c, v));
  return Polytope{p.dim, sorted_unique(std::move(verts))};
}

// Affine image x -> Mx + t for nonsingular M.
inline Polytope transform(const Polytope& p, const RatMatrix& m, const RatVec& t) {
  if (m.rows != p.dim || m.cols != p.dim) throw dimension_error("transform matrix has wrong shape");
  if (det(m) == 0) throw precondition_error("transform matrix must be nonsingular");
  std::vector<RatVec> verts;
  verts.reserve(p.vertices.size());
  for (const RatVec& v : p.vertices) verts.push_back(vec_add(mat_vec(m, v), t));
  return Polytope{p.dim, sorted_unique(std::move(verts))};
}

inline HRep reflect(const HRep& h) {
  HRep out;
  out.dim = h.dim;
  for (const HalfSpace& hs : h.halfspaces) out.halfspaces.push_back({vec_neg(hs.normal), hs.offset});
  return out;
}

using IntersectResult = ClipResult;

inline IntersectResult intersect(const Polytope& p, const Polytope& q) {
  if (p.dim != q.dim) throw dimension_error("intersect: dimension mismatch");
  HRep hp = to_hrep(p), hq = to_hrep(q);
  std::vector<HalfSpace> all = hp.halfspaces;
  all.insert(all.end(), hq.halfspaces.begin(), hq.halfspaces.end());
  return detail::from_halfspaces(p.dim, all);
}

inline Rat simplex_volume(const Simplex& s) {
  int d = s.dim;
  std::vector<RatVec> edges;
  for (int i = 1; i <= d; ++i) edges.push_back(vec_sub(s.vertices[i], s.vertices[0]));
  Rat dt = det(RatMatrix::from_columns(edges));
  if (dt < 0) dt = -dt;
  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return dt / Rat(fact);
}

inline Simplex make_simplex(std::vector<RatVec> vertices) {
  if (vertices.empty()) throw precondition_error("simplex needs vertices");
  int d = int(vertices[0].size());
  check_dim(d);
  if (int(vertices.size()) != d + 1) throw precondition_error("simplex needs dim+1 vertices");
  for (const RatVec& v : vertices)
    if (int(v.size()) != d) throw dimension_error("simplex vertex has wrong dimension");
  Simplex s{d, std::move(vertices)};
  if (simplex_volume(s) == 0) throw degeneracy_error("simplex vertices are affinely dependent");
  return s;
}

inline Polytope simplex_to_polytope(const Simplex& s) {
  return Polytope{s.dim, sorted_unique(s.vertices)};
}

namespace detail {

// Exact coordinates of a point set within its affine hull.
struct Chart {
  RatVec base;
  std::vector<RatVec> basis;     // directions spanning the hull
  std::vector<int> pivot_rows;   // ambient coordinates that determine the chart
  RatMatrix inv;                 // inverse of the pivot-row square of the basis

  RatVec project(const RatVec& p) const {
    RatVec rhs(pivot_rows.size());
    for (std::size_t i = 0; i < pivot_rows.size(); ++i)
      rhs[i] = p[pivot_rows[i]] - base[pivot_rows[i]];
    return mat_vec(inv, rhs);
  }
};

inline Chart make_chart(const std::vector<RatVec>& pts) {
  Chart chart;
  chart.base = *std::min_element(pts.begin(), pts.end(), lex_less);
  std::vector<RatVec> dirs;
  for (const RatVec& p : pts) {
    RatVec d = vec_sub(p, chart.base);
    if (is_zero_vec(d)) continue;
    dirs.push_back(d);
    if (rank(RatMatrix::from_columns(dirs)) < int(dirs.size()))
      dirs.pop_back();
  }
  chart.basis = dirs;
  if (dirs.empty()) return chart;
  RatMatrix b = RatMatrix::from_columns(dirs);
  RatMatrix bt = transpose(b);
  chart.pivot_rows = rref(bt);  // independent rows of b
  RatMatrix square(int(dirs.size()), int(dirs.size()));
  for (std::size_t i = 0; i < chart.pivot_rows.size(); ++i)
    for (std::size_t j = 0; j < dirs.size(); ++j)
      square.at(int(i), int(j)) = b.at(chart.pivot_rows[i], int(j));
  chart.inv = *inverse(square);
  return chart;
}

// Fan triangulation rooted at the lexicographically smallest vertex; facets
// are triangulated recursively in their own chart coordinates.
inline std::vector<std::vector<int>> triangulate_indices(int k, const std::vector<RatVec>& pts,
                                                         const HRep& h) {
  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < int(pts.size()); ++i) {
      if (lex_less(pts[i], pts[lo])) lo = i;
      if (lex_less(pts[hi], pts[i])) hi = i;
    }
    return {{lo, hi}};
  }
  int root = 0;
  for (int i = 1; i < int(pts.size()); ++i)
    if (lex_less(pts[i], pts[root])) root = i;
  std::vector<std::vector<int>> out;
  for (const HalfSpace& hs : h.halfspaces) {
    if (dot(hs.normal, pts[root]) == hs.offset) continue;
    std::vector<int> incident;
    for (int i = 0; i < int(pts.size()); ++i)
      if (dot(hs.normal, pts[i]) == hs.offset) incident.push_back(i);
    if (int(incident.size()) < k) continue;
    std::vector<RatVec> facet_pts;
    for (int i : incident) facet_pts.push_back(pts[i]);
    Chart chart = make_chart(facet_pts);
    if (int(chart.basis.size()) != k - 1) continue;
    std::vector<RatVec> projected;
    for (const RatVec& p : facet_pts) projected.push_back(chart.project(p));
    HRep facet_h = supporting_hrep(k - 1, projected);
    for (const std::vector<int>& sub : triangulate_indices(k - 1, projected, facet_h)) {
      std::vector<int> cell{root};
      for (int i : sub) cell.push_back(incident[i]);
      out.push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<Simplex> triangulate(const Polytope& p, const HRep& h) {
  check_dim(p.dim);
  if (affine_rank(p.vertices) != p.dim)
    throw degeneracy_error("triangulate requires a full-dimensional polytope");
  std::vector<Simplex> out;
  for (const std::vector<int>& cell : detail::triangulate_indices(p.dim, p.vertices, h)) {
    std::vector<RatVec> verts;
    for (int i : cell) verts.push_back(p.vertices[i]);
    out.push_back(Simplex{p.dim, std::move(verts)});
  }
  return out;
}

inline std::vector<Simplex> triangulate(const Polytope& p) { return triangulate(p, to_hrep(p)); }

inline Rat volume(const Polytope& p, const HRep& h) {
  if (affine_rank(p.vertices) < p.dim) return 0;
  Rat total = 0;
  for (const Simplex& s : triangulate(p, h)) total += simplex_volume(s);
  return total;
}

inline Rat volume(const Polytope& p) {
  if (affine_rank(p.vertices) < p.dim) return 0;
  return volume(p, to_hrep(p));
}

inline RatVec centroid(const Simplex& s) {
  RatVec c(s.dim, Rat(0));
  for (const RatVec& v : s.vertices) c = vec_add(c, v);
  return vec_scale(Rat(1, s.dim + 1), c);
}

// Volume-weighted barycenter; requires a full-dimensional body.
inline RatVec centroid(const Polytope& p, const HRep& h) {
  if (affine_rank(p.vertices) != p.dim)
    throw degeneracy_error("centroid requires a full-dimensional polytope");
  RatVec weighted(p.dim, Rat(0));
  Rat total = 0;
  for (const Simplex& s : triangulate(p, h)) {
    Rat v = simplex_volume(s);
    weighted = vec_add(weighted, vec_scale(v, centroid(s)));
    total += v;
  }
  return vec_scale(1 / total, weighted);
}

inline RatVec centroid(const Polytope& p) { return centroid(p, to_hrep(p)); }

// Hull of an arbitrary point set, full dimension required.
inline Polytope polytope_from_points(int dim, const std::vector<RatVec>& points) {
  HRep h = supporting_hrep(dim, sorted_unique(points));
  return vertex_enum(h);
}

// Convex hull in the plane, counterclockwise starting at the smallest vertex.
inline Polytope hull2d(const std::vector<RatVec>& points) {
  for (const RatVec& p : points)
    if (p.size() != 2) throw dimension_error("hull2d expects planar points");
  std::vector<RatVec> pts = sorted_unique(points);
  auto cross = [](const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  if (pts.size() < 3) throw degeneracy_error("hull2d requires three non-collinear points");
  std::vector<RatVec> lower, upper;
  for (const RatVec& p : pts) {
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  std::vector<RatVec> hull = lower;
  hull.insert(hull.end(), upper.begin(), upper.end());
  if (hull.size() < 3) throw degeneracy_error("hull2d requires three non-collinear points");
  return Polytope{2, std::move(hull)};
}

inline bool same_body(const Polytope& p, const Polytope& q) {
  return p.dim == q.dim && sorted_unique(p.vertices) == sorted_unique(q.vertices);
}

inline bool is_lattice_polytope(const Polytope& p) {
  for (const RatVec& v : p.vertices)
    if (!is_integral(v)) return false;
  return true;
}

inline std::pair<RatVec, RatVec> bounding_box(const Polytope& p) {
  if (p.vertices.empty()) throw precondition_error("bounding_box of empty vertex set");
  RatVec lo = p.vertices[0], hi = p.vertices[0];
  for (const RatVec& v : p.vertices)
    for (int i = 0; i < p.dim; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  return {lo, hi};
}

}  // namespace latgeom
