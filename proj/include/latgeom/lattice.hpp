#pragma once

// Lattice point enumeration and the first successive minimum.
//
// Scans walk the integer points of the vertex bounding box in ascending
// lexicographic order (first coordinate outermost).  Facet tests run in
// long long arithmetic whenever the precomputed magnitudes make overflow
// impossible, falling back to arbitrary precision otherwise.

#include "latgeom/polytope.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace latgeom {

using LatPoint = std::vector<long long>;

struct LatticePointSet {
  int dim = 0;
  std::vector<LatPoint> points;          // ascending lexicographic order
  std::vector<unsigned char> interior;   // parallel to points

  long long total() const { return static_cast<long long>(points.size()); }
  long long interior_count() const {
    long long n = 0;
    for (unsigned char f : interior) n += f;
    return n;
  }
};

struct LatticeCounts {
  long long total = 0;
  long long interior = 0;
  long long boundary() const { return total - interior; }
};

inline RatVec to_rat_point(const LatPoint& x) {
  RatVec v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = Rat(x[i]);
  return v;
}

namespace detail {

constexpr long long kCoordinateLimit = 1LL << 40;

struct ScanFacet {
  std::vector<long long> a;
  long long b = 0;
};

struct BigScanFacet {
  std::vector<Int> a;
  Int b;
};

struct ScanPlan {
  int dim = 0;
  std::vector<long long> lo, hi;  // inclusive integer box, empty_box if inverted
  bool empty_box = false;
  bool fast = true;
  std::vector<ScanFacet> facets;
  std::vector<BigScanFacet> big_facets;
};

inline long long to_ll_checked(const Int& v) {
  if (v > kCoordinateLimit || v < -kCoordinateLimit)
    throw error("lattice scan box exceeds supported coordinate range");
  return v.convert_to<long long>();
}

// Box from explicit rational corner bounds.
inline ScanPlan make_scan_plan(const HRep& h, const RatVec& lo, const RatVec& hi) {
  ScanPlan plan;
  plan.dim = h.dim;
  plan.lo.resize(h.dim);
  plan.hi.resize(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    plan.lo[i] = to_ll_checked(ceil_rat(lo[i]));
    plan.hi[i] = to_ll_checked(floor_rat(hi[i]));
    if (plan.lo[i] > plan.hi[i]) plan.empty_box = true;
  }
  long long box_points = 1;
  for (int i = 0; i < h.dim && !plan.empty_box; ++i) {
    long long extent = plan.hi[i] - plan.lo[i] + 1;
    if (box_points > 100000000LL / extent)
      throw error("lattice scan box has too many points");
    box_points *= extent;
  }
  const Int safe = Int(1) << 62;
  for (const HalfSpace& hs : h.halfspaces) {
    auto [a, b] = primitive_form(hs.normal, hs.offset);
    Int reach = abs(b);
    for (int i = 0; i < h.dim; ++i)
      reach += abs(a[i]) * Int(std::max(std::abs(plan.lo[i]), std::abs(plan.hi[i])));
    if (plan.fast && reach < safe) {
      ScanFacet f;
      f.a.resize(h.dim);
      for (int i = 0; i < h.dim; ++i) f.a[i] = a[i].convert_to<long long>();
      f.b = b.convert_to<long long>();
      plan.facets.push_back(std::move(f));
    } else {
      plan.fast = false;
      plan.facets.clear();
    }
    plan.big_facets.push_back(BigScanFacet{std::move(a), std::move(b)});
  }
  return plan;
}

inline ScanPlan make_scan_plan(const HRep& h, const std::vector<RatVec>& box_verts) {
  if (box_verts.empty()) throw precondition_error("scan plan needs bounding vertices");
  RatVec lo = box_verts[0], hi = box_verts[0];
  for (const RatVec& v : box_verts)
    for (int i = 0; i < h.dim; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  return make_scan_plan(h, lo, hi);
}

// classify < 0: outside, == 0: boundary, > 0: interior
inline int classify_fast(const ScanPlan& plan, const LatPoint& x) {
  int cls = 1;
  for (const ScanFacet& f : plan.facets) {
    long long dot = 0;
    for (int i = 0; i < plan.dim; ++i) dot += f.a[i] * x[i];
    if (dot > f.b) return -1;
    if (dot == f.b) cls = 0;
  }
  return cls;
}

inline int classify_big(const ScanPlan& plan, const LatPoint& x) {
  int cls = 1;
  for (const BigScanFacet& f : plan.big_facets) {
    Int dot = 0;
    for (int i = 0; i < plan.dim; ++i) dot += f.a[i] * x[i];
    if (dot > f.b) return -1;
    if (dot == f.b) cls = 0;
  }
  return cls;
}

// visit(point, interior_flag) for every lattice point of the body.
template <class Visit>
void scan(const ScanPlan& plan, Visit&& visit) {
  if (plan.empty_box) return;
  LatPoint x = plan.lo;
  while (true) {
    int cls = plan.fast ? classify_fast(plan, x) : classify_big(plan, x);
    if (cls >= 0) visit(x, cls > 0);
    int i = plan.dim - 1;
    while (i >= 0 && x[i] == plan.hi[i]) {
      x[i] = plan.lo[i];
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
}

}  // namespace detail

inline LatticePointSet lattice_points(const HRep& h, const Polytope& p) {
  detail::ScanPlan plan = detail::make_scan_plan(h, p.vertices);
  LatticePointSet out;
  out.dim = h.dim;
  detail::scan(plan, [&](const LatPoint& x, bool inside) {
    out.points.push_back(x);
    out.interior.push_back(inside ? 1 : 0);
  });
  return out;
}

inline LatticePointSet lattice_points(const HRep& h) { return lattice_points(h, vertex_enum(h)); }

inline LatticeCounts count_points(const HRep& h, const Polytope& p) {
  detail::ScanPlan plan = detail::make_scan_plan(h, p.vertices);
  LatticeCounts c;
  detail::scan(plan, [&](const LatPoint&, bool inside) {
    ++c.total;
    if (inside) ++c.interior;
  });
  return c;
}

inline LatticeCounts count_points(const HRep& h) { return count_points(h, vertex_enum(h)); }

inline long long count(const HRep& h) { return count_points(h).total; }
inline long long count_interior(const HRep& h) { return count_points(h).interior; }

struct Lambda1Result {
  Rat value;
  LatPoint witness;  // lexicographically smallest gauge minimizer
};

// First successive minimum: the smallest dilation factor at which K captures
// a nonzero lattice vector.  The scan is confined to t0*K where t0 is the
// best gauge among the signed unit vectors and any nonzero integral vertices.
inline Lambda1Result lambda1(const HRep& h, const Polytope& p) {
  int d = h.dim;
  for (const HalfSpace& hs : h.halfspaces)
    if (hs.offset <= 0)
      throw precondition_error("lambda1 requires the origin in the interior of the body");

  std::vector<std::pair<IntVec, Int>> prim;
  for (const HalfSpace& hs : h.halfspaces) prim.push_back(detail::primitive_form(hs.normal, hs.offset));
  auto gauge_of = [&](const RatVec& z) {
    Rat best = 0;
    for (const auto& [a, b] : prim) {
      Rat v = 0;
      for (int i = 0; i < d; ++i) v += Rat(a[i]) * z[i];
      v /= Rat(b);
      if (v > best) best = v;
    }
    return best;
  };

  Rat t0;
  bool have = false;
  auto consider = [&](const RatVec& z) {
    Rat g = gauge_of(z);
    if (g > 0 && (!have || g < t0)) {
      t0 = g;
      have = true;
    }
  };
  for (int i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      RatVec e(d, Rat(0));
      e[i] = s;
      consider(e);
    }
  for (const RatVec& v : p.vertices)
    if (is_integral(v) && !is_zero_vec(v)) consider(v);
  if (!have) throw degeneracy_error("lambda1: gauge vanished on all probes");

  RatVec lo(d), hi(d);
  {
    auto [plo, phi] = bounding_box(p);
    for (int i = 0; i < d; ++i) {
      lo[i] = t0 * plo[i];
      hi[i] = t0 * phi[i];
    }
  }
  detail::ScanPlan plan = detail::make_scan_plan(h, lo, hi);

  std::optional<Rat> best;
  LatPoint witness;
  LatPoint x = plan.lo;
  if (!plan.empty_box) {
    while (true) {
      bool zero = true;
      for (long long c : x)
        if (c != 0) {
          zero = false;
          break;
        }
      if (!zero) {
        Rat g = 0;
        for (const auto& [a, b] : prim) {
          Int dot = 0;
          for (int i = 0; i < d; ++i) dot += a[i] * x[i];
          Rat v = make_rat(dot, b);
          if (v > g) g = v;
        }
        if (g > 0 && g <= t0 && (!best || g < *best)) {
          best = g;
          witness = x;
        }
      }
      int i = d - 1;
      while (i >= 0 && x[i] == plan.hi[i]) {
        x[i] = plan.lo[i];
        --i;
      }
      if (i < 0) break;
      ++x[i];
    }
  }
  if (!best) throw error("lambda1: no lattice vector found inside the probe dilation");
  return Lambda1Result{*best, std::move(witness)};
}

inline Lambda1Result lambda1(const HRep& h) { return lambda1(h, vertex_enum(h)); }

struct PackingResult {
  bool ok = true;
  std::optional<std::pair<LatPoint, LatPoint>> overlap;  // offending pair if any
};

// Do translates of factor*lambda1*(K cap -K), centered at the given lattice
// points, have pairwise disjoint interiors?  Equivalent to the difference
// gauge of every pair being at least 2*factor*lambda1.
inline PackingResult packing_check(const HRep& h, const std::vector<LatPoint>& points,
                                   const Rat& factor = Rat(1, 2)) {
  Polytope p = vertex_enum(h);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw precondition_error("packing_check: duplicate points");
  Lambda1Result lam = lambda1(h, p);
  IntersectResult sym = intersect(p, reflect(p));
  if (sym.kind != IntersectResult::Kind::full_dim)
    throw degeneracy_error("packing_check: symmetrized body is degenerate");
  Rat threshold = 2 * factor * lam.value;
  PackingResult result;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      RatVec diff(h.dim);
      for (int k = 0; k < h.dim; ++k) diff[k] = Rat(points[i][k] - points[j][k]);
      if (gauge(sym.hrep, diff) < threshold) {
        result.ok = false;
        result.overlap = {points[i], points[j]};
        return result;
      }
    }
  return result;
}

// Triangle (-m,-1), (m,-1), (0, 1/(m-1)): exactly one interior lattice point
// but ever more total lattice points as m grows.
inline Polytope unbounded_family(long long m) {
  if (m < 2) throw precondition_error("unbounded_family requires m >= 2");
  std::vector<RatVec> verts = {
      {Rat(-m), Rat(-1)}, {Rat(m), Rat(-1)}, {Rat(0), Rat(1, m - 1)}};
  return Polytope{2, sorted_unique(std::move(verts))};
}

}  // namespace latgeom
