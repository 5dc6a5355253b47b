#pragma once

// Planar lattice polygon toolkit: Pick's identity, Scott's inequality with
// its equality certificate, the planar Ehrhart volume threshold, and the
// ten-point bound for centered bodies with a single interior lattice point.

#include "latgeom/bounds.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace latgeom {

struct PlanarCounts {
  Int total = 0;
  Int interior = 0;
  Int boundary = 0;
  Rat area;
};

struct PickResult {
  PlanarCounts counts;
  bool holds = false;  // area == interior + boundary/2 - 1
};

inline void require_lattice_polygon(const Polytope& p) {
  if (p.dim != 2) throw dimension_error("lattice polygon operations need dimension 2");
  if (!is_lattice_polytope(p)) throw precondition_error("vertices must be lattice points");
}

inline PickResult pick_identity(const Polytope& p, const HRep& h) {
  require_lattice_polygon(p);
  LatticeCounts c = count_points(h, p);
  PlanarCounts pc;
  pc.total = c.total;
  pc.interior = c.interior;
  pc.boundary = c.boundary();
  pc.area = volume(p, h);
  if (pc.area == 0) throw degeneracy_error("pick_identity needs positive area");
  bool holds = pc.area == Rat(pc.interior) + Rat(pc.boundary, 2) - 1;
  return PickResult{std::move(pc), holds};
}

inline PickResult pick_identity(const Polytope& p) { return pick_identity(p, to_hrep(p)); }

struct ScottResult {
  Int deficit = 0;  // boundary - 2 * interior
  bool equality = false;
  bool anomalous = false;  // deficit 7 without a certified triangle
  std::optional<UnimodularCert> cert;
};

// b <= 2i + 7 whenever i >= 1; equality only for lattice-affine images of
// the calibration triangle.
inline ScottResult scott_deficit(const Polytope& p, const HRep& h) {
  require_lattice_polygon(p);
  LatticeCounts c = count_points(h, p);
  if (c.interior < 1) throw precondition_error("scott_deficit needs an interior lattice point");
  ScottResult r;
  r.deficit = c.boundary() - 2 * c.interior;
  r.equality = r.deficit == 7;
  if (r.equality) {
    if (p.vertices.size() == 3)
      r.cert = unimodular_equivalent(ehrhart_simplex(2), make_simplex(p.vertices));
    r.anomalous = !r.cert.has_value();
  }
  return r;
}

inline ScottResult scott_deficit(const Polytope& p) { return scott_deficit(p, to_hrep(p)); }

struct EhrhartPlanarResult {
  bool applicable = false;  // dimension 2, centroid zero, area >= 9/2
  bool holds = false;       // at least two nonzero lattice points
  Int nonzero_count = 0;
};

inline EhrhartPlanarResult ehrhart_planar_check(const Polytope& p, const HRep& h) {
  EhrhartPlanarResult r;
  if (p.dim != 2) return r;
  if (!is_zero_vec(centroid(p, h))) return r;
  if (volume(p, h) < Rat(9, 2)) return r;
  r.applicable = true;
  LatticePointSet pts = lattice_points(h, p);
  for (const LatPoint& q : pts.points)
    if (q[0] != 0 || q[1] != 0) ++r.nonzero_count;
  r.holds = r.nonzero_count >= 2;
  return r;
}

inline EhrhartPlanarResult ehrhart_planar_check(const Polytope& p) {
  return ehrhart_planar_check(p, to_hrep(p));
}

namespace detail {

inline std::string vec_label(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace detail

// G(K) <= 10 for planar centered K whose only interior lattice point is the
// origin.  The result carries the case split on the lattice point hull P:
// either the origin is interior to P and Pick's identity caps G through
// vol(K) <= 9/2, or a supporting line at the origin pins every lattice point
// to one side and the centroid section bound caps G at 7.
inline BoundResult verify_thm3(const HRep& h, const Polytope& p) {
  if (h.dim != 2) throw dimension_error("verify_thm3 needs dimension 2");
  if (!is_zero_vec(centroid(p, h)))
    throw precondition_error("verify_thm3 requires centroid zero");
  LatticePointSet pts = lattice_points(h, p);
  if (pts.interior_count() != 1)
    throw precondition_error("verify_thm3 requires exactly one interior lattice point");

  BoundResult r;
  r.actual = pts.total();
  r.bound = Rat(10);
  r.status = classify_bound(r.bound, r.actual);
  Lambda1Result lam = lambda1(h, p);
  r.lambda = lam.value;
  r.lambda_witness = lam.witness;

  Rat vol_k = volume(p, h);
  r.details.emplace_back("volume", rat_str(vol_k));
  bool chain = vol_k <= Rat(9, 2);

  std::vector<RatVec> hull_pts;
  for (const LatPoint& q : pts.points) hull_pts.push_back(to_rat_point(q));
  int hull_rank = affine_rank(hull_pts);

  if (hull_rank == 2) {
    Polytope hull = polytope_from_points(2, hull_pts);
    HRep hh = to_hrep(hull);
    Rat vol_hull = volume(hull, hh);
    LatticeCounts hc = count_points(hh, hull);
    chain = chain && hc.total == r.actual && vol_hull <= vol_k;
    r.details.emplace_back("hull_volume", rat_str(vol_hull));
    if (membership(hh, RatVec(2, Rat(0))) == Membership::interior) {
      r.details.emplace_back("branch", "interior");
      chain = chain && hc.interior == 1 && 2 * vol_hull == Rat(r.actual - 1);
      if (r.status == BoundStatus::equal) {
        bool tight_shape = same_body(hull, p) && hull.vertices.size() == 3;
        EqualityCase eq;
        if (tight_shape) eq = equality_case_check(make_simplex(hull.vertices));
        chain = chain && tight_shape && eq.status == EqualityStatus::equivalent &&
                eq.m_unimodular;
        r.details.emplace_back("equality_applicable", tight_shape ? "true" : "false");
        r.equality = std::move(eq);
      }
    } else {
      r.details.emplace_back("branch", "boundary");
      RatVec support;
      for (const HalfSpace& hs : hh.halfspaces)
        if (hs.offset == 0) {
          support = hs.normal;
          break;
        }
      if (support.empty()) throw degeneracy_error("no supporting line at the origin");
      ClipResult cut = clip(h, make_halfspace(support, Rat(0)));
      Rat fraction = cut.kind == ClipResult::Kind::full_dim
                         ? volume(cut.poly, cut.hrep) / vol_k
                         : Rat(0);
      r.details.emplace_back("support_normal", detail::vec_label(support));
      r.details.emplace_back("section_fraction", rat_str(fraction));
      chain = chain && hc.interior == 0 && fraction <= Rat(5, 9) && r.actual <= 7 &&
              2 * vol_hull == Rat(r.actual - 2);
    }
  } else {
    r.details.emplace_back("branch", "boundary");
    r.details.emplace_back("hull_volume", "0");
    RatVec support;
    if (hull_rank <= 0) {
      support = {Rat(1), Rat(0)};
    } else {
      RatVec dir = vec_sub(hull_pts.back(), hull_pts.front());
      support = {-dir[1], dir[0]};
    }
    ClipResult cut = clip(h, make_halfspace(support, Rat(0)));
    Rat fraction = cut.kind == ClipResult::Kind::full_dim
                       ? volume(cut.poly, cut.hrep) / vol_k
                       : Rat(0);
    r.details.emplace_back("support_normal", detail::vec_label(support));
    r.details.emplace_back("section_fraction", rat_str(fraction));
    chain = chain && fraction <= Rat(5, 9) && r.actual <= 3;
  }

  r.chain_ok = chain;
  return r;
}

inline BoundResult verify_thm3(const HRep& h) { return verify_thm3(h, vertex_enum(h)); }

}  // namespace latgeom
