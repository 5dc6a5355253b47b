#pragma once

// Bound formulas and verification predicates for lattice point counts of
// centered convex bodies: the packing-based dimension bound, the binomial
// simplex bound with its equality case, and the Milman-Pajor and Gruenbaum
// volume inequalities.

#include "latgeom/barycentric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latgeom {

// S_d = (d+1) conv{0, e_1, ..., e_d} - (1, ..., 1); centroid 0, first
// minimum 1, and G(m S_d) = C(d + m(d+1), d).
inline Simplex ehrhart_simplex(int d) {
  check_dim(d);
  std::vector<RatVec> verts;
  verts.emplace_back(d, Rat(-1));
  for (int i = 0; i < d; ++i) {
    RatVec v(d, Rat(-1));
    v[i] += d + 1;
    verts.push_back(std::move(v));
  }
  return Simplex{d, std::move(verts)};
}

inline Simplex scale_simplex(const Simplex& s, const Rat& c) {
  if (c == 0) throw precondition_error("scale factor must be nonzero");
  std::vector<RatVec> verts;
  for (const RatVec& v : s.vertices) verts.push_back(vec_scale(c, v));
  return Simplex{s.dim, std::move(verts)};
}

inline Polytope center(const Polytope& p) { return translate(p, vec_neg(centroid(p))); }

// 2^d (2/lambda1 + 1)^d
inline Rat prop1_bound(int d, const Rat& lambda1_value) {
  if (lambda1_value <= 0) throw precondition_error("first minimum must be positive");
  return rat_pow(Rat(2), d) * rat_pow(2 / lambda1_value + 1, d);
}

// C(d + ceil((d+1)/lambda1), d)
inline Int conjecture_bound(int d, const Rat& lambda1_value) {
  return binomial(Int(d) + n_of_rho(d, lambda1_value), d);
}

enum class BoundStatus { strict, equal, violated };

inline BoundStatus classify_bound(const Rat& bound, const Int& actual) {
  Rat a(actual);
  if (a < bound) return BoundStatus::strict;
  if (a == bound) return BoundStatus::equal;
  return BoundStatus::violated;
}

inline const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::strict: return "strict";
    case BoundStatus::equal: return "equal";
    default: return "violated";
  }
}

// Certificate that s = U t + z with integral U, |det U| = 1, integral z.
struct UnimodularCert {
  RatMatrix u;
  RatVec z;
};

enum class EqualityStatus { equivalent, not_equivalent, not_applicable };

struct EqualityCase {
  EqualityStatus status = EqualityStatus::not_applicable;
  std::optional<UnimodularCert> cert;
  bool m_unimodular = false;  // the edge matrix over n(lambda1), when equivalent
};

struct BoundResult {
  Rat bound;
  Int actual = 0;
  BoundStatus status = BoundStatus::violated;
  Rat lambda;
  LatPoint lambda_witness;
  bool chain_ok = true;  // side conditions of the proof chain
  std::vector<std::pair<std::string, std::string>> details;
  std::optional<EqualityCase> equality;
};

// Searches the (d+1)! vertex matchings of t for a lattice-affine map onto s.
inline std::optional<UnimodularCert> unimodular_equivalent(const Simplex& s, const Simplex& t) {
  if (s.dim != t.dim) throw dimension_error("unimodular_equivalent: dimension mismatch");
  int d = s.dim;
  check_dim(d);
  if (simplex_volume(s) == 0 || simplex_volume(t) == 0)
    throw degeneracy_error("unimodular_equivalent: degenerate simplex");

  std::vector<RatVec> es;
  for (int i = 0; i < d; ++i) es.push_back(vec_sub(s.vertices[i], s.vertices[d]));
  RatMatrix es_mat = RatMatrix::from_columns(es);

  std::vector<int> perm(d + 1);
  for (int i = 0; i <= d; ++i) perm[i] = i;
  do {
    std::vector<RatVec> et;
    for (int i = 0; i < d; ++i)
      et.push_back(vec_sub(t.vertices[perm[i]], t.vertices[perm[d]]));
    RatMatrix et_mat = RatMatrix::from_columns(et);
    auto et_inv = inverse(et_mat);
    RatMatrix u = mat_mul(es_mat, *et_inv);
    if (!is_unimodular(u)) continue;
    RatVec z = vec_sub(s.vertices[d], mat_vec(u, t.vertices[perm[d]]));
    if (!is_integral(z)) continue;
    bool maps = true;
    for (int i = 0; i <= d; ++i)
      if (vec_add(mat_vec(u, t.vertices[perm[i]]), z) != s.vertices[i]) {
        maps = false;
        break;
      }
    if (maps) return UnimodularCert{std::move(u), std::move(z)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Equality case of the simplex bound: is s a lattice-affine image of
// (1/lambda1) S_d?  Only defined when 1/lambda1 is an integer; also checks
// unimodularity of the scaled edge matrix M with columns (v_i - v_last)/n.
inline EqualityCase equality_case_check(const Simplex& s) {
  if (!is_zero_vec(centroid(s)))
    throw precondition_error("equality_case_check requires centroid zero");
  int d = s.dim;
  Polytope p = simplex_to_polytope(s);
  HRep h = to_hrep(p);
  Lambda1Result lam = lambda1(h, p);
  EqualityCase out;
  if (rat_num(lam.value) != 1) {
    out.status = EqualityStatus::not_applicable;
    return out;
  }
  Int k = rat_den(lam.value);
  Simplex target = scale_simplex(ehrhart_simplex(d), Rat(k));
  auto cert = unimodular_equivalent(s, target);
  if (!cert) {
    out.status = EqualityStatus::not_equivalent;
    return out;
  }
  out.status = EqualityStatus::equivalent;
  out.cert = std::move(cert);
  Int n = n_of_rho(d, lam.value);
  std::vector<RatVec> cols;
  for (int i = 0; i < d; ++i)
    cols.push_back(vec_scale(make_rat(1, n), vec_sub(s.vertices[i], s.vertices[d])));
  RatMatrix m = RatMatrix::from_columns(cols);
  out.m_unimodular = is_unimodular(m);
  return out;
}

struct RatioCheck {
  Rat ratio;
  bool pass = false;
};

// vol(K cap -K) / vol(K) >= 2^{-d} for centered K.
inline RatioCheck milman_pajor_check(const Polytope& p, const HRep& h) {
  if (!is_zero_vec(centroid(p, h)))
    throw precondition_error("milman_pajor_check requires centroid zero");
  IntersectResult sym = intersect(p, reflect(p));
  if (sym.kind != IntersectResult::Kind::full_dim)
    throw degeneracy_error("symmetrized body is degenerate");
  Rat ratio = volume(sym.poly, sym.hrep) / volume(p, h);
  return RatioCheck{ratio, ratio >= rat_pow(Rat(1, 2), p.dim)};
}

inline RatioCheck milman_pajor_check(const Polytope& p) { return milman_pajor_check(p, to_hrep(p)); }

// vol(K cap H) / vol(K) >= (d/(d+1))^d for halfspaces H containing the
// centroid (offset >= 0 since the centroid sits at the origin).
inline RatioCheck gruenbaum_check(const Polytope& p, const HalfSpace& hs, const HRep& h) {
  if (!is_zero_vec(centroid(p, h)))
    throw precondition_error("gruenbaum_check requires centroid zero");
  if (hs.offset < 0)
    throw precondition_error("gruenbaum_check halfspace must contain the origin");
  ClipResult c = clip(h, hs);
  if (c.kind != ClipResult::Kind::full_dim)
    throw degeneracy_error("clip through the centroid lost full dimension");
  Rat fraction = volume(c.poly, c.hrep) / volume(p, h);
  int d = p.dim;
  return RatioCheck{fraction, fraction >= rat_pow(Rat(d, d + 1), d)};
}

inline RatioCheck gruenbaum_check(const Polytope& p, const HalfSpace& hs) {
  return gruenbaum_check(p, hs, to_hrep(p));
}

// G(K) against 2^d (2/lambda1 + 1)^d, plus the volume-ratio step
// G(K) <= vol((1 + lambda1/2) K) / vol((lambda1/2)(K cap -K)) that the
// packing argument passes through.
inline BoundResult verify_prop1(const HRep& h, const Polytope& p) {
  if (!is_zero_vec(centroid(p, h)))
    throw precondition_error("verify_prop1 requires centroid zero");
  int d = h.dim;
  BoundResult r;
  r.actual = count_points(h, p).total;
  Lambda1Result lam = lambda1(h, p);
  r.lambda = lam.value;
  r.lambda_witness = lam.witness;
  r.bound = prop1_bound(d, lam.value);
  r.status = classify_bound(r.bound, r.actual);

  Rat vol_k = volume(p, h);
  IntersectResult sym = intersect(p, reflect(p));
  Rat vol_sym = volume(sym.poly, sym.hrep);
  Rat ratio = rat_pow(1 + lam.value / 2, d) * vol_k / (rat_pow(lam.value / 2, d) * vol_sym);
  r.chain_ok = Rat(r.actual) <= ratio;
  r.details.emplace_back("volume", rat_str(vol_k));
  r.details.emplace_back("symmetrized_volume", rat_str(vol_sym));
  r.details.emplace_back("packing_volume_ratio", rat_str(ratio));
  return r;
}

inline BoundResult verify_prop1(const HRep& h) { return verify_prop1(h, vertex_enum(h)); }

// G(S) against C(d + ceil((d+1)/lambda1), d) for centered simplices; on
// equality the certificate machinery runs.
inline BoundResult verify_simplex_bound(const Simplex& s) {
  if (!is_zero_vec(centroid(s)))
    throw precondition_error("verify_simplex_bound requires centroid zero");
  Polytope p = simplex_to_polytope(s);
  HRep h = to_hrep(p);
  BoundResult r;
  r.actual = count_points(h, p).total;
  Lambda1Result lam = lambda1(h, p);
  r.lambda = lam.value;
  r.lambda_witness = lam.witness;
  Int bound = conjecture_bound(s.dim, lam.value);
  r.bound = Rat(bound);
  r.status = classify_bound(r.bound, r.actual);
  r.details.emplace_back("grid_size", bound.str());
  if (r.status == BoundStatus::equal) {
    EqualityCase eq = equality_case_check(s);
    if (eq.status == EqualityStatus::equivalent)
      r.chain_ok = eq.m_unimodular;
    else if (eq.status == EqualityStatus::not_equivalent)
      r.chain_ok = false;  // equality without the characterized shape
    r.details.emplace_back("equality_applicable",
                           eq.status == EqualityStatus::not_applicable ? "false" : "true");
    r.equality = std::move(eq);
  }
  return r;
}

}  // namespace latgeom
