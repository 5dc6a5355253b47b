#include <cstdio>
#include <string>

#include "latgeom/harness.hpp"

using namespace latgeom;

namespace {

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

void header(const char* title) { std::printf("\n== %s ==\n", title); }

}  // namespace

int main() {
  header("the planar extremal triangle");
  Simplex s2 = ehrhart_simplex(2);
  Polytope p = simplex_to_polytope(s2);
  HRep h = to_hrep(p);
  for (const RatVec& v : p.vertices) std::printf("vertex %s\n", vec_str(v).c_str());
  std::printf("volume   %s\n", rat_str(volume(p, h)).c_str());
  std::printf("centroid %s\n", vec_str(centroid(p, h)).c_str());
  Lambda1Result lam = lambda1(h, p);
  std::printf("first minimum %s at (%lld, %lld)\n", rat_str(lam.value).c_str(),
              lam.witness[0], lam.witness[1]);

  header("dilation counts match the binomial formula");
  for (int m = 1; m <= 4; ++m) {
    BoundResult r = verify_simplex_bound(scale_simplex(s2, Rat(m)));
    std::printf("m=%d  G=%s  C(2+3m,2)=%s  %s\n", m, r.actual.str().c_str(),
                rat_str(r.bound).c_str(), to_string(r.status));
  }

  header("ten points force the extremal shape");
  BoundResult t = verify_thm3(h, p);
  std::printf("G=%s against bound %s: %s\n", t.actual.str().c_str(),
              rat_str(t.bound).c_str(), to_string(t.status));
  if (t.equality && t.equality->cert) {
    const UnimodularCert& c = *t.equality->cert;
    for (int r = 0; r < c.u.rows; ++r) {
      RatVec row(c.u.cols);
      for (int j = 0; j < c.u.cols; ++j) row[j] = c.u.at(r, j);
      std::printf("certificate U row %d: %s\n", r, vec_str(row).c_str());
    }
    std::printf("certificate shift %s\n", vec_str(c.z).c_str());
  }

  header("volume ratios at the centroid");
  RatioCheck mp = milman_pajor_check(p, h);
  std::printf("vol(K cap -K)/vol(K) = %s (floor 1/4)\n", rat_str(mp.ratio).c_str());
  RatioCheck gb = gruenbaum_check(p, make_halfspace(RatVec{Rat(1), Rat(1)}, Rat(0)), h);
  std::printf("facet-parallel section keeps %s of the volume (floor 4/9)\n",
              rat_str(gb.ratio).c_str());

  header("why the centroid constraint matters");
  for (long long m : {2, 5, 10, 25}) {
    Polytope tri = unbounded_family(m);
    HRep th = to_hrep(tri);
    LatticeCounts c = count_points(th, tri);
    std::printf("m=%2lld  interior=%lld  G=%lld  centroid %s\n", m, c.interior, c.total,
                vec_str(centroid(tri, th)).c_str());
  }

  header("exhaustive search, one command");
  SearchConfig cfg;
  cfg.dim = 2;
  cfg.coordinate_bound = 3;
  cfg.modes = {SearchMode::exhaustive_simplices};
  SearchSummary sum = run_suite(cfg);
  std::printf("%lld centered triangles checked, %zu violations\n", sum.bodies_tested,
              sum.violations.size());
  for (const auto& kv : sum.max_g_by_lambda1)
    std::printf("  first minimum %-4s -> max G = %s\n", kv.first.c_str(),
                kv.second.str().c_str());
  return 0;
}
