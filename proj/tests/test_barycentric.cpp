#include "latgeom/barycentric.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <set>

using namespace latgeom;

namespace {

RatVec rv(std::initializer_list<long long> xs) {
  RatVec v;
  for (long long x : xs) v.push_back(Rat(x));
  return v;
}

Simplex calibration_simplex(int d) {
  std::vector<RatVec> verts;
  verts.emplace_back(d, Rat(-1));
  for (int i = 0; i < d; ++i) {
    RatVec v(d, Rat(-1));
    v[i] += d + 1;
    verts.push_back(std::move(v));
  }
  return make_simplex(std::move(verts));
}

// random point of the standard simplex with modest denominators
RatVec random_simplex_point(testsupport::Rng& rng, int d) {
  while (true) {
    std::vector<long long> k(d + 1);
    long long sum = 0;
    for (auto& e : k) {
      e = rng.range(0, 20);
      sum += e;
    }
    if (sum == 0) continue;
    RatVec b(d + 1);
    for (int i = 0; i <= d; ++i) b[i] = Rat(k[i], sum);
    return b;
  }
}

}  // namespace

TEST_CASE("barycentric coordinates on the calibration simplex") {
  for (int d = 2; d <= 3; ++d) {
    Simplex s = calibration_simplex(d);
    RatVec at_center = bary_of_point(s, RatVec(d, Rat(0)));
    for (const Rat& e : at_center) CHECK(e == Rat(1, d + 1));
    for (int i = 0; i <= d; ++i) {
      RatVec b = bary_of_point(s, s.vertices[i]);
      for (int j = 0; j <= d; ++j) CHECK(b[j] == (i == j ? 1 : 0));
    }
  }

  Simplex s2 = calibration_simplex(2);
  CHECK(bary_of_point(s2, rv({1, 0})) == RatVec{Rat(0), Rat(2, 3), Rat(1, 3)});
}

TEST_CASE("barycentric maps invert and respect affine combinations") {
  testsupport::Rng rng(79);
  for (int d : {2, 3, 4}) {
    Simplex s = calibration_simplex(d);
    BaryMap map = make_bary_map(s);
    for (int trial = 0; trial < 40; ++trial) {
      RatVec b(d + 1);
      Rat sum = 0;
      for (int i = 0; i < d; ++i) {
        b[i] = testsupport::rand_rat(rng, 6, 4);
        sum += b[i];
      }
      b[d] = 1 - sum;  // affine coordinates, possibly negative
      RatVec x = point_of_bary(s, b);
      CHECK(map.apply(x) == b);

      RatVec y = testsupport::rand_vec(rng, d, 5, 3);
      Rat mu = testsupport::rand_rat(rng, 4, 3);
      RatVec mix = vec_add(vec_scale(mu, x), vec_scale(1 - mu, y));
      RatVec expect = vec_add(vec_scale(mu, map.apply(x)), vec_scale(1 - mu, map.apply(y)));
      CHECK(map.apply(mix) == expect);
    }
  }

  Simplex s2 = calibration_simplex(2);
  CHECK_THROWS_AS(point_of_bary(s2, rv({1, 1, 1})), precondition_error);
  CHECK_THROWS_AS(point_of_bary(s2, rv({1, 0})), dimension_error);
}

TEST_CASE("grid resolution") {
  CHECK(n_of_rho(2, Rat(1)) == 3);
  CHECK(n_of_rho(2, Rat(1, 2)) == 6);
  CHECK(n_of_rho(3, Rat(2, 3)) == 6);
  CHECK(n_of_rho(4, Rat(1, 2)) == 10);
  CHECK(n_of_rho(2, Rat(5)) == 1);
  CHECK_THROWS_AS(n_of_rho(2, Rat(0)), precondition_error);
  CHECK_THROWS_AS(n_of_rho(2, Rat(-1)), precondition_error);
}

TEST_CASE("residue grids") {
  CoveringGrid g1 = build_grid(1, Rat(1));
  REQUIRE(g1.residues.size() == 3);
  CHECK(g1.residues[0] == RatVec{Rat(0), Rat(1)});
  CHECK(g1.residues[1] == RatVec{Rat(1, 2), Rat(1, 2)});
  CHECK(g1.residues[2] == RatVec{Rat(1), Rat(0)});

  struct Case {
    int d;
    Rat rho;
    std::size_t size;
  };
  std::vector<Case> cases = {{2, Rat(1), 10},     {2, Rat(1, 2), 28}, {3, Rat(1), 35},
                             {3, Rat(2, 3), 84},  {4, Rat(1), 126},   {4, Rat(1, 2), 1001}};
  for (const Case& c : cases) {
    CoveringGrid g = build_grid(c.d, c.rho);
    CHECK(g.residues.size() == c.size);
    CHECK(Int(g.residues.size()) == binomial(Int(c.d) + g.n, c.d));
    std::set<RatVec> uniq(g.residues.begin(), g.residues.end());
    CHECK(uniq.size() == g.residues.size());
    for (std::size_t i = 1; i < g.residues.size(); ++i)
      CHECK(lex_less(g.residues[i - 1], g.residues[i]));
    for (const RatVec& r : g.residues) {
      Rat sum = 0;
      for (const Rat& e : r) {
        CHECK(e >= 0);
        CHECK(is_integer(e * Rat(g.n)));
        sum += e;
      }
      CHECK(sum == 1);
    }
  }

  CHECK_THROWS_AS(build_grid(4, Rat(1, 1000)), error);
}

TEST_CASE("cell assignment") {
  CoveringGrid g = build_grid(2, Rat(1));  // n = 3
  RatVec b{Rat(2, 5), Rat(7, 20), Rat(1, 4)};
  CHECK(cell_of(g, b) == RatVec{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  CHECK(cell_of(g, rv({1, 0, 0})) == rv({1, 0, 0}));
  CHECK(cell_of(g, rv({0, 0, 1})) == rv({0, 0, 1}));

  for (const RatVec& r : g.residues) CHECK(cell_of(g, r) == r);

  CHECK_THROWS_AS(cell_of(g, RatVec{Rat(-1, 10), Rat(1, 2), Rat(3, 5)}), precondition_error);
  CHECK_THROWS_AS(cell_of(g, RatVec{Rat(1, 2), Rat(1, 2), Rat(1, 2)}), precondition_error);

  SECTION("half-open windows partition the simplex") {
    testsupport::Rng rng(83);
    std::vector<std::pair<int, Rat>> configs = {
        {2, Rat(1)}, {2, Rat(1, 2)}, {3, Rat(1)}, {3, Rat(2, 3)}, {4, Rat(1)}};
    for (auto& [d, rho] : configs) {
      CoveringGrid grid = build_grid(d, rho);
      for (int trial = 0; trial < 60; ++trial) {
        RatVec b = random_simplex_point(rng, d);
        RatVec r = cell_of(grid, b);
        CHECK(in_half_open_cell(grid, r, b));
        int holders = 0;
        for (const RatVec& res : grid.residues)
          if (in_half_open_cell(grid, res, b)) ++holders;
        CHECK(holders == 1);
      }
    }
  }
}

TEST_CASE("coordinate separation of lattice point pairs") {
  Simplex s2 = calibration_simplex(2);

  Separation sep = lemma1_separation(s2, LatPoint{1, 0}, LatPoint{0, 0});
  CHECK(sep.index == 1);
  CHECK(sep.value == Rat(1, 3));
  Separation rev = lemma1_separation(s2, LatPoint{0, 0}, LatPoint{1, 0});
  CHECK(rev.index == 0);
  CHECK(rev.value == Rat(1, 3));

  Separation vertex_pair = lemma1_separation(s2, LatPoint{2, -1}, LatPoint{-1, -1});
  CHECK(vertex_pair.index == 1);
  CHECK(vertex_pair.value == 1);

  CHECK_THROWS_AS(lemma1_separation(s2, LatPoint{0, 0}, LatPoint{0, 0}), precondition_error);
  CHECK_THROWS_AS(lemma1_separation(s2, LatPoint{5, 5}, LatPoint{0, 0}), precondition_error);
  Simplex off = make_simplex({rv({0, 0}), rv({1, 0}), rv({0, 1})});
  CHECK_THROWS_AS(lemma1_separation(off, LatPoint{1, 0}, LatPoint{0, 0}), precondition_error);
}

TEST_CASE("separation floor drives the cell pigeonhole") {
  std::vector<Simplex> cases = {
      calibration_simplex(2),
      make_simplex({rv({-2, -2}), rv({4, -2}), rv({-2, 4})}),
      make_simplex({rv({-2, -1}), rv({1, -1}), rv({1, 2})}),  // sheared
      make_simplex({rv({-1, -1}), rv({1, 0}), rv({0, 1})}),
      calibration_simplex(3),
  };
  for (const Simplex& s : cases) {
    Polytope p = simplex_to_polytope(s);
    HRep h = to_hrep(p);
    Lambda1Result lam = lambda1(h, p);
    LatticePointSet pts = lattice_points(h, p);
    BaryMap map = make_bary_map(s);
    Rat bound = lam.value / (s.dim + 1);

    for (std::size_t i = 0; i < pts.points.size(); ++i)
      for (std::size_t j = 0; j < pts.points.size(); ++j) {
        if (i == j) continue;
        Separation sep = lemma1_separation(s, pts.points[i], pts.points[j]);
        CHECK(sep.value >= bound);
      }

    CoveringGrid grid = build_grid(s.dim, lam.value);
    std::set<RatVec> cells;
    for (const LatPoint& x : pts.points) cells.insert(cell_of(grid, map.apply(to_rat_point(x))));
    CHECK(cells.size() == pts.points.size());
    CHECK(pts.points.size() <= grid.residues.size());
  }
}
