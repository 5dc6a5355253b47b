#pragma once

// Shared helpers for the test suite: a deterministic RNG (engine output is
// consumed through explicit modular reduction so streams are reproducible)
// and small random builders for exact scalars and matrices.

#include "latgeom/linalg.hpp"

#include <cstdint>
#include <random>

namespace testsupport {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long long below(long long n) { return static_cast<long long>(eng() % std::uint64_t(n)); }
  long long range(long long lo, long long hi) { return lo + below(hi - lo + 1); }
};

inline latgeom::Rat rand_rat(Rng& rng, long long num_bound, long long max_den) {
  long long num = rng.range(-num_bound, num_bound);
  long long den = rng.range(1, max_den);
  return latgeom::Rat(num, den);
}

inline latgeom::RatVec rand_vec(Rng& rng, int dim, long long num_bound, long long max_den) {
  latgeom::RatVec v(dim);
  for (auto& e : v) e = rand_rat(rng, num_bound, max_den);
  return v;
}

inline latgeom::RatMatrix rand_matrix(Rng& rng, int n, long long bound) {
  latgeom::RatMatrix m(n, n);
  for (auto& e : m.entries) e = latgeom::Rat(rng.range(-bound, bound));
  return m;
}

inline latgeom::RatMatrix rand_nonsingular(Rng& rng, int n, long long bound) {
  while (true) {
    latgeom::RatMatrix m = rand_matrix(rng, n, bound);
    if (latgeom::det(m) != 0) return m;
  }
}

// Random unimodular matrix as a product of integer shears and swaps.
inline latgeom::RatMatrix rand_unimodular(Rng& rng, int n, int steps = 8) {
  using namespace latgeom;
  RatMatrix u = RatMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = int(rng.below(n)), j = int(rng.below(n));
    if (i == j) continue;
    if (rng.below(4) == 0) {
      for (int c = 0; c < n; ++c) std::swap(u.at(i, c), u.at(j, c));
      for (int c = 0; c < n; ++c) u.at(i, c) = -u.at(i, c);
    } else {
      Rat f = Rat(rng.range(-2, 2));
      for (int c = 0; c < n; ++c) u.at(i, c) += f * u.at(j, c);
    }
  }
  return u;
}

}  // namespace testsupport
