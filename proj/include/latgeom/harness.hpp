#pragma once

// Search harness: exhaustive enumeration of centered lattice simplices,
// seeded random centered bodies, and a batch battery that runs every check
// over a configured universe.  Summaries are deterministic for a given
// config: bodies sit in a fixed roster order (exhaustive, then random, then
// family), per-body randomness is seeded from the config seed and the body
// index, and worker partitions merge back by body index, so the serialized
// summary is byte-identical regardless of parallelism.

#include "latgeom/json_io.hpp"
#include "latgeom/planar.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace latgeom {

enum class SearchMode { exhaustive_simplices, random_polytopes, family_triangles };

inline const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::exhaustive_simplices: return "exhaustive_simplices";
    case SearchMode::random_polytopes: return "random_polytopes";
    default: return "family_triangles";
  }
}

inline SearchMode mode_from_string(const std::string& s) {
  if (s == "exhaustive_simplices") return SearchMode::exhaustive_simplices;
  if (s == "random_polytopes") return SearchMode::random_polytopes;
  if (s == "family_triangles") return SearchMode::family_triangles;
  throw parse_error("unknown search mode: " + s);
}

struct SearchConfig {
  int dim = 2;
  long long coordinate_bound = 1;
  std::vector<SearchMode> modes;
  long long sample_count = 0;
  std::uint64_t rng_seed = 0;
  int parallelism = 1;
};

inline bool has_mode(const SearchConfig& cfg, SearchMode m) {
  return std::find(cfg.modes.begin(), cfg.modes.end(), m) != cfg.modes.end();
}

inline void validate_config(const SearchConfig& cfg) {
  check_dim(cfg.dim);
  if (cfg.coordinate_bound < 1) throw precondition_error("coordinate bound must be at least 1");
  if (cfg.sample_count < 0) throw precondition_error("sample count must be nonnegative");
  if (cfg.parallelism < 1 || cfg.parallelism > 16)
    throw precondition_error("parallelism must be between 1 and 16");
  if (has_mode(cfg, SearchMode::exhaustive_simplices) && cfg.dim != 2 && cfg.dim != 3)
    throw precondition_error("exhaustive enumeration covers dimensions 2 and 3");
  if (has_mode(cfg, SearchMode::random_polytopes) && cfg.dim > 3)
    throw precondition_error("random bodies cover dimensions 1 to 3");
  if (has_mode(cfg, SearchMode::family_triangles) && cfg.dim != 2)
    throw precondition_error("the triangle family is planar");
}

// All lattice simplices with vertices in [-n, n]^dim and vertex sum zero,
// one representative per {S, -S} pair, in ascending vertex-list order.  With
// unimodular_dedup set, a quadratic pairwise pass additionally drops every
// simplex that is lattice-affine equivalent to an earlier one; that pass
// costs (d+1)! matchings per pair, so reserve it for small bounds.
inline std::vector<Simplex> enumerate_centroid_simplices(int dim, long long n,
                                                         bool unimodular_dedup = false) {
  if (dim != 2 && dim != 3)
    throw dimension_error("exhaustive simplex enumeration covers dimensions 2 and 3");
  if (n < 1) throw precondition_error("coordinate bound must be at least 1");

  std::vector<LatPoint> pts;
  LatPoint cur(dim, -n);
  while (true) {
    pts.push_back(cur);
    int i = dim - 1;
    while (i >= 0 && cur[i] == n) {
      cur[i] = -n;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  auto in_box = [&](const LatPoint& p) {
    for (long long c : p)
      if (c < -n || c > n) return false;
    return true;
  };
  auto keep_canonical = [](std::vector<LatPoint> s, std::vector<Simplex>& out, int d) {
    std::vector<LatPoint> mirror;
    for (const LatPoint& p : s) {
      LatPoint q(p.size());
      for (size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
      mirror.push_back(std::move(q));
    }
    std::sort(mirror.begin(), mirror.end());
    if (s < mirror) return;  // keep the lex-larger of {S, -S}
    std::vector<RatVec> vs;
    for (const LatPoint& p : s) vs.push_back(to_rat_point(p));
    out.push_back(Simplex{d, std::move(vs)});
  };

  std::vector<Simplex> out;
  if (dim == 2) {
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        LatPoint last = {-(pts[i][0] + pts[j][0]), -(pts[i][1] + pts[j][1])};
        if (!(pts[j] < last) || !in_box(last)) continue;
        long long ax = pts[j][0] - pts[i][0], ay = pts[j][1] - pts[i][1];
        long long bx = last[0] - pts[i][0], by = last[1] - pts[i][1];
        if (ax * by - ay * bx == 0) continue;
        keep_canonical({pts[i], pts[j], last}, out, dim);
      }
  } else {
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        for (size_t k = j + 1; k < pts.size(); ++k) {
          LatPoint last = {-(pts[i][0] + pts[j][0] + pts[k][0]),
                           -(pts[i][1] + pts[j][1] + pts[k][1]),
                           -(pts[i][2] + pts[j][2] + pts[k][2])};
          if (!(pts[k] < last) || !in_box(last)) continue;
          long long e[3][3];
          const LatPoint* rest[3] = {&pts[j], &pts[k], &last};
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) e[r][c] = (*rest[r])[c] - pts[i][c];
          long long det = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
                          e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                          e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
          if (det == 0) continue;
          keep_canonical({pts[i], pts[j], pts[k], last}, out, dim);
        }
  }
  if (unimodular_dedup) {
    std::vector<Simplex> reduced;
    for (const Simplex& s : out) {
      bool fresh = true;
      for (const Simplex& seen : reduced)
        if (unimodular_equivalent(seen, s)) {
          fresh = false;
          break;
        }
      if (fresh) reduced.push_back(s);
    }
    out = std::move(reduced);
  }
  return out;
}

inline std::vector<Simplex> enumerate_centroid_simplices(const SearchConfig& cfg) {
  if (!has_mode(cfg, SearchMode::exhaustive_simplices))
    throw precondition_error("config does not enable exhaustive enumeration");
  return enumerate_centroid_simplices(cfg.dim, cfg.coordinate_bound);
}

// Hull of seeded random rational points, recentered exactly; a pure function
// of (dim, seed, draw_index, symmetrize).  The symmetrized variant takes the
// hull of the points and their negatives, so its centroid is zero as built.
inline Polytope random_centroid_body(int dim, std::uint64_t seed, long long draw_index,
                                     bool symmetrize = false) {
  if (dim < 1 || dim > 3) throw dimension_error("random bodies cover dimensions 1 to 3");
  if (draw_index < 0) throw precondition_error("draw index must be nonnegative");
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(draw_index),
                    std::uint32_t(std::uint64_t(draw_index) >> 32),
                    std::uint32_t(symmetrize ? 1 : 0)};
  std::mt19937_64 eng(seq);
  for (int attempt = 0; attempt < 64; ++attempt) {
    int k = dim + 2 + int(eng() % 5);
    std::vector<RatVec> cloud;
    for (int i = 0; i < k; ++i) {
      RatVec v;
      for (int c = 0; c < dim; ++c) {
        long long num = static_cast<long long>(eng() % 17) - 8;
        long long den = 1 + static_cast<long long>(eng() % 3);
        v.push_back(make_rat(num, den));
      }
      if (symmetrize) cloud.push_back(vec_neg(v));
      cloud.push_back(std::move(v));
    }
    try {
      Polytope p = polytope_from_points(dim, cloud);
      return symmetrize ? p : center(p);
    } catch (const degeneracy_error&) {
      continue;
    }
  }
  throw degeneracy_error("random body generation exhausted its retry budget");
}

inline Polytope random_centroid_body(const SearchConfig& cfg, long long draw_index,
                                     bool symmetrize = false) {
  return random_centroid_body(cfg.dim, cfg.rng_seed, draw_index, symmetrize);
}

struct Violation {
  long long body_index = 0;
  std::string check;
  std::string detail;
  Polytope body;
};

struct EqualityRecord {
  long long body_index = 0;
  std::string check;
  Polytope body;
  UnimodularCert cert;
  bool m_unimodular = false;
};

struct SearchSummary {
  long long bodies_tested = 0;
  std::vector<Violation> violations;
  std::vector<EqualityRecord> equality_cases;
  std::map<std::string, Int> max_g_by_lambda1;
  std::optional<Rat> min_mp_ratio;
  double runtime_seconds = 0;  // informational only, never serialized
};

namespace detail {

struct SuiteBody {
  Polytope poly;
  std::optional<Simplex> simplex;
  long long family_m = 0;
};

struct BatchResult {
  std::vector<Violation> violations;
  std::vector<EqualityRecord> equality_cases;
  std::vector<std::pair<std::string, Int>> lambda_g;
  std::optional<Rat> min_mp;
};

inline void note_violation(BatchResult& out, long long idx, const SuiteBody& b, std::string check,
                           std::string text) {
  out.violations.push_back(Violation{idx, std::move(check), std::move(text), b.poly});
}

inline void run_battery(const SearchConfig& cfg, long long idx, const SuiteBody& b,
                        BatchResult& out) {
  HRep h = to_hrep(b.poly);
  LatticeCounts c = count_points(h, b.poly);
  if (b.family_m > 0) {
    if (c.interior != 1)
      note_violation(out, idx, b, "family_interior",
                     "interior count " + std::to_string(c.interior));
    if (c.total < 2 * b.family_m + 1)
      note_violation(out, idx, b, "family_growth",
                     "count " + std::to_string(c.total) + " below " +
                         std::to_string(2 * b.family_m + 1));
    return;
  }

  BoundResult prop = verify_prop1(h, b.poly);
  out.lambda_g.emplace_back(rat_str(prop.lambda), Int(c.total));
  if (prop.status == BoundStatus::violated || !prop.chain_ok)
    note_violation(out, idx, b, "prop1",
                   std::string(to_string(prop.status)) + (prop.chain_ok ? "" : ", chain broken"));

  RatioCheck mp = milman_pajor_check(b.poly, h);
  if (!mp.pass) note_violation(out, idx, b, "milman_pajor", rat_str(mp.ratio));
  if (!out.min_mp || mp.ratio < *out.min_mp) out.min_mp = mp.ratio;

  std::seed_seq hs_seq{std::uint32_t(cfg.rng_seed), std::uint32_t(cfg.rng_seed >> 32),
                       std::uint32_t(idx), std::uint32_t(0x67u)};
  std::mt19937_64 eng(hs_seq);
  int made = 0;
  while (made < 8) {
    RatVec normal;
    bool zero = true;
    for (int t = 0; t < b.poly.dim; ++t) {
      long long v = static_cast<long long>(eng() % 19) - 9;
      if (v != 0) zero = false;
      normal.emplace_back(v);
    }
    if (zero) continue;
    ++made;
    RatioCheck g = gruenbaum_check(b.poly, make_halfspace(normal, Rat(0)), h);
    if (!g.pass) note_violation(out, idx, b, "gruenbaum", rat_str(g.ratio));
  }

  if (b.simplex) {
    BoundResult sb = verify_simplex_bound(*b.simplex);
    if (sb.status == BoundStatus::violated || !sb.chain_ok)
      note_violation(out, idx, b, "simplex_bound", to_string(sb.status));
    if (sb.status == BoundStatus::equal && sb.equality &&
        sb.equality->status == EqualityStatus::equivalent && sb.equality->cert)
      out.equality_cases.push_back(
          EqualityRecord{idx, "simplex_bound", b.poly, *sb.equality->cert,
                         sb.equality->m_unimodular});

    LatticePointSet lp = lattice_points(h, b.poly);
    Rat floor = sb.lambda / (b.poly.dim + 1);
    for (size_t i = 0; i < lp.points.size(); ++i)
      for (size_t j = 0; j < lp.points.size(); ++j) {
        if (i == j) continue;
        Separation sep = lemma1_separation(*b.simplex, lp.points[i], lp.points[j]);
        if (sep.value < floor)
          note_violation(out, idx, b, "lemma1", rat_str(sep.value) + " below " + rat_str(floor));
      }
  }

  if (b.poly.dim == 2) {
    EhrhartPlanarResult ep = ehrhart_planar_check(b.poly, h);
    if (ep.applicable && !ep.holds)
      note_violation(out, idx, b, "ehrhart_planar",
                     "nonzero count " + ep.nonzero_count.str());
    if (c.interior == 1) {
      BoundResult t3 = verify_thm3(h, b.poly);
      if (t3.status == BoundStatus::violated || !t3.chain_ok)
        note_violation(out, idx, b, "thm3",
                       std::string(to_string(t3.status)) + (t3.chain_ok ? "" : ", chain broken"));
      else if (t3.status == BoundStatus::equal && t3.equality && t3.equality->cert)
        out.equality_cases.push_back(
            EqualityRecord{idx, "thm3", b.poly, *t3.equality->cert, t3.equality->m_unimodular});
    }
  }
}

}  // namespace detail

inline SearchSummary run_suite(const SearchConfig& cfg) {
  validate_config(cfg);
  auto t0 = std::chrono::steady_clock::now();

  std::vector<detail::SuiteBody> roster;
  if (has_mode(cfg, SearchMode::exhaustive_simplices))
    for (Simplex& s : enumerate_centroid_simplices(cfg.dim, cfg.coordinate_bound)) {
      Polytope p = simplex_to_polytope(s);
      roster.push_back(detail::SuiteBody{std::move(p), std::move(s), 0});
    }
  if (has_mode(cfg, SearchMode::random_polytopes))
    for (long long i = 0; i < cfg.sample_count; ++i)
      roster.push_back(
          detail::SuiteBody{random_centroid_body(cfg.dim, cfg.rng_seed, i), std::nullopt, 0});
  if (has_mode(cfg, SearchMode::family_triangles))
    for (long long m = 2; m < 2 + cfg.sample_count; ++m)
      roster.push_back(detail::SuiteBody{unbounded_family(m), std::nullopt, m});

  int workers = cfg.parallelism;
  if (roster.size() < size_t(workers)) workers = std::max<int>(1, int(roster.size()));
  std::vector<detail::BatchResult> parts(workers);
  auto work = [&](int w) {
    for (size_t i = size_t(w); i < roster.size(); i += size_t(workers)) {
      try {
        detail::run_battery(cfg, static_cast<long long>(i), roster[i], parts[size_t(w)]);
      } catch (const error& e) {
        detail::note_violation(parts[size_t(w)], static_cast<long long>(i), roster[i], "error",
                               e.what());
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (std::thread& t : threads) t.join();
  }

  SearchSummary out;
  out.bodies_tested = static_cast<long long>(roster.size());
  for (detail::BatchResult& part : parts) {
    for (Violation& v : part.violations) out.violations.push_back(std::move(v));
    for (EqualityRecord& e : part.equality_cases) out.equality_cases.push_back(std::move(e));
    for (const auto& kv : part.lambda_g) {
      auto it = out.max_g_by_lambda1.find(kv.first);
      if (it == out.max_g_by_lambda1.end() || it->second < kv.second)
        out.max_g_by_lambda1[kv.first] = kv.second;
    }
    if (part.min_mp && (!out.min_mp_ratio || *part.min_mp < *out.min_mp_ratio))
      out.min_mp_ratio = part.min_mp;
  }
  std::stable_sort(out.violations.begin(), out.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return a.body_index < b.body_index;
                   });
  std::stable_sort(out.equality_cases.begin(), out.equality_cases.end(),
                   [](const EqualityRecord& a, const EqualityRecord& b) {
                     return a.body_index < b.body_index;
                   });

  out.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

inline Json cert_to_json(const UnimodularCert& c) {
  Json j;
  j["u"] = matrix_to_json(c.u);
  j["z"] = vec_to_json(c.z);
  return j;
}

inline Json serialize_summary(const SearchSummary& s) {
  Json j;
  j["bodies_tested"] = s.bodies_tested;
  Json viols = Json::array();
  for (const Violation& v : s.violations) {
    Json e;
    e["body_index"] = v.body_index;
    e["check"] = v.check;
    e["detail"] = v.detail;
    e["body"] = body_to_json(v.body);
    viols.push_back(std::move(e));
  }
  j["violations"] = std::move(viols);
  Json eqs = Json::array();
  for (const EqualityRecord& r : s.equality_cases) {
    Json e;
    e["body_index"] = r.body_index;
    e["check"] = r.check;
    e["body"] = body_to_json(r.body);
    e["cert"] = cert_to_json(r.cert);
    e["m_unimodular"] = r.m_unimodular;
    eqs.push_back(std::move(e));
  }
  j["equality_cases"] = std::move(eqs);
  Json maxg = Json::object();
  for (const auto& kv : s.max_g_by_lambda1) maxg[kv.first] = kv.second.str();
  j["max_g_by_lambda1"] = std::move(maxg);
  j["min_mp_ratio"] = s.min_mp_ratio ? Json(rat_str(*s.min_mp_ratio)) : Json(nullptr);
  return j;
}

inline SearchConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("search config must be a json object");
  SearchConfig cfg;
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw parse_error("search config needs an integer dim");
  cfg.dim = j["dim"].get<int>();
  if (j.contains("coordinate_bound")) cfg.coordinate_bound = j["coordinate_bound"].get<long long>();
  if (j.contains("sample_count")) cfg.sample_count = j["sample_count"].get<long long>();
  if (j.contains("rng_seed")) cfg.rng_seed = j["rng_seed"].get<std::uint64_t>();
  if (j.contains("parallelism")) cfg.parallelism = j["parallelism"].get<int>();
  if (!j.contains("modes") || !j["modes"].is_array() || j["modes"].empty())
    throw parse_error("search config needs a nonempty modes array");
  std::vector<SearchMode> given;
  for (const Json& m : j["modes"]) {
    if (!m.is_string()) throw parse_error("modes must be strings");
    given.push_back(mode_from_string(m.get<std::string>()));
  }
  for (SearchMode m : {SearchMode::exhaustive_simplices, SearchMode::random_polytopes,
                       SearchMode::family_triangles})
    if (std::find(given.begin(), given.end(), m) != given.end()) cfg.modes.push_back(m);
  validate_config(cfg);
  return cfg;
}

inline Json config_to_json(const SearchConfig& cfg) {
  Json j;
  j["dim"] = cfg.dim;
  j["coordinate_bound"] = cfg.coordinate_bound;
  Json modes = Json::array();
  for (SearchMode m : cfg.modes) modes.push_back(to_string(m));
  j["modes"] = std::move(modes);
  j["sample_count"] = cfg.sample_count;
  j["rng_seed"] = cfg.rng_seed;
  j["parallelism"] = cfg.parallelism;
  return j;
}

}  // namespace latgeom
