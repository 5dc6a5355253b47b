#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "latgeom/harness.hpp"

namespace {

using namespace latgeom;

constexpr const char* kVersion = "0.1.0";

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Json json_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

Json witness_json(const LatPoint& w) {
  Json a = Json::array();
  for (long long c : w) a.push_back(c);
  return a;
}

// Decimal shadow of a report section: rational strings become doubles,
// everything else passes through.
Json float_of(const Json& j) {
  if (j.is_string()) {
    try {
      return Json(parse_rat(j.get<std::string>()).convert_to<double>());
    } catch (const error&) {
      return j;
    }
  }
  if (j.is_array()) {
    Json a = Json::array();
    for (const Json& e : j) a.push_back(float_of(e));
    return a;
  }
  if (j.is_object()) {
    Json o = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) o[it.key()] = float_of(it.value());
    return o;
  }
  return j;
}

RatVec parse_point(const std::string& text, int dim) {
  std::string t = text;
  size_t a = t.find_first_not_of(" \t");
  if (a != std::string::npos && t[a] == '[') return vec_from_json(parse_json_text(t), dim);
  RatVec v;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t lo = part.find_first_not_of(" \t");
    size_t hi = part.find_last_not_of(" \t");
    if (lo == std::string::npos) throw parse_error("empty coordinate in point");
    v.push_back(parse_rat(part.substr(lo, hi - lo + 1)));
  }
  if (int(v.size()) != dim) throw dimension_error("point has wrong dimension");
  return v;
}

struct Outcome {
  Json computed = Json::object();
  Json certificates = Json::object();
  std::string status = "ok";
  int exit_code = 0;
};

void fill_bound_result(const BoundResult& r, Outcome& out) {
  out.computed["G"] = json_int(r.actual);
  out.computed["bound"] = rat_to_json(r.bound);
  out.computed["lambda1"] = rat_to_json(r.lambda);
  out.computed["lambda1_witness"] = witness_json(r.lambda_witness);
  for (const auto& kv : r.details) out.computed[kv.first] = kv.second;
  out.computed["chain_ok"] = r.chain_ok;
  out.status = to_string(r.status);
  if (r.status == BoundStatus::violated || !r.chain_ok) out.exit_code = 1;
  if (r.equality) {
    out.certificates["equivalence"] = r.equality->status == EqualityStatus::equivalent
                                          ? "equivalent"
                                          : (r.equality->status == EqualityStatus::not_equivalent
                                                 ? "not_equivalent"
                                                 : "not_applicable");
    out.certificates["m_unimodular"] = r.equality->m_unimodular;
    if (r.equality->cert) out.certificates["unimodular_map"] = cert_to_json(*r.equality->cert);
  }
}

Outcome run_verify(const std::string& which, const BodyInput& in, const std::string& normal_text) {
  Outcome out;
  const Polytope& p = in.poly;
  const HRep& h = in.hrep;
  if (which == "prop1") {
    fill_bound_result(verify_prop1(h, p), out);
  } else if (which == "simplex") {
    if (p.vertices.size() != size_t(p.dim) + 1)
      throw precondition_error("body is not a simplex");
    fill_bound_result(verify_simplex_bound(make_simplex(p.vertices)), out);
  } else if (which == "thm3") {
    fill_bound_result(verify_thm3(h, p), out);
  } else if (which == "pick") {
    PickResult r = pick_identity(p, h);
    out.computed["area"] = rat_to_json(r.counts.area);
    out.computed["total"] = json_int(r.counts.total);
    out.computed["interior"] = json_int(r.counts.interior);
    out.computed["boundary"] = json_int(r.counts.boundary);
    out.status = r.holds ? "pass" : "violated";
    out.exit_code = r.holds ? 0 : 1;
  } else if (which == "scott") {
    ScottResult r = scott_deficit(p, h);
    out.computed["deficit"] = json_int(r.deficit);
    out.computed["equality"] = r.equality;
    out.computed["anomalous"] = r.anomalous;
    if (r.cert) out.certificates["unimodular_map"] = cert_to_json(*r.cert);
    out.status = r.deficit > 7 ? "violated" : (r.anomalous ? "anomalous" : "pass");
    out.exit_code = out.status == "pass" ? 0 : 1;
  } else if (which == "mp") {
    RatioCheck r = milman_pajor_check(p, h);
    out.computed["ratio"] = rat_to_json(r.ratio);
    out.computed["threshold"] = rat_to_json(rat_pow(Rat(1, 2), p.dim));
    out.status = r.pass ? "pass" : "violated";
    out.exit_code = r.pass ? 0 : 1;
  } else {
    RatVec normal;
    if (normal_text.empty()) {
      normal = RatVec(p.dim, Rat(0));
      normal[0] = 1;
    } else {
      normal = parse_point(normal_text, p.dim);
    }
    HalfSpace hs = make_halfspace(normal, Rat(0));
    RatioCheck r = gruenbaum_check(p, hs, h);
    out.computed["normal"] = vec_to_json(normal);
    out.computed["ratio"] = rat_to_json(r.ratio);
    out.computed["threshold"] = rat_to_json(rat_pow(Rat(p.dim, p.dim + 1), p.dim));
    out.status = r.pass ? "pass" : "violated";
    out.exit_code = r.pass ? 0 : 1;
  }
  return out;
}

int emit_report(const std::string& command, const Json& input, const Outcome& out,
                double seconds, bool float_preview, const std::string& out_path) {
  Json report;
  report["command"] = command;
  report["version"] = kVersion;
  report["input"] = input;
  report["input_digest"] = digest_label(input.dump());
  report["computed"] = out.computed;
  if (float_preview) report["computed_float"] = float_of(out.computed);
  report["status"] = out.status;
  report["certificates"] = out.certificates;
  report["timing_seconds"] = seconds;
  std::string text = report.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw error("cannot write " + out_path);
    f << text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice point counting and bound verification for convex bodies"};
  app.require_subcommand(1);

  std::string out_path;
  bool float_preview = false;
  std::uint64_t seed = 0;
  int jobs = 0;
  app.add_option("--out", out_path, "write the JSON report to this file instead of stdout");
  app.add_flag("--float-preview", float_preview,
               "add decimal previews alongside exact values");
  CLI::Option* seed_opt = app.add_option("--seed", seed, "override the search seed");
  CLI::Option* jobs_opt =
      app.add_option("--jobs", jobs, "override search parallelism")->check(CLI::Range(1, 16));

  std::string body_path, point_text, which, normal_text, config_path, rho_text;
  int grid_dim = 0;
  long long family_m = 0;

  CLI::App* c_count = app.add_subcommand("count", "lattice point counts of a body");
  c_count->add_option("body", body_path, "body JSON file")->required();
  CLI::App* c_lambda = app.add_subcommand("lambda1", "first minimum with witness");
  c_lambda->add_option("body", body_path, "body JSON file")->required();
  CLI::App* c_centroid = app.add_subcommand("centroid", "exact centroid of a body");
  c_centroid->add_option("body", body_path, "body JSON file")->required();
  CLI::App* c_volume = app.add_subcommand("volume", "exact volume of a body");
  c_volume->add_option("body", body_path, "body JSON file")->required();
  CLI::App* c_gauge = app.add_subcommand("gauge", "Minkowski gauge of a point");
  c_gauge->add_option("body", body_path, "body JSON file")->required();
  c_gauge->add_option("point", point_text, "point, JSON array or comma list")->required();
  CLI::App* c_verify = app.add_subcommand("verify", "run one verification check");
  c_verify
      ->add_option("check", which, "one of prop1, simplex, thm3, pick, scott, mp, gruenbaum")
      ->required()
      ->check(CLI::IsMember({"prop1", "simplex", "thm3", "pick", "scott", "mp", "gruenbaum"}));
  c_verify->add_option("body", body_path, "body JSON file")->required();
  c_verify->add_option("--normal", normal_text,
                       "halfspace normal for gruenbaum, comma list of rationals");
  CLI::App* c_grid = app.add_subcommand("grid", "barycentric covering grid of a dilation");
  c_grid->add_option("--dim", grid_dim, "ambient dimension")->required();
  c_grid->add_option("--rho", rho_text, "dilation factor p/q")->required();
  CLI::App* c_search = app.add_subcommand("search", "run the search harness");
  c_search->add_option("--config", config_path, "search config JSON file")->required();
  CLI::App* c_family = app.add_subcommand("family", "triangle family member");
  c_family->add_option("--m", family_m, "family index, at least 2")->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  try {
    Outcome out;
    Json input;
    std::string command;

    if (c_count->parsed() || c_lambda->parsed() || c_centroid->parsed() ||
        c_volume->parsed() || c_gauge->parsed() || c_verify->parsed()) {
      input = load_json_file(body_path);
      BodyInput body = body_from_json(input);
      if (c_count->parsed()) {
        command = "count";
        LatticeCounts c = count_points(body.hrep, body.poly);
        out.computed["G"] = c.total;
        out.computed["interior"] = c.interior;
        out.computed["boundary"] = c.boundary();
      } else if (c_lambda->parsed()) {
        command = "lambda1";
        Lambda1Result l = lambda1(body.hrep, body.poly);
        out.computed["lambda1"] = rat_to_json(l.value);
        out.computed["witness"] = witness_json(l.witness);
      } else if (c_centroid->parsed()) {
        command = "centroid";
        out.computed["centroid"] = vec_to_json(centroid(body.poly, body.hrep));
      } else if (c_volume->parsed()) {
        command = "volume";
        out.computed["volume"] = rat_to_json(volume(body.poly, body.hrep));
      } else if (c_gauge->parsed()) {
        command = "gauge";
        RatVec z = parse_point(point_text, body.poly.dim);
        Json wrapped;
        wrapped["body"] = input;
        wrapped["point"] = vec_to_json(z);
        input = wrapped;
        out.computed["gauge"] = rat_to_json(gauge(body.hrep, z));
      } else {
        command = "verify " + which;
        out = run_verify(which, body, normal_text);
      }
    } else if (c_grid->parsed()) {
      command = "grid";
      Rat rho = parse_rat(rho_text);
      input["dim"] = grid_dim;
      input["rho"] = rat_to_json(rho);
      CoveringGrid g = build_grid(grid_dim, rho);
      Int expected = binomial(Int(grid_dim) + g.n, grid_dim);
      out.computed["n"] = json_int(g.n);
      out.computed["cells"] = json_int(Int(g.residues.size()));
      out.computed["binomial"] = json_int(expected);
      if (Int(g.residues.size()) != expected) {
        out.status = "violated";
        out.exit_code = 1;
      }
    } else if (c_search->parsed()) {
      command = "search";
      SearchConfig cfg = config_from_json(load_json_file(config_path));
      if (seed_opt->count() > 0) cfg.rng_seed = seed;
      if (jobs_opt->count() > 0) cfg.parallelism = jobs;
      validate_config(cfg);
      input = config_to_json(cfg);
      SearchSummary s = run_suite(cfg);
      out.computed = serialize_summary(s);
      out.status = s.violations.empty() ? "pass" : "violated";
      out.exit_code = s.violations.empty() ? 0 : 1;
    } else {
      command = "family";
      if (family_m < 2) throw precondition_error("family index must be at least 2");
      input["m"] = family_m;
      Polytope p = unbounded_family(family_m);
      HRep h = to_hrep(p);
      LatticeCounts c = count_points(h, p);
      out.computed["G"] = c.total;
      out.computed["interior"] = c.interior;
      out.computed["volume"] = rat_to_json(volume(p, h));
      Json verts = Json::array();
      for (const RatVec& v : p.vertices) verts.push_back(vec_to_json(v));
      out.computed["vertices"] = verts;
      bool ok = c.interior == 1 && c.total >= 2 * family_m + 1;
      out.status = ok ? "pass" : "violated";
      out.exit_code = ok ? 0 : 1;
    }

    return emit_report(command, input, out, elapsed(), float_preview, out_path);
  } catch (const error& e) {
    Json diag;
    diag["error"] = e.what();
    std::cerr << diag.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json diag;
    diag["error"] = e.what();
    std::cerr << diag.dump(2) << "\n";
    return 2;
  }
}
