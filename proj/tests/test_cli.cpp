#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string cli_binary() {
  const char* p = std::getenv("LATGEOM_CLI");
  REQUIRE(p != nullptr);
  REQUIRE(fs::exists(p));
  return p;
}

const fs::path& scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "latgeom_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream f(p);
  f << text;
  f.close();
  return p.string();
}

struct CliResult {
  int code = -1;
  std::string text;
};

CliResult run_cli(const std::vector<std::string>& args, bool merge_stderr = false) {
  std::string cmd = cli_binary();
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.text.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json report_of(const CliResult& r) {
  Json j = Json::parse(r.text);
  REQUIRE(j.contains("command"));
  REQUIRE(j.contains("version"));
  REQUIRE(j.contains("input"));
  REQUIRE(j.contains("input_digest"));
  REQUIRE(j.contains("computed"));
  REQUIRE(j.contains("status"));
  REQUIRE(j.contains("certificates"));
  REQUIRE(j.contains("timing_seconds"));
  std::string digest = j["input_digest"];
  REQUIRE(digest.rfind("fnv1a:", 0) == 0);
  return j;
}

std::string s2_file() {
  static std::string path = write_file(
      "s2.json", R"({"dim": 2, "vrep": [["-1","-1"],["2","-1"],["-1","2"]]})");
  return path;
}

std::string square_file(long long r, const std::string& name) {
  std::string rs = std::to_string(r);
  return write_file(name, std::string("{\"dim\": 2, \"vrep\": [[\"-") + rs + "\",\"-" + rs +
                              "\"],[\"" + rs + "\",\"-" + rs + "\"],[\"-" + rs + "\",\"" +
                              rs + "\"],[\"" + rs + "\",\"" + rs + "\"]]}");
}

}  // namespace

TEST_CASE("count reports exact lattice data") {
  CliResult r = run_cli({"count", s2_file()});
  REQUIRE(r.code == 0);
  Json j = report_of(r);
  REQUIRE(j["command"] == "count");
  REQUIRE(j["computed"]["G"] == 10);
  REQUIRE(j["computed"]["interior"] == 1);
  REQUIRE(j["computed"]["boundary"] == 9);
  REQUIRE(j["status"] == "ok");

  SECTION("re-running the embedded input reproduces the computed fields") {
    std::string replay = write_file("replay.json", j["input"].dump());
    Json j2 = report_of(run_cli({"count", replay}));
    REQUIRE(j2["computed"] == j["computed"]);
    REQUIRE(j2["input_digest"] == j["input_digest"]);
  }
}

TEST_CASE("lambda1 reports value and a checkable witness") {
  std::string cube = square_file(2, "cube2.json");
  Json j = report_of(run_cli({"lambda1", cube}));
  REQUIRE(j["computed"]["lambda1"] == "1/2");
  Json w = j["computed"]["witness"];
  REQUIRE(w.size() == 2);
  std::string point = w.dump();
  Json g = report_of(run_cli({"gauge", cube, point}));
  REQUIRE(g["computed"]["gauge"] == "1/2");
}

TEST_CASE("scalar subcommands") {
  Json vol = report_of(run_cli({"volume", s2_file()}));
  REQUIRE(vol["computed"]["volume"] == "9/2");
  Json cen = report_of(run_cli({"centroid", s2_file()}));
  REQUIRE(cen["computed"]["centroid"] == Json::array({"0", "0"}));
  Json g = report_of(run_cli({"gauge", square_file(2, "cube2b.json"), "3/2, 0"}));
  REQUIRE(g["computed"]["gauge"] == "3/4");
  REQUIRE(g["input"].contains("body"));
  REQUIRE(g["input"]["point"] == Json::array({"3/2", "0"}));
}

TEST_CASE("verification subcommands") {
  SECTION("thm3 equality with certificate") {
    CliResult r = run_cli({"verify", "thm3", s2_file()});
    REQUIRE(r.code == 0);
    Json j = report_of(r);
    REQUIRE(j["status"] == "equal");
    REQUIRE(j["computed"]["G"] == 10);
    REQUIRE(j["computed"]["chain_ok"] == true);
    REQUIRE(j["certificates"]["m_unimodular"] == true);
    REQUIRE(j["certificates"]["unimodular_map"].contains("u"));
  }

  SECTION("simplex bound") {
    Json j = report_of(run_cli({"verify", "simplex", s2_file()}));
    REQUIRE(j["status"] == "equal");
    REQUIRE(j["computed"]["bound"] == "10");
  }

  SECTION("prop1 strict") {
    CliResult r = run_cli({"verify", "prop1", s2_file()});
    REQUIRE(r.code == 0);
    Json j = report_of(r);
    REQUIRE(j["status"] == "strict");
    REQUIRE(j["computed"]["bound"] == "36");
  }

  SECTION("pick and scott") {
    std::string sq = square_file(1, "sq1.json");
    Json p = report_of(run_cli({"verify", "pick", sq}));
    REQUIRE(p["status"] == "pass");
    REQUIRE(p["computed"]["area"] == "4");
    REQUIRE(p["computed"]["total"] == 9);
    std::string sq2 = square_file(2, "sq2.json");
    Json s = report_of(run_cli({"verify", "scott", sq2}));
    REQUIRE(s["status"] == "pass");
    REQUIRE(s["computed"]["deficit"] == -2);
    Json t = report_of(run_cli({"verify", "scott", s2_file()}));
    REQUIRE(t["computed"]["deficit"] == 7);
    REQUIRE(t["computed"]["equality"] == true);
    REQUIRE(t["computed"]["anomalous"] == false);
    REQUIRE(t["certificates"].contains("unimodular_map"));
  }

  SECTION("volume ratios") {
    Json mp = report_of(run_cli({"verify", "mp", s2_file()}));
    REQUIRE(mp["status"] == "pass");
    REQUIRE(mp["computed"]["ratio"] == "2/3");
    REQUIRE(mp["computed"]["threshold"] == "1/4");
    Json gb = report_of(run_cli({"verify", "gruenbaum", s2_file(), "--normal", "1,0"}));
    REQUIRE(gb["status"] == "pass");
    REQUIRE(gb["computed"]["ratio"] == "5/9");
    REQUIRE(gb["computed"]["threshold"] == "4/9");
    Json gb2 = report_of(run_cli({"verify", "gruenbaum", s2_file()}));
    REQUIRE(gb2["computed"]["normal"] == Json::array({"1", "0"}));
  }
}

TEST_CASE("grid and family subcommands") {
  Json g = report_of(run_cli({"grid", "--dim", "2", "--rho", "2/3"}));
  REQUIRE(g["computed"]["n"] == 5);
  REQUIRE(g["computed"]["cells"] == 21);
  REQUIRE(g["computed"]["binomial"] == 21);
  REQUIRE(g["status"] == "ok");
  Json g1 = report_of(run_cli({"grid", "--dim", "2", "--rho", "1"}));
  REQUIRE(g1["computed"]["cells"] == 10);

  CliResult fr = run_cli({"family", "--m", "2"});
  REQUIRE(fr.code == 0);
  Json f = report_of(fr);
  REQUIRE(f["computed"]["G"] == 9);
  REQUIRE(f["computed"]["interior"] == 1);
  REQUIRE(f["status"] == "pass");
  Json f7 = report_of(run_cli({"family", "--m", "7"}));
  REQUIRE(f7["computed"]["G"] >= 15);
}

TEST_CASE("search subcommand") {
  std::string cfg = write_file(
      "cfg.json",
      R"({"dim": 2, "modes": ["exhaustive_simplices"], "coordinate_bound": 1})");
  CliResult r = run_cli({"search", "--config", cfg});
  REQUIRE(r.code == 0);
  Json j = report_of(r);
  REQUIRE(j["status"] == "pass");
  REQUIRE(j["computed"]["bodies_tested"] == 2);
  REQUIRE(j["computed"]["violations"].empty());

  SECTION("deterministic across repeats and jobs") {
    Json again = report_of(run_cli({"search", "--config", cfg}));
    REQUIRE(again["computed"] == j["computed"]);
    Json par = report_of(run_cli({"search", "--config", cfg, "--jobs", "2"}));
    REQUIRE(par["computed"] == j["computed"]);
    REQUIRE(par["input"]["parallelism"] == 2);
  }

  SECTION("seed override lands in the embedded input") {
    std::string cfg2 = write_file(
        "cfg2.json",
        R"({"dim": 2, "modes": ["random_polytopes"], "sample_count": 3})");
    Json a = report_of(run_cli({"search", "--config", cfg2, "--seed", "11"}));
    REQUIRE(a["input"]["rng_seed"] == 11);
    Json b = report_of(run_cli({"search", "--config", cfg2, "--seed", "11"}));
    REQUIRE(a["computed"] == b["computed"]);
  }
}

TEST_CASE("report destinations") {
  fs::path out = scratch_dir() / "report.json";
  CliResult r = run_cli({"--out", out.string(), "count", s2_file()});
  REQUIRE(r.code == 0);
  REQUIRE(r.text.empty());
  std::ifstream f(out);
  Json j = Json::parse(f);
  REQUIRE(j["computed"]["G"] == 10);

  Json fp = report_of(run_cli({"--float-preview", "verify", "mp", s2_file()}));
  REQUIRE(fp.contains("computed_float"));
  double ratio = fp["computed_float"]["ratio"];
  REQUIRE(ratio > 0.66);
  REQUIRE(ratio < 0.67);
}

TEST_CASE("input errors exit with code 2") {
  auto expect_error = [](const std::vector<std::string>& args) {
    CliResult r = run_cli(args, true);
    INFO(r.text);
    REQUIRE(r.code == 2);
  };
  expect_error({"count", (scratch_dir() / "absent.json").string()});
  expect_error({"count", write_file("broken.json", "{not json")});
  expect_error({"count", write_file("dim5.json", R"({"dim": 5, "vrep": []})")});
  expect_error(
      {"count", write_file("unbounded.json",
                           R"({"dim": 2, "hrep": [{"a": ["1","0"], "b": "1"}]})")});
  expect_error({"verify", "simplex", square_file(1, "sq1b.json")});
  expect_error({"verify", "thm3", square_file(2, "sq2b.json")});
  expect_error({"verify", "nonsense", s2_file()});
  expect_error({"gauge", s2_file(), "1,2,3"});
  expect_error({"grid", "--dim", "2", "--rho", "0"});
  expect_error({"family", "--m", "1"});
  expect_error({"definitely-not-a-subcommand"});
}
