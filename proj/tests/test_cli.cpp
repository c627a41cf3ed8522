#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "kdm/json_io.hpp"
#include "kdm/labeling.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  const std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int rc = pclose(pipe);
  RunResult r;
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = std::move(out);
  return r;
}

std::string cli_path() {
  const char* bin = std::getenv("KDM_CLI_BIN");
  return bin ? std::string(bin) : std::string();
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "kdm_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
  return path.string();
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

#define NEED_CLI()                          \
  const std::string bin = cli_path();       \
  if (bin.empty()) SKIP("KDM_CLI_BIN not set")

TEST_CASE("construct emits a verifiable bundle", "[cli]") {
  NEED_CLI();
  auto r = run(quoted(bin) + " construct c4k --k 2");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  REQUIRE(j["k"] == 2);
  REQUIRE(j["magic"] == 9);
  kdm::Graph g = kdm::graph_from_json(j["graph"]);
  kdm::Labeling f = kdm::labeling_from_json(j["labeling"]);
  auto v = kdm::verify_kdm(g, f, 2);
  REQUIRE(v.valid);
  REQUIRE(v.magic == 9);
}

TEST_CASE("construct bundle round-trips through verify", "[cli]") {
  NEED_CLI();
  const std::string bundle = (scratch_dir() / "bundle.json").string();
  const std::string dot = (scratch_dir() / "bundle.dot").string();
  auto r = run(quoted(bin) + " construct long-brush --n 4 --m 2 --out " +
               quoted(bundle) + " --dot " + quoted(dot));
  REQUIRE(r.status == 0);
  auto v = run(quoted(bin) + " verify --graph " + quoted(bundle) +
               " --labels " + quoted(bundle) + " --k 4");
  REQUIRE(v.status == 0);
  REQUIRE(v.out.rfind("valid, M=6\n", 0) == 0);
  REQUIRE(v.out.find("vertex,label,boundary_size,weight\n") !=
          std::string::npos);
  std::ifstream din(dot);
  std::string dtext((std::istreambuf_iterator<char>(din)),
                    std::istreambuf_iterator<char>());
  REQUIRE(dtext.rfind("graph G {", 0) == 0);
  REQUIRE(dtext.find("u1:") != std::string::npos);
}

TEST_CASE("construct prints none when the shape is infeasible", "[cli]") {
  NEED_CLI();
  auto r = run(quoted(bin) + " construct long-brush --n 3 --m 4");
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "none\n");
  auto r2 = run(quoted(bin) + " construct lp1m --sizes 2,6");
  REQUIRE(r2.status == 0);
  REQUIRE(r2.out == "none\n");
}

TEST_CASE("verify distinguishes valid from invalid", "[cli]") {
  NEED_CLI();
  const kdm::Graph lp13 = kdm::make_long_brush(
      {1, kdm::disjoint_union({kdm::make_complete(1), kdm::make_complete(2)})});
  const std::string gpath =
      write_file("lp13.json", kdm::graph_to_json(lp13).dump());
  const std::string good = write_file(
      "fig5.json", kdm::labeling_to_json(kdm::Labeling{{2, 4, 1, 3}}).dump());
  auto ok = run(quoted(bin) + " verify --graph " + quoted(gpath) +
                " --labels " + quoted(good) + " --k 2");
  REQUIRE(ok.status == 0);
  REQUIRE(ok.out.rfind("valid, M=4\n", 0) == 0);

  const std::string bad = write_file(
      "bad.json", kdm::labeling_to_json(kdm::Labeling{{1, 2, 3, 4}}).dump());
  auto nope = run(quoted(bin) + " verify --graph " + quoted(gpath) +
                  " --labels " + quoted(bad) + " --k 2");
  REQUIRE(nope.status == 2);
  REQUIRE(nope.out.rfind("invalid\n", 0) == 0);
}

TEST_CASE("search finds, reports none, and counts", "[cli]") {
  NEED_CLI();
  const std::string c4 =
      write_file("c4.json", kdm::graph_to_json(kdm::make_cycle(4)).dump());
  const std::string p5 =
      write_file("p5.json", kdm::graph_to_json(kdm::make_path(5)).dump());

  auto found = run(quoted(bin) + " search --graph " + quoted(c4) + " --k 1");
  REQUIRE(found.status == 0);
  kdm::Labeling f = kdm::labeling_from_json(json::parse(found.out));
  REQUIRE(kdm::verify_kdm(kdm::make_cycle(4), f, 1).valid);

  auto none = run(quoted(bin) + " search --graph " + quoted(p5) + " --k 1");
  REQUIRE(none.status == 0);
  REQUIRE(none.out == "none\n");

  auto count = run(quoted(bin) + " search --graph " + quoted(c4) +
                   " --k 1 --count");
  REQUIRE(count.status == 0);
  REQUIRE(count.out == "8\n");
}

TEST_CASE("sweep prints agreement rows", "[cli]") {
  NEED_CLI();
  auto r = run(quoted(bin) + " sweep --family cycle --n 3..8 --k 1..2");
  REQUIRE(r.status == 0);
  REQUIRE(r.out.rfind("family,n,m,k,found,predicted,agree\n", 0) == 0);
  REQUIRE(r.out.find("cycle,4,1,1,yes,yes,yes\n") != std::string::npos);
  REQUIRE(r.out.find("cycle,5,1,1,no,no,yes\n") != std::string::npos);
  REQUIRE(r.out.find(",no\n") == std::string::npos);
}

TEST_CASE("partition subcommand", "[cli]") {
  NEED_CLI();
  auto r = run(quoted(bin) + " partition --n 8 --exclude 6 --sizes 2,5");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  REQUIRE(j["common_sum"] == 15);
  REQUIRE(j["parts"].size() == 2);
  REQUIRE(j["parts"][0].size() == 2);

  auto none = run(quoted(bin) + " partition --n 6 --sizes 3,3");
  REQUIRE(none.status == 0);
  REQUIRE(none.out == "none\n");

  auto ground = run(quoted(bin) + " partition --ground 1,2,3,4,6,8 " +
                    "--sizes 3,3");
  REQUIRE(ground.status == 0);
  REQUIRE(json::parse(ground.out)["common_sum"] == 12);
}

TEST_CASE("table reports", "[cli]") {
  NEED_CLI();
  auto t1 = run(quoted(bin) + " table1 --no-oracle");
  REQUIRE(t1.status == 0);
  REQUIRE(t1.out.rfind("m1,m_min,m_max,oracle_agreement\n", 0) == 0);
  REQUIRE(t1.out.find("\n21,42,71,\n") != std::string::npos);
  REQUIRE(t1.out.find("\n22,44,74,\n") != std::string::npos);

  auto ax = run(quoted(bin) + " annexure --m1 4");
  REQUIRE(ax.status == 0);
  REQUIRE(ax.out.rfind("m,lhs,rhs,verdict\n", 0) == 0);
  REQUIRE(ax.out.find("14,50,55,False\n") != std::string::npos);

  auto bad = run(quoted(bin) + " annexure --m1 3");
  REQUIRE(bad.status == 1);
  REQUIRE(bad.out.find("error:") != std::string::npos);

  auto axj = run(quoted(bin) + " report annexure --m1 19 --json");
  REQUIRE(axj.status == 0);
  json rows = json::parse(axj.out);
  REQUIRE(rows[0]["m"] == 38);
  REQUIRE(rows[0]["lhs"] == 551);
  REQUIRE(rows[0]["verdict"] == true);
}

TEST_CASE("report suite passes", "[cli]") {
  NEED_CLI();
  auto r = run(quoted(bin) + " report suite --jobs 4");
  REQUIRE(r.status == 0);
  REQUIRE(r.out.find("[PASS] annexure-reference-match") != std::string::npos);
  REQUIRE(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("usage errors exit 1", "[cli]") {
  NEED_CLI();
  REQUIRE(run(quoted(bin) + " search --bogus").status == 1);
  REQUIRE(run(quoted(bin) + " construct nosuch").status == 1);
  REQUIRE(run(quoted(bin) + " verify").status == 1);
  auto r = run(quoted(bin) + " sweep --family nosuch --n 3 --k 1");
  REQUIRE(r.status == 1);
  REQUIRE(r.out.find("error:") != std::string::npos);
}

TEST_CASE("search beyond the vertex cap exits 3", "[cli]") {
  NEED_CLI();
  const std::string p13 =
      write_file("p13.json", kdm::graph_to_json(kdm::make_path(13)).dump());
  auto r = run(quoted(bin) + " search --graph " + quoted(p13) + " --k 1");
  REQUIRE(r.status == 3);
  REQUIRE(r.out.find("vertex cap") != std::string::npos);

  const std::string c8 =
      write_file("c8.json", kdm::graph_to_json(kdm::make_cycle(8)).dump());
  auto tight = run("KDM_VERTEX_CAP=5 " + quoted(bin) + " search --graph " +
                   quoted(c8) + " --k 2");
  REQUIRE(tight.status == 3);
}
