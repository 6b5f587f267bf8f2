#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "paraglider/cli.hpp"
#include "paraglider/families.hpp"
#include "paraglider/graph.hpp"
#include "paraglider/patterns.hpp"

using namespace paraglider;
using Catch::Matchers::ContainsSubstring;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = cli::run(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Writes the text to a fresh file under the system temp directory.
std::string temp_graph_file(const std::string& stem, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() /
              ("paraglider-test-" + stem + ".graph");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  f.close();
  return path.string();
}

const std::string kC5 = "5\n0 1\n0 4\n1 2\n2 3\n3 4\n";

}  // namespace

TEST_CASE("analyze reports a five-cycle") {
  std::string file = temp_graph_file("c5", kC5);
  RunResult r = run_cli({"analyze", file});
  REQUIRE(r.code == 0);
  REQUIRE(r.err.empty());
  REQUIRE_THAT(r.out, ContainsSubstring("n: 5\n"));
  REQUIRE_THAT(r.out, ContainsSubstring("m: 5\n"));
  REQUIRE_THAT(r.out, ContainsSubstring("target-class: yes"));
  REQUIRE_THAT(r.out, ContainsSubstring("complement-class: yes"));
  REQUIRE_THAT(r.out, ContainsSubstring("classification: other"));
  REQUIRE_THAT(r.out, ContainsSubstring("colors: 3"));
  REQUIRE_THAT(r.out, ContainsSubstring("certificate-rule: small-order"));
}

TEST_CASE("analyze handles graphs outside every class") {
  std::string file = temp_graph_file("empty3", "3\n");
  RunResult r = run_cli({"analyze", file});
  REQUIRE(r.code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("target-class: no (3K1-free"));
  REQUIRE_THAT(r.out, ContainsSubstring("complement-class: no (K3-free"));
  REQUIRE_THAT(r.out, ContainsSubstring("chi: 1"));
  REQUIRE_THAT(r.out, ContainsSubstring("certificate-rule: none"));
  REQUIRE_THAT(r.out, ContainsSubstring("certificate-reason: independence number exceeds 2"));
}

TEST_CASE("analyze emits machine-readable output") {
  std::string file = temp_graph_file("c5json", kC5);
  RunResult r = run_cli({"analyze", file, "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["n"] == 5);
  REQUIRE(j["target_class"]["ok"] == true);
  REQUIRE(j["classification"] == "other");
  REQUIRE(j["certificate"]["rule"] == "small-order");
  REQUIRE(j["coloring"]["colors"] == 3);
}

TEST_CASE("analyze can replay the decomposition under all relabellings") {
  std::string file = temp_graph_file("c5all", kC5);
  RunResult r = run_cli({"analyze", file, "--all-c5"});
  REQUIRE(r.code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("variant rotation=0 reflected=0"));
  REQUIRE_THAT(r.out, ContainsSubstring("variant rotation=4 reflected=1"));
}

TEST_CASE("color meets the frozen example") {
  std::string file = temp_graph_file("hstarbar", emit_graph(make_hstar().complement()));
  RunResult r = run_cli({"color", file});
  REQUIRE(r.code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("colors: 8\n"));
  REQUIRE_THAT(r.out, ContainsSubstring("chi: 8\n"));
}

TEST_CASE("color refuses non-members") {
  std::string file = temp_graph_file("threek1", "3\n");
  RunResult r = run_cli({"color", file});
  REQUIRE(r.code == 1);
  REQUIRE_THAT(r.err, ContainsSubstring("error:"));
}

TEST_CASE("cover refuses a triangle") {
  std::string file = temp_graph_file("k3", "3\n0 1\n0 2\n1 2\n");
  RunResult r = run_cli({"cover", file});
  REQUIRE(r.code == 1);
  REQUIRE_THAT(r.err, ContainsSubstring("error:"));
}

TEST_CASE("cover reports the ring cases") {
  std::string file = temp_graph_file("c5cover", kC5);
  RunResult r = run_cli({"cover", file});
  REQUIRE(r.code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("cover-case: sparse-blocks"));
  REQUIRE_THAT(r.out, ContainsSubstring("cover-size: 3"));
  REQUIRE_THAT(r.out, ContainsSubstring("cover-bound: alpha+3"));
}

TEST_CASE("witness needs the decomposable class") {
  std::string file = temp_graph_file("c4", "4\n0 1\n0 3\n1 2\n2 3\n");
  RunResult r = run_cli({"witness", file});
  REQUIRE(r.code == 1);

  std::string member = temp_graph_file("c5witness", kC5);
  RunResult ok = run_cli({"witness", member});
  REQUIRE(ok.code == 0);
  REQUIRE_THAT(ok.out, ContainsSubstring("witness-largest: 2"));
  REQUIRE_THAT(ok.out, ContainsSubstring("witness-target: 2"));
}

TEST_CASE("generate emits the named families") {
  RunResult hstar = run_cli({"generate", "--family", "hstar"});
  REQUIRE(hstar.code == 0);
  REQUIRE(hstar.out == emit_graph(make_hstar()));

  RunResult bhat = run_cli({"generate", "--family", "bhat", "--s", "2"});
  REQUIRE(bhat.code == 0);
  REQUIRE(parse_graph(bhat.out).n() == 11);

  RunResult ht = run_cli({"generate", "--family", "ht", "--t", "3"});
  REQUIRE(ht.code == 0);
  REQUIRE(parse_graph(ht.out).n() == 20);
}

TEST_CASE("generate produces reproducible random members") {
  RunResult a = run_cli({"generate", "--family", "random", "--seed", "7"});
  RunResult b = run_cli({"generate", "--family", "random", "--seed", "7"});
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
  Graph g = parse_graph(a.out);
  REQUIRE(check_class_H(g).ok);

  RunResult c = run_cli({"generate", "--family", "random", "--seed", "8", "--n", "12"});
  REQUIRE(c.code == 0);
  REQUIRE(c.out != a.out);
}

TEST_CASE("generate validates its arguments") {
  REQUIRE(run_cli({"generate"}).code == 2);
  REQUIRE(run_cli({"generate", "--family", "nope"}).code == 2);
  REQUIRE(run_cli({"generate", "--family", "bhat", "--s", "0"}).code == 2);
  REQUIRE(run_cli({"generate", "--family", "random", "--n", "4"}).code == 2);
}

TEST_CASE("enumerate scans a small order exhaustively") {
  RunResult r = run_cli({"enumerate", "--n", "4"});
  REQUIRE(r.code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("scanned 64\n"));
  REQUIRE_THAT(r.out, ContainsSubstring("members 41\n"));
  REQUIRE_THAT(r.out, ContainsSubstring("coloring-bound-violations 0\n"));
  REQUIRE_THAT(r.out, ContainsSubstring("clique-bound-violations 0\n"));
  REQUIRE_THAT(r.out, ContainsSubstring("chi-identity-violations 0\n"));
}

TEST_CASE("enumerate deduplicates up to isomorphism") {
  RunResult r = run_cli({"enumerate", "--n", "5", "--up-to-iso", "--json"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["scanned"] == 1024);
  REQUIRE(j["checked"].get<long long>() >= 1);
  REQUIRE(j["checked"].get<long long>() < j["members"].get<long long>());
  REQUIRE(j["coloring_bound_violations"] == 0);
}

TEST_CASE("enumerate rejects orders outside the supported range") {
  REQUIRE(run_cli({"enumerate", "--n", "8"}).code == 2);
  REQUIRE(run_cli({"enumerate", "--n", "0"}).code == 2);
  REQUIRE(run_cli({"enumerate"}).code == 2);
}

TEST_CASE("oddminor answers both ways with exit code zero") {
  std::string file = temp_graph_file("c5minor", kC5);
  RunResult yes = run_cli({"oddminor", file, "--t", "3"});
  REQUIRE(yes.code == 0);
  REQUIRE_THAT(yes.out, ContainsSubstring("present yes\n"));
  REQUIRE_THAT(yes.out, ContainsSubstring("part 0:"));

  RunResult no = run_cli({"oddminor", file, "--t", "4"});
  REQUIRE(no.code == 0);
  REQUIRE_THAT(no.out, ContainsSubstring("present no\n"));

  RunResult j = run_cli({"oddminor", file, "--t", "3", "--json"});
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["present"] == true);
  REQUIRE(parsed["parts"].size() == 3);
}

TEST_CASE("oddminor refuses graphs beyond the search cap") {
  std::string file = temp_graph_file("big13", "13\n");
  RunResult r = run_cli({"oddminor", file, "--t", "2"});
  REQUIRE(r.code == 2);
  REQUIRE_THAT(r.err, ContainsSubstring("error:"));
}

TEST_CASE("certify names the applicable rule") {
  std::string file = temp_graph_file("c5cert", kC5);
  RunResult r = run_cli({"certify", file});
  REQUIRE(r.code == 0);
  REQUIRE_THAT(r.out, ContainsSubstring("certificate-rule: small-order"));
  REQUIRE_THAT(r.out, ContainsSubstring("certificate-fact: alpha=2"));
}

TEST_CASE("help lists every subcommand") {
  RunResult r = run_cli({"--help"});
  REQUIRE(r.code == 0);
  for (const char* name : {"analyze", "color", "cover", "witness", "generate", "enumerate",
                           "oddminor", "certify", "selftest"})
    REQUIRE_THAT(r.out, ContainsSubstring(name));
}

TEST_CASE("usage errors exit with code two") {
  REQUIRE(run_cli({}).code == 2);
  REQUIRE(run_cli({"frobnicate"}).code == 2);
  REQUIRE(run_cli({"analyze"}).code == 2);

  RunResult missing = run_cli({"analyze", "/no/such/file.graph"});
  REQUIRE(missing.code == 2);
  REQUIRE_THAT(missing.err, ContainsSubstring("cannot open"));
}

TEST_CASE("the vertex cap environment variable is honoured") {
  std::string file = temp_graph_file("c5cap", kC5);

  REQUIRE(setenv("PARAGLIDER_MAX_N", "4", 1) == 0);
  RunResult capped = run_cli({"analyze", file});
  REQUIRE(capped.code == 2);
  REQUIRE_THAT(capped.err, ContainsSubstring("outside [0, 4]"));

  REQUIRE(setenv("PARAGLIDER_MAX_N", "abc", 1) == 0);
  RunResult bad = run_cli({"analyze", file});
  REQUIRE(bad.code == 2);
  REQUIRE_THAT(bad.err, ContainsSubstring("not a number"));

  REQUIRE(unsetenv("PARAGLIDER_MAX_N") == 0);
  REQUIRE(run_cli({"analyze", file}).code == 0);
}
