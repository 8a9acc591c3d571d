// Drives the installed binary end to end: subcommands, spec resolution
// (names, inline JSON, files), output shapes, and exit codes.
#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string text;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RAMSEL_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string text;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) text.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, text};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli ramsey json report") {
  auto r = run_cli("--json ramsey --n 2 --coloring even-sum --horizon 12");
  REQUIRE(r.code == 0);
  json j = json::parse(r.text);
  REQUIRE(j.contains("output"));
  REQUIRE(j.contains("verdict"));
  REQUIRE(j.contains("trace"));
  REQUIRE(j.contains("certificates"));
  REQUIRE(j["verdict"] == "Hom1");
  REQUIRE(j["certificates"]["classified"] == j["verdict"]);
  REQUIRE(j["output"].size() == 6);
  REQUIRE(j["certificates"]["size"] == 6);
  auto par = j["output"][0].get<unsigned long long>() % 2;
  for (const auto& e : j["output"])
    REQUIRE(e.get<unsigned long long>() % 2 == par);
}

TEST_CASE("cli ramsey resolves a stream spec from a file") {
  write_file("/tmp/ramsel_stream.json", R"({"kind":"arith","a":0,"d":2})");
  auto r = run_cli(
      "--json ramsey --n 2 --coloring even-sum "
      "--stream /tmp/ramsel_stream.json --horizon 12");
  REQUIRE(r.code == 0);
  json j = json::parse(r.text);
  REQUIRE(j["output"] == json::parse("[0,2,4,6,8,10]"));
  REQUIRE(j["verdict"] == "Hom1");
}

TEST_CASE("cli ramsey trace lines") {
  auto r = run_cli("ramsey --n 2 --coloring even-sum --horizon 8 --trace");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.text, "step=0 branch="));
  REQUIRE(contains(r.text, "verdict="));
}

TEST_CASE("cli nw with an inline table family") {
  auto r = run_cli(
      "--json nw --front tuples-2 --family "
      "'{\"kind\":\"table\",\"members\":[[0,1],[0,2],[1,2]]}' --horizon 3");
  REQUIRE(r.code == 0);
  json j = json::parse(r.text);
  REQUIRE(j["output"] == json::parse("[0,1,2]"));
  REQUIRE(j["verdict"] == "Hom1");
  REQUIRE(j["certificates"]["classified"] == "Hom1");
}

TEST_CASE("cli check-hom exit codes") {
  auto ok = run_cli("check-hom --front tuples-2 --family even-sum --set 0,2,4");
  REQUIRE(ok.code == 0);
  REQUIRE(contains(ok.text, "verdict: Hom1"));

  auto mixed =
      run_cli("check-hom --front tuples-2 --family even-sum --set 0,1,2");
  REQUIRE(mixed.code == 2);
  REQUIRE(contains(mixed.text, "verdict: Neither"));

  auto js = run_cli(
      "--json check-hom --front tuples-2 --family even-sum --set 0,1,2");
  REQUIRE(js.code == 2);
  REQUIRE(json::parse(js.text)["verdict"] == "Neither");
}

TEST_CASE("cli diagonalize") {
  auto r = run_cli("diagonalize --seq geometric-2 --count 5");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.text, "65536"));

  auto js = run_cli("--json diagonalize --seq geometric-2 --count 5");
  REQUIRE(js.code == 0);
  REQUIRE(json::parse(js.text)["output"] == json::parse("[1,2,4,16,65536]"));
}

TEST_CASE("cli uniform-p") {
  auto r = run_cli(
      "--json uniform-p --phi counting --seq geometric-2 --levels 2 "
      "--horizon 16");
  REQUIRE(r.code == 0);
  json j = json::parse(r.text);
  REQUIRE(j["output"] == json::parse("[2]"));
  REQUIRE(j["certificates"]["phi"] == "1");
  REQUIRE(j["certificates"]["levels"] == 2);
}

TEST_CASE("cli uniform-q") {
  auto r = run_cli(
      "--json uniform-q --phi counting --partition blocks-2 --levels 2 "
      "--horizon 16");
  REQUIRE(r.code == 0);
  json j = json::parse(r.text);
  REQUIRE(j["output"] == json::parse("[0,2]"));
  REQUIRE(j["certificates"]["phi"] == "2");
}

TEST_CASE("cli borel eval and complement round-trip") {
  write_file("/tmp/ramsel_tree.json", "[0,[[2,0,[]]]]");
  auto in1 = run_cli("borel eval --tree /tmp/ramsel_tree.json --x 1");
  REQUIRE(in1.code == 0);
  REQUIRE(contains(in1.text, "member: true"));
  auto in0 = run_cli("borel eval --tree /tmp/ramsel_tree.json --x 0");
  REQUIRE(in0.code == 0);
  REQUIRE(contains(in0.text, "member: false"));

  auto comp = run_cli("borel complement --tree /tmp/ramsel_tree.json");
  REQUIRE(comp.code == 0);
  write_file("/tmp/ramsel_tree_comp.json", comp.text);
  auto c1 = run_cli("borel eval --tree /tmp/ramsel_tree_comp.json --x 1");
  REQUIRE(contains(c1.text, "member: false"));
  auto c0 = run_cli("borel eval --tree /tmp/ramsel_tree_comp.json --x 0");
  REQUIRE(contains(c0.text, "member: true"));

  auto je = run_cli("--json borel eval --tree /tmp/ramsel_tree.json --x 1");
  REQUIRE(json::parse(je.text)["output"] == true);
}

TEST_CASE("cli borel omega") {
  write_file("/tmp/ramsel_func.json", R"({"coords":[[0,[[2,0,[]]]]]})");
  auto r = run_cli("borel omega --func /tmp/ramsel_func.json --x 10 --m 3");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.text, "value: 100"));

  auto js = run_cli(
      "--json borel omega --func /tmp/ramsel_func.json --x 01 --m 2");
  REQUIRE(json::parse(js.text)["output"] == "00");
}

TEST_CASE("cli galvin-search") {
  auto hit = run_cli("galvin-search --family even-sum --k 2 --horizon 8");
  REQUIRE(hit.code == 0);
  REQUIRE(contains(hit.text, "witness: {0,1}"));

  auto miss = run_cli("galvin-search --family even-sum --k 3 --horizon 8");
  REQUIRE(miss.code == 2);
  REQUIRE(contains(miss.text, "no witness"));

  auto js = run_cli(
      "--json galvin-search --family even-sum --k 2 --horizon 8");
  json j = json::parse(js.text);
  REQUIRE(j["verdict"] == "Witness");
  REQUIRE(j["output"] == json::parse("[0,1]"));
}

TEST_CASE("cli gallery") {
  auto r = run_cli("gallery converge --horizon 16");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.text, "verdict:"));

  auto js = run_cli("--json gallery nwd --horizon 12");
  REQUIRE(js.code == 0);
  json j = json::parse(js.text);
  REQUIRE(j["certificates"].contains("monotone"));
  REQUIRE(j["certificates"]["points"].is_array());
}

TEST_CASE("cli errors exit 3") {
  auto bad = run_cli("gallery nope --horizon 8");
  REQUIRE(bad.code == 3);
  REQUIRE(contains(bad.text, "error:"));

  auto badFam = run_cli("ramsey --n 2 --coloring nope --horizon 8");
  REQUIRE(badFam.code == 3);
  REQUIRE(contains(badFam.text, "error:"));
}
