#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef AGREE_CLI_PATH
#error "AGREE_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string temp_path(const std::string& tag) {
  return std::string("agree_cli_test_") + tag + ".tmp";
}

RunResult run(const std::string& args, const std::string& stdin_text = "") {
  const std::string out_file = temp_path("out");
  std::string cmd = std::string(AGREE_CLI_PATH) + " " + args;
  if (!stdin_text.empty()) {
    const std::string in_file = temp_path("in");
    std::ofstream(in_file) << stdin_text;
    cmd += " < " + in_file;
  }
  cmd += " > " + out_file + " 2> " + temp_path("err");
  const int raw = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  res.out = buf.str();
  return res;
}

std::string write_family(const std::string& tag, const std::string& text) {
  const std::string path = temp_path(tag);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("construct emits the expected family") {
  auto res = run("construct brace-daykin -n 5 -r 3 -t 1");
  REQUIRE(res.exit_code == 0);
  const json fam = json::parse(res.out);
  CHECK(fam["n"] == 5);
  CHECK(fam["sets"].size() == 10);

  auto tw = run("construct twisted -n 4 -A 1,2,3,4 -R 1,2");
  REQUIRE(tw.exit_code == 0);
  CHECK(json::parse(tw.out)["sets"].size() == 5);

  auto fx = run("construct --hex fixed -n 5 -T 1,2");
  REQUIRE(fx.exit_code == 0);
  CHECK(json::parse(fx.out)["masks"].size() == 8);
}

TEST_CASE("construct then check round trips with exit 0") {
  auto fam = run("construct brace-daykin -n 5 -r 3 -t 1");
  REQUIRE(fam.exit_code == 0);
  const std::string path = write_family("bd531", fam.out);
  auto chk = run("check " + path +
                 " -r 3 -t 1 --require agreeing,nontrivial,union,down-closed");
  CHECK(chk.exit_code == 0);
  const json rep = json::parse(chk.out);
  CHECK(rep["agreeing"] == true);
  CHECK(rep["nontrivial"] == true);
  CHECK(rep["union"] == true);
  CHECK(rep["down_closed"] == true);
  CHECK(rep["holds"] == true);
}

TEST_CASE("check fails with a witness on a complementary pair") {
  const std::string path =
      write_family("comp", R"({"n": 3, "sets": [[1], [2, 3]]})");
  auto chk = run("check " + path + " -r 2 -t 1");
  CHECK(chk.exit_code == 1);
  const json rep = json::parse(chk.out);
  CHECK(rep["agreeing"] == false);
  REQUIRE(rep["agreeing_witness"].is_object());
  CHECK(rep["agreeing_witness"]["agreement_count"].get<int>() < 1);
}

TEST_CASE("malformed input exits 2 with diagnostics") {
  const std::string path = write_family("trunc", R"({"n": 3, "sets": [[1,)");
  CHECK(run("check " + path + " -r 2 -t 1").exit_code == 2);
  CHECK(run("check no_such_file.json -r 2 -t 1").exit_code == 2);
  const std::string bad =
      write_family("badcoord", R"({"n": 3, "sets": [[7]]})");
  CHECK(run("check " + bad + " -r 2 -t 1").exit_code == 2);
}

TEST_CASE("squash pipeline keeps the checked properties") {
  auto fam = run("construct brace-daykin -n 5 -r 3 -t 1");
  const std::string path = write_family("sq_in", fam.out);
  auto sq = run("squash " + path);
  REQUIRE(sq.exit_code == 0);
  const json doc = json::parse(sq.out);
  CHECK(doc["trace"]["outcome"]["kind"] == "stayed");
  const std::string final_path = write_family("sq_out", doc["final"].dump());
  auto chk = run("check " + final_path +
                 " -r 3 -t 1 --require agreeing,nontrivial,union,down-closed");
  CHECK(chk.exit_code == 0);
}

TEST_CASE("squash reports the lost coordinate for the parity family") {
  auto fam = run("construct parity -n 3");
  const std::string path = write_family("parity3", fam.out);
  auto sq = run("squash " + path + " --keep-families");
  REQUIRE(sq.exit_code == 0);
  const json doc = json::parse(sq.out);
  CHECK(doc["trace"]["outcome"]["kind"] == "lost");
  CHECK(doc["trace"]["outcome"]["j"] == 1);
  CHECK(doc["trace"]["steps"][0].contains("family"));
}

TEST_CASE("squash flags a family that is trivial before the first step") {
  auto res = run("squash -", R"({"n": 2, "sets": []})");
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.out);
  CHECK(doc["trace"]["outcome"]["kind"] == "trivial_at_entry");
  CHECK(doc["trace"]["initial"]["nontrivial"] == false);
  CHECK(doc["trace"]["steps"].empty());
}

TEST_CASE("search --all-max reports one canonical class at (5,3,1)") {
  auto res = run("search -n 5 -r 3 -t 1 --nontrivial --all-max");
  REQUIRE(res.exit_code == 0);
  const json r = json::parse(res.out)["result"];
  CHECK(r["optimum"] == 10);
  CHECK(r["stats"]["maximum_families_found"] == 80);
  REQUIRE(r["all_maximum_canonical"].size() == 1);
  CHECK(r["all_maximum_canonical"][0]["sets"].size() == 10);
}

TEST_CASE("family files can come from stdin") {
  auto res = run("check - -r 2 -t 1", R"({"n": 3, "sets": [[], [1], [2], [3]]})");
  CHECK(res.exit_code == 0);
  CHECK(json::parse(res.out)["agreeing"] == true);
}

TEST_CASE("search subcommand worked values and exit codes") {
  auto s1 = run("search -n 3 -r 2 -t 1 --nontrivial --oracle");
  REQUIRE(s1.exit_code == 0);
  CHECK(json::parse(s1.out)["result"]["optimum"] == 4);

  auto s2 = run("search -n 4 -r 3 -t 1 --nontrivial");
  REQUIRE(s2.exit_code == 0);
  CHECK(json::parse(s2.out)["result"]["optimum"] == 5);

  CHECK(run("search -n 30 -r 2 -t 1").exit_code == 2);
  CHECK(run("search -n 4 -r 2 -t 1 --node-limit 3").exit_code == 3);
}

TEST_CASE("single-worker runs are byte-identical outside the meta header") {
  const std::string args = "search -n 4 -r 3 -t 1 --nontrivial --jobs 1";
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.exit_code == 0);
  json ja = json::parse(a.out);
  json jb = json::parse(b.out);
  ja.erase("meta");
  jb.erase("meta");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("table emits the pinned CSV columns with matching optima") {
  auto res = run("table --n 3..5 --r 2 --t 1 --format csv");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,r,t,bound,w_star,match,nodes,elapsed_ms");
  std::string row;
  std::vector<int> w_star;
  while (std::getline(lines, row)) {
    if (row.empty()) continue;
    CHECK(row.find(",true,") != std::string::npos);
    // w_star is the fifth column
    std::istringstream cells(row);
    std::string cell;
    for (int c = 0; c < 5; ++c) std::getline(cells, cell, ',');
    w_star.push_back(std::stoi(cell));
  }
  CHECK(w_star == std::vector<int>{4, 8, 16});
}

TEST_CASE("table skips cells that need n > r") {
  auto res = run("table --n 2..3 --r 2 --t 1 --format json");
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.out);
  CHECK(doc["rows"].size() == 1);
  REQUIRE(doc["skipped"].size() == 1);
  CHECK(doc["skipped"][0]["n"] == 2);
  CHECK(doc["skipped"][0]["reason"] == "requires n > r");
}
