#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "agree/constructions.hpp"
#include "agree/json_io.hpp"
#include "agree/squash.hpp"
#include "support/gen.hpp"

using namespace agree;

TEST_CASE("family serialization golden strings") {
  const Family f(GroundSet(3), {0, 5});
  CHECK(family_to_json(f).dump() == R"({"n":3,"sets":[[],[1,3]]})");
  CHECK(family_to_json(f, true).dump() == R"({"masks":["0x0","0x5"],"n":3})");
}

TEST_CASE("both forms round trip bit-exactly") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(gen::mix_seed(0x150a, i));
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    const Family f = gen::random_family(rng, n, 24);
    CHECK(family_from_json(family_to_json(f)) == f);
    CHECK(family_from_json(family_to_json(f, true)) == f);
  }
}

TEST_CASE("parse diagnostics name the offending field") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return family_from_stream(in, "doc");
  };
  CHECK_THROWS_AS(parse("{\"n\": 3, \"sets\": [[1,"), ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"sets": []})"),
                       "doc: field 'n': required integer", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"n": 3, "sets": [[1],[4]]})"),
      "doc: field 'sets[1]': coordinate 4 out of range for n=3", ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"n": 2, "masks": ["0x4"]})"),
                       "doc: field 'masks[0]': mask 0x4 has bits outside n=2",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"n": 2, "masks": ["zz"]})"),
                       "doc: field 'masks[0]': not a hex mask: 'zz'",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"n": 0, "sets": []})"),
                       "doc: field 'n': must be in [1, 63], got 0", ParseError);
  CHECK_THROWS_WITH_AS(
      parse(R"({"n": 2, "sets": [], "masks": []})"),
      "doc: family object needs exactly one of 'sets' or 'masks'", ParseError);
}

TEST_CASE("squash trace serialization shape") {
  const auto [out, trace] = squash_all(parity_family(3));
  (void)out;
  const nlohmann::json j = trace_to_json(trace);
  CHECK(j["initial"]["nontrivial"] == true);
  CHECK(j["initial"]["size"] == 4);
  REQUIRE(j["steps"].size() == 1);
  CHECK(j["steps"][0]["j"] == 1);
  CHECK(j["steps"][0]["nontrivial"] == false);
  CHECK(j["steps"][0]["size"] == 4);
  CHECK(j["steps"][0]["digest"].get<std::string>().substr(0, 2) == "0x");
  CHECK(j["outcome"]["kind"] == "lost");
  CHECK(j["outcome"]["j"] == 1);

  const auto [out2, trace2] = squash_all(brace_daykin(5, 3, 1));
  (void)out2;
  CHECK(trace_to_json(trace2)["outcome"]["kind"] == "stayed");

  const auto [out3, trace3] = squash_all(Family::empty(GroundSet(2)));
  (void)out3;
  const nlohmann::json j3 = trace_to_json(trace3);
  CHECK(j3["outcome"]["kind"] == "trivial_at_entry");
  CHECK(j3["initial"]["nontrivial"] == false);
}

TEST_CASE("search result serialization carries the exactness flag") {
  SearchParams p;
  p.n = 3;
  p.r = 2;
  p.t = 1;
  p.require_nontrivial = true;
  const nlohmann::json j = search_result_to_json(max_agreeing(p));
  CHECK(j["exact"] == true);
  CHECK(j["optimum"] == 4);
  CHECK(j["params"]["theorem_range"] == true);
  CHECK(j["params"]["bound"] == 4);
  CHECK(j["witness"]["n"] == 3);
  CHECK(j["stats"].contains("nodes_explored"));
  CHECK_FALSE(j.contains("all_maximum_canonical"));

  p.node_limit = 5;
  const nlohmann::json j2 = search_result_to_json(max_agreeing(p));
  CHECK(j2["exact"] == false);
  CHECK(j2["params"]["node_limit"] == 5);
}

TEST_CASE("uniqueness report serialization") {
  const nlohmann::json j = uniqueness_to_json(verify_uniqueness(4, 3, 1));
  CHECK(j["pass"] == true);
  CHECK(j["bound"] == 5);
  CHECK(j["optimum"] == 5);
  CHECK(j["maximum_family_count"] == 16);
  CHECK(j["class_count"] == 1);
  CHECK(j["expected_class_found"] == true);
  CHECK(j["trivial_families_of_equal_size_exist"] == true);
  REQUIRE(j["classes"].size() == 1);
  CHECK(j["classes"][0]["sets"].size() == 5);
}

TEST_CASE("digest hex format") {
  CHECK(digest_hex(0) == "0x0000000000000000");
  CHECK(digest_hex(0xabcdef) == "0x0000000000abcdef");
}
