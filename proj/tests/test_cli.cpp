#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gentree/cli.hpp"

using namespace gentree;
using namespace gentree::cli;

namespace {

const std::string kConfigDir = GENTREE_CONFIG_DIR;

}  // namespace

TEST_CASE("check command") {
  const auto ok = run_check("132,3241");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("child of increasing: 132") != std::string::npos);
  CHECK(ok.out.find("child of decreasing: 3241") != std::string::npos);
  CHECK(ok.out.find("degree bound: 7") != std::string::npos);

  const auto unbounded = run_check("123");
  CHECK(unbounded.exit_code == 1);
  CHECK(unbounded.out.find("bounded: no") != std::string::npos);

  const auto malformed = run_check("12 3,41");
  CHECK(malformed.exit_code == 2);
  CHECK_FALSE(malformed.err.empty());
}

TEST_CASE("tree command text") {
  const auto r = run_tree("132,3241", TreeFormat::text);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "root (1)\n"
        "(1) -> (21)(1)\n"
        "(21) -> (21)(21)(1)\n");

  const auto empty = run_tree("1", TreeFormat::text);
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "empty tree\n");

  const auto unbounded = run_tree("123", TreeFormat::text);
  CHECK(unbounded.exit_code == 1);
  CHECK_FALSE(unbounded.err.empty());
}

TEST_CASE("tree command json round-trips") {
  const auto r = run_tree("132,3241", TreeFormat::json);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["root"] == "1");
  REQUIRE(j["rules"].contains("1"));
  REQUIRE(j["rules"].contains("21"));
  CHECK(j["rules"]["1"] == nlohmann::ordered_json::array({"21", "1"}));

  const auto spec = spec_from_json(j);
  const auto direct = derive(parse_basis("132,3241"));
  REQUIRE(direct.ok());
  CHECK(spec.rules == direct.spec.rules);
  CHECK(gf_equal(rational_gf(spec), rational_gf(direct.spec)));

  const auto empty = run_tree("1", TreeFormat::json);
  const auto jempty = nlohmann::ordered_json::parse(empty.out);
  CHECK(jempty["root"].is_null());
  CHECK(spec_from_json(jempty).empty());

  auto open = nlohmann::ordered_json::parse(
      R"json({"root": "1", "rules": {"1": ["21"]}})json");
  CHECK_THROWS_AS(spec_from_json(open), std::invalid_argument);
}

TEST_CASE("json round-trip reproduces the generating function everywhere") {
  const char* files[] = {"simion_schmidt.json", "west.json",
                         "kremer_shiu.json"};
  for (const char* file : files) {
    std::ifstream in(kConfigDir + "/" + file);
    REQUIRE(in.good());
    nlohmann::ordered_json config;
    in >> config;
    for (const auto& entry : config["entries"]) {
      const std::string basis = entry["basis"].get<std::string>();
      const auto emitted = run_tree(basis, TreeFormat::json);
      REQUIRE(emitted.exit_code == 0);
      const auto spec =
          spec_from_json(nlohmann::ordered_json::parse(emitted.out));
      const auto printed = run_gf(basis, false);
      CHECK(gf_equal(rational_gf(spec), parse_gf(printed.out)));
    }
  }
}

TEST_CASE("tree command dot") {
  const auto r = run_tree("132,3241", TreeFormat::dot);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(r.out.find("\"1\" [peripheries=2];") != std::string::npos);
  // one edge per child occurrence: (1)->2 kids, (21)->3 kids
  std::size_t edges = 0;
  for (std::size_t at = r.out.find("->"); at != std::string::npos;
       at = r.out.find("->", at + 2)) {
    ++edges;
  }
  CHECK(edges == 5);
}

TEST_CASE("gf command") {
  CHECK(run_gf("123,213", false).out == "x/(1-2*x)\n");
  CHECK(run_gf("132,3241", false).out == "x*(1-x)/(1-3*x+x^2)\n");
  CHECK(run_gf("132,3241", true).out == "\\frac{x(1-x)}{1-3x+x^2}\n");
  CHECK(run_gf("1", false).out == "0\n");

  const auto derived = parse_gf(run_gf("1234,3214", false).out);
  CHECK(gf_equal(derived, parse_gf("x*(1-3*x)/((x-1)*(4*x-1))")));

  CHECK(run_gf("123", false).exit_code == 1);
  CHECK(run_gf("nope", false).exit_code == 2);
}

TEST_CASE("count command") {
  CHECK(run_count("132,3241", 6, true).out == "1 2 5 13 34 89\n");
  CHECK(run_count("132,3241", 6, false).out == "1 2 5 13 34 89\n");
  CHECK(run_count("1", 3, true).out == "0 0 0\n");
  CHECK(run_count("1", 3, false).out == "0 0 0\n");
  CHECK(run_count("123", 4, true).exit_code == 0);  // oracle needs no bound
  CHECK(run_count("123", 4, false).exit_code == 1);
  CHECK(run_count("132,3241", 0, true).exit_code == 2);
  CHECK(run_count("132,3241", 13, true).exit_code == 2);  // oracle limit
}

TEST_CASE("verify command") {
  const auto pass = run_verify("132,3241", 8);
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("PASS") == 0);
  CHECK(run_verify("1", 5).exit_code == 0);  // empty class agrees everywhere
  CHECK(run_verify("123", 6).exit_code == 1);
  CHECK(run_verify("oops", 6).exit_code == 2);
}

TEST_CASE("tables command on the shipped configs") {
  const auto r = run_tables(kConfigDir + "/simion_schmidt.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("10/10 rows pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("tables command failure paths") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "gentree_test_tables";
  fs::create_directories(dir);

  {
    std::ofstream bad(dir / "bad_row.json");
    bad << R"json({"series_depth": 4, "entries": [)json"
        << R"json({"basis": "123,213", "gf": "x/(1-3*x)"}]})json";
  }
  const auto mismatch = run_tables((dir / "bad_row.json").string());
  CHECK(mismatch.exit_code == 1);
  CHECK(mismatch.out.find("FAIL 123,213") != std::string::npos);
  CHECK(mismatch.out.find("0/1 rows pass") != std::string::npos);

  {
    std::ofstream garbled(dir / "garbled.json");
    garbled << "{ not json";
  }
  CHECK(run_tables((dir / "garbled.json").string()).exit_code == 2);
  CHECK(run_tables((dir / "missing.json").string()).exit_code == 2);
}

TEST_CASE("commands are deterministic") {
  for (int round = 0; round < 2; ++round) {
    CHECK(run_tree("1243,3241", TreeFormat::json).out ==
          run_tree("1243,3241", TreeFormat::json).out);
    CHECK(run_gf("1243,3241", false).out == run_gf("1243,3241", false).out);
    CHECK(run_tables(kConfigDir + "/simion_schmidt.json").out ==
          run_tables(kConfigDir + "/simion_schmidt.json").out);
  }
}

TEST_CASE("label cap override") {
  setenv("GENTREE_MAX_LABELS", "1", 1);
  const auto capped = run_tree("132,3241", TreeFormat::text);
  CHECK(capped.exit_code == 1);
  CHECK(capped.err.find("caps") != std::string::npos);

  setenv("GENTREE_MAX_LABELS", "junk", 1);
  CHECK(run_tree("132,3241", TreeFormat::text).exit_code == 2);

  unsetenv("GENTREE_MAX_LABELS");
  CHECK(run_tree("132,3241", TreeFormat::text).exit_code == 0);
}
