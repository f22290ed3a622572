#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trusskit/cli.hpp"
#include "trusskit/io.hpp"
#include "trusskit/ring_module.hpp"

using namespace trusskit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "trusskit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const Json& j) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << j.dump();
  return path.string();
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", "--truss", "endo:2"}).code == kExitPass);
  CHECK(run({"validate", "--truss", "zn:6"}).code == kExitPass);
  CHECK(run({"validate", "--heap", "from-group:2,2"}).code == kExitPass);
  CHECK(run({"validate", "--module", "example-non-iso:2"}).code == kExitPass);
  const auto r = run({"validate", "--truss", "fpxfp:2", "--json"});
  CHECK(r.code == kExitPass);
  const auto j = Json::parse(r.out);
  CHECK(j["command"] == "validate");
  CHECK(j["passed"] == true);
  CHECK(keys(j) == std::vector<std::string>{"command", "inputs", "findings", "passed"});

  auto bad = truss_to_json(ring_as_truss(make_ring_zn(3)));
  bad["mult"][4] = 2;
  const auto failing = run({"validate", "--truss", temp_file("trusskit_bad_truss.json", bad), "--json"});
  CHECK(failing.code == kExitFail);
  CHECK(Json::parse(failing.out)["passed"] == false);
}

TEST_CASE("input errors") {
  CHECK(run({"bk", "0", "2"}).code == kExitInput);
  CHECK(run({"bk", "2"}).code == kExitInput);
  CHECK(run({"nonsense"}).code == kExitInput);
  CHECK(run({"validate"}).code == kExitInput);
  CHECK(run({"validate", "--truss", "fp:4"}).code == kExitInput);
  CHECK(run({"validate", "--truss", "/nonexistent/x.json"}).code == kExitInput);
  CHECK(run({"module-bk", "example-non-iso:4"}).code == kExitInput);
  const auto r = run({"bk", "a", "2"});
  CHECK(r.code == kExitInput);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("bound exceeded") {
  CHECK(run({"--max-enumeration", "5", "bk", "4", "4"}).code == kExitBound);
  CHECK(run({"--max-enumeration", "1000000", "inner", "3", "3"}).code == kExitBound);
}

TEST_CASE("bk JSON schema") {
  const auto r = run({"bk", "2", "2", "--brute-force", "--json"});
  REQUIRE(r.code == kExitPass);
  const auto j = Json::parse(r.out);
  CHECK(keys(j) == std::vector<std::string>{"left", "right", "heap_iso_count", "truss_iso_count",
                                            "theta_upsilon_roundtrip", "groups_isomorphic", "consistent"});
  CHECK(j["left"] == Json{{"orders", {2}}});
  CHECK(j["heap_iso_count"] == 2);
  CHECK(j["truss_iso_count"] == 2);
  CHECK(j["consistent"] == true);

  const auto lazy = Json::parse(run({"bk", "3", "3", "--json"}).out);
  CHECK(lazy["truss_iso_count"] == "not_enumerated");
  CHECK(lazy["heap_iso_count"] == 6);

  const auto apart = run({"bk", "4", "2,2", "--json"});
  CHECK(apart.code == kExitPass);
  const auto ja = Json::parse(apart.out);
  CHECK(ja["groups_isomorphic"] == false);
  CHECK(ja["heap_iso_count"] == 0);
  CHECK(ja["consistent"] == true);
}

TEST_CASE("JSON output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bk", "6", "2,3", "--json"}, {"inner", "2", "3", "--json"}, {"module-bk", "example-non-iso:2", "--json"},
           {"validate", "--truss", "endo:3", "--json"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == kExitPass);
    CHECK(a.out == b.out);
    CHECK_NOTHROW(Json::parse(a.out));
  }
}

TEST_CASE("inner and module-bk") {
  const auto r = run({"inner", "2", "2", "--json"});
  REQUIRE(r.code == kExitPass);
  const auto j = Json::parse(r.out);
  CHECK(j["witnesses"]["morphisms"].size() == 7);
  bool saw = false;
  for (const auto& f : j["findings"])
    if (f["name"] == "truss morphisms") {
      CHECK(f["value"] == 7);
      saw = true;
    }
  CHECK(saw);

  const auto m = run({"module-bk", "example-non-iso:3"});
  CHECK(m.code == kExitPass);
  CHECK(m.out.find("result: PASS") != std::string::npos);
  CHECK(run({"module-bk", "zn:4", "zn:4"}).code == kExitPass);
  CHECK(run({"module-bk", "zn:2", "fp:3-module"}).code == kExitPass);
}

TEST_CASE("environment bound") {
  setenv("TRUSSKIT_MAX_ENUM", "10", 1);
  const auto r = run({"bk", "4", "4"});
  unsetenv("TRUSSKIT_MAX_ENUM");
  CHECK(r.code == kExitBound);
  CHECK(run({"bk", "4", "4"}).code == kExitPass);
}
