#include "doctest.h"
#include "toda2/checks.hpp"
#include "toda2/weyl.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <sys/wait.h>

using namespace toda2;

namespace {

struct Out {
  int code;
  std::string text;
};

Out cli(const std::string& args) {
  const std::string cmd = std::string("\"") + TODA2_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string text;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, text};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "toda2_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("registry is sorted, unique and resolvable") {
  const auto& reg = check_registry();
  REQUIRE(reg.size() == 55);
  std::set<std::string> modules;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (i) CHECK(reg[i - 1].id < reg[i].id);
    CHECK(find_check(reg[i].id) == &reg[i]);
    CHECK(!reg[i].anchor.empty());
    modules.insert(reg[i].module);
  }
  CHECK(modules == std::set<std::string>{"classical", "poisson", "property", "quantum", "stoch"});
  CHECK(find_check("nope") == nullptr);
  CHECK(find_check("") == nullptr);
  CHECK(known_mutations().size() == 5);
}

TEST_CASE("run_check turns errors into failing reports") {
  CheckParams p;
  p.trunc = 2;
  auto r = run_check(*find_check("Omega_H1"), p, false);
  CHECK(r.status == Status::fail);
  CHECK(r.note.find("truncation") != std::string::npos);
  CHECK(r.anchor == find_check("Omega_H1")->anchor);
  CHECK(!r.elapsed_ms);

  const std::size_t cap = term_cap();
  set_term_cap(10);
  r = run_check(*find_check("ATT_TTD"), CheckParams{}, true);
  set_term_cap(cap);
  CHECK(r.status == Status::fail);
  CHECK(r.note.find("term cap") != std::string::npos);
  CHECK(r.elapsed_ms.has_value());
}

TEST_CASE("property checks are seeded") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    CheckParams p;
    p.seed = seed;
    for (const char* id : {"prop_ring", "prop_weyl", "prop_matrix", "prop_poisson"}) {
      CAPTURE(id);
      CHECK(check_property(id, p).status == Status::pass);
    }
  }
  CHECK_THROWS(check_property("prop_nope", CheckParams{}));
}

TEST_CASE("list echoes the registry in order") {
  auto out = cli("list");
  CHECK(out.code == 0);
  std::istringstream in(out.text);
  std::vector<std::string> ids;
  for (std::string line; std::getline(in, line);) ids.push_back(line.substr(0, line.find(' ')));
  REQUIRE(ids.size() == check_registry().size());
  for (std::size_t i = 0; i < ids.size(); ++i) CHECK(ids[i] == check_registry()[i].id);
  CHECK(out.text.find("taut ") != std::string::npos);
  CHECK(cli("list").text == out.text);
}

TEST_CASE("exit-code contract") {
  CHECK(cli("verify taut --sites 1").code == 0);
  CHECK(cli("verify taut nope").code == 2);
  CHECK(cli("verify").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("verify taut --sites 0").code == 2);
  CHECK(cli("verify taut --mutate nope").code == 2);
  CHECK(cli("verify w1w1 --mutate flip_bracket_sign").code == 1);
  CHECK(cli("verify poissonL_dform --sites 2").code == 0);  // degenerate does not fail the run
  CHECK(cli("verify ATT_TTD --max-terms 10").code == 1);
  CHECK(cli("verify taut --json /nonexistent_dir/x.json").code == 2);
}

TEST_CASE("JSON report shape") {
  auto path = scratch("r.json");
  REQUIRE(cli("verify taut AD taut --sites 1 --json " + path.string()).code == 0);
  auto j = nlohmann::json::parse(slurp(path));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["id"] == "AD");
  CHECK(j[1]["id"] == "taut");
  for (const auto& r : j) {
    for (const char* key : {"id", "params", "status", "residual_terms", "witness", "anchor", "elapsed_ms"})
      CHECK(r.contains(key));
    CHECK(r["elapsed_ms"].is_null());
  }
  CHECK(j[1]["status"] == "pass");
  CHECK(j[0]["status"] == "degenerate");

  REQUIRE(cli("verify taut --timing --json " + path.string()).code == 0);
  j = nlohmann::json::parse(slurp(path));
  CHECK(j[0]["elapsed_ms"].is_number());
  std::filesystem::remove_all(path.parent_path());
}
