#include "toda2/checks.hpp"
#include "toda2/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <thread>

using namespace toda2;

namespace {

constexpr int kUsage = 2;

void print_list() {
  for (const auto& c : check_registry())
    std::printf("%-22s %-10s %s [%s]\n", c.id.c_str(), c.module.c_str(), c.anchor.c_str(), c.defaults.c_str());
}

std::vector<CheckReport> run_all(const std::vector<const CheckInfo*>& todo, const CheckParams& p, bool timing,
                                 unsigned jobs) {
  std::vector<CheckReport> out(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) out[i] = run_check(*todo[i], p, timing);
  };
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string clip(const std::string& s, std::size_t n) { return s.size() <= n ? s : s.substr(0, n - 3) + "..."; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic checks for the classical and quantum Toda2 chain"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List every check with its module and default parameters");

  auto* verify = app.add_subcommand("verify", "Run checks and report residuals");
  std::vector<std::string> ids;
  CheckParams params;
  std::size_t max_terms = term_cap();
  std::string json_path;
  unsigned jobs = 1;
  bool timing = false;
  verify->add_option("ids", ids, "Check ids, or 'all'")->required();
  verify->add_option("--sites", params.sites, "Chain length N")->check(CLI::Range(1, 64))->capture_default_str();
  verify->add_option("--trunc", params.trunc, "Fock truncation K")->check(CLI::Range(1, 64))->capture_default_str();
  verify->add_option("--max-terms", max_terms, "Cap on expanded terms per product")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--json", json_path, "Write the JSON report to this path");
  verify->add_option("--seed", params.seed, "Seed for randomized property checks")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  verify->add_flag("--timing", timing, "Record elapsed_ms (makes reports nondeterministic)");
  verify->add_option("--mutate", params.mutation, "Inject a named corruption")
      ->check(CLI::IsMember(known_mutations()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*list) {
    print_list();
    return 0;
  }

  std::set<std::string> wanted;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& c : check_registry()) wanted.insert(c.id);
    } else if (find_check(id)) {
      wanted.insert(id);
    } else {
      std::cerr << "unknown check id: " << id << "\n";
      return kUsage;
    }
  }
  std::vector<const CheckInfo*> todo;
  for (const auto& id : wanted) todo.push_back(find_check(id));

  set_term_cap(max_terms);
  auto reports = run_all(todo, params, timing, jobs);

  bool failed = false;
  for (const auto& r : reports) {
    failed |= r.status == Status::fail;
    std::printf("%-22s %-10s %8zu  %s\n", r.id.c_str(), to_string(r.status).c_str(), r.residual_terms,
                clip(r.status == Status::fail ? r.witness : r.note, 90).c_str());
  }

  if (!json_path.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::ofstream f(json_path, std::ios::binary);
    f << arr.dump(2) << "\n";
    f.close();
    if (!f) {
      std::cerr << "cannot write " << json_path << "\n";
      return kUsage;
    }
  }
  return failed ? 1 : 0;
}
