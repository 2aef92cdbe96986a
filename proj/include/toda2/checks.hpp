#pragma once

#include "toda2/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace toda2 {

struct CheckParams {
  int sites = 3;
  int trunc = 6;
  std::uint64_t seed = 1;
  /// Name of a deliberate corruption to inject; empty for a faithful run.
  std::string mutation;
};

struct CheckInfo {
  std::string id;
  std::string module;
  std::string anchor;
  std::string defaults;
  std::function<CheckReport(const CheckParams&)> run;
};

/// All checks, sorted by id.
const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(std::string_view id);

/// Runs one check, converting term-cap and domain errors into a failing report.
CheckReport run_check(const CheckInfo& info, const CheckParams& params, bool timing);

/// Mutation names understood by the checks, one or more per module.
std::vector<std::string> known_mutations();

// Module entry points.
CheckReport check_bracket_identity(const std::string& id, const CheckParams& p);
CheckReport check_quantum(const std::string& id, const CheckParams& p);
CheckReport check_classical(const std::string& id, const CheckParams& p);
CheckReport check_stoch(const std::string& id, const CheckParams& p);
CheckReport check_property(const std::string& id, const CheckParams& p);

}  // namespace toda2
