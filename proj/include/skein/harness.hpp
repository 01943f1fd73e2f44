#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "skein/root_eval.hpp"
#include "skein/special.hpp"

namespace skein {

struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::string title;
  std::vector<SpecializationReport> checks;
  double seconds = 0;
  /// Wall-clock budget; 0 means none.
  double time_limit = 0;
  bool pass = false;
  /// Set when the suite aborted with an exception.
  std::string error;

  int passed() const;
  nlohmann::json to_json() const;
};

/// Suite names in criterion order.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, int bits = kDefaultBits);

}  // namespace skein
