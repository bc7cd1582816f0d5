#ifndef MONKBENCH_SRC_HARNESS_SUITES_HPP
#define MONKBENCH_SRC_HARNESS_SUITES_HPP

#include <functional>
#include <string>
#include <vector>

#include "monkbench/harness/harness.hpp"

namespace monkbench::detail {

/// Checks of one case. The instance is set before any core call that might
/// throw, so an escaping error can be reported with it.
struct CaseContext {
  std::uint64_t seed = 0;
  std::size_t index = 0;
  const SuiteBounds* bounds = nullptr;
  Json instance;
  std::vector<CheckRecord> checks;

  void check(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

struct SuiteDef {
  std::string name;
  /// Suites sharing a stream see the same instances.
  std::string stream;
  std::size_t default_count;
  std::function<void(CaseContext&)> run;
};

/// Every suite except "all", in report order.
const std::vector<SuiteDef>& suite_registry();

}  // namespace monkbench::detail

#endif  // MONKBENCH_SRC_HARNESS_SUITES_HPP
