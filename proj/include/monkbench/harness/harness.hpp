#ifndef MONKBENCH_HARNESS_HARNESS_HPP
#define MONKBENCH_HARNESS_HARNESS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monkbench/ba/json.hpp"
#include "monkbench/forcing/condition.hpp"

namespace monkbench {

/// Size bounds for generated instances.
struct SuiteBounds {
  /// Random conditions: |w| <= max_width, |F| <= max_rows.
  std::size_t max_width = 8;
  std::size_t max_rows = 24;
  PosetBounds poset;

  /// "width=8,rows=24,mu=4096,lambda=1048576", any subset in any order.
  /// UsageError on unknown keys or values outside the module caps.
  static SuiteBounds parse(std::string_view text);
  Json to_json() const;
};

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = 0;
  /// 0 selects the suite's default count.
  std::size_t count = 0;
  SuiteBounds bounds;
  /// Worker threads; 0 uses the hardware concurrency. Never affects results.
  std::size_t threads = 1;
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CaseRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  /// FNV-1a of the instance JSON, as 16 hex digits.
  std::string digest;
  std::vector<CheckRecord> checks;
  /// Kept only for failed cases; together with seed it replays the case.
  Json instance;
  bool pass() const;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  SuiteBounds bounds;
  std::vector<CaseRecord> cases;
  /// Sub-reports of "all", in suite order.
  std::vector<Report> suites;
  double wall_ms = 0;

  std::size_t total_cases() const;
  std::size_t failed_cases() const;
  bool pass() const { return failed_cases() == 0; }
  /// Stable field order; wall_ms last.
  Json to_json() const;
  /// One line per suite plus one per failed check.
  std::string summary() const;
};

/// Suite names accepted by run_suite, "all" last.
std::vector<std::string> suite_names();

/// Seed of case `index`: splitmix64((master ^ fnv1a(stream)) + index), where
/// stream is the suite's seed stream. Scheduling cannot change it.
std::uint64_t case_seed(std::string_view suite, std::uint64_t master, std::size_t index);

/// Runs every case, in parallel when asked, and orders records by index.
/// UsageError for an unknown suite or a zero-count request after defaults.
/// An IntegrityError from the core is rethrown with the suite, case index,
/// case seed and instance JSON appended.
Report run_suite(const SuiteConfig& cfg);

/// One case from its derived seed alone.
CaseRecord run_single_case(std::string_view suite, std::uint64_t seed, std::size_t index,
                           const SuiteBounds& bounds = {});

std::uint64_t fnv1a64(std::string_view text);

}  // namespace monkbench

#endif  // MONKBENCH_HARNESS_HARNESS_HPP
