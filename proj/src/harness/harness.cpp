#include "monkbench/harness/harness.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>

#include "monkbench/errors.hpp"
#include "monkbench/forcing/generate.hpp"
#include "suites.hpp"

namespace monkbench {

namespace {

using detail::CaseContext;
using detail::SuiteDef;

const SuiteDef& find_suite(std::string_view name) {
  for (const auto& s : detail::suite_registry())
    if (s.name == name) return s;
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t parse_number(std::string_view key, std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("bound '" + std::string(key) + "' needs a natural number, got '" + std::string(text) + "'");
  return v;
}

CaseRecord run_case(const SuiteDef& def, const SuiteBounds& bounds, std::size_t index, std::uint64_t seed) {
  CaseContext ctx;
  ctx.seed = seed;
  ctx.index = index;
  ctx.bounds = &bounds;
  try {
    def.run(ctx);
  } catch (const IntegrityError& e) {
    throw IntegrityError(std::string(e.what()) + "\nsuite " + def.name + ", case " + std::to_string(index) +
                         ", seed " + std::to_string(seed) + "\ninstance " + ctx.instance.dump());
  } catch (const Error& e) {
    ctx.check("no unexpected error", false, e.what());
  }
  CaseRecord rec;
  rec.index = index;
  rec.seed = seed;
  rec.digest = hex64(fnv1a64(ctx.instance.dump()));
  rec.checks = std::move(ctx.checks);
  if (!rec.pass()) rec.instance = std::move(ctx.instance);
  return rec;
}

Report run_one(const SuiteDef& def, const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = def.name;
  r.seed = cfg.seed;
  r.count = cfg.count ? cfg.count : def.default_count;
  r.bounds = cfg.bounds;
  r.cases.resize(r.count);

  std::vector<std::exception_ptr> errors(r.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < r.count;) {
      try {
        r.cases[i] = run_case(def, cfg.bounds, i, case_seed(def.name, cfg.seed, i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, r.count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  // The lowest failing index wins, whatever finished first.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json case_json(const CaseRecord& c) {
  Json checks = Json::array();
  for (const auto& k : c.checks) {
    Json j{{"name", k.name}, {"pass", k.pass}};
    if (!k.detail.empty()) j["detail"] = k.detail;
    checks.push_back(std::move(j));
  }
  Json j{{"index", c.index}, {"seed", c.seed}, {"digest", c.digest}, {"pass", c.pass()}, {"checks", std::move(checks)}};
  if (!c.pass()) j["instance"] = c.instance;
  return j;
}

}  // namespace

SuiteBounds SuiteBounds::parse(std::string_view text) {
  SuiteBounds b;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("bound '" + std::string(item) + "' is not key=value");
    std::string_view key = item.substr(0, eq);
    std::uint64_t v = parse_number(key, item.substr(eq + 1));
    if (key == "width") {
      b.max_width = v;
    } else if (key == "rows") {
      b.max_rows = v;
    } else if (key == "mu") {
      b.poset.mu_bound = v;
    } else if (key == "lambda") {
      if (v > std::numeric_limits<Label>::max()) throw UsageError("lambda bound exceeds the label range");
      b.poset.lambda_bound = static_cast<Label>(v);
    } else {
      throw UsageError("unknown bound '" + std::string(key) + "'");
    }
  }
  // Freeness enumerates 3^width patterns per case, hence the low width cap.
  if (b.max_width < 1 || b.max_width > 12) throw UsageError("width must lie in 1..12");
  if (b.max_rows < 1 || b.max_rows > b.poset.mu_bound) throw UsageError("rows must lie in 1..mu");
  if (b.poset.lambda_bound < 256) throw UsageError("lambda must be at least 256");
  return b;
}

Json SuiteBounds::to_json() const {
  return Json{{"width", max_width}, {"rows", max_rows}, {"mu", poset.mu_bound}, {"lambda", poset.lambda_bound}};
}

bool CaseRecord::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::size_t Report::total_cases() const {
  std::size_t n = cases.size();
  for (const auto& s : suites) n += s.total_cases();
  return n;
}

std::size_t Report::failed_cases() const {
  std::size_t n = static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.pass(); }));
  for (const auto& s : suites) n += s.failed_cases();
  return n;
}

Json Report::to_json() const {
  Json j{{"suite", suite}, {"seed", seed}, {"count", count}, {"bounds", bounds.to_json()}};
  j["summary"] = Json{{"cases", total_cases()}, {"passed", total_cases() - failed_cases()}, {"failed", failed_cases()}};
  if (suites.empty()) {
    Json cs = Json::array();
    for (const auto& c : cases) cs.push_back(case_json(c));
    j["cases"] = std::move(cs);
  } else {
    Json ss = Json::array();
    for (const auto& s : suites) ss.push_back(s.to_json());
    j["suites"] = std::move(ss);
  }
  j["wall_ms"] = wall_ms;
  return j;
}

std::string Report::summary() const {
  std::string out;
  auto line = [&](const Report& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-20s %s  cases %zu  failed %zu  (%.0f ms)\n", r.suite.c_str(),
                  r.pass() ? "PASS" : "FAIL", r.total_cases(), r.failed_cases(), r.wall_ms);
    out += buf;
    for (const auto& c : r.cases)
      for (const auto& k : c.checks)
        if (!k.pass)
          out += "  case " + std::to_string(c.index) + " seed " + std::to_string(c.seed) + ": " + k.name +
                 (k.detail.empty() ? "" : " (" + k.detail + ")") + "\n";
  };
  for (const auto& s : suites) line(s);
  line(*this);
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : detail::suite_registry()) names.push_back(s.name);
  names.push_back("all");
  return names;
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t case_seed(std::string_view suite, std::uint64_t master, std::size_t index) {
  return splitmix64((master ^ fnv1a64(find_suite(suite).stream)) + index);
}

Report run_suite(const SuiteConfig& cfg) {
  if (cfg.suite != "all") return run_one(find_suite(cfg.suite), cfg);
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = "all";
  r.seed = cfg.seed;
  r.count = cfg.count;
  r.bounds = cfg.bounds;
  for (const auto& def : detail::suite_registry()) r.suites.push_back(run_one(def, cfg));
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CaseRecord run_single_case(std::string_view suite, std::uint64_t seed, std::size_t index, const SuiteBounds& bounds) {
  return run_case(find_suite(suite), bounds, index, seed);
}

}  // namespace monkbench
