#include "monkbench/harness/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "monkbench/ba/carrier.hpp"
#include "monkbench/errors.hpp"
#include "monkbench/forcing/amalgam.hpp"
#include "monkbench/forcing/json.hpp"
#include "monkbench/harness/harness.hpp"
#include "monkbench/interval/json.hpp"

namespace monkbench {

namespace {

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << j.dump(2) << '\n';
  if (!f) throw UsageError("failed writing '" + path + "'");
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::string bounds;
  std::size_t threads = 0;
  bool json = false;
  std::string out;
  std::optional<std::size_t> replay_index;
  std::optional<std::uint64_t> replay_seed;
};

int verify(const VerifyArgs& a, std::ostream& out) {
  SuiteBounds bounds = SuiteBounds::parse(a.bounds);
  if (a.replay_index || a.replay_seed) {
    if (!a.replay_index || !a.replay_seed) throw UsageError("--replay-index and --replay-seed go together");
    CaseRecord c = run_single_case(a.suite, *a.replay_seed, *a.replay_index, bounds);
    for (const auto& k : c.checks)
      out << (k.pass ? "PASS " : "FAIL ") << k.name << (k.detail.empty() ? "" : " (" + k.detail + ")") << '\n';
    if (!c.pass()) out << "instance " << c.instance.dump() << '\n';
    return c.pass() ? kExitPass : kExitCheckFailure;
  }
  SuiteConfig cfg{a.suite, a.seed, a.count, bounds, a.threads};
  Report r = run_suite(cfg);
  Json j = r.to_json();
  if (!a.out.empty()) write_file(a.out, j);
  if (a.json) {
    out << j.dump(2) << '\n';
  } else {
    out << r.summary();
  }
  return r.pass() ? kExitPass : kExitCheckFailure;
}

int amalgam_run(const std::string& input, const std::string& output, std::ostream& out) {
  AmalgamInstance inst = amalgam_instance_from_json(read_json_file(input));
  Json cert;
  bool pass = false;
  try {
    AmalgamResult r = m_amalgam(inst);
    cert = amalgam_result_to_json(r, inst);
    pass = r.certificate.all_pass();
  } catch (const PreconditionError& e) {
    cert = Json{{"pass", false}, {"rejected", Json{{"clause", e.clause()}, {"message", e.what()}}}};
  }
  if (output.empty()) {
    out << cert.dump(2) << '\n';
  } else {
    write_file(output, cert);
    out << (pass ? "PASS" : "FAIL") << " certificate written to " << output << '\n';
  }
  return pass ? kExitPass : kExitCheckFailure;
}

int interval_report(const std::string& desc, bool json, std::ostream& out) {
  LinOrder order = LinOrder::parse(desc);
  Json cuts = Json::array();
  for (const Cut& c : representative_cuts(order)) {
    auto [lower, upper] = cut_cofinalities(c, order);
    cuts.push_back(Json{{"cut", cut_to_json(c)},
                        {"text", c.to_string()},
                        {"cf_lower", symcard_to_json(lower)},
                        {"cf_upper", symcard_to_json(upper)},
                        {"pi", symcard_to_json(pi_of_cut(c, order))}});
  }
  SymCard pichi = pichi_order(order);
  if (json) {
    out << Json{{"order", order.to_string()}, {"cuts", cuts}, {"pichi", symcard_to_json(pichi)}}.dump(2) << '\n';
    return kExitPass;
  }
  out << "order " << order.to_string() << '\n';
  for (const Cut& c : representative_cuts(order)) {
    auto [lower, upper] = cut_cofinalities(c, order);
    out << "  " << c.to_string() << "  cf " << lower.to_string() << " / " << upper.to_string() << "  pi "
        << pi_of_cut(c, order).to_string() << '\n';
  }
  out << "pichi " << pichi.to_string() << '\n';
  return kExitPass;
}

int pi(const std::string& input, std::ostream& out) {
  PresentationPtr p = presentation_from_json(read_json_file(input));
  out << pi_density(full_algebra(p)) << '\n';
  return kExitPass;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seeded verification of presented Boolean algebras, amalgams and interval algebras", "monkbench"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suites;
  for (const auto& s : suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  verify_cmd->add_option("suite", va.suite, "One of: " + suites)->required();
  verify_cmd->add_option("--seed", va.seed, "Master seed")->envname("MONKBENCH_SEED");
  verify_cmd->add_option("--count", va.count, "Cases per suite (default: the suite's own)");
  verify_cmd->add_option("--bounds", va.bounds, "width=..,rows=..,mu=..,lambda=..");
  verify_cmd->add_option("--threads", va.threads, "Worker threads, 0 for all cores");
  verify_cmd->add_flag("--json", va.json, "Print the JSON report instead of the summary");
  verify_cmd->add_option("--out", va.out, "Write the JSON report to a file");
  verify_cmd->add_option("--replay-index", va.replay_index, "Rerun one case: its index");
  verify_cmd->add_option("--replay-seed", va.replay_seed, "Rerun one case: its derived seed");

  std::string input, output, order;
  bool json = false;
  auto* amalgam_cmd = app.add_subcommand("amalgam", "m-fold amalgams");
  amalgam_cmd->require_subcommand(1);
  auto* run_cmd = amalgam_cmd->add_subcommand("run", "Amalgamate an instance and write its certificate");
  run_cmd->add_option("--input", input, "Instance JSON")->required();
  run_cmd->add_option("--out", output, "Certificate JSON (default: standard output)");

  auto* interval_cmd = app.add_subcommand("interval", "Interval algebras of described orders");
  interval_cmd->require_subcommand(1);
  auto* report_cmd = interval_cmd->add_subcommand("report", "Cut classes, their pi and the pi-character");
  report_cmd->add_option("--order", order, "fin:n, Q or lexQ:<cardinal>")->required();
  report_cmd->add_flag("--json", json, "JSON output");

  auto* pi_cmd = app.add_subcommand("pi", "Algebraic density of BA[w, F]");
  pi_cmd->add_option("--input", input, "Presentation JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (*verify_cmd) return verify(va, out);
    if (*run_cmd) return amalgam_run(input, output, out);
    if (*report_cmd) return interval_report(order, json, out);
    if (*pi_cmd) return pi(input, out);
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kExitCheckFailure;
  } catch (const PreconditionError& e) {
    err << "rejected: " << e.what() << '\n';
    return kExitCheckFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace monkbench
