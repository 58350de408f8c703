// Batch verification harness for the quantum matrix superalgebra suites.
//
// Exit codes: 0 all selected instances pass; 1 at least one nonzero residue
// (the report carries discrepancy certificates); 2 configuration or parse
// errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qmsa/suites.hpp"
#include "qmsa/version.hpp"

namespace {

int run_main(int argc, char** argv) {
  CLI::App app{"qmsa-verify: exact verification of quantum super Grassmannian, "
               "Minkowski and Hopf-Galois identities"};
  app.set_version_flag("--version", qmsa::kVersion);

  std::vector<std::string> suites{"all"};
  std::string q_text = "symbolic";
  int jobs = 1;
  std::uint64_t seed = 20240901;
  int samples = 500;
  std::string report_path;
  std::string format = "json";
  bool quiet = false;

  app.add_option("--suite", suites,
                 "Suites to run (repeatable; 'all' selects every suite)")
      ->envname("QMSA_SUITE");
  app.add_option("--q", q_text,
                 "q mode: 'symbolic' (default) or a nonzero rational like 1 or 2/3")
      ->envname("QMSA_Q");
  app.add_option("--jobs", jobs, "Worker count (does not affect results)")
      ->envname("QMSA_JOBS");
  app.add_option("--seed", seed, "Randomness seed for the sampled properties")
      ->envname("QMSA_SEED");
  app.add_option("--samples", samples,
                 "Confluence sample count; other sample sizes scale from it")
      ->envname("QMSA_SAMPLES");
  app.add_option("--report", report_path, "Write the report to this path")
      ->envname("QMSA_REPORT");
  app.add_option("--format", format, "Report format: json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->envname("QMSA_FORMAT");
  app.add_flag("--quiet", quiet, "Suppress the per-suite summary on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help / --version
    std::cerr << e.what() << "\n";
    return 2;
  }

  qmsa::RunConfig config;
  config.suites = suites;
  config.jobs = jobs;
  config.seed = seed;
  config.samples = samples;
  if (q_text != "symbolic") {
    const auto q0 = qmsa::parse_rational(q_text);
    if (!q0 || *q0 == 0) {
      std::cerr << "invalid --q value '" << q_text
                << "': expected 'symbolic' or a nonzero rational\n";
      return 2;
    }
    config.q0 = *q0;
  }

  qmsa::RunReport report;
  try {
    report = qmsa::run(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (!quiet) {
    for (const auto& [name, records] : report.suites) {
      std::cout << name << ": " << qmsa::count_passed(records) << "/"
                << records.size() << (all_pass(records) ? " ok" : " FAILED")
                << "\n";
      for (const auto& r : records)
        if (!r.pass)
          std::cout << "  FAIL " << r.id << "  residue: " << r.residue << "\n";
    }
    std::cout << "total: " << report.passed() << "/" << report.total()
              << (report.all_pass() ? " ok" : " FAILED") << "\n";
  }

  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to " << report_path << "\n";
      return 2;
    }
    out << (format == "json" ? qmsa::to_json(report) : qmsa::to_markdown(report));
  }

  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) { return run_main(argc, argv); }
