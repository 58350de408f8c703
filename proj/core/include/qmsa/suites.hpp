#pragma once

#include <optional>

#include "qmsa/report.hpp"

namespace qmsa {

/// Batch-run configuration. Symbolic q is the default; a rational value
/// switches every residue check to specialization at that point (q0 = 0 is
/// rejected).
struct RunConfig {
  std::vector<std::string> suites{"all"};
  std::optional<Rational> q0;
  int jobs = 1;
  std::uint64_t seed = 20240901;
  int samples = 500;  // confluence words; the other sample sizes scale from it
};

/// The selectable suites, in canonical order.
const std::vector<std::string>& suite_names();

/// Expands "all" and validates; throws std::invalid_argument on an unknown
/// suite name or q0 = 0.
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

/// Runs the selected suites. Identical config and seed give identical
/// results; the worker count only affects wall time.
RunReport run(const RunConfig& config);

}  // namespace qmsa
