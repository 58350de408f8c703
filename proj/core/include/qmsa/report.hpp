#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmsa/relation.hpp"

namespace qmsa {

struct RunReport {
  std::string engine_version;
  std::string q_mode;  // "symbolic" or the rational value
  std::uint64_t seed = 0;
  int jobs = 1;
  int samples = 0;
  std::vector<std::pair<std::string, std::vector<RelationInstance>>> suites;

  int total() const;
  int passed() const;
  bool all_pass() const { return passed() == total(); }
};

/// UTF-8 JSON with stable key order. Timing fields (elapsed_ms) can be
/// suppressed for byte-identity comparisons.
std::string to_json(const RunReport& report, bool include_timing = true);
std::string to_markdown(const RunReport& report);

}  // namespace qmsa
