#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qmsa/algebra.hpp"

namespace qmsa {

/// One verified identity: an instance of a relation family, its two sides
/// as text, and the straightened residue (canonical text, "0" on success).
struct RelationInstance {
  std::string suite;
  std::string id;
  std::string lhs;
  std::string rhs;
  std::string residue;
  /// Machine-derived straightening of the LHS, filled for failing instances
  /// (the discrepancy certificate).
  std::string lhs_normal;
  bool pass = false;
  unsigned long long steps = 0;
  double elapsed_ms = 0.0;
};

/// Runs one instance body, charging rewrite steps and wall time to the
/// record. The body returns (residue text, pass).
template <typename Body>
RelationInstance run_instance(std::string suite, std::string id, std::string lhs,
                              std::string rhs, Body&& body) {
  RelationInstance r;
  r.suite = std::move(suite);
  r.id = std::move(id);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  reset_rewrite_steps();
  const auto t0 = std::chrono::steady_clock::now();
  auto [residue, pass] = body();
  const auto t1 = std::chrono::steady_clock::now();
  r.steps = rewrite_steps();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.residue = std::move(residue);
  r.pass = pass;
  return r;
}

/// Residue verdicts under the run's q mode: symbolic (default) demands the
/// exact zero; a rational q0 demands vanishing after specialization.
struct QMode {
  std::optional<Rational> q0;

  Element view(const Element& r) const { return q0 ? r.specialize(*q0) : r; }
  bool passes(const Element& r) const { return view(r).is_zero(); }
};

inline int count_passed(const std::vector<RelationInstance>& v) {
  int n = 0;
  for (const auto& r : v)
    if (r.pass) ++n;
  return n;
}

inline bool all_pass(const std::vector<RelationInstance>& v) {
  return count_passed(v) == static_cast<int>(v.size());
}

}  // namespace qmsa
