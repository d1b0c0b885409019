#pragma once

#include <string>
#include <vector>

#include "metacover/checks.hpp"

namespace metacover {

struct SuiteReport {
  SuiteReport(std::string suite_name, const PadicContext& c) : suite(std::move(suite_name)), ctx(c) {}

  std::string suite;
  PadicContext ctx;
  std::size_t trials = 0;
  /// Total failing evaluations; `failures` keeps the first few, minimized.
  std::size_t failure_count = 0;
  std::vector<Failure> failures;
  std::int64_t ms = 0;
  /// "passed", "failed" or "not-applicable".
  std::string status;
  Json details = Json::object();

  bool passed() const { return status != "failed"; }
};

/// hilbert, cocycle, splitting, group, involution, witness, witness-alpha,
/// rho, obstruction.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") over every context in cfg. Reports come back
/// sorted by suite name, then (p, n). Throws Error(UnknownSuite).
std::vector<SuiteReport> run_suite(const std::string& name, const SampleConfig& cfg);

/// `ms` is only emitted when with_time is set so that plain runs are
/// byte-for-byte reproducible.
Json to_json(const SuiteReport& r, bool with_time = false);
Json to_json(const std::vector<SuiteReport>& reports, bool with_time = false);

}  // namespace metacover
