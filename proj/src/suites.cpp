#include "metacover/suites.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "metacover/error.hpp"

namespace metacover {

namespace {

constexpr std::size_t kKeptFailures = 3;      // minimized examples kept per check
constexpr std::size_t kObstructionSamples = 500;

Json ctx_json(const PadicContext& ctx) {
  Json j = Json::object();
  j["p"] = ctx.p();
  j["n"] = ctx.n();
  return j;
}

void run_checks(SuiteReport& report, const SampleConfig& cfg) {
  const PadicContext& ctx = report.ctx;
  const std::size_t total = branch_corpus(ctx).size() + static_cast<std::size_t>(cfg.trials);
  report.trials = total;
  Json skipped = Json::object();

  for (const auto& check : all_checks()) {
    if (check.suite != report.suite) continue;
    std::size_t kept = 0;
    std::size_t skips = 0;
    for (std::size_t i = 0; i < total; ++i) {
      Inputs inputs = check.generate(cfg, ctx, i);
      std::optional<Outcome> outcome;
      std::string message;
      try {
        outcome = check.evaluate(inputs, ctx);
      } catch (const std::exception& e) {
        outcome = Outcome{nullptr, nullptr, false};
        message = e.what();
      }
      if (!outcome) {
        ++skips;
        continue;
      }
      if (outcome->passed) continue;
      ++report.failure_count;
      if (kept == kKeptFailures) continue;
      ++kept;
      if (auto f = confirm_and_shrink(check, inputs, ctx)) {
        report.failures.push_back(std::move(*f));
      } else {
        report.failures.push_back(
            Failure{check.name, std::move(inputs), outcome->lhs, outcome->rhs,
                    message.empty() ? "did not reproduce after round trip" : message});
      }
    }
    if (skips > 0) skipped[check.name] = skips;
  }
  if (!skipped.empty()) report.details["skipped"] = skipped;
  report.status = report.failure_count == 0 ? "passed" : "failed";
}

void run_obstruction(SuiteReport& report, const SampleConfig& cfg) {
  const PadicContext& ctx = report.ctx;
  const bool square_trivial = square_map_trivial(ctx.n());
  report.details["square_map_trivial"] = square_trivial;
  if (ctx.n() <= 2) {
    report.status = square_trivial ? "not-applicable" : "failed";
    if (!square_trivial) report.failure_count = 1;
    return;
  }

  const std::size_t samples = std::max<std::size_t>(cfg.trials, kObstructionSamples);
  std::vector<GL2> centralizer;
  centralizer.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) centralizer.push_back(sample_centralizer(cfg, ctx, i));
  ObstructionReport obs = centralizer_obstruction(ctx, centralizer);

  report.trials = obs.samples;
  Json hist = Json::array();
  for (auto count : obs.lambda_histogram) hist.push_back(count);
  report.details["h"] = to_json(obs.h);
  report.details["sigma_h"] = to_json(obs.sigma_h);
  report.details["lambda_histogram"] = hist;
  report.details["conjugate_matches"] = obs.conjugate_matches;
  report.details["witness_verified"] = obs.witness_verified;

  if (obs.holds() && !square_trivial) {
    report.status = "passed";
    return;
  }
  report.status = "failed";
  report.failure_count = 1;
  Json lhs = Json::object();
  lhs["lambda_trivial"] = obs.lambda_histogram.at(0);
  lhs["conjugate_matches"] = obs.conjugate_matches;
  lhs["witness_verified"] = obs.witness_verified;
  lhs["square_map_trivial"] = square_trivial;
  Json rhs = Json::object();
  rhs["lambda_trivial"] = obs.samples;
  rhs["conjugate_matches"] = 0;
  rhs["witness_verified"] = true;
  rhs["square_map_trivial"] = false;
  report.failures.push_back(Failure{"obstruction", Inputs{{"h", obs.h}}, lhs, rhs, ""});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "cocycle", "group",     "hilbert", "involution",    "obstruction",
      "rho",     "splitting", "witness", "witness-alpha",
  };
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const SampleConfig& cfg) {
  validate(cfg);
  std::vector<std::string> selected;
  if (name == "all") {
    selected = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end()) {
    selected = {name};
  } else {
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
  }

  std::vector<SuiteReport> reports;
  for (const auto& suite : selected) {
    for (const auto& ctx : cfg.contexts) {
      SuiteReport report(suite, ctx);
      auto start = std::chrono::steady_clock::now();
      if (suite == "obstruction") {
        run_obstruction(report, cfg);
      } else {
        run_checks(report, cfg);
      }
      report.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      reports.push_back(std::move(report));
    }
  }
  std::stable_sort(reports.begin(), reports.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.suite, x.ctx.p(), x.ctx.n()) < std::tuple(y.suite, y.ctx.p(), y.ctx.n());
  });
  return reports;
}

Json to_json(const SuiteReport& r, bool with_time) {
  Json j = Json::object();
  j["suite"] = r.suite;
  j["ctx"] = ctx_json(r.ctx);
  j["trials"] = r.trials;
  j["status"] = r.status;
  j["failure_count"] = r.failure_count;
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(to_json(f));
  j["failures"] = failures;
  if (!r.details.empty()) j["details"] = r.details;
  if (with_time) j["ms"] = r.ms;
  return j;
}

Json to_json(const std::vector<SuiteReport>& reports, bool with_time) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(to_json(r, with_time));
  return j;
}

}  // namespace metacover
