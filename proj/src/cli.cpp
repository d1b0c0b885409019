#include "metacover/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "metacover/error.hpp"
#include "metacover/hilbert_symbol.hpp"
#include "metacover/involutions.hpp"
#include "metacover/kubota_cocycle.hpp"
#include "metacover/metaplectic_group.hpp"
#include "metacover/suites.hpp"

namespace metacover {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::optional<std::uint64_t> p;
  std::optional<std::uint32_t> n;
  bool json = false;
  bool timing = false;

  std::string a, b;
  std::optional<std::string> alpha;

  std::string suite = "all";
  int trials = 1000;
  std::uint64_t seed = 42;
  int height = 6;
  int lambda = 0;

  std::string replay_source;
};

PadicContext require_ctx(const Options& o) {
  if (!o.p || !o.n) throw CLI::ValidationError("--p and --n are required for this command");
  return PadicContext::make(*o.p, *o.n);
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& plain) {
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << plain << '\n';
  }
}

Json with_ctx(const PadicContext& ctx) {
  Json j = Json::object();
  j["ctx"] = {{"p", ctx.p()}, {"n", ctx.n()}};
  return j;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
  PadicContext ctx = require_ctx(o);
  Mu m = hilbert(parse_rational(o.a), parse_rational(o.b), ctx);
  Json j = with_ctx(ctx);
  j["exp"] = m.exp();
  emit(out, o, j, std::to_string(m.exp()));
  return kOk;
}

int cmd_cocycle(const Options& o, std::ostream& out) {
  PadicContext ctx = require_ctx(o);
  Mu m = cocycle(parse_gl2(o.a), parse_gl2(o.b), ctx);
  Json j = with_ctx(ctx);
  j["exp"] = m.exp();
  emit(out, o, j, std::to_string(m.exp()));
  return kOk;
}

int cmd_mul(const Options& o, std::ostream& out) {
  PadicContext ctx = require_ctx(o);
  MetaElement h = mul(parse_meta(o.a, ctx), parse_meta(o.b, ctx), ctx);
  Json j = with_ctx(ctx);
  j["result"] = to_json(h);
  emit(out, o, j, format_meta(h));
  return kOk;
}

int cmd_inv(const Options& o, std::ostream& out) {
  PadicContext ctx = require_ctx(o);
  MetaElement h = inv(parse_meta(o.a, ctx), ctx);
  Json j = with_ctx(ctx);
  j["result"] = to_json(h);
  emit(out, o, j, format_meta(h));
  return kOk;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  PadicContext ctx = require_ctx(o);
  MetaElement h = parse_meta(o.a, ctx);
  MetaElement s = o.alpha ? sigma_alpha(h, parse_rational(*o.alpha), ctx) : sigma(h, ctx);
  Json j = with_ctx(ctx);
  j["result"] = to_json(s);
  emit(out, o, j, format_meta(s));
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  PadicContext ctx = require_ctx(o);
  MetaElement h = parse_meta(o.a, ctx);
  WitnessReport r = o.alpha ? witness_alpha(h, parse_rational(*o.alpha), ctx) : witness(h, ctx);
  Json j = with_ctx(ctx);
  j["witness"] = to_json(r);
  std::ostringstream plain;
  plain << "case " << to_string(r.tag) << "\nz " << format_meta(r.z) << "\nlhs "
        << format_meta(r.lhs) << "\nrhs " << format_meta(r.rhs) << "\nverified "
        << (r.verified ? "true" : "false");
  emit(out, o, j, plain.str());
  return r.verified ? kOk : kFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SampleConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.height = o.height;
  cfg.splitting_depth = o.lambda;
  if (o.p || o.n) {
    cfg.contexts = {require_ctx(o)};
  } else {
    cfg.contexts = default_contexts();
  }
  auto reports = run_suite(o.suite, cfg);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (o.json) {
    out << to_json(reports, o.timing).dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.suite << " p=" << r.ctx.p() << " n=" << r.ctx.n() << ' ' << r.status
          << " trials=" << r.trials << " failures=" << r.failure_count;
      if (o.timing) out << " ms=" << r.ms;
      out << '\n';
      for (const auto& f : r.failures) out << "  " << to_json(f).dump() << '\n';
    }
  }
  return ok ? kOk : kFailed;
}

Json read_replay_source(const std::string& source) {
  if (source == "-") return Json::parse(std::cin);
  if (!source.empty() && (source.front() == '{' || source.front() == '[')) return Json::parse(source);
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + source);
  return Json::parse(in);
}

/// Accepts a single failure, a suite report, or an array of reports.
int cmd_replay(const Options& o, std::ostream& out) {
  Json doc;
  try {
    doc = read_replay_source(o.replay_source);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  std::vector<std::pair<Json, PadicContext>> failures;
  auto ctx_of = [&](const Json& report) {
    if (report.contains("ctx")) {
      return PadicContext::make(report["ctx"].at("p").get<std::uint64_t>(),
                                report["ctx"].at("n").get<std::uint32_t>());
    }
    return require_ctx(o);
  };
  auto take_report = [&](const Json& report) {
    PadicContext ctx = ctx_of(report);
    for (const auto& f : report.at("failures")) failures.emplace_back(f, ctx);
  };
  if (doc.is_array()) {
    for (const auto& r : doc) take_report(r);
  } else if (doc.is_object() && doc.contains("failures")) {
    take_report(doc);
  } else {
    failures.emplace_back(doc, ctx_of(doc));
  }

  std::size_t reproduced = 0;
  Json results = Json::array();
  for (const auto& [f, ctx] : failures) {
    std::string check = f.value("check", "");
    bool fails = false;
    std::string status;
    if (find_check(check) == nullptr) {
      status = "not-replayable";
    } else {
      fails = replay_failure(f, ctx);
      status = fails ? "reproduced" : "passes";
    }
    reproduced += fails;
    results.push_back({{"check", check}, {"ctx", {{"p", ctx.p()}, {"n", ctx.n()}}}, {"status", status}});
    if (!o.json) out << check << " p=" << ctx.p() << " n=" << ctx.n() << ' ' << status << '\n';
  }
  if (o.json) out << results.dump(2) << '\n';
  return reproduced > 0 ? kFailed : kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact arithmetic on the n-fold metaplectic cover of GL(2, Q_p)", "metacover"};
  app.require_subcommand(1);
  app.add_option("--p", o.p, "residue characteristic");
  app.add_option("--n", o.n, "degree of the cover");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--timing", o.timing, "include wall time in verify reports");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol <a, b> as an exponent");
  hilbert_cmd->add_option("a", o.a)->required();
  hilbert_cmd->add_option("b", o.b)->required();

  auto* cocycle_cmd = app.add_subcommand("cocycle", "cocycle c(g1, g2) as an exponent");
  cocycle_cmd->add_option("g1", o.a, "matrix a,b;c,d")->required();
  cocycle_cmd->add_option("g2", o.b, "matrix a,b;c,d")->required();

  auto* mul_cmd = app.add_subcommand("mul", "product h1 h2 in the cover");
  mul_cmd->add_option("h1", o.a, "element a,b;c,d@e")->required();
  mul_cmd->add_option("h2", o.b, "element a,b;c,d@e")->required();

  auto* inv_cmd = app.add_subcommand("inv", "inverse in the cover");
  inv_cmd->add_option("element", o.a, "element a,b;c,d@e")->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "involution sigma, or sigma_alpha with --alpha");
  sigma_cmd->add_option("element", o.a, "element a,b;c,d@e")->required();
  sigma_cmd->add_option("--alpha", o.alpha);

  auto* witness_cmd = app.add_subcommand("witness", "conjugating element for sigma(h)");
  witness_cmd->add_option("element", o.a, "element a,b;c,d@e")->required();
  witness_cmd->add_option("--alpha", o.alpha);

  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("suite", o.suite, "suite name or 'all'");
  verify_cmd->add_option("--trials", o.trials, "random samples per suite")->capture_default_str();
  verify_cmd->add_option("--seed", o.seed)->capture_default_str();
  verify_cmd->add_option("--height", o.height, "bound on sampled entry sizes")->capture_default_str();
  verify_cmd->add_option("--lambda", o.lambda, "congruence depth for the splitting suite");

  auto* replay_cmd = app.add_subcommand("replay", "re-run failures from a verify report");
  replay_cmd->add_option("source", o.replay_source, "JSON text, file, or - for stdin")->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("metacover");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*hilbert_cmd) return cmd_hilbert(o, out);
    if (*cocycle_cmd) return cmd_cocycle(o, out);
    if (*mul_cmd) return cmd_mul(o, out);
    if (*inv_cmd) return cmd_inv(o, out);
    if (*sigma_cmd) return cmd_sigma(o, out);
    if (*witness_cmd) return cmd_witness(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*replay_cmd) return cmd_replay(o, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::VerificationFailed ? kFailed : kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace metacover
