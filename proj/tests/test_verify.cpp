#include <set>

#include "doctest.h"
#include "metacover/checks.hpp"
#include "metacover/error.hpp"
#include "metacover/suites.hpp"

using namespace metacover;

namespace {

SampleConfig small_config(std::vector<PadicContext> contexts, int trials = 40) {
  SampleConfig cfg;
  cfg.trials = trials;
  cfg.contexts = std::move(contexts);
  return cfg;
}

// Fails whenever the 2x2 input has a nonzero upper-right entry.
Check broken_check() {
  return Check{"test.broken", "test",
               [](const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
                 return Inputs{{"g", sample_gl2(cfg, ctx, i, 1)}, {"x", sample_rational(cfg, ctx, i, 2)}};
               },
               [](const Inputs& in, const PadicContext&) {
                 const auto& g = in.get<GL2>("g");
                 return std::optional(compare(to_json(g.b()), to_json(Rational(0))));
               }};
}

}  // namespace

TEST_CASE("sampler is deterministic and well formed") {
  SampleConfig cfg;
  for (const auto& ctx : default_contexts()) {
    CHECK(sample_gl2(cfg, ctx, 0) == GL2::identity());
    CHECK(branch_corpus(ctx).front() == GL2::identity());
    for (std::uint64_t i = 0; i < 300; ++i) {
      GL2 g = sample_gl2(cfg, ctx, i, 0);
      CHECK(g == sample_gl2(cfg, ctx, i, 0));
      CHECK(g.det() != 0);
      CHECK(sample_rational(cfg, ctx, i, 3) == sample_rational(cfg, ctx, i, 3));
      CHECK(sample_rational(cfg, ctx, i, 3) != 0);
      CHECK(in_congruence_subgroup(sample_congruence(cfg, ctx, 2, i, 0), 2, ctx));
      GL2 c = sample_centralizer(cfg, ctx, i);
      CHECK(c.a() == c.d());
      CHECK(c.c() == 0);
    }
  }
  SampleConfig other;
  other.seed = 7;
  auto ctx = PadicContext::make(5, 4);
  int differ = 0;
  for (std::uint64_t i = 100; i < 120; ++i) differ += !(sample_gl2(cfg, ctx, i) == sample_gl2(other, ctx, i));
  CHECK(differ > 15);
}

TEST_CASE("corpus reaches every classification case") {
  for (const auto& ctx : default_contexts()) {
    std::set<CaseTag> seen;
    bool odd_c = false, even_c = false;
    for (const auto& g : branch_corpus(ctx)) {
      seen.insert(classify(g).tag);
      if (g.c() != 0 && g.d() != 0) {
        (valuation(g.c(), ctx) % 2 ? odd_c : even_c) = true;
      }
    }
    CHECK(seen.size() == 4);
    CHECK(odd_c);
    CHECK(even_c);
  }
}

TEST_CASE("config validation") {
  SampleConfig cfg = small_config(default_contexts());
  cfg.trials = 0;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = small_config(default_contexts());
  cfg.height = 1;
  CHECK_THROWS_AS(validate(cfg), Error);
  CHECK_THROWS_AS(validate(small_config({})), Error);
}

TEST_CASE("check registry") {
  std::set<std::string> names;
  for (const auto& c : all_checks()) {
    CHECK(names.insert(c.name).second);
    CHECK(std::find(suite_names().begin(), suite_names().end(), c.suite) != suite_names().end());
  }
  for (const auto& suite : suite_names()) {
    if (suite == "obstruction") continue;
    bool any = false;
    for (const auto& c : all_checks()) any = any || c.suite == suite;
    CHECK_MESSAGE(any, suite);
  }
  CHECK(find_check("cocycle.identity") != nullptr);
  CHECK(find_check("no.such.check") == nullptr);
}

TEST_CASE("serialization round trips") {
  auto ctx = PadicContext::make(7, 3);
  MetaElement h{GL2(Rational(-1, 7), 2, 0, 49), Mu(2, 3)};
  CHECK(meta_from_json(to_json(h), ctx) == h);
  CHECK(to_json(h).dump() == R"({"g":["-1/7","2/1","0/1","49/1"],"eps":2})");
  CHECK(parse_meta("-1/7,2;0,49@2", ctx) == h);
  CHECK(parse_meta(format_meta(h), ctx) == h);
  CHECK(parse_gl2("1,2;3,4") == GL2(1, 2, 3, 4));
  CHECK_THROWS_AS(parse_gl2("1,2;2,4"), Error);
  CHECK_THROWS_AS(parse_gl2("1,2,3,4"), Error);
  CHECK_THROWS_AS(parse_meta("1,0;0,1@x", ctx), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);

  Inputs in{{"a", Rational(3, 5)}, {"g", GL2(1, 2, 3, 4)}, {"e", Mu(1, 3)}, {"h", h}};
  Json j = to_json(in);
  CHECK(to_json(inputs_from_json(j, ctx)) == j);
  CHECK(inputs_from_json(j, ctx).get<MetaElement>("h") == h);
}

TEST_CASE("shrinking keeps failures and makes them smaller") {
  auto ctx = PadicContext::make(5, 4);
  Check check = broken_check();
  Inputs big{{"g", GL2(Rational(3125, 3), Rational(-7, 625), 11, 13)}, {"x", Rational(-250, 3)}};
  auto f = confirm_and_shrink(check, big, ctx);
  REQUIRE(f.has_value());
  const GL2& g = f->inputs.get<GL2>("g");
  CHECK(g.b() != 0);
  CHECK(f->inputs.get<Rational>("x") == 1);
  for (const auto& e : g.entries()) CHECK((e == 0 || e == 1 || e == -1));
  CHECK(replay_failure(check, to_json(*f), ctx));

  Inputs passing{{"g", GL2::identity()}, {"x", Rational(2)}};
  CHECK_FALSE(confirm_and_shrink(check, passing, ctx).has_value());
}

TEST_CASE("replay by name") {
  auto ctx = PadicContext::make(3, 2);
  Json record = {{"check", "hilbert.antisymmetry"}, {"inputs", {{"a", "3/1"}, {"b", "-1/1"}}}};
  CHECK_FALSE(replay_failure(record, ctx));
  Json unknown = {{"check", "nope"}, {"inputs", Json::object()}};
  CHECK_THROWS_AS(replay_failure(unknown, ctx), Error);
}

TEST_CASE("suites") {
  auto cfg = small_config({PadicContext::make(2, 2), PadicContext::make(7, 3)});
  auto reports = run_suite("cocycle", cfg);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.status == "passed");
    CHECK(r.failures.empty());
    CHECK(r.trials == branch_corpus(r.ctx).size() + 40);
  }
  auto obstruction = run_suite("obstruction", cfg);
  CHECK(obstruction[0].status == "not-applicable");
  CHECK(obstruction[1].status == "passed");
  CHECK(obstruction[1].trials >= 500);
  CHECK_THROWS_AS(run_suite("nonsense", cfg), Error);

  auto all = run_suite("all", small_config({PadicContext::make(7, 3), PadicContext::make(3, 2)}, 10));
  CHECK(all.size() == suite_names().size() * 2);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(std::tuple(all[i - 1].suite, all[i - 1].ctx.p()) < std::tuple(all[i].suite, all[i].ctx.p()));
  }
  for (const auto& r : all) CHECK(r.passed());
}

TEST_CASE("report JSON is reproducible") {
  auto cfg = small_config(default_contexts(), 15);
  std::string first = to_json(run_suite("all", cfg)).dump();
  std::string second = to_json(run_suite("all", cfg)).dump();
  CHECK(first == second);
  CHECK(first.find("\"ms\"") == std::string::npos);
  Json j = Json::parse(first);
  CHECK(j[0].contains("suite"));
  CHECK(j[0]["ctx"].contains("p"));
  CHECK(j[0].contains("failures"));
  CHECK(to_json(run_suite("splitting", cfg)[0], true).contains("ms"));
}
