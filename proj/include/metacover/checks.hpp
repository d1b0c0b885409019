#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "metacover/sampling.hpp"
#include "metacover/serialize.hpp"

namespace metacover {

using Value = std::variant<Rational, GL2, Mu, MetaElement>;

/// Named inputs of one property evaluation, in a fixed order.
class Inputs {
 public:
  Inputs() = default;
  Inputs(std::initializer_list<std::pair<std::string, Value>> items) : items_(items) {}

  template <class T>
  const T& get(const std::string& name) const {
    for (const auto& [key, value] : items_) {
      if (key == name) return std::get<T>(value);
    }
    throw std::out_of_range("missing input " + name);
  }

  std::vector<std::pair<std::string, Value>>& items() { return items_; }
  const std::vector<std::pair<std::string, Value>>& items() const { return items_; }

 private:
  std::vector<std::pair<std::string, Value>> items_;
};

Json to_json(const Value& v);
Json to_json(const Inputs& inputs);
/// Types are recovered from the JSON shape: string -> Rational, array -> GL2,
/// integer -> Mu, object -> MetaElement.
Inputs inputs_from_json(const Json& j, const PadicContext& ctx);

/// Result of evaluating one property: equal sides pass.
struct Outcome {
  Json lhs;
  Json rhs;
  bool passed;
};

Outcome compare(const Json& lhs, const Json& rhs);

struct Check {
  std::string name;
  std::string suite;
  std::function<Inputs(const SampleConfig&, const PadicContext&, std::uint64_t)> generate;
  /// nullopt when the inputs fall outside the property's side conditions.
  std::function<std::optional<Outcome>(const Inputs&, const PadicContext&)> evaluate;
};

/// Every registered property, grouped by suite.
const std::vector<Check>& all_checks();
const Check* find_check(const std::string& name);

struct Failure {
  std::string check;
  Inputs inputs;
  Json lhs;
  Json rhs;
  std::string message;  // set when evaluation threw
};

Json to_json(const Failure& f);

/// Re-evaluates through a JSON round trip and, if the failure persists,
/// greedily simplifies the inputs while it still fails. Returns nullopt when
/// the failure does not reproduce.
std::optional<Failure> confirm_and_shrink(const Check& check, const Inputs& inputs,
                                          const PadicContext& ctx, int max_rounds = 64);

/// Runs a recorded failure object ({"check", "inputs", ...}); true when it
/// still fails.
bool replay_failure(const Json& failure, const PadicContext& ctx);
bool replay_failure(const Check& check, const Json& failure, const PadicContext& ctx);

}  // namespace metacover
