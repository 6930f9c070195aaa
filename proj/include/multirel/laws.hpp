#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multirel/dsl.hpp"

namespace multirel {

enum class LawKind { Theorem, NonTheorem, Regression };
std::string to_string(LawKind k);

/// A named executable property. The claim is a boolean DSL term whose
/// variables are the law's slots; carriers left open by the term are sized
/// at check time.
struct Law {
  std::string id;
  LawKind kind = LawKind::Theorem;
  std::string statement;  // plain-language summary
  std::string anchor;     // the result it encodes
  std::string claim;
  std::string guard;  // optional boolean term; tuples where it is false count as skipped
  std::vector<std::pair<std::string, std::string>> conditions;  // variable -> comma separated flags
  std::string pinned;                                           // environment JSON; empty for generated laws
  bool expect_holds = true;
  std::string witness;  // JSON {"lhs_minus_rhs": value} or {"rhs_minus_lhs": value}: pairs that must show up
  std::vector<std::size_t> default_sizes{2};
  std::vector<std::size_t> max_sizes;  // clamp per open carrier (last repeats); empty means none
  std::uint64_t exhaustive_limit = 300000;
  std::uint64_t samples = 2000;
};

struct CheckOptions {
  std::optional<std::vector<std::size_t>> sizes;
  std::uint64_t seed = 42;
  std::optional<std::uint64_t> random_count;  // forces random mode
  double density = 0.5;
  unsigned jobs = 1;
  bool shrink = true;
  bool clamp = true;  // apply the law's max_sizes
};

struct Counterexample {
  std::vector<std::pair<std::string, Instance>> values;
  std::vector<std::size_t> sizes;
  std::optional<Instance> lhs_minus_rhs;
  std::optional<Instance> rhs_minus_lhs;
};

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct LawReport {
  std::string law;
  LawKind kind = LawKind::Theorem;
  std::string mode;  // exhaustive | random | pinned
  std::uint64_t checked = 0;
  std::uint64_t skipped_by_condition = 0;
  Verdict verdict = Verdict::Skipped;
  bool expected_holds = true;
  bool as_expected = false;
  std::vector<Counterexample> counterexamples;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes;
  std::string reason;
  double elapsed_ms = 0;
};

/// Runs a law. Cap and shape problems are reported as a skipped verdict with
/// a reason; UnknownLaw and syntax errors propagate.
LawReport check(const Law& law, const CheckOptions& opts = {});
Json report_json(const LawReport& r, bool timing = false);

const std::vector<Law>& registry();
/// Throws Error(UnknownLaw).
const Law& find_law(std::string_view id);

/// Difference of two values of the same shape.
Instance instance_minus(const Instance& a, const Instance& b);
bool instance_empty(const Instance& v);
/// True when every pair of `sub` is in `super` (shapes must agree).
bool instance_contains(const Instance& super, const Instance& sub);

}  // namespace multirel
