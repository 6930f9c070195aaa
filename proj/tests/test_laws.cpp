#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "multirel/json_io.hpp"
#include "multirel/laws.hpp"

using namespace multirel;

namespace {

std::size_t pair_count(const Instance& v) {
  if (const auto* r = std::get_if<Rel>(&v)) return r->count();
  return std::get<MRel>(v).count();
}

}  // namespace

TEST_CASE("registry contents") {
  const auto& laws = registry();
  CHECK(laws.size() >= 60);
  std::set<std::string> ids;
  std::size_t galois = 0;
  for (const Law& l : laws) {
    CHECK(ids.insert(l.id).second);
    CHECK_FALSE(l.anchor.empty());
    CHECK_FALSE(l.statement.empty());
    if (l.id.rfind("REG-galois-subset-", 0) == 0) ++galois;
  }
  CHECK(ids.count("L2.1-lambda-alpha-inverse") == 1);
  CHECK(!find_law("REG-nonassoc-triple").pinned.empty());
  CHECK(galois == 4);
  CHECK_THROWS_AS(find_law("no-such-law"), Error);
}

TEST_CASE("exhaustive pass counts the full space") {
  CheckOptions o;
  o.sizes = std::vector<std::size_t>{2, 2};
  const LawReport r = check(find_law("L2.1-lambda-alpha-inverse"), o);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.mode == "exhaustive");
  CHECK(r.checked == 16);
}

TEST_CASE("pinned non-associativity witness") {
  const LawReport r = check(find_law("NEG-peleg-assoc-general"));
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.as_expected);
  REQUIRE(r.counterexamples.size() == 1);
  const auto& c = r.counterexamples[0];
  REQUIRE(c.lhs_minus_rhs);
  CHECK(std::get<MRel>(*c.lhs_minus_rhs).contains(0, mask_of({0, 1, 2})));
}

TEST_CASE("seeded random subassociativity") {
  CheckOptions o;
  o.sizes = std::vector<std::size_t>{3, 3};
  o.random_count = 200;
  o.seed = 42;
  const LawReport r = check(find_law("L2.2-subassociativity"), o);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.mode == "random");
  CHECK(r.checked == 200);
}

TEST_CASE("shrunk counterexamples are minimal") {
  Law law;
  law.id = "adhoc";
  law.kind = LawKind::NonTheorem;
  law.expect_holds = false;
  law.claim = "a(R * S) == a(R) ; a(S)";
  CheckOptions o;
  o.sizes = std::vector<std::size_t>{2, 2};
  const LawReport r = check(law, o);
  REQUIRE(r.verdict == Verdict::Fail);
  const Counterexample& c = r.counterexamples.at(0);
  std::size_t pairs = 0;
  for (const auto& [name, v] : c.values) pairs += pair_count(v);
  CHECK(pairs <= 2);

  // dropping any single pair makes the claim hold
  const TypedTerm typed = TypedTerm::infer(parse(law.claim), TypeContext{{}, {}, true});
  const Program prog = typed.instantiate(c.sizes);
  std::vector<Instance> slots;
  for (const auto& name : prog.variables()) {
    for (const auto& [n, v] : c.values) {
      if (n == name) slots.push_back(v);
    }
  }
  CHECK_FALSE(std::get<bool>(prog.run(slots)));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (auto* m = std::get_if<MRel>(&slots[s])) {
      for (const auto& [a, mask] : m->pairs()) {
        std::vector<Instance> less = slots;
        std::get<MRel>(less[s]).erase(a, mask);
        CHECK(std::get<bool>(prog.run(less)));
      }
    }
  }
}

TEST_CASE("non-associativity search shrinks below the pinned triple") {
  Law law;
  law.id = "adhoc-assoc";
  law.kind = LawKind::NonTheorem;
  law.expect_holds = false;
  law.claim = "(R * S) * T == R * (S * T)";
  CheckOptions o;
  o.sizes = std::vector<std::size_t>{3};
  o.random_count = 20000;
  o.density = 0.2;
  const LawReport r = check(law, o);
  REQUIRE(r.verdict == Verdict::Fail);
  std::size_t pairs = 0;
  for (const auto& [name, v] : r.counterexamples.at(0).values) pairs += pair_count(v);
  CHECK(pairs <= 9);
}

TEST_CASE("side conditions are honoured and recorded") {
  CheckOptions o;
  o.sizes = std::vector<std::size_t>{2, 2};
  const LawReport r = check(find_law("L2.2-det-assoc"), o);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.checked == 16 * 16 * 16);
  const LawReport g = check(find_law("L3.3-fusion-monotone"), o);
  CHECK(g.verdict == Verdict::Pass);
  CHECK(g.skipped_by_condition > 0);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  CheckOptions one;
  one.sizes = std::vector<std::size_t>{2, 2};
  one.random_count = 3000;
  one.seed = 9;
  CheckOptions four = one;
  four.jobs = 4;
  for (const char* id : {"NEG-kleisli-left-unit", "L2.2-peleg-first-sup", "NEG-alpha-peleg-eq"}) {
    const Json a = report_json(check(find_law(id), one));
    const Json b = report_json(check(find_law(id), one));
    const Json c = report_json(check(find_law(id), four));
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("cap errors become skipped verdicts") {
  Law law;
  law.id = "too-big";
  law.claim = "mu[X] == mu[X]";
  CheckOptions o;
  o.sizes = std::vector<std::size_t>{5};
  const LawReport r = check(law, o);
  CHECK(r.verdict == Verdict::Skipped);
  CHECK_FALSE(r.as_expected);
  CHECK(r.reason.rfind("PowersetTooLarge", 0) == 0);
}
