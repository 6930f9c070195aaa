#include <doctest.h>

#include "helpers.hpp"
#include "multirel/generate.hpp"
#include "multirel/peleg.hpp"
#include "multirel/power.hpp"

using namespace multirel;
using mt::mrel;
using mt::rel;

namespace {

std::vector<MRel> all_mrels(std::size_t x, std::size_t y, FlagSet filter = {}) {
  GenSpec spec{x, y};
  spec.filter = filter;
  std::vector<MRel> out;
  enumerate(GenKind::MRel, spec, [&](const Instance& v) { out.push_back(std::get<MRel>(v)); });
  return out;
}

}  // namespace

TEST_CASE("d-subrelations") {
  const auto parts = d_subrelations(mrel(1, 2, {{{0}, {1}}}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == mrel(1, 2, {{{0}}}));
  CHECK(parts[1] == mrel(1, 2, {{{1}}}));
  const MRel u = mrel(2, 2, {{{0, 1}}, {}});
  CHECK(d_subrelations(u) == std::vector<MRel>{u});
  for (const MRel& r : all_mrels(2, 2)) {
    MRel acc(2, 2);
    for (const MRel& p : d_subrelations(r)) acc = unite(acc, p);
    CHECK(acc == r);
    CHECK(d_union(r) == r);
  }
}

TEST_CASE("Kleisli lifting") {
  CHECK(kleisli_lift(eta(2)) == identity(4));
  const MRel r = mrel(2, 2, {{{0, 1}}, {}});
  // ∅ ↦ ∅, {a} ↦ {a,b}, {b} ↦ ∅, {a,b} ↦ {a,b}
  CHECK(kleisli_lift(r) == rel(4, 4, {{0, 0}, {1, 3}, {2, 0}, {3, 3}}));
  for (const MRel& m : all_mrels(2, 2)) {
    CHECK(kleisli_lift(m) == compose(image_functor(to_rel(m)), mu(2)));
  }
}

TEST_CASE("Peleg lifting") {
  const Rel down_eta = to_rel(down_closure(eta(2)));
  CHECK(peleg_lift(from_rel(down_eta, 2)) == converse(omega(2)));
  for (const MRel& m : all_mrels(2, 2, Flag::OuterDeterministic)) CHECK(peleg_lift(m) == kleisli_lift(m));
  // only A ⊆ {a} can be covered by a choice function
  CHECK(peleg_lift(mrel(2, 2, {{{0}}, {}})) == rel(4, 4, {{0, 0}, {1, 1}}));
}

TEST_CASE("Peleg composition") {
  const MRel r = mrel(2, 2, {{{0, 1}}, {}});
  CHECK(peleg_compose(r, r).empty());
  const MRel one = eta(2);
  for (const MRel& m : all_mrels(2, 2)) {
    CHECK(peleg_compose(one, m) == m);
    CHECK(peleg_compose(m, one) == m);
    CHECK(peleg_compose(m, MRel(2, 2)) == terminal(m));
  }
}

TEST_CASE("one set per element associates, a second choice at a does not") {
  const MRel r = mrel(3, 3, {{{0, 1}}, {{0}}, {{2}}});
  const MRel single = mrel(3, 3, {{{0, 1}}, {{0, 2}}, {{2}}});
  CHECK(peleg_compose(r, peleg_compose(r, single)) == peleg_compose(peleg_compose(r, r), single));

  const MRel s = mrel(3, 3, {{{0, 1}, {2}}, {{0}}, {{2}}});
  const Mask abc = mask_of({0, 1, 2});
  CHECK(peleg_compose(r, peleg_compose(r, s)).contains(0, abc));
  CHECK_FALSE(peleg_compose(peleg_compose(r, r), s).contains(0, abc));
  CHECK(is_subset(peleg_compose(peleg_compose(r, r), s), peleg_compose(r, peleg_compose(r, s))));
}

TEST_CASE("oracle agrees on seeded pairs at size 3") {
  InstanceSpace space(GenKind::MRel, 3, 3);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const MRel a = std::get<MRel>(*space.sample(99, i, 0, 0.3));
    const MRel b = std::get<MRel>(*space.sample(99, i, 1, 0.3));
    CHECK(peleg_compose(a, b) == peleg_compose_oracle(a, b));
  }
}

TEST_CASE("Kleisli composition") {
  InstanceSpace space(GenKind::MRel, 3, 3);
  const MRel one = eta(3);
  for (std::uint64_t i = 0; i < 50; ++i) {
    const MRel a = std::get<MRel>(*space.sample(4, i, 0, 0.3));
    const MRel b = std::get<MRel>(*space.sample(4, i, 1, 0.3));
    const MRel c = std::get<MRel>(*space.sample(4, i, 2, 0.3));
    CHECK(kleisli_compose(kleisli_compose(a, b), c) == kleisli_compose(a, kleisli_compose(b, c)));
    CHECK(kleisli_compose(a, one) == a);
  }
  const MRel r = mrel(1, 1, {{{}, {0}}});
  CHECK(kleisli_compose(eta(1), r) != r);
}

TEST_CASE("enumeration cap") {
  // every element of an eight-element set has 256 options
  std::vector<MRel::Row> rows(8);
  for (auto& row : rows) {
    for (Mask m = 0; m < 256; ++m) row.push_back(m);
  }
  const MRel s(8, 8, rows);
  const MRel r(1, 8, {{255}});
  CHECK_THROWS_AS(peleg_compose(r, s, 1000), Error);
}
