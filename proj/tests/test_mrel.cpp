#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "multirel/generate.hpp"
#include "multirel/mrel.hpp"
#include "multirel/peleg.hpp"
#include "multirel/power.hpp"

using namespace multirel;
using mt::mrel;

TEST_CASE("inner constants") {
  CHECK(mrel_const(MRelConst::InnerUnit, 2, 2) == mrel(2, 2, {{{}}, {{}}}));
  CHECK(mrel_const(MRelConst::Atoms, 1, 2) == mrel(1, 2, {{{0}, {1}}}));
  CHECK(mrel_const(MRelConst::Coatoms, 1, 2) == mrel(1, 2, {{{1}, {0}}}));
  CHECK(mrel_const(MRelConst::InnerCounit, 1, 2) == mrel(1, 2, {{{0, 1}}}));
}

TEST_CASE("inner union and intersection") {
  CHECK(inner_union(mrel(1, 2, {{{0}}}), mrel(1, 2, {{{1}}})) == mrel(1, 2, {{{0, 1}}}));
  const MRel r = mrel(2, 2, {{{0}, {}}, {{1}}});
  CHECK(inner_union(r, mrel_const(MRelConst::InnerUnit, 2, 2)) == r);
  const MRel two = mrel(1, 2, {{{0}, {1}}});
  CHECK(inner_union(two, two) == mrel(1, 2, {{{0}, {1}, {0, 1}}}));
  CHECK(inner_complement(inner_complement(r)) == r);
}

TEST_CASE("inner union of families") {
  CHECK(inner_union_family({}, 1, 1) == mrel(1, 1, {{{}}}));
  const MRel r = mrel(1, 2, {{{0}}});
  CHECK(inner_union_family(std::vector<MRel>{r}, 1, 2) == r);
  const std::vector<MRel> fam{mrel(1, 2, {{{0}}}), mrel(1, 2, {{{1}}})};
  CHECK(inner_union_family(fam, 1, 2) == mrel(1, 2, {{{0, 1}}}));
}

TEST_CASE("closures and preorders") {
  CHECK(up_closure(mrel(1, 2, {{{0}}})) == mrel(1, 2, {{{0}, {0, 1}}}));
  CHECK(down_closure(mrel(1, 2, {{{0}}})) == mrel(1, 2, {{{}, {0}}}));
  CHECK(to_rel(up_closure(eta(2))) == member_rel(2));
  const MRel r = mrel(2, 2, {{{0}}, {{1}, {0, 1}}});
  CHECK(smyth(r, r));
  CHECK(hoare(mrel(1, 2, {{{0}}}), mrel(1, 2, {{{0, 1}}})));
  CHECK(smyth(mrel(1, 2, {{{0}}}), mrel(1, 2, {{{0, 1}}})));
  CHECK_FALSE(smyth(mrel(1, 2, {{{0, 1}}}), mrel(1, 2, {{{0}}})));

  GenSpec spec{2, 2};
  spec.filter = Flag::OuterDeterministic;
  std::vector<MRel> dets;
  enumerate(GenKind::MRel, spec, [&](const Instance& v) { dets.push_back(std::get<MRel>(v)); });
  REQUIRE(dets.size() == 16);
  for (const MRel& a : dets) {
    for (const MRel& b : dets) {
      const bool s = preorder(Preorder::Smyth, a, b);
      CHECK(s == preorder(Preorder::Hoare, a, b));
      CHECK(s == preorder(Preorder::EgliMilner, a, b));
    }
  }
}

TEST_CASE("classification") {
  const PropertyFlags at = classify_mrel(mrel_const(MRelConst::Atoms, 2, 2));
  CHECK(at.inner_deterministic);
  const PropertyFlags unit = classify_mrel(mrel_const(MRelConst::InnerUnit, 2, 2));
  CHECK(unit.inner_univalent);
  CHECK_FALSE(unit.inner_total);
  const PropertyFlags top = classify_mrel(mrel(1, 2, {{{0, 1}}}));
  CHECK_FALSE(top.inner_univalent);
  CHECK(top.inner_total);
  CHECK(parse_flags("outer_total,inner_univalent") == (Flag::OuterTotal | Flag::InnerUnivalent));
  CHECK_THROWS_AS(parse_flags("sideways"), Error);
}

TEST_CASE("terminal split") {
  const MRel r = mrel(2, 1, {{{}}, {{0}}});
  CHECK(nonterminal(r) == mrel(2, 1, {{}, {{0}}}));
  CHECK(terminal(r) == mrel(2, 1, {{{}}, {}}));
  std::mt19937_64 gen(3);
  InstanceSpace space(GenKind::MRel, 2, 2);
  for (std::uint64_t i = 0; i < 40; ++i) {
    const MRel m = std::get<MRel>(*space.sample(11, i, 0, 0.5));
    CHECK(unite(nonterminal(m), terminal(m)) == m);
    CHECK(intersect(nonterminal(m), terminal(m)).empty());
  }
}

TEST_CASE("inner dual and odot") {
  const MRel full = mrel_const(MRelConst::Universal, 2, 2);
  CHECK(inner_dual(full).empty());
  CHECK(inner_dual(MRel(2, 2)) == full);
  InstanceSpace space(GenKind::MRel, 2, 2);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const MRel r = std::get<MRel>(*space.sample(5, i, 0, 0.5));
    const MRel s = std::get<MRel>(*space.sample(5, i, 1, 0.5));
    CHECK(inner_dual(inner_dual(r)) == r);
    CHECK(odot(r, s) == inner_complement(peleg_compose(r, inner_complement(s))));
  }
}

TEST_CASE("mask width cap") {
  CHECK_THROWS_AS(full_mask(63), Error);
  CHECK_THROWS_AS(MRel(1, 63), Error);
}
