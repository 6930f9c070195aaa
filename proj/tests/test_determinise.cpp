#include <doctest.h>

#include "helpers.hpp"
#include "multirel/determinise.hpp"
#include "multirel/generate.hpp"
#include "multirel/power.hpp"

using namespace multirel;
using mt::mrel;

TEST_CASE("fusion and fission") {
  CHECK(fusion(MRel(2, 2)) == mrel(2, 2, {{{}}, {{}}}));
  CHECK(fission(mrel(2, 2, {{{0, 1}}, {}})) == mrel(2, 2, {{{0}, {1}}, {}}));
  CHECK(cofusion(mrel(1, 2, {{{0}, {0, 1}}})) == mrel(1, 2, {{{0}}}));
  CHECK(cofusion(mrel(1, 2, {{{0}, {0, 1}}})) == cofusion_by_meet(mrel(1, 2, {{{0}, {0, 1}}})));
  // an empty row meets to the whole carrier
  CHECK(cofusion(MRel(1, 2)) == mrel(1, 2, {{{0, 1}}}));
}

TEST_CASE("closed representations") {
  const MRel atoms = mrel_const(MRelConst::Atoms, 2, 2);
  const MRel coatoms = mrel_const(MRelConst::Coatoms, 2, 2);
  enumerate(GenKind::MRel, GenSpec{2, 2}, [&](const Instance& v) {
    const MRel& r = std::get<MRel>(v);
    CHECK(fusion(closed_repr(ClosureMode::Down, r)) == fusion(r));
    CHECK(fission(r) == intersect(closed_repr(ClosureMode::Down, r), atoms));
    CHECK(cofusion(r) == cofusion_by_meet(r));
    CHECK(cofission(fusion(r)) == intersect(closed_repr(ClosureMode::Up, r), coatoms));
  });
  // the unrestricted form is not an identity
  const MRel r = mrel(1, 2, {{{0}, {1}}});
  CHECK(cofission(r) != intersect(closed_repr(ClosureMode::Up, r), mrel_const(MRelConst::Coatoms, 1, 2)));
}

TEST_CASE("fixpoints") {
  const FixpointClass e = fixpoint_class(eta(2));
  CHECK(e.is_fix_fusion());
  CHECK(e.is_fix_fission());
  const FixpointClass t = fixpoint_class(mrel(1, 2, {{{0, 1}}}));
  CHECK(t.is_fix_fusion());
  CHECK_FALSE(t.is_fix_fission());
  const FixpointClass unit = fixpoint_class(mrel_const(MRelConst::InnerUnit, 2, 2));
  CHECK(unit.fusion[0].post);
}

TEST_CASE("fixpoint classes agree with classification") {
  enumerate(GenKind::MRel, GenSpec{2, 2}, [&](const Instance& v) {
    const MRel& r = std::get<MRel>(v);
    const PropertyFlags f = classify_mrel(r);
    const FixpointClass c = fixpoint_class(r);
    CHECK(c.is_fix_fusion() == f.outer_deterministic);
    CHECK(c.is_fix_fission() == f.inner_deterministic);
    CHECK(c.fusion[0].post == f.outer_univalent);
    CHECK(c.fusion[1].pre == f.outer_univalent);
    CHECK(c.fission[1].pre == f.inner_total);
  });
}
