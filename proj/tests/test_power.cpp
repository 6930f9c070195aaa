#include <doctest.h>

#include "helpers.hpp"
#include "multirel/generate.hpp"
#include "multirel/power.hpp"

using namespace multirel;
using mt::mrel;
using mt::rel;

TEST_CASE("member relation") {
  CHECK(member_rel(1) == rel(1, 2, {{0, 1}}));
  // columns are masks: {0}=1, {1}=2, {0,1}=3
  CHECK(member_rel(2) == rel(2, 4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK(from_rel(member_rel(2), 2) == up_closure(eta(2)));
}

TEST_CASE("power transpose") {
  CHECK(power_transpose(Rel(1, 1)) == mrel(1, 1, {{{}}}));
  CHECK(power_transpose(rel(1, 1, {{0, 0}})) == mrel(1, 1, {{{0}}}));
  // Λ(∋) is the identity on P X
  const MRel l = power_transpose(converse(member_rel(2)));
  CHECK(to_rel(l) == identity(4));
}

TEST_CASE("alpha") {
  CHECK(alpha(mrel(2, 2, {{{0, 1}}, {}})) == rel(2, 2, {{0, 0}, {0, 1}}));
  CHECK(alpha(eta(3)) == identity(3));
  CHECK(alpha(mrel(1, 1, {{{}}})).empty());
}

TEST_CASE("alpha inverts the transpose") {
  for (std::size_t x = 1; x <= 3; ++x) {
    for (std::size_t y = 1; y <= 3; ++y) {
      enumerate(GenKind::Rel, GenSpec{x, y}, [&](const Instance& v) {
        const Rel& r = std::get<Rel>(v);
        CHECK(alpha(power_transpose(r)) == r);
      });
    }
  }
}

TEST_CASE("image functor") {
  CHECK(image_functor(identity(2)) == identity(4));
  CHECK(image_functor(rel(1, 1, {{0, 0}})) == rel(2, 2, {{0, 0}, {1, 1}}));
  CHECK(image_functor(Rel(1, 1)) == rel(2, 2, {{0, 0}, {1, 0}}));
  const Rel r = rel(2, 2, {{0, 1}, {1, 1}});
  const Rel s = rel(2, 2, {{1, 0}, {0, 1}});
  CHECK(image_functor(compose(r, s)) == compose(image_functor(r), image_functor(s)));
}

TEST_CASE("unit, union, order, complementation") {
  CHECK(eta(2) == mrel(2, 2, {{{0}}, {{1}}}));
  CHECK(omega(1) == rel(2, 2, {{0, 0}, {0, 1}, {1, 1}}));
  // P P {a}: masks over {∅,{a}}; the set {∅,{a}} (mask 3) flattens to {a} (mask 1)
  const Rel m = mu(1);
  CHECK(m.src() == 4);
  CHECK(m == rel(4, 2, {{0, 0}, {1, 0}, {2, 1}, {3, 1}}));
  CHECK(complementation(2) == rel(4, 4, {{0, 3}, {1, 2}, {2, 1}, {3, 0}}));
  CHECK_THROWS_AS(mu(5), Error);
}
