#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "multirel/power.hpp"
#include "multirel/rel.hpp"

using namespace multirel;
using mt::rel;

TEST_CASE("constants") {
  CHECK(rel_const(RelConst::Identity, 2, 2) == rel(2, 2, {{0, 0}, {1, 1}}));
  CHECK(rel_const(RelConst::Empty, 1, 3).empty());
  CHECK(rel_const(RelConst::Universal, 1, 2) == rel(1, 2, {{0, 0}, {0, 1}}));
  CHECK_THROWS_AS(rel_const(RelConst::Identity, 2, 3), Error);
}

TEST_CASE("boolean structure") {
  CHECK(complement(Rel(2, 3)) == rel_const(RelConst::Universal, 2, 3));
  const Rel u = rel_const(RelConst::Universal, 3, 2);
  CHECK(minus(u, u).empty());
  CHECK(unite(rel(1, 2, {{0, 0}}), rel(1, 2, {{0, 1}})) == rel(1, 2, {{0, 0}, {0, 1}}));
  CHECK_THROWS_AS(unite(Rel(1, 2), Rel(2, 1)), Error);
  // padding bits stay clear past dst
  const Rel c = complement(Rel(1, 70));
  CHECK(c.count() == 70);
}

TEST_CASE("composition") {
  const Rel r = rel(2, 2, {{0, 1}});
  CHECK(compose(identity(2), r) == r);
  CHECK(compose(rel(2, 2, {{0, 1}}), rel(2, 2, {{1, 0}})) == rel(2, 2, {{0, 0}}));
  CHECK_THROWS_AS(compose(Rel(2, 3), Rel(2, 2)), Error);

  std::mt19937_64 gen(7);
  for (int round = 0; round < 50; ++round) {
    Rel a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        a.set(i, j, gen() & 1);
        b.set(i, j, gen() & 1);
      }
    }
    Rel brute(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j)
          if (a.test(i, j) && b.test(j, k)) brute.set(i, k);
    CHECK(compose(a, b) == brute);
    CHECK(converse(compose(a, b)) == compose(converse(b), converse(a)));
  }
}

TEST_CASE("converse") {
  CHECK(converse(rel(2, 2, {{0, 1}})) == rel(2, 2, {{1, 0}}));
  CHECK(converse(identity(3)) == identity(3));
}

TEST_CASE("residuals") {
  const Rel u = rel_const(RelConst::Universal, 2, 3);
  CHECK(left_residual(u, Rel(4, 3)) == rel_const(RelConst::Universal, 2, 4));
  const Rel one = to_rel(eta(2));
  CHECK(left_residual(one, one) == identity(2));
  const Rel mem = member_rel(2);
  CHECK(right_residual(mem, mem) == omega(2));
}

TEST_CASE("symmetric quotient") {
  CHECK(symmetric_quotient(member_rel(2), member_rel(2)) == identity(4));
  const Rel c = symmetric_quotient(member_rel(1), complement(member_rel(1)));
  CHECK(c == rel(2, 2, {{0, 1}, {1, 0}}));
  CHECK(c == complementation(1));
  CHECK(symmetric_quotient(converse(identity(3)), member_rel(3)) == to_rel(eta(3)));
}

TEST_CASE("domain and classification") {
  CHECK(domain(Rel(2, 2)).empty());
  CHECK(domain(rel_const(RelConst::Universal, 3, 1)) == identity(3));
  CHECK(domain(rel(2, 2, {{0, 1}})) == rel(2, 2, {{0, 0}}));

  CHECK(classify_rel(identity(2)) == RelFlags{true, true, true, true});
  const RelFlags f = classify_rel(rel(1, 2, {{0, 0}, {0, 1}}));
  CHECK(f.total);
  CHECK_FALSE(f.univalent);
  const RelFlags e = classify_rel(Rel(1, 1));
  CHECK(e.univalent);
  CHECK_FALSE(e.total);
}
