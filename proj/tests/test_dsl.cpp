#include <doctest.h>

#include "helpers.hpp"
#include "multirel/dsl.hpp"
#include "multirel/laws.hpp"

using namespace multirel;
using mt::mrel;
using mt::rel;

TEST_CASE("parse shapes") {
  const TermPtr t = parse("do(R)");
  CHECK(t->op == Op::Do);
  REQUIRE(t->kids.size() == 1);
  CHECK(t->kids[0]->op == Op::Var);
  CHECK(t->kids[0]->name == "R");

  CHECK_FALSE(same_tree(*parse("(R * S) * T"), *parse("R * (S * T)")));
  const TermPtr d = parse("di(R) * S");
  CHECK(d->op == Op::Peleg);
  CHECK(d->kids[0]->op == Op::Di);

  CHECK(parse("R ; S & T | V")->op == Op::Union);
  CHECK(parse("R^ ; S")->kids[0]->op == Op::Cnv);
  CHECK(parse("-R ; S")->op == Op::Seq);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse("R ;\n  * S");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(std::string(e.what()).find("line 2, column 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("T / S / R"), Error);
  CHECK_THROWS_AS(parse("do(R"), Error);
}

TEST_CASE("printer round trip over the registry") {
  for (const Law& l : registry()) {
    const TermPtr a = parse(l.claim);
    CHECK_MESSAGE(same_tree(*a, *parse(print(*a))), l.id);
    if (!l.guard.empty()) {
      const TermPtr g = parse(l.guard);
      CHECK(same_tree(*g, *parse(print(*g))));
    }
  }
}

TEST_CASE("evaluation") {
  const Env env = mt::env_of({{"R", rel(2, 2, {{0, 1}})}});
  CHECK(std::get<Rel>(mt::value("a(L(R))", env)) == rel(2, 2, {{0, 1}}));

  const Env m = mt::env_of({{"R", mrel(2, 2, {{{0, 1}}, {}})}});
  CHECK(std::get<MRel>(mt::value("R * R", m)).empty());
  CHECK(std::get<Rel>(mt::value("a(R) ; a(R)", m)) == rel(2, 2, {{0, 0}, {0, 1}}));

  InstanceSpace space(GenKind::MRel, 2, 2);
  for (std::uint64_t i = 0; i < 30; ++i) {
    const Env e = mt::env_of({{"R", *space.sample(8, i, 0, 0.5)}});
    CHECK(mt::holds("down(R) == R * down(eta)", e));
  }
}

TEST_CASE("type errors and unbound names") {
  const Env env = mt::env_of({{"R", rel(2, 3, {})}, {"S", rel(2, 2, {})}});
  try {
    evaluate("R ; S", env);
    FAIL("expected a shape error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeMismatch);
    CHECK(std::string(e.what()).find("(R ; S)") != std::string::npos);
  }
  CHECK_THROWS_AS(evaluate("Q", env), Error);
  CHECK_THROWS_AS(evaluate("mu[X]", env, {5}), Error);
}

TEST_CASE("open carriers take sizes") {
  const Env empty;
  const Instance id = mt::value("Id", empty, {3});
  CHECK(std::get<Rel>(id) == identity(3));
  CHECK(mt::holds("a(1[X]) == Id[X]", empty, {2}));
  CHECK(std::get<MRel>(mt::value("ilow[X, Y]", empty, {1, 2})) == mrel(1, 2, {{{}}}));
}

TEST_CASE("environment files") {
  const Env env = env_from_json(Json::parse(
      R"({"carriers":{"X":["a","b"],"Y":3},"rels":{"T":{"src":"X","dst":"Y","pairs":[[0,2]]}},)"
      R"("mrels":{"R":{"src":"X","dst":"Y","rows":[[[0,1]],[]]}}})"));
  CHECK(env.carriers.at("X") == 2);
  CHECK(mt::holds("a(R) <= U[X, Y]", env));
  CHECK(mt::holds("T ; 1 <= U", env));
  CHECK_THROWS_AS(env_from_json(Json::parse(R"({"rels":{"T":{"src":"Z","dst":1,"pairs":[]}}})")), Error);
}
