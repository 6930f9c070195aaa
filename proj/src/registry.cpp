#include <set>

#include "multirel/laws.hpp"

namespace multirel {

namespace {

struct B {
  Law l;
  B& cond(const std::string& var, const std::string& flags) {
    l.conditions.emplace_back(var, flags);
    return *this;
  }
  B& guard(std::string g) {
    l.guard = std::move(g);
    return *this;
  }
  B& max(std::vector<std::size_t> m) {
    l.max_sizes = std::move(m);
    return *this;
  }
  B& sizes(std::vector<std::size_t> s) {
    l.default_sizes = std::move(s);
    return *this;
  }
  B& samples(std::uint64_t n) {
    l.samples = n;
    return *this;
  }
  B& limit(std::uint64_t n) {
    l.exhaustive_limit = n;
    return *this;
  }
  B& witness(std::string w) {
    l.witness = std::move(w);
    return *this;
  }
};

B make(LawKind kind, std::string id, std::string claim, std::string statement, std::string anchor, bool holds) {
  B b;
  b.l.id = std::move(id);
  b.l.kind = kind;
  b.l.claim = std::move(claim);
  b.l.statement = std::move(statement);
  b.l.anchor = std::move(anchor);
  b.l.expect_holds = holds;
  return b;
}

B thm(std::string id, std::string claim, std::string statement, std::string anchor) {
  return make(LawKind::Theorem, std::move(id), std::move(claim), std::move(statement), std::move(anchor), true);
}

B neg(std::string id, std::string claim, std::string statement, std::string anchor) {
  return make(LawKind::NonTheorem, std::move(id), std::move(claim), std::move(statement), std::move(anchor), false);
}

B pinned(LawKind kind, std::string id, std::string claim, std::string env, bool holds, std::string statement,
         std::string anchor) {
  B b = make(kind, std::move(id), std::move(claim), std::move(statement), std::move(anchor), holds);
  b.l.pinned = std::move(env);
  return b;
}

B reg(std::string id, std::string claim, std::string env, bool holds, std::string statement, std::string anchor) {
  return pinned(LawKind::Regression, std::move(id), std::move(claim), std::move(env), holds, std::move(statement),
                std::move(anchor));
}

// ---------------------------------------------------------------- relational core, power transpose

void relational(std::vector<B>& out) {
  const std::string core = "relation algebra";
  out.push_back(thm("L2.1-residuation-left", "(R ; S <= T) <==> (R <= T / S)",
                    "composition on the right is left adjoint to the left residual", core)
                    .max({3}));
  out.push_back(thm("L2.1-residuation-right", "(R ; S <= T) <==> (S <= R \\ T)",
                    "composition on the left is left adjoint to the right residual", core)
                    .max({3}));
  out.push_back(thm("L2.1-modular", "(R ; S) & T <= (R & (T ; cnv(S))) ; S", "modular (Dedekind) inclusion", core));
  out.push_back(thm("L2.1-univalent-exchange", "(R ; Q) & S == (R & (S ; cnv(Q))) ; Q",
                    "intersection exchange through a univalent right factor", core)
                    .cond("Q", "outer_univalent"));
  out.push_back(thm("L2.1-right-via-left-residual", "T \\ S == cnv(cnv(S) / cnv(T))",
                    "right residual is the converse dual of the left residual", core)
                    .max({3}));
  out.push_back(thm("L2.1-left-residual-formula", "T / S == -(-T ; cnv(S))", "left residual complement formula", core)
                    .max({3}));
  out.push_back(thm("L2.1-right-residual-formula", "T \\ S == -(cnv(T) ; -S)", "right residual complement formula",
                    core)
                    .max({3}));
  out.push_back(thm("L2.1-syq-formula", "syq(T, S) == (T \\ S) & (cnv(T) / cnv(S))",
                    "symmetric quotient as meet of residuals", core)
                    .max({3}));
  out.push_back(thm("L2.1-domain", "dom(R) == Id & (R ; cnv(R))", "domain as a test", core).max({3}));
  out.push_back(thm("L2.1-converse-compose", "cnv(R ; S) == cnv(S) ; cnv(R)", "converse is contravariant", core));
  out.push_back(thm("L2.1-d-decomposition", "dunion(R) == R",
                    "a relation is the union of its univalent parts with full domain", "decomposition into d-parts"));
}

void power(std::vector<B>& out) {
  const std::string pa = "power allegory";
  out.push_back(thm("L2.1-lambda-alpha-inverse", "a(L(R)) == R", "approximation undoes power transpose",
                    "bijection of relations and functions into powersets")
                    .max({3}));
  out.push_back(thm("L2.1-alpha-lambda-inverse", "L(a(f)) == f",
                    "power transpose undoes approximation on outer deterministic multirelations",
                    "bijection of relations and functions into powersets")
                    .cond("f", "outer_deterministic")
                    .max({3}));
  out.push_back(thm("L2.1-lambda-compose", "L(R ; S) == L(R) ; Pf(S)", "transpose of a composite", pa));
  out.push_back(thm("L2.1-eta-image", "1 ; Pf(R) == L(R)", "unit followed by the image functor is transpose", pa));
  out.push_back(thm("L2.1-lambda-function", "L(f) == f ; 1", "transpose of a function is the function then unit", pa)
                    .cond("f", "outer_deterministic"));
  out.push_back(thm("L2.1-eta-natural", "f ; 1 == 1 ; Pf(f)", "unit is natural for functions", pa)
                    .cond("f", "outer_deterministic"));
  out.push_back(thm("L2.1-mu-natural", "Pf(Pf(f)) ; mu == mu ; Pf(f)", "multiplication is natural for functions", pa)
                    .cond("f", "outer_deterministic"));
  out.push_back(thm("L2.1-monad-assoc", "Pf(mu[X]) ; mu == mu ; mu", "monad associativity", "powerset monad axioms")
                    .max({2}));
  out.push_back(thm("L2.1-monad-left-unit", "Pf(1[X]) ; mu == Id", "monad unit law (image of unit)",
                    "powerset monad axioms")
                    .max({3}));
  out.push_back(thm("L2.1-monad-right-unit", "1[P X] ; mu[X] == Id", "monad unit law (unit at the powerset)",
                    "powerset monad axioms")
                    .max({3}));
  out.push_back(thm("L2.1-alpha-eta", "a(1[X]) == Id", "approximation of the unit is the identity", pa).max({4}));
  out.push_back(thm("L2.1-lambda-ni", "L(cnv(mem[X])) == Id", "transpose of has-element is the identity", pa)
                    .max({4}));
  out.push_back(thm("L2.1-eta-lambda-id", "1[X] == L(Id)", "unit is the transpose of the identity", pa).max({4}));
  out.push_back(thm("L2.1-mu-image", "mu[X] == Pf(cnv(mem))", "multiplication is the image of has-element", pa)
                    .max({3}));
  out.push_back(thm("L2.1-pf-id", "Pf(Id[X]) == Id", "image functor preserves identities", pa).max({4}));
  out.push_back(thm("L2.1-pf-functor", "Pf(R ; S) == Pf(R) ; Pf(S)", "image functor preserves composition", pa));
  out.push_back(thm("L2.1-alpha-def", "a(R) == R ; cnv(mem)", "approximation is composition with has-element", pa)
                    .max({3}));
  out.push_back(thm("L2.1-lambda-complement", "L(R) ; Cc == L(-R)", "transpose commutes with complement", pa)
                    .max({3}));
  out.push_back(thm("L2.1-lambda-omega", "L(R) ; Om == cnv(R) \\ mem", "transpose followed by inclusion", pa)
                    .max({3}));
  out.push_back(thm("L2.1-eta-syq", "1[X] == syq(cnv(Id), mem)", "unit as a symmetric quotient", pa).max({4}));
  out.push_back(thm("L2.1-syq-mem", "syq(mem[X], mem) == Id", "extensionality of has-element", pa).max({4}));
  out.push_back(thm("L2.1-omega-residual", "Om[X] == mem \\ mem", "subset relation as a residual", pa).max({4}));
  out.push_back(thm("L2.1-complementation-syq", "Cc[X] == syq(mem, -mem)", "complementation as a symmetric quotient",
                    pa)
                    .max({4}));
  out.push_back(thm("L2.1-omega-converse-residual", "cnv(Om[X]) == cnv(mem) / cnv(mem)",
                    "superset relation as a residual", pa)
                    .max({4}));
  out.push_back(thm("L2.1-mem-up-unit", "mem[X] == up(1)", "has-element is the up-closure of the unit", pa)
                    .max({4}));
}

// ---------------------------------------------------------------- multirelations, liftings, Peleg

void multirel_laws(std::vector<B>& out) {
  const std::string ms = "inner structure of multirelations";
  out.push_back(thm("L2.2-icup-unit", "icup(R, ilow) == R", "inner union has the inner unit as unit", ms));
  out.push_back(thm("L2.2-icup-commutative", "icup(R, S) == icup(S, R)", "inner union is commutative", ms));
  out.push_back(thm("L2.2-icup-associative", "icup(icup(R, S), T) == icup(R, icup(S, T))",
                    "inner union is associative", ms));
  out.push_back(thm("L2.2-icap-commutative", "icap(R, S) == icap(S, R)", "inner intersection is commutative", ms));
  out.push_back(thm("L2.2-icap-associative", "icap(icap(R, S), T) == icap(R, icap(S, T))",
                    "inner intersection is associative", ms));
  out.push_back(thm("L2.2-icup-idempotent-univalent", "icup(R, R) == R", "inner union is idempotent on univalent R",
                    ms)
                    .cond("R", "outer_univalent"));
  out.push_back(neg("NEG-icup-idempotent", "icup(R, R) == R", "inner union is not idempotent in general", ms));
  out.push_back(thm("L2.2-icpl-involution", "icpl(icpl(R)) == R", "inner complement is an involution", ms));
  out.push_back(thm("L2.2-icpl-compose", "icpl(R) == R ; Cc", "inner complement is composition with complementation",
                    ms)
                    .max({3}));
  out.push_back(thm("L2.2-icap-de-morgan", "icap(R, S) == icpl(icup(icpl(R), icpl(S)))",
                    "inner intersection by inner de Morgan", ms));
  out.push_back(thm("L2.2-up-omega", "up(R) == R ; Om", "up-closure is composition with inclusion", ms).max({3}));
  out.push_back(thm("L2.2-down-omega", "down(R) == R ; cnv(Om)", "down-closure is composition with superset", ms)
                    .max({3}));
  out.push_back(thm("L2.2-up-icup-universal", "up(R) == icup(R, U)", "up-closure is inner union with the top", ms)
                    .max({3}));
  out.push_back(thm("L2.2-convex", "convex(R) == up(R) & down(R)", "convex closure", ms).max({3}));
  out.push_back(thm("L2.2-dual-involution", "dual(dual(R)) == R", "duality is an involution", ms));
  out.push_back(thm("L2.2-fix-inner-univalent", "iuniv(R) <==> (R == R & (At | ilow))",
                    "inner univalent multirelations are fixpoints of meeting atoms or the inner unit",
                    "fixpoint characterisations")
                    .max({3}));
  out.push_back(thm("L2.2-fix-inner-total", "itot(R) <==> (R == R - ilow)",
                    "inner total multirelations are fixpoints of removing the inner unit", "fixpoint characterisations")
                    .max({3}));
  out.push_back(thm("L2.2-fix-inner-deterministic", "idet(R) <==> (R == R & At)",
                    "inner deterministic multirelations are fixpoints of meeting atoms", "fixpoint characterisations")
                    .max({3}));
  out.push_back(thm("L2.2-fix-inner-deterministic-unit", "idet(R) <==> (R == R ; cnv(1) ; 1)",
                    "inner deterministic multirelations are fixpoints of composing with the unit and its converse",
                    "fixpoint characterisations")
                    .max({3}));
  out.push_back(thm("L2.2-fix-outer-univalent", "ouniv(R) <==> (cnv(R) ; R <= Id)", "outer univalence as inclusion",
                    "fixpoint characterisations")
                    .max({3}));
  out.push_back(thm("L2.2-fix-outer-total", "otot(R) <==> (Id <= R ; cnv(R))", "outer totality as inclusion",
                    "fixpoint characterisations")
                    .max({3}));
  out.push_back(thm("L2.2-fix-up-closed", "upc(R) <==> (up(R) == R)", "up-closed means fixed by up-closure", ms)
                    .max({3}));
  out.push_back(thm("L2.2-fix-down-closed", "downc(R) <==> (down(R) == R)", "down-closed means fixed by down-closure",
                    ms)
                    .max({3}));
  out.push_back(thm("L2.2-preorders-coincide-odet", "((R <u= S) <==> (R <d= S)) && ((R <d= S) <==> (R <ud= S))",
                    "Smyth, Hoare and Egli-Milner agree on outer deterministic multirelations", "refinement preorders")
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic"));
}

void peleg_laws(std::vector<B>& out) {
  const std::string pk = "Peleg and Kleisli liftings";
  out.push_back(thm("L2.2-kleisli-lift-def", "kl(R) == Pf(a(R))", "Kleisli lifting is the image of the approximation",
                    pk));
  out.push_back(thm("L2.2-kleisli-lift-mu", "kl(R) == Pf(R) ; mu", "Kleisli lifting via image and multiplication", pk));
  out.push_back(thm("L2.2-pf-as-lift", "Pf(R) == kl(R ; 1)", "image functor as a Kleisli lifting", pk));
  out.push_back(thm("L2.2-kleisli-eta", "kl(1[X]) == Id", "lifting the unit gives the identity", pk).max({4}));
  out.push_back(thm("L2.2-extension-assoc", "kl(R ; kl(S)) == kl(R) ; kl(S)", "extension system composition law", pk)
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic"));
  out.push_back(thm("L2.2-extension-unit", "1 ; kl(f) == f", "extension system unit law", pk)
                    .cond("f", "outer_deterministic"));
  out.push_back(thm("L2.2-eta-peleg-lift", "1 ; pl(R) == R", "unit followed by the Peleg lifting", pk));
  out.push_back(thm("L2.2-peleg-eta-lift", "pl(1[X]) == Id", "Peleg lifting of the unit", pk).max({3}));
  out.push_back(thm("L2.2-peleg-kleisli-det", "pl(R) == kl(R)", "the liftings agree on deterministic multirelations",
                    pk)
                    .cond("R", "outer_deterministic"));
  out.push_back(thm("L2.2-peleg-left-unit", "1 * R == R", "unit is a left unit of Peleg composition", pk));
  out.push_back(thm("L2.2-peleg-right-unit", "R * 1 == R", "unit is a right unit of Peleg composition", pk));
  out.push_back(thm("L2.2-peleg-via-lift", "R * S == R ; pl(S)", "Peleg composition through the Peleg lifting", pk));
  out.push_back(thm("L2.2-peleg-oracle", "R * S == pego(R, S)",
                    "direct Peleg composition agrees with the decomposition formula", pk)
                    .max({3}));
  out.push_back(thm("L2.2-pl-down-unit", "pl(down(1[X])) == cnv(Om)", "Peleg lifting of the down-closed unit", pk)
                    .max({3}));
  out.push_back(thm("L2.2-down-via-peleg", "down(R) == R * down(1)", "down-closure by Peleg composition", pk));
  out.push_back(thm("L2.2-tau-via-peleg", "tau(R) == R * 0", "composing with the empty multirelation keeps terminals",
                    pk));
  out.push_back(thm("L2.2-subassociativity", "(R * S) * T <= R * (S * T)", "Peleg composition is subassociative", pk)
                    .samples(3000));
  out.push_back(thm("L2.2-peleg-first-sup", "(R | S) * T == (R * T) | (S * T)",
                    "Peleg composition preserves unions in its first argument", pk)
                    .samples(3000));
  out.push_back(thm("L2.2-peleg-univalent-assoc", "(R * S) * f == R * (S * f)",
                    "associativity when the third factor is univalent", pk)
                    .cond("f", "outer_univalent")
                    .samples(3000));
  out.push_back(thm("L2.2-peleg-univalent-extension", "pl(S * f) == pl(S) ; pl(f)",
                    "Peleg lifting of a composite with a univalent factor", pk)
                    .cond("f", "outer_univalent"));
  out.push_back(thm("L2.2-univalent-closed", "ouniv(R * S)", "univalent multirelations are closed under composition",
                    "categories of univalent and deterministic multirelations")
                    .cond("R", "outer_univalent")
                    .cond("S", "outer_univalent"));
  out.push_back(thm("L2.2-det-closed", "odet(R * S)", "deterministic multirelations are closed under composition",
                    "categories of univalent and deterministic multirelations")
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic"));
  out.push_back(thm("L2.2-det-assoc", "(R * S) * T == R * (S * T)",
                    "Peleg composition is associative on deterministic multirelations",
                    "categories of univalent and deterministic multirelations")
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic")
                    .cond("T", "outer_deterministic"));
  out.push_back(thm("L2.2-univalent-assoc", "(R * S) * T == R * (S * T)",
                    "Peleg composition is associative on univalent multirelations",
                    "categories of univalent and deterministic multirelations")
                    .cond("R", "outer_univalent")
                    .cond("S", "outer_univalent")
                    .cond("T", "outer_univalent"));
  out.push_back(thm("L2.2-inner-total-closed", "itot(R * S)", "inner total multirelations are closed under composition",
                    "totality closure")
                    .cond("R", "inner_total")
                    .cond("S", "inner_total"));
  out.push_back(thm("L2.2-outer-total-closed", "otot(R * S)", "outer total multirelations are closed under composition",
                    "totality closure")
                    .cond("R", "outer_total")
                    .cond("S", "outer_total"));
  out.push_back(neg("NEG-peleg-first-sup-second", "R * (S | T) == (R * S) | (R * T)",
                    "Peleg composition does not preserve unions in its second argument", pk));

  const std::string kc = "Kleisli composition";
  out.push_back(thm("L3.2-kleisli-compose-def", "R @ S == R ; kl(S)", "Kleisli composition through the lifting", kc));
  out.push_back(thm("L3.2-kleisli-compose-mu", "R @ S == R ; Pf(S) ; mu", "Kleisli composition via image and union",
                    kc));
  out.push_back(thm("L3.2-kleisli-assoc", "(R @ S) @ T == R @ (S @ T)", "Kleisli composition is associative", kc)
                    .samples(3000));
  out.push_back(thm("L3.2-kleisli-right-unit", "R @ 1 == R", "unit is a right unit of Kleisli composition", kc));
  out.push_back(thm("L3.2-kleisli-left-unit-odet", "1 @ R == R",
                    "unit is a left unit of Kleisli composition on outer deterministic R", kc)
                    .cond("R", "outer_deterministic"));
  out.push_back(neg("NEG-kleisli-left-unit", "1 @ R == R", "unit is not a left unit of Kleisli composition in general",
                    kc));
}

// ---------------------------------------------------------------- determinism, fusion, fission

void det_laws(std::vector<B>& out) {
  const std::string bij = "bijections with relations";
  out.push_back(thm("L3.1-alpha-eta-inverse", "a(T ; 1) == T", "approximation undoes the inner embedding", bij)
                    .max({3}));
  out.push_back(thm("L3.1-eta-alpha-inverse", "a(R) ; 1 == R", "the inner embedding undoes approximation on inner deterministic R",
                    bij)
                    .cond("R", "inner_deterministic")
                    .max({3}));
  out.push_back(thm("L3.2-lambda-functor", "L(R ; S) == L(R) * L(S)", "transpose sends composition to Peleg composition",
                    "functoriality on deterministic multirelations"));
  out.push_back(thm("L3.2-eta-functor", "(R ; S) ; 1 == (R ; 1) * (S ; 1)",
                    "inner embedding sends composition to Peleg composition",
                    "functoriality on deterministic multirelations"));
  out.push_back(thm("L3.2-alpha-functor-odet", "a(R * S) == a(R) ; a(S)",
                    "approximation is functorial on outer deterministic multirelations",
                    "functoriality on deterministic multirelations")
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic"));
  out.push_back(thm("L3.2-alpha-functor-idet", "a(R * S) == a(R) ; a(S)",
                    "approximation is functorial on inner deterministic multirelations",
                    "functoriality on deterministic multirelations")
                    .cond("R", "inner_deterministic")
                    .cond("S", "inner_deterministic"));
  out.push_back(thm("L3.2-idet-peleg-relational", "R * S == R ; cnv(1) ; S",
                    "Peleg composition with an inner deterministic left factor is relational",
                    "inner deterministic multirelations"));
  out.back().cond("R", "inner_deterministic");
  out.push_back(thm("L3.2-idet-alpha", "a(R) == R ; cnv(1)", "approximation of an inner deterministic multirelation",
                    "inner deterministic multirelations")
                    .cond("R", "inner_deterministic"));
  out.push_back(thm("L3.2-idet-closed", "idet(R * S)", "inner deterministic multirelations are closed under composition",
                    "categories of inner deterministic multirelations")
                    .cond("R", "inner_deterministic")
                    .cond("S", "inner_deterministic"));
  out.push_back(thm("L3.2-idet-assoc", "(R * S) * T == R * (S * T)",
                    "Peleg composition is associative on inner deterministic multirelations",
                    "categories of inner deterministic multirelations")
                    .cond("R", "inner_deterministic")
                    .cond("S", "inner_deterministic")
                    .cond("T", "inner_deterministic"));
  out.push_back(thm("L3.2-idet-quantaloid", "R * (S | T) == (R * S) | (R * T)",
                    "composition distributes over unions of inner deterministic multirelations", "quantaloids")
                    .cond("R", "inner_deterministic")
                    .cond("S", "inner_deterministic")
                    .cond("T", "inner_deterministic"));
  out.push_back(thm("L3.2-odet-quantaloid-right", "R * icup(S, T) == icup(R * S, R * T)",
                    "composition distributes over inner unions of deterministic multirelations", "quantaloids")
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic")
                    .cond("T", "outer_deterministic"));
  out.push_back(thm("L3.2-odet-quantaloid-left", "icup(R, S) * T == icup(R * T, S * T)",
                    "composition distributes over inner unions in the first argument", "quantaloids")
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic")
                    .cond("T", "outer_deterministic"));
  out.push_back(thm("L3.2-lambda-union", "L(R | S) == icup(L(R), L(S))", "transpose sends union to inner union",
                    "quantaloids"));
  out.push_back(thm("L3.2-eta-union", "(R | S) ; 1 == (R ; 1) | (S ; 1)", "inner embedding preserves union",
                    "quantaloids"));

  const std::string gal = "Galois connections for fusion and fission";
  out.push_back(thm("L3.3-galois-alpha-lambda", "(a(R) <= T) <==> (R <d= L(T))",
                    "approximation is left adjoint to transpose under the Hoare preorder", gal));
  out.push_back(thm("L3.3-galois-eta-alpha", "(T ; 1 <d= S) <==> (T <= a(S))",
                    "inner embedding is left adjoint to approximation under the Hoare preorder", gal));
  out.push_back(thm("L3.3-galois-fission-fusion", "(di(R) <d= S) <==> (R <d= do(S))",
                    "fission is left adjoint to fusion under the Hoare preorder", gal));
  out.push_back(thm("L3.3-alpha-icap", "a(icap(R, S)) == a(R) & a(S)", "approximation sends inner meet to meet", gal));
  out.push_back(thm("L3.3-lambda-monotone", "L(T) <d= L(V)", "transpose is monotone into the Hoare preorder", gal)
                    .guard("T <= V"));
  out.push_back(thm("L3.3-eta-monotone", "T ; 1 <d= V ; 1", "inner embedding is monotone into the Hoare preorder", gal)
                    .guard("T <= V"));
  out.push_back(thm("L3.3-alpha-monotone", "a(R) <= a(S)", "approximation is monotone from the Hoare preorder", gal)
                    .guard("R <d= S"));
  out.push_back(thm("L3.3-fusion-monotone", "do(R) <d= do(S)", "fusion is monotone", gal).guard("R <d= S"));
  out.push_back(thm("L3.3-fusion-extensive", "R <d= do(R)", "fusion is extensive", gal).max({3}));
  out.push_back(thm("L3.3-fusion-idempotent", "do(do(R)) == do(R)", "fusion is idempotent", gal).max({3}));
  out.push_back(thm("L3.3-fission-monotone", "di(R) <d= di(S)", "fission is monotone", gal).guard("R <d= S"));
  out.push_back(thm("L3.3-fission-reductive", "di(R) <d= R", "fission is reductive", gal).max({3}));
  out.push_back(thm("L3.3-fission-idempotent", "di(di(R)) == di(R)", "fission is idempotent", gal).max({3}));
  out.push_back(thm("L3.3-fusion-factorisation", "do(R) == L(a(R))", "fusion factors through approximation", gal)
                    .max({3}));
  out.push_back(thm("L3.3-fission-factorisation", "di(R) == a(R) ; 1", "fission factors through approximation", gal)
                    .max({3}));
  out.push_back(thm("L3.3-lambda-injective", "T == V", "transpose is injective", gal).guard("L(T) == L(V)"));
  out.push_back(thm("L3.3-eta-injective", "T == V", "inner embedding is injective", gal).guard("T ; 1 == V ; 1"));
  out.push_back(thm("L3.3-fusion-least", "do(R) <d= S", "fusion is the least deterministic multirelation above", gal)
                    .cond("S", "outer_deterministic")
                    .guard("R <d= S"));
  out.push_back(thm("L3.3-fission-greatest", "S <d= di(R)",
                    "fission is the greatest inner deterministic multirelation below", gal)
                    .cond("S", "inner_deterministic")
                    .guard("S <d= R"));
  out.push_back(thm("L3.3-fusion-odet", "odet(do(R))", "fusion results are outer deterministic", gal).max({3}));
  out.push_back(thm("L3.3-fission-idet", "idet(di(R))", "fission results are inner deterministic", gal).max({3}));
  out.push_back(thm("L3.3-fix-fusion", "odet(R) <==> (do(R) == R)",
                    "outer deterministic multirelations are the fixpoints of fusion", "fixpoints of determinisation")
                    .max({3}));
  out.push_back(thm("L3.3-fix-fission", "idet(R) <==> (di(R) == R)",
                    "inner deterministic multirelations are the fixpoints of fission", "fixpoints of determinisation")
                    .max({3}));

  const std::string ex = "explicit fusion and fission formulas";
  out.push_back(thm("L3.3-fission-explicit", "di(R) == down(R) & At", "fission as down-closure meet atoms", ex)
                    .max({2, 3}));
  out.push_back(thm("L3.3-fusion-down-explicit", "down(do(R)) == -(up(-di(R) & At))",
                    "down-closed fusion through fission", ex)
                    .max({2, 3}));
  out.push_back(thm("L3.3-fusion-down-explicit-2", "down(do(R)) == -(up(-down(R) & At))",
                    "down-closed fusion through down-closure", ex)
                    .max({2, 3}));
  out.push_back(thm("L3.3-fusion-up-dual", "up(do(R)) == dual(up(di(R)))", "up-closed fusion as a dual", ex)
                    .max({2, 3}));
  out.push_back(thm("L3.3-fusion-up-explicit", "up(do(R)) == -(down(icpl(di(R))))", "up-closed fusion explicit", ex)
                    .max({2, 3}));
  out.push_back(thm("L3.3-fusion-up-explicit-2", "up(do(R)) == -(down(icpl(down(R)) & coAt))",
                    "up-closed fusion through co-atoms", ex)
                    .max({2, 3}));
  out.push_back(thm("L3.3-fusion-explicit", "do(R) == -(up(-(down(R)) & At)) & -(down(icpl(down(R)) & coAt))",
                    "fusion as the meet of its closures", ex)
                    .max({2, 3}));
}

void interaction_laws(std::vector<B>& out) {
  const std::string ai = "approximation and determinisation";
  out.push_back(thm("L3.4-alpha-peleg-sub", "a(R * S) <= a(R) ; a(S)", "approximation is lax for Peleg composition", ai));
  out.push_back(thm("L3.4-alpha-down", "a(down(R)) == a(R)", "approximation ignores down-closure", ai).max({3}));
  out.push_back(neg("NEG-alpha-peleg-eq", "a(R * S) == a(R) ; a(S)",
                    "approximation is not functorial for Peleg composition", ai));
  out.push_back(thm("L3.4-fission-fusion", "di(do(R)) == di(R)", "fission after fusion", ai).max({3}));
  out.push_back(thm("L3.4-fusion-fission", "do(di(R)) == do(R)", "fusion after fission", ai).max({3}));
  out.push_back(thm("L3.4-fission-peleg", "di(R) * S == a(R) ; S", "composition after fission is relational", ai));
  out.push_back(thm("L3.4-fission-peleg-sub", "di(R * S) <= di(R) * di(S)", "fission is lax for Peleg composition", ai));
  out.push_back(thm("L3.4-fusion-peleg-em", "do(R * S) <ud= do(R) * do(S)",
                    "fusion is lax for Peleg composition under Egli-Milner", ai));
  out.push_back(thm("L3.4-kleisli-as-fusion", "kl(R) == do(cnv(mem) ; R)", "Kleisli lifting as a fusion", ai));
  out.push_back(thm("L3.4-fusion-via-kleisli", "do(R) == 1 ; kl(R)", "fusion through the Kleisli lifting", ai));
  out.push_back(thm("L3.4-fusion-via-mu", "do(R) == L(R) ; mu", "fusion as transpose then union", ai));
  out.push_back(thm("L3.4-fission-decomposed", "di(R) == 1 ; (cnv(mem) ; R ; cnv(mem) ; 1)",
                    "fission through the singleton lifting", ai));

  const std::string nt = "terminal and non-terminal parts";
  out.push_back(thm("L4-alpha-tau", "a(tau(R)) == 0", "terminal part has empty approximation", nt).max({3}));
  out.push_back(thm("L4-alpha-nu", "a(nu(R)) == a(R)", "non-terminal part keeps the approximation", nt).max({3}));
  out.push_back(thm("L4-nu-fission", "nu(di(R)) == di(R)", "fission has no terminal pairs", nt).max({3}));
  out.push_back(thm("L4-fission-nu", "di(nu(R)) == di(R)", "fission ignores terminal pairs", nt).max({3}));
  out.push_back(thm("L4-tau-fission", "tau(di(R)) == 0", "terminal part of a fission is empty", nt).max({3}));
  out.push_back(thm("L4-fusion-nu", "do(nu(R)) == do(R)", "fusion ignores terminal pairs", nt).max({3}));
  out.push_back(thm("L4-peleg-split", "R * S == (nu(R) * S) | tau(R)", "composition splits at terminal pairs", nt));
  out.push_back(thm("L4-tau-peleg", "tau(R * S) == tau(R) | (nu(R) * tau(S))", "terminal part of a composite", nt));
  out.push_back(thm("L4-nu-def", "nu(R) == R - ilow", "non-terminal part", nt).max({3}));
  out.push_back(thm("L4-tau-def", "tau(R) == R & ilow", "terminal part", nt).max({3}));

  const std::string iu = "inner univalent multirelations";
  out.push_back(thm("L4-iuniv-atoms", "iuniv(R) <==> (nu(R) <= At)", "inner univalence via atoms", iu).max({3}));
  out.push_back(thm("L4-iuniv-nu-fission", "iuniv(R) <==> (nu(R) == di(R))", "inner univalence via fission", iu)
                    .max({3}));
  out.push_back(thm("L4-iuniv-split", "iuniv(R) <==> (R == di(R) | tau(R))", "inner univalence via splitting", iu)
                    .max({3}));
  out.push_back(thm("L4-iuniv-peleg", "R * S == (a(R) ; S) | tau(R)", "composition after an inner univalent factor", iu)
                    .cond("R", "inner_univalent"));
  out.push_back(thm("L4-iuniv-alpha", "a(R * S) == a(R) ; a(S)",
                    "approximation is functorial for an inner univalent first factor", iu)
                    .cond("R", "inner_univalent"));
  out.push_back(thm("L4-iuniv-fission", "di(R * S) == di(R) * di(S)",
                    "fission is functorial for an inner univalent first factor", iu)
                    .cond("R", "inner_univalent"));
  out.push_back(thm("L4-iuniv-fusion", "do(R * S) == do(R) * do(S)",
                    "fusion is functorial for an inner univalent first factor", iu)
                    .cond("R", "inner_univalent"));
  out.push_back(thm("L4-iuniv-closed", "iuniv(R * S)", "inner univalent multirelations are closed under composition",
                    "category of inner univalent multirelations")
                    .cond("R", "inner_univalent")
                    .cond("S", "inner_univalent"));
  out.push_back(thm("L4-iuniv-assoc", "(Q * R) * S == Q * (R * S)",
                    "Peleg composition is associative on inner univalent multirelations",
                    "category of inner univalent multirelations")
                    .cond("Q", "inner_univalent")
                    .cond("R", "inner_univalent")
                    .cond("S", "inner_univalent"));
  out.push_back(thm("L4-iuniv-second-sup", "R * (S | T) == (R * S) | (R * T)",
                    "composition preserves non-empty unions in the second argument",
                    "complete lattice homsets of inner univalent multirelations")
                    .cond("R", "inner_univalent")
                    .cond("S", "inner_univalent")
                    .cond("T", "inner_univalent"));
}

void fine_laws(std::vector<B>& out) {
  const std::string fd = "pre- and postfixpoints of fusion";
  out.push_back(thm("L5-ouniv-post-subset", "ouniv(R) <==> (R <= do(R))",
                    "outer univalent means postfixpoint of fusion under inclusion", fd)
                    .max({2, 3}));
  out.push_back(thm("L5-ouniv-pre-smyth", "ouniv(R) <==> (do(R) <u= R)",
                    "outer univalent means prefixpoint of fusion under Smyth", fd)
                    .max({2, 3}));
  out.push_back(thm("L5-pre-subset-total", "(do(R) <= R) ==> otot(R)", "inclusion prefixpoints of fusion are total", fd)
                    .max({2, 3}));
  out.push_back(thm("L5-pre-hoare-total", "(do(R) <d= R) ==> otot(R)", "Hoare prefixpoints of fusion are total", fd)
                    .max({2, 3}));
  out.push_back(thm("L5-post-smyth-total", "(R <u= do(R)) ==> otot(R)", "Smyth postfixpoints of fusion are total", fd)
                    .max({2, 3}));
  out.push_back(thm("L5-post-em-smyth", "(R <ud= do(R)) <==> (R <u= do(R))",
                    "Egli-Milner and Smyth postfixpoints of fusion coincide", fd)
                    .max({2, 3}));
  out.push_back(thm("L5-pre-em-det", "(do(R) <ud= R) ==> odet(R)", "Egli-Milner prefixpoints of fusion are deterministic",
                    fd)
                    .max({2, 3}));

  const std::string fi = "pre- and postfixpoints of fission";
  out.push_back(thm("L5-iuniv-pre-subset", "iuniv(R) ==> (di(R) <= R)", "inner univalent R contains its fission", fi)
                    .max({2, 3}));
  out.push_back(thm("L5-iuniv-post-smyth", "iuniv(R) ==> (R <u= di(R))",
                    "inner univalent R is a Smyth postfixpoint of fission", fi)
                    .max({2, 3}));
  out.push_back(thm("L5-post-hoare-iuniv", "(R <d= di(R)) ==> iuniv(R)", "Hoare postfixpoints of fission are inner univalent",
                    fi)
                    .max({2, 3}));
  out.push_back(thm("L5-post-em-hoare", "(R <ud= di(R)) <==> (R <d= di(R))",
                    "Egli-Milner and Hoare postfixpoints of fission coincide", fi)
                    .max({2, 3}));
  out.push_back(thm("L5-itot-pre-smyth", "itot(R) <==> (di(R) <u= R)",
                    "inner total means Smyth prefixpoint of fission", fi)
                    .max({2, 3}));
  out.push_back(thm("L5-pre-em-smyth", "(di(R) <ud= R) <==> (di(R) <u= R)",
                    "Egli-Milner and Smyth prefixpoints of fission coincide", fi)
                    .max({2, 3}));
  out.push_back(thm("L5-post-subset-idet", "(R <= di(R)) ==> idet(R)", "inclusion postfixpoints of fission are inner deterministic",
                    fi)
                    .max({2, 3}));

  const std::string ot = "outer total multirelations";
  out.push_back(thm("L5-otot-alpha", "a(R * S) == a(R) ; a(S)", "approximation is functorial on outer total pairs", ot)
                    .cond("R", "outer_total")
                    .cond("S", "outer_total"));
  out.push_back(thm("L5-otot-fission", "di(R * S) == di(R) * di(S)", "fission is functorial on outer total pairs", ot)
                    .cond("R", "outer_total")
                    .cond("S", "outer_total"));
  out.push_back(thm("L5-otot-fusion", "do(R * S) == do(R) * do(S)", "fusion is functorial on outer total pairs", ot)
                    .cond("R", "outer_total")
                    .cond("S", "outer_total"));
}

void co_laws(std::vector<B>& out) {
  const std::string co = "co-fusion and co-fission";
  out.push_back(thm("L6-cofusion-def", "cfo(R) == icpl(do(icpl(R)))", "co-fusion is fusion conjugated by inner complement",
                    co)
                    .max({2, 3}));
  out.push_back(thm("L6-cofission-def", "cfi(R) == icpl(di(icpl(R)))",
                    "co-fission is fission conjugated by inner complement", co)
                    .max({2, 3}));
  out.push_back(thm("L6-cofission-explicit", "cfi(R) == up(R) & coAt", "co-fission as up-closure meet co-atoms", co)
                    .max({2, 3}));
  out.push_back(thm("L6-cofusion-explicit", "cfo(R) == -(down(-(up(R)) & coAt)) & -(up(icpl(up(R)) & At))",
                    "co-fusion as the meet of two closures", co)
                    .max({2, 3}));
  out.push_back(thm("L6-cofusion-odot", "cfo(R) == -(down(-(up(R)) & coAt)) & -(up(odot(up(R) & coAt, icpl(1))))",
                    "co-fusion expanded with the dual composition", co)
                    .max({2, 3}));
  out.push_back(thm("L6-galois-smyth", "(S <u= cfi(R)) <==> (cfo(S) <u= R)",
                    "co-fusion and co-fission form a Galois connection under the Smyth preorder", co));
  out.push_back(thm("L6-down-repr-fusion", "do(dd(R)) == do(R)", "fusion recovers from the down-closed representation",
                    co)
                    .max({2, 3}));
  out.push_back(thm("L6-down-repr-fission", "di(R) == dd(R) & At", "fission from the down-closed representation", co)
                    .max({2, 3}));
  out.push_back(thm("L6-up-repr-fusion", "do(R) == cfo(du(R))", "co-fusion recovers fusion from the up-closed representation",
                    co)
                    .max({2, 3}));
  out.push_back(thm("L6-up-repr-cofission", "cfi(do(R)) == du(R) & coAt",
                    "co-fission of the fusion from the up-closed representation", co)
                    .max({2, 3}));
  out.push_back(neg("NEG-up-repr-cofission-general", "cfi(R) == du(R) & coAt",
                    "the up-closed representation does not give the co-fission of arbitrary R", co));
  out.push_back(thm("L6-down-peleg-det", "down(R * S) == down(R) * down(S)",
                    "down-closure distributes over composition with a deterministic second factor", co)
                    .cond("S", "outer_deterministic"));
  out.push_back(thm("L6-down-peleg-det-right", "down(R * S) == R * down(S)",
                    "down-closure moves to a deterministic second factor", co)
                    .cond("S", "outer_deterministic"));
  out.push_back(thm("L6-up-peleg-idet", "up(R * S) == up(R) * up(S)",
                    "up-closure distributes over composition with an inner deterministic first factor", co)
                    .cond("R", "inner_deterministic"));
  out.push_back(thm("L6-up-icup-det", "up(icup(R, S)) == icup(up(R), up(S))",
                    "up-closure preserves inner unions of deterministic multirelations", co)
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic"));
  out.push_back(thm("L6-down-icup-det", "down(icup(R, S)) == icup(down(R), down(S))",
                    "down-closure preserves inner unions of deterministic multirelations", co)
                    .cond("R", "outer_deterministic")
                    .cond("S", "outer_deterministic"));
  out.push_back(thm("L6-cofusion-range", "odet(cfo(R))", "co-fusion results are deterministic", co).max({2, 3}));
}

// ---------------------------------------------------------------- basis concordance

void basis_laws(std::vector<B>& out) {
  const std::string ba = "definitions over the six-operation basis";
  struct Row {
    const char* id;
    const char* claim;
    std::vector<std::size_t> max;
  };
  const Row rows[] = {
      {"APX-union", "R | S == -(-R & -S)", {3}},
      {"APX-minus", "R - S == R & -S", {3}},
      {"APX-empty", "0 == R & -R", {3}},
      {"APX-universal", "U[X, Y] == -(0[X, Y])", {3}},
      {"APX-up", "up(R) == icup(R, U)", {3}},
      {"APX-mem", "mem[X] == up(1)", {4}},
      {"APX-identity", "Id[X] == 1 / 1", {4}},
      {"APX-converse", "cnv(R) == -(-Id / R)", {3}},
      {"APX-compose", "S ; R == -(-S / cnv(R))", {3}},
      {"APX-right-residual", "R \\ S == cnv(cnv(S) / cnv(R))", {3}},
      {"APX-syq", "syq(R, S) == (R \\ S) & (cnv(R) / cnv(S))", {3}},
      {"APX-lambda", "L(R) == syq(cnv(R), mem)", {3}},
      {"APX-image", "Pf(R) == L(cnv(mem) ; R)", {3}},
      {"APX-kleisli-lift", "kl(R) == Pf(R ; cnv(mem))", {3}},
      {"APX-mu", "mu[X] == kl(Id[P X])", {2}},
      {"APX-omega", "Om[X] == mem \\ mem", {4}},
      {"APX-complementation", "Cc[X] == syq(mem, -mem)", {4}},
      {"APX-icpl", "icpl(R) == R ; Cc", {3}},
      {"APX-icap", "icap(R, S) == icpl(icup(icpl(R), icpl(S)))", {2}},
      {"APX-down", "down(R) == icap(R, U)", {3}},
      {"APX-convex", "convex(R) == up(R) & down(R)", {3}},
      {"APX-inner-unit", "ilow[X, X] == icap(1, icpl(1))", {4}},
      {"APX-inner-counit", "ihigh[X, Y] == icpl(ilow)", {3}},
      {"APX-dual", "dual(R) == -(icpl(R))", {3}},
      {"APX-odot", "odot(R, S) == icpl(R * icpl(S))", {2}},
      {"APX-peleg-lift", "pl(R) == (L(cnv(mem) ; 1) * (cnv(1) ; R ; 1)) ; mu", {3}},
      {"APX-atoms", "At[X, Y] == U ; 1", {3}},
      {"APX-coatoms", "coAt[X, Y] == icpl(At)", {3}},
      {"APX-nu", "nu(R) == R - ilow", {3}},
      {"APX-tau", "tau(R) == R & ilow", {3}},
      {"APX-alpha", "a(R) == R ; cnv(mem)", {3}},
      {"APX-fission", "di(R) == down(R) & At", {3}},
      {"APX-fusion", "do(R) == 1 ; kl(R)", {3}},
      {"APX-cofission", "cfi(R) == up(R) & coAt", {3}},
      {"APX-cofusion", "cfo(R) == icpl(do(icpl(R)))", {3}},
      {"APX-domain", "dom(R) == Id & (R ; cnv(R))", {3}},
      {"APX-smyth", "(R <u= S) <==> (S <= up(R))", {2}},
      {"APX-hoare", "(R <d= S) <==> (R <= down(S))", {2}},
      {"APX-egli-milner", "(R <ud= S) <==> ((R <d= S) && (R <u= S))", {2}},
      {"APX-intersection-via-mrel", "R & S == a((R ; 1) & (S ; 1))", {3}},
  };
  for (const Row& r : rows) {
    out.push_back(thm(r.id, r.claim, "derived definition agrees with the direct operation", ba).max(r.max));
  }
}

// ---------------------------------------------------------------- pinned regressions

std::string mrel_json(const std::string& rows) {
  return "{\"src\":\"X\",\"dst\":\"X\",\"rows\":" + rows + "}";
}

void regressions(std::vector<B>& out) {
  // with S(b) = {a,c} and one set per element the triple is deterministic, hence associative;
  // keeping R and giving S a second choice at a restores the witness
  const std::string single = R"({"carriers":{"X":3},"mrels":{"R":)" + mrel_json("[[[0,1]],[[0]],[[2]]]") +
                              R"(,"S":)" + mrel_json("[[[0,1]],[[0,2]],[[2]]]") + "}}";
  const std::string triple = R"({"carriers":{"X":3},"mrels":{"R":)" + mrel_json("[[[0,1]],[[0]],[[2]]]") +
                             R"(,"S":)" + mrel_json("[[[0,1],[2]],[[0]],[[2]]]") + "}}";
  const std::string triple_witness =
      R"({"lhs_minus_rhs":{"src":3,"dst":3,"rows":[[[0,1,2]],[],[]]}})";
  out.push_back(reg("REG-nonassoc-triple", "R * (R * S) <= (R * R) * S", triple, false,
                    "a total, inner total triple on three elements where Peleg composition is not associative",
                    "non-associativity of total multirelations")
                    .witness(triple_witness));
  out.push_back(pinned(LawKind::NonTheorem, "NEG-peleg-assoc-general", "R * (R * S) == (R * R) * S", triple, false,
                       "Peleg composition is not associative in general", "non-associativity of total multirelations")
                    .witness(triple_witness));
  out.push_back(reg("REG-nonassoc-subassoc", "(R * R) * S <= R * (R * S)", triple, true,
                    "the non-associative triple still satisfies subassociativity",
                    "non-associativity of total multirelations"));
  out.push_back(reg("REG-nonassoc-deterministic-triple", "R * (R * S) == (R * R) * S", single, true,
                    "with one set per element both factors are deterministic, so this triple associates",
                    "non-associativity of total multirelations"));

  const std::string ab = R"({"carriers":{"X":2},"mrels":{"R":)" + mrel_json("[[[0,1]],[]]") + "}}";
  out.push_back(reg("REG-alpha-strict", "a(R * R) == a(R) ; a(R)", ab, false,
                    "approximation of a Peleg square is strictly below the square of approximations",
                    "strict lax functoriality of approximation")
                    .guard("R * R == 0")
                    .witness(R"({"rhs_minus_lhs":{"src":2,"dst":2,"pairs":[[0,0],[0,1]]}})"));

  // four failures of plain inclusion in place of the Hoare preorder
  out.push_back(reg("REG-galois-subset-1", "(a(R) <= S) ==> (R <= L(S))",
                    R"({"carriers":{"X":1,"Y":1},"mrels":{"R":{"src":"X","dst":"Y","rows":[[[]]]}},)"
                    R"("rels":{"S":{"src":"X","dst":"Y","pairs":[[0,0]]}}})",
                    false, "approximation and transpose are not adjoint under inclusion", "inclusion is not enough"));
  out.push_back(reg("REG-galois-subset-2", "(R <= a(S)) ==> (L(R) <= S)",
                    R"({"carriers":{"X":1,"Y":1},"rels":{"R":{"src":"X","dst":"Y","pairs":[]}},)"
                    R"("mrels":{"S":{"src":"X","dst":"Y","rows":[[[0]]]}}})",
                    false, "transpose and approximation are not adjoint under inclusion", "inclusion is not enough"));
  out.push_back(reg("REG-galois-subset-3", "(a(R) <= S) ==> (R <= S ; 1)",
                    R"({"carriers":{"X":1,"Y":2},"mrels":{"R":{"src":"X","dst":"Y","rows":[[[0,1]]]}},)"
                    R"("rels":{"S":{"src":"X","dst":"Y","pairs":[[0,0],[0,1]]}}})",
                    false, "approximation and the inner embedding are not adjoint under inclusion",
                    "inclusion is not enough"));
  out.push_back(reg("REG-galois-subset-4", "(R <= a(S)) ==> (R ; 1 <= S)",
                    R"({"carriers":{"X":1,"Y":2},"rels":{"R":{"src":"X","dst":"Y","pairs":[[0,0],[0,1]]}},)"
                    R"("mrels":{"S":{"src":"X","dst":"Y","rows":[[[0,1]]]}}})",
                    false, "the inner embedding and approximation are not adjoint under inclusion",
                    "inclusion is not enough"));
  out.push_back(neg("NEG-galois-subset-lambda", "(a(R) <= T) <==> (R <= L(T))",
                    "the transpose adjunction fails under inclusion", "inclusion is not enough"));
  out.push_back(neg("NEG-galois-subset-eta", "(T ; 1 <= S) <==> (T <= a(S))",
                    "the inner embedding adjunction fails under inclusion", "inclusion is not enough"));

  const std::string empty_at_a = R"({"carriers":{"X":2},"mrels":{"R":)" + mrel_json("[[[]],[]]") + "}}";
  out.push_back(reg("REG-nu-fusion", "nu(do(R)) == do(R)", empty_at_a, false,
                    "fusion adds terminal pairs, so it is not non-terminal", "terminal pairs under fusion")
                    .guard("nu(do(R)) == 0")
                    .witness(R"({"rhs_minus_lhs":{"src":2,"dst":2,"rows":[[[]],[[]]]}})"));

  const std::string kl_env = R"({"carriers":{"X":1},"mrels":{"R":)" + mrel_json("[[[],[0]]]") + "}}";
  out.push_back(reg("REG-kleisli-left-unit", "1 @ R == R", kl_env, false,
                    "the unit fails as a left unit of Kleisli composition off deterministic R",
                    "Kleisli composition units")
                    .witness(R"({"rhs_minus_lhs":{"src":1,"dst":1,"rows":[[[]]]}})"));

  // unit then empty is empty, so both sides are empty here; the strict failure
  // for outer univalent factors is REG-alpha-strict
  out.push_back(reg("REG-alpha-unit-empty", "a(1[X] * 0[X, P X]) == a(1[X]) ; a(0[X, P X])", R"({"carriers":{"X":1}})",
                    true, "composing the unit with the empty multirelation gives the empty multirelation",
                    "outer total preservation needs totality"));

  const std::string ex5 = R"({"carriers":{"X":2},"mrels":{"R":)" + mrel_json("[[[0,1]],[]]") + R"(,"S":)" +
                          mrel_json("[[[0]],[]]") + "}}";
  out.push_back(reg("REG-fission-not-functorial", "di(R * S) == di(R) * di(S)", ex5, false,
                    "fission is not functorial without totality", "outer total preservation needs totality")
                    .guard("R * S == 0")
                    .witness(R"({"rhs_minus_lhs":{"src":2,"dst":2,"rows":[[[0]],[]]}})"));
  out.push_back(reg("REG-fusion-not-functorial", "do(R * S) == do(R) * do(S)", ex5, false,
                    "fusion is not functorial without totality", "outer total preservation needs totality")
                    .witness(R"({"lhs_minus_rhs":{"src":2,"dst":2,"rows":[[[]],[]]},)"
                             R"("rhs_minus_lhs":{"src":2,"dst":2,"rows":[[[0]],[]]}})"));

  out.push_back(reg("REG-quantaloid-empty-iuniv", "R * 0[X, P X] == 0[X, P X]",
                    R"({"carriers":{"X":1},"mrels":{"R":)" + mrel_json("[[[]]]") + "}}", false,
                    "an empty family of second arguments is not preserved unless inner total",
                    "quantaloid failure for inner univalent multirelations")
                    .witness(R"({"lhs_minus_rhs":{"src":1,"dst":1,"rows":[[[]]]}})"));
  out.push_back(reg("REG-quantaloid-empty-icup", "0[X, P X] * ilow[X, X] == ilow[X, X]", R"({"carriers":{"X":1}})", false,
                    "the empty inner union of compositions is the inner unit, not the empty composite",
                    "quantaloid failure for outer univalent multirelations")
                    .witness(R"({"rhs_minus_lhs":{"src":1,"dst":1,"rows":[[[]]]}})"));

  const std::string not_inj = R"({"carriers":{"X":2},"mrels":{"R":)" + mrel_json("[[[]],[]]") + R"(,"S":)" +
                              mrel_json("[[[]],[[]]]") + "}}";
  out.push_back(reg("REG-alpha-not-injective", "(a(R) == a(S)) ==> (R == S)", not_inj, false,
                    "approximation identifies distinct inner univalent multirelations",
                    "functors from inner univalent multirelations"));

  out.push_back(reg("REG-lambda-empty", "L(R) == E",
                    R"({"carriers":{"X":1},"rels":{"R":{"src":"X","dst":"X","pairs":[]}},)"
                    R"("mrels":{"E":{"src":"X","dst":"X","rows":[[[]]]}}})",
                    true, "transpose of the empty relation relates a to the empty set", "power transpose"));
  out.push_back(reg("REG-peleg-square-empty", "R * R == 0", ab, true,
                    "a two-element set whose second element has no image composes to nothing",
                    "strict lax functoriality of approximation"));
}

std::vector<Law> build() {
  std::vector<B> all;
  relational(all);
  power(all);
  multirel_laws(all);
  peleg_laws(all);
  det_laws(all);
  interaction_laws(all);
  fine_laws(all);
  co_laws(all);
  basis_laws(all);
  regressions(all);
  std::vector<Law> out;
  std::set<std::string> seen;
  for (B& b : all) {
    if (!seen.insert(b.l.id).second) throw Error(ErrorKind::InvalidValue, "duplicate law id " + b.l.id);
    out.push_back(std::move(b.l));
  }
  return out;
}

}  // namespace

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = build();
  return laws;
}

}  // namespace multirel
