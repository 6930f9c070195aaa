#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "multirel/generate.hpp"
#include "multirel/json_io.hpp"

namespace multirel {

// ---------------------------------------------------------------- syntax

enum class Op {
  Var,
  Const,
  // unary
  Cnv, Cpl, Icpl, Up, Down, Convex, Dual, Nu, Tau, Dom, Lambda, Alpha, Pf, Kl, Pl,
  Do, Di, Cfo, Cfi, Dd, Du, Dunion,
  IUniv, ITot, IDet, OUniv, OTot, ODet, UpC, DownC, UnionC,
  // binary
  Seq, Peleg, Kleisli, Inter, Union, Minus, LRes, RRes, Icup, Icap, Odot, Syq, Pego,
  // comparisons
  Eq, Le, LeU, LeD, LeUD, EqU, EqD, EqUD,
  // connectives
  Not, And, Or, Implies, Iff,
};

/// A carrier in an annotation: `P`^pow applied to a name or a literal size.
struct TypeExpr {
  int pow = 0;
  std::string name;                   // empty for a literal
  std::optional<std::size_t> literal;
  friend bool operator==(const TypeExpr&, const TypeExpr&) = default;
};

struct Term {
  Op op = Op::Var;
  std::string name;  // variable or constant name
  std::vector<TypeExpr> annotation;
  bool annotated = false;
  std::vector<std::shared_ptr<const Term>> kids;
  int line = 0;
  int col = 0;
};
using TermPtr = std::shared_ptr<const Term>;

/// Throws Error(SyntaxError) with line:column and the expected tokens.
TermPtr parse(std::string_view text);
/// Fully parenthesised rendering; parse(print(t)) is structurally t.
std::string print(const Term& t);
/// Structural equality, ignoring source positions.
bool same_tree(const Term& a, const Term& b);

/// Operator name as used in calls (`do`, `icup`) or as an infix token (`;`).
std::string op_name(Op op);

// ---------------------------------------------------------------- types

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;

/// A resolved carrier: a base set of `size` elements, or P(inner).
struct Ty {
  std::size_t size = 0;
  TyPtr inner;
  bool is_pow() const { return inner != nullptr; }
};

TyPtr base_ty(std::size_t n);
TyPtr pow_ty(TyPtr inner);
/// Number of elements; throws PowersetTooLarge past what a Rel can index.
std::size_t ty_count(const Ty& t);
bool ty_equal(const Ty& a, const Ty& b);
std::string ty_string(const Ty& t);

struct RelType {
  TyPtr src;
  TyPtr dst;
};
std::string rel_type_string(const RelType& t);

/// True when values of this type are stored as MRel (target is a powerset).
bool stored_as_mrel(const RelType& t);

using EvalResult = std::variant<bool, Instance>;

struct TypeContext {
  std::map<std::string, std::size_t> carriers;  // names usable in annotations
  std::map<std::string, RelType> variables;     // pre-typed variables
  bool allow_free_variables = false;            // otherwise unknown names are UnboundVariable
};

class Program;

/// A parsed term with inferred (possibly still open) carrier types.
class TypedTerm {
 public:
  static TypedTerm infer(const TermPtr& term, const TypeContext& ctx);

  const TermPtr& term() const { return term_; }
  /// Variables in order of first appearance.
  const std::vector<std::string>& variables() const { return variables_; }
  /// Carriers left open by inference, in order of first appearance.
  const std::vector<std::string>& free_carriers() const { return free_names_; }
  bool is_boolean() const;

  /// Fixes open carriers from `sizes` (the last entry repeats); constants are
  /// materialised here once.
  Program instantiate(const std::vector<std::size_t>& sizes) const;

  struct Impl;

 private:
  TermPtr term_;
  std::shared_ptr<const Impl> impl_;
  std::vector<std::string> variables_;
  std::vector<std::string> free_names_;
};

/// A term ready to evaluate against slot values.
class Program {
 public:
  const std::vector<std::string>& variables() const { return variables_; }
  const RelType& variable_type(std::size_t slot) const { return var_types_.at(slot); }
  bool is_boolean() const;
  const RelType& type() const;
  const std::vector<std::size_t>& carrier_sizes() const { return carrier_sizes_; }

  /// Slot values must be stored per stored_as_mrel of their type.
  EvalResult run(std::span<const Instance> slots) const;

  /// When the root is a comparison, the values of its two sides.
  std::optional<std::pair<Instance, Instance>> sides(std::span<const Instance> slots) const;

  struct Node;
  /// Node 0 is the root; kids are indices into the same table.
  const Node& node(int index) const;
  EvalResult eval_node(int index, std::span<const Instance> slots) const { return eval(index, slots); }
  /// Values of the two sides when node `index` is a comparison.
  std::optional<std::pair<Instance, Instance>> sides_of(int index, std::span<const Instance> slots) const;

 private:
  friend class TypedTerm;
  EvalResult eval(int index, std::span<const Instance> slots) const;

  std::vector<Node> nodes_;
  std::vector<std::string> variables_;
  std::vector<RelType> var_types_;
  std::vector<std::size_t> carrier_sizes_;
  TermPtr term_;
};

struct Program::Node {
  Op op = Op::Var;
  std::vector<int> kids;
  int slot = -1;
  bool boolean = false;
  RelType type;
  std::shared_ptr<const Instance> constant;
  const Term* source = nullptr;
};

// ---------------------------------------------------------------- environments

struct Binding {
  RelType type;
  Instance value;
};

struct Env {
  std::map<std::string, std::size_t> carriers;
  std::map<std::string, Binding> values;
};

/// {"carriers": {"X": 2 | ["a","b"] | {"size":2}}, "rels": {...}, "mrels": {...}}.
/// A "src"/"dst" field may be a number, a carrier name or a type such as "P X";
/// for mrels "dst" names the base of the powerset.
Env env_from_json(const Json& j);
TyPtr parse_type(std::string_view text, const std::map<std::string, std::size_t>& carriers);

/// Stores a value in the representation its type calls for.
Instance normalise(Instance value, const RelType& type);

EvalResult evaluate(std::string_view expr, const Env& env, const std::vector<std::size_t>& sizes = {});
Json result_to_json(const EvalResult& r);

}  // namespace multirel
