#include "multirel/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "multirel/determinise.hpp"
#include "multirel/peleg.hpp"
#include "multirel/power.hpp"

namespace multirel {

namespace {

// ============================================================== operator table

enum class Sig {
  None,
  // unary
  Converse, Same, InnerSame, Dom, Lambda, Alpha, Pf, Lift, InnerPred, OuterPred,
  // binary
  Seq, PelegLike, SameBin, InnerSameBin, LRes, RRes, Syq,
  CmpAny, CmpInner, Logic, NotSig,
};

struct OpInfo {
  Op op;
  const char* name;  // call name, or infix token
  int arity;
  bool call;  // written name(args) rather than infix
  Sig sig;
};

constexpr OpInfo kOps[] = {
    {Op::Cnv, "cnv", 1, true, Sig::Converse},
    {Op::Cpl, "cpl", 1, true, Sig::Same},
    {Op::Icpl, "icpl", 1, true, Sig::InnerSame},
    {Op::Up, "up", 1, true, Sig::InnerSame},
    {Op::Down, "down", 1, true, Sig::InnerSame},
    {Op::Convex, "convex", 1, true, Sig::InnerSame},
    {Op::Dual, "dual", 1, true, Sig::InnerSame},
    {Op::Nu, "nu", 1, true, Sig::InnerSame},
    {Op::Tau, "tau", 1, true, Sig::InnerSame},
    {Op::Dom, "dom", 1, true, Sig::Dom},
    {Op::Lambda, "L", 1, true, Sig::Lambda},
    {Op::Alpha, "a", 1, true, Sig::Alpha},
    {Op::Pf, "Pf", 1, true, Sig::Pf},
    {Op::Kl, "kl", 1, true, Sig::Lift},
    {Op::Pl, "pl", 1, true, Sig::Lift},
    {Op::Do, "do", 1, true, Sig::InnerSame},
    {Op::Di, "di", 1, true, Sig::InnerSame},
    {Op::Cfo, "cfo", 1, true, Sig::InnerSame},
    {Op::Cfi, "cfi", 1, true, Sig::InnerSame},
    {Op::Dd, "dd", 1, true, Sig::InnerSame},
    {Op::Du, "du", 1, true, Sig::InnerSame},
    {Op::Dunion, "dunion", 1, true, Sig::InnerSame},
    {Op::IUniv, "iuniv", 1, true, Sig::InnerPred},
    {Op::ITot, "itot", 1, true, Sig::InnerPred},
    {Op::IDet, "idet", 1, true, Sig::InnerPred},
    {Op::OUniv, "ouniv", 1, true, Sig::OuterPred},
    {Op::OTot, "otot", 1, true, Sig::OuterPred},
    {Op::ODet, "odet", 1, true, Sig::OuterPred},
    {Op::UpC, "upc", 1, true, Sig::InnerPred},
    {Op::DownC, "downc", 1, true, Sig::InnerPred},
    {Op::UnionC, "unionc", 1, true, Sig::InnerPred},
    {Op::Seq, ";", 2, false, Sig::Seq},
    {Op::Peleg, "*", 2, false, Sig::PelegLike},
    {Op::Kleisli, "@", 2, false, Sig::PelegLike},
    {Op::Inter, "&", 2, false, Sig::SameBin},
    {Op::Union, "|", 2, false, Sig::SameBin},
    {Op::Minus, "-", 2, false, Sig::SameBin},
    {Op::LRes, "/", 2, false, Sig::LRes},
    {Op::RRes, "\\", 2, false, Sig::RRes},
    {Op::Icup, "icup", 2, true, Sig::InnerSameBin},
    {Op::Icap, "icap", 2, true, Sig::InnerSameBin},
    {Op::Odot, "odot", 2, true, Sig::PelegLike},
    {Op::Syq, "syq", 2, true, Sig::Syq},
    {Op::Pego, "pego", 2, true, Sig::PelegLike},
    {Op::Eq, "==", 2, false, Sig::CmpAny},
    {Op::Le, "<=", 2, false, Sig::CmpAny},
    {Op::LeU, "<u=", 2, false, Sig::CmpInner},
    {Op::LeD, "<d=", 2, false, Sig::CmpInner},
    {Op::LeUD, "<ud=", 2, false, Sig::CmpInner},
    {Op::EqU, "=u=", 2, false, Sig::CmpInner},
    {Op::EqD, "=d=", 2, false, Sig::CmpInner},
    {Op::EqUD, "=ud=", 2, false, Sig::CmpInner},
    {Op::Not, "!", 1, false, Sig::NotSig},
    {Op::And, "&&", 2, false, Sig::Logic},
    {Op::Or, "||", 2, false, Sig::Logic},
    {Op::Implies, "==>", 2, false, Sig::Logic},
    {Op::Iff, "<==>", 2, false, Sig::Logic},
};

const OpInfo& info(Op op) {
  for (const auto& i : kOps) {
    if (i.op == op) return i;
  }
  throw Error(ErrorKind::InvalidValue, "operator without table entry");
}

const OpInfo* find_call(std::string_view name) {
  for (const auto& i : kOps) {
    if (i.call && name == i.name) return &i;
  }
  return nullptr;
}

// constants: name, number of annotation carriers
struct ConstInfo {
  const char* name;
  int params;
};
constexpr ConstInfo kConsts[] = {
    {"Id", 1}, {"0", 2}, {"U", 2}, {"1", 1}, {"eta", 1}, {"ilow", 2}, {"ihigh", 2},
    {"At", 2}, {"coAt", 2}, {"mem", 1}, {"Om", 1}, {"Cc", 1}, {"mu", 1},
};

const ConstInfo* find_const(std::string_view name) {
  for (const auto& c : kConsts) {
    if (name == c.name) return &c;
  }
  return nullptr;
}

// ============================================================== lexer

struct Tok {
  enum Kind { Ident, Number, Sym, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

constexpr const char* kSymbols[] = {"<==>", "==>", "<ud=", "=ud=", "<u=", "<d=", "=u=", "=d=", "==", "<=", "||", "&&",
                                    "\xCB\x98", "!", "/", "\\", "|", "&", "-", ";", "*", "@", "^", "(", ")", "[", "]", ","};

std::string describe(const Tok& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

[[noreturn]] void syntax_error(int line, int col, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::vector<Tok> lex(std::string_view s) {
  std::vector<Tok> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance(1);
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    bool matched = false;
    for (const char* sym : kSymbols) {
      const std::string_view sv(sym);
      if (s.substr(i, sv.size()) == sv) {
        t.kind = Tok::Sym;
        t.text = std::string(sv);
        advance(sv.size());
        out.push_back(std::move(t));
        matched = true;
        break;
      }
    }
    if (!matched) syntax_error(line, col, "unexpected character '" + std::string(1, c) + "'");
  }
  Tok end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// ============================================================== parser

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  TermPtr parse_all() {
    TermPtr t = expr();
    if (peek().kind != Tok::End) fail({"operator", "end of input"});
    return t;
  }

  TypeExpr parse_type_all() {
    TypeExpr t = type_expr();
    if (peek().kind != Tok::End) fail({"end of input"});
    return t;
  }

 private:
  const Tok& peek() const { return toks_[pos_]; }
  bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool accept(const char* s) {
    if (!is_sym(s)) return false;
    ++pos_;
    return true;
  }
  void expect(const char* s) {
    if (!accept(s)) fail({std::string("'") + s + "'"});
  }
  [[noreturn]] void fail(const std::vector<std::string>& expected) const {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + describe(peek());
    syntax_error(peek().line, peek().col, msg);
  }

  static TermPtr node(Op op, const Tok& at, std::vector<TermPtr> kids) {
    auto t = std::make_shared<Term>();
    t->op = op;
    t->kids = std::move(kids);
    t->line = at.line;
    t->col = at.col;
    return t;
  }

  TermPtr expr() {
    const Tok at = peek();
    TermPtr l = impl();
    if (accept("<==>")) {
      TermPtr r = impl();
      if (is_sym("<==>")) syntax_error(peek().line, peek().col, "'<==>' does not chain; add parentheses");
      return node(Op::Iff, at, {l, r});
    }
    return l;
  }

  TermPtr impl() {
    const Tok at = peek();
    TermPtr l = disj();
    if (accept("==>")) return node(Op::Implies, at, {l, impl()});
    return l;
  }

  TermPtr disj() {
    const Tok at = peek();
    TermPtr l = conj();
    while (accept("||")) l = node(Op::Or, at, {l, conj()});
    return l;
  }

  TermPtr conj() {
    const Tok at = peek();
    TermPtr l = negation();
    while (accept("&&")) l = node(Op::And, at, {l, negation()});
    return l;
  }

  TermPtr negation() {
    const Tok at = peek();
    if (accept("!")) return node(Op::Not, at, {negation()});
    return comparison();
  }

  TermPtr comparison() {
    static constexpr std::pair<const char*, Op> kCmp[] = {
        {"==", Op::Eq},   {"<=", Op::Le},   {"<u=", Op::LeU}, {"<d=", Op::LeD},
        {"<ud=", Op::LeUD}, {"=u=", Op::EqU}, {"=d=", Op::EqD}, {"=ud=", Op::EqUD},
    };
    const Tok at = peek();
    TermPtr l = residual();
    for (auto [sym, op] : kCmp) {
      if (accept(sym)) {
        TermPtr r = residual();
        for (auto [sym2, op2] : kCmp) {
          (void)op2;
          if (is_sym(sym2)) syntax_error(peek().line, peek().col, "comparisons do not chain; add parentheses");
        }
        return node(op, at, {l, r});
      }
    }
    return l;
  }

  TermPtr residual() {
    const Tok at = peek();
    TermPtr l = unite();
    Op op;
    if (accept("/")) {
      op = Op::LRes;
    } else if (accept("\\")) {
      op = Op::RRes;
    } else {
      return l;
    }
    TermPtr r = unite();
    if (is_sym("/") || is_sym("\\")) {
      syntax_error(peek().line, peek().col, "residuals do not associate; parenthesise the chain");
    }
    return node(op, at, {l, r});
  }

  TermPtr unite() {
    const Tok at = peek();
    TermPtr l = meet();
    while (accept("|")) l = node(Op::Union, at, {l, meet()});
    return l;
  }

  TermPtr meet() {
    const Tok at = peek();
    TermPtr l = sequence();
    while (true) {
      if (accept("&")) {
        l = node(Op::Inter, at, {l, sequence()});
      } else if (accept("-")) {
        l = node(Op::Minus, at, {l, sequence()});
      } else {
        return l;
      }
    }
  }

  TermPtr sequence() {
    const Tok at = peek();
    TermPtr l = prefix();
    while (true) {
      if (accept(";")) {
        l = node(Op::Seq, at, {l, prefix()});
      } else if (accept("*")) {
        l = node(Op::Peleg, at, {l, prefix()});
      } else if (accept("@")) {
        l = node(Op::Kleisli, at, {l, prefix()});
      } else {
        return l;
      }
    }
  }

  TermPtr prefix() {
    const Tok at = peek();
    if (accept("-")) return node(Op::Cpl, at, {prefix()});
    return postfix();
  }

  TermPtr postfix() {
    const Tok at = peek();
    TermPtr t = primary();
    while (accept("^") || accept("\xCB\x98")) t = node(Op::Cnv, at, {t});
    return t;
  }

  TermPtr primary() {
    const Tok at = peek();
    if (accept("(")) {
      TermPtr t = expr();
      expect(")");
      return t;
    }
    if (at.kind == Tok::Number) {
      if (at.text != "0" && at.text != "1") syntax_error(at.line, at.col, "only the constants 0 and 1 are numeric");
      ++pos_;
      auto t = std::make_shared<Term>();
      t->op = Op::Const;
      t->name = at.text;
      t->line = at.line;
      t->col = at.col;
      annotation(*t);
      return t;
    }
    if (at.kind == Tok::Ident) {
      ++pos_;
      if (is_sym("(")) {
        const OpInfo* op = find_call(at.text);
        if (!op) syntax_error(at.line, at.col, "unknown operation '" + at.text + "'");
        expect("(");
        std::vector<TermPtr> args;
        args.push_back(expr());
        while (accept(",")) args.push_back(expr());
        expect(")");
        if (static_cast<int>(args.size()) != op->arity) {
          syntax_error(at.line, at.col, std::string(op->name) + " takes " + std::to_string(op->arity) +
                                            " argument" + (op->arity == 1 ? "" : "s"));
        }
        return node(op->op, at, std::move(args));
      }
      auto t = std::make_shared<Term>();
      t->op = find_const(at.text) ? Op::Const : Op::Var;
      t->name = at.text;
      t->line = at.line;
      t->col = at.col;
      annotation(*t);
      return t;
    }
    fail({"'('", "identifier", "'0'", "'1'", "'-'"});
  }

  void annotation(Term& t) {
    if (!accept("[")) return;
    t.annotated = true;
    t.annotation.push_back(type_expr());
    while (accept(",")) t.annotation.push_back(type_expr());
    expect("]");
  }

  TypeExpr type_expr() {
    const Tok at = peek();
    if (accept("(")) {
      TypeExpr t = type_expr();
      expect(")");
      return t;
    }
    if (at.kind == Tok::Ident && at.text == "P") {
      ++pos_;
      TypeExpr t = type_expr();
      ++t.pow;
      return t;
    }
    if (at.kind == Tok::Ident) {
      ++pos_;
      TypeExpr t;
      t.name = at.text;
      return t;
    }
    if (at.kind == Tok::Number) {
      ++pos_;
      TypeExpr t;
      t.literal = std::stoull(at.text);
      return t;
    }
    fail({"carrier name", "size", "'P'"});
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

std::string print_type_expr(const TypeExpr& t) {
  std::string s;
  for (int i = 0; i < t.pow; ++i) s += "P ";
  s += t.literal ? std::to_string(*t.literal) : t.name;
  return s;
}

// ============================================================== type store

class TypeStore {
 public:
  enum Kind { Var, Base, Pow };
  struct N {
    Kind kind;
    std::size_t size;
    int child;
    int parent;
    std::string name;
  };

  int var(std::string name = {}) { return add({Var, 0, -1, -1, std::move(name)}); }
  int base(std::size_t n) { return add({Base, n, -1, -1, {}}); }
  int pow(int child) { return add({Pow, 0, child, -1, {}}); }

  int find(int x) const {
    while (nodes_[x].parent >= 0) x = nodes_[x].parent;
    return x;
  }
  const N& at(int x) const { return nodes_[find(x)]; }

  bool unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    N& na = nodes_[a];
    N& nb = nodes_[b];
    if (na.kind == Var) {
      if (occurs(a, b)) return false;
      if (nb.kind == Var && nb.name.empty()) nb.name = na.name;
      na.parent = b;
      return true;
    }
    if (nb.kind == Var) {
      if (occurs(b, a)) return false;
      nb.parent = a;
      return true;
    }
    if (na.kind == Base && nb.kind == Base) return na.size == nb.size;
    if (na.kind == Pow && nb.kind == Pow) return unify(na.child, nb.child);
    return false;
  }

  std::string str(int x) const {
    const N& n = at(x);
    switch (n.kind) {
      case Var: return "?" + (n.name.empty() ? std::to_string(find(x)) : n.name);
      case Base: return std::to_string(n.size);
      case Pow: return "P" + wrap(n.child);
    }
    return "?";
  }

  void collect_vars(int x, std::vector<int>& out) const {
    const N& n = at(x);
    if (n.kind == Var) {
      const int r = find(x);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    } else if (n.kind == Pow) {
      collect_vars(n.child, out);
    }
  }

  TyPtr resolve(int x, const std::map<int, std::size_t>& sizes) const {
    const int r = find(x);
    const N& n = nodes_[r];
    switch (n.kind) {
      case Var: return base_ty(sizes.at(r));
      case Base: return base_ty(n.size);
      case Pow: return pow_ty(resolve(n.child, sizes));
    }
    return base_ty(0);
  }

  int from_ty(const Ty& t) { return t.is_pow() ? pow(from_ty(*t.inner)) : base(t.size); }

 private:
  std::string wrap(int x) const {
    const std::string s = str(x);
    return at(x).kind == Pow ? "(" + s + ")" : s;
  }
  bool occurs(int v, int t) const {
    t = find(t);
    if (t == v) return true;
    return nodes_[t].kind == Pow && occurs(v, nodes_[t].child);
  }
  int add(N n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }
  std::vector<N> nodes_;
};

std::string position(const Term& t) { return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col); }

}  // namespace

// ============================================================== syntax API

TermPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string op_name(Op op) {
  if (op == Op::Var) return "variable";
  if (op == Op::Const) return "constant";
  return info(op).name;
}

std::string print(const Term& t) {
  auto annot = [&]() {
    if (!t.annotated) return std::string();
    std::string s = "[";
    for (std::size_t i = 0; i < t.annotation.size(); ++i) {
      if (i) s += ", ";
      s += print_type_expr(t.annotation[i]);
    }
    return s + "]";
  };
  switch (t.op) {
    case Op::Var:
    case Op::Const: return t.name + annot();
    case Op::Not: return "!(" + print(*t.kids[0]) + ")";
    default: break;
  }
  const OpInfo& oi = info(t.op);
  if (oi.call) {
    std::string s = std::string(oi.name) + "(";
    for (std::size_t i = 0; i < t.kids.size(); ++i) {
      if (i) s += ", ";
      s += print(*t.kids[i]);
    }
    return s + ")";
  }
  return "(" + print(*t.kids[0]) + " " + oi.name + " " + print(*t.kids[1]) + ")";
}

bool same_tree(const Term& a, const Term& b) {
  if (a.op != b.op || a.name != b.name || a.annotated != b.annotated || a.annotation != b.annotation ||
      a.kids.size() != b.kids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    if (!same_tree(*a.kids[i], *b.kids[i])) return false;
  }
  return true;
}

// ============================================================== types

TyPtr base_ty(std::size_t n) {
  auto t = std::make_shared<Ty>();
  t->size = n;
  return t;
}

TyPtr pow_ty(TyPtr inner) {
  auto t = std::make_shared<Ty>();
  t->inner = std::move(inner);
  return t;
}

std::size_t ty_count(const Ty& t) { return t.is_pow() ? powerset_size(ty_count(*t.inner)) : t.size; }

bool ty_equal(const Ty& a, const Ty& b) {
  if (a.is_pow() != b.is_pow()) return false;
  return a.is_pow() ? ty_equal(*a.inner, *b.inner) : a.size == b.size;
}

std::string ty_string(const Ty& t) {
  if (!t.is_pow()) return std::to_string(t.size);
  return "P" + (t.inner->is_pow() ? "(" + ty_string(*t.inner) + ")" : ty_string(*t.inner));
}

std::string rel_type_string(const RelType& t) { return ty_string(*t.src) + " <-> " + ty_string(*t.dst); }

bool stored_as_mrel(const RelType& t) {
  if (!t.dst->is_pow()) return false;
  const Ty& inner = *t.dst->inner;
  // the inner carrier must fit a mask; deep powersets are counted only if small
  if (!inner.is_pow()) return inner.size <= kMaskCap;
  try {
    return ty_count(inner) <= kMaskCap;
  } catch (const Error&) {
    return false;
  }
}

// ============================================================== inference

struct TypedTerm::Impl {
  struct FNode {
    const Term* term = nullptr;
    Op op = Op::Var;
    std::vector<int> kids;
    int slot = -1;
    bool boolean = false;
    int src = -1;
    int dst = -1;
  };
  TypeStore store;
  std::vector<FNode> nodes;
  std::vector<std::pair<int, int>> var_types;
  std::vector<int> free_vars;
};

namespace {

class Inferer {
 public:
  Inferer(TypedTerm::Impl& impl, const TypeContext& ctx, std::vector<std::string>& vars)
      : impl_(impl), st_(impl.store), ctx_(ctx), vars_(vars) {}

  int walk(const Term& t) {
    const int id = static_cast<int>(impl_.nodes.size());
    impl_.nodes.emplace_back();
    impl_.nodes[id].term = &t;
    impl_.nodes[id].op = t.op;
    std::vector<int> kids;
    for (const auto& k : t.kids) kids.push_back(walk(*k));
    impl_.nodes[id].kids = kids;
    type_node(id, t, kids);
    return id;
  }

 private:
  using FNode = TypedTerm::Impl::FNode;

  [[noreturn]] void mismatch(const Term& t, const std::string& detail) const {
    throw Error(ErrorKind::ShapeMismatch, position(t) + ": in `" + print(t) + "`: " + detail);
  }

  void unify(const Term& t, int a, int b, const char* what) {
    if (!st_.unify(a, b)) {
      const std::string sa = st_.str(a);
      const std::string sb = st_.str(b);
      mismatch(t, std::string(what) + ": cannot match " + sa + " with " + sb);
    }
  }

  void require_rel(const Term& t, int kid) {
    if (impl_.nodes[kid].boolean) {
      throw Error(ErrorKind::TypeError,
                  position(*impl_.nodes[kid].term) + ": `" + print(*impl_.nodes[kid].term) + "` is a truth value, a relation is needed here in `" + print(t) + "`");
    }
  }

  void require_bool(const Term& t, int kid) {
    if (!impl_.nodes[kid].boolean) {
      throw Error(ErrorKind::TypeError, position(*impl_.nodes[kid].term) + ": `" + print(*impl_.nodes[kid].term) +
                                            "` is a relation, a truth value is needed here in `" + print(t) + "`");
    }
  }

  /// dst must be P(b); returns b.
  int inner_of(const Term& t, int dst) {
    const int b = st_.var();
    unify(t, dst, st_.pow(b), "expected a multirelation (target a powerset)");
    return b;
  }

  int annot_carrier(const TypeExpr& e) {
    int id;
    if (e.literal) {
      id = st_.base(*e.literal);
    } else if (auto it = ctx_.carriers.find(e.name); it != ctx_.carriers.end()) {
      id = st_.base(it->second);
    } else if (auto nv = named_.find(e.name); nv != named_.end()) {
      id = nv->second;
    } else {
      id = st_.var(e.name);
      named_[e.name] = id;
    }
    for (int i = 0; i < e.pow; ++i) id = st_.pow(id);
    return id;
  }

  void set_rel(int id, int src, int dst) {
    impl_.nodes[id].src = src;
    impl_.nodes[id].dst = dst;
  }

  void type_node(int id, const Term& t, const std::vector<int>& k) {
    FNode& n = impl_.nodes[id];
    auto src = [&](int i) { return impl_.nodes[k[i]].src; };
    auto dst = [&](int i) { return impl_.nodes[k[i]].dst; };
    if (t.op == Op::Var) {
      type_var(id, t);
      return;
    }
    if (t.op == Op::Const) {
      type_const(id, t);
      return;
    }
    const Sig sig = info(t.op).sig;
    if (sig == Sig::Logic || sig == Sig::NotSig) {
      for (int kid : k) require_bool(t, kid);
      n.boolean = true;
      return;
    }
    for (int kid : k) require_rel(t, kid);
    switch (sig) {
      case Sig::Converse: set_rel(id, dst(0), src(0)); break;
      case Sig::Same: set_rel(id, src(0), dst(0)); break;
      case Sig::InnerSame:
        inner_of(t, dst(0));
        set_rel(id, src(0), dst(0));
        break;
      case Sig::Dom: set_rel(id, src(0), src(0)); break;
      case Sig::Lambda: set_rel(id, src(0), st_.pow(dst(0))); break;
      case Sig::Alpha: set_rel(id, src(0), inner_of(t, dst(0))); break;
      case Sig::Pf: set_rel(id, st_.pow(src(0)), st_.pow(dst(0))); break;
      case Sig::Lift:
        inner_of(t, dst(0));
        set_rel(id, st_.pow(src(0)), dst(0));
        break;
      case Sig::InnerPred:
        inner_of(t, dst(0));
        impl_.nodes[id].boolean = true;
        break;
      case Sig::OuterPred: impl_.nodes[id].boolean = true; break;
      case Sig::Seq:
        unify(t, dst(0), src(1), "composition needs the left target to equal the right source");
        set_rel(id, src(0), dst(1));
        break;
      case Sig::PelegLike: {
        const int b = inner_of(t, dst(0));
        unify(t, b, src(1), "the left target must be the powerset of the right source");
        inner_of(t, dst(1));
        set_rel(id, src(0), dst(1));
        break;
      }
      case Sig::SameBin:
        unify(t, src(0), src(1), "operands need equal sources");
        unify(t, dst(0), dst(1), "operands need equal targets");
        set_rel(id, src(0), dst(0));
        break;
      case Sig::InnerSameBin:
        unify(t, src(0), src(1), "operands need equal sources");
        unify(t, dst(0), dst(1), "operands need equal targets");
        inner_of(t, dst(0));
        set_rel(id, src(0), dst(0));
        break;
      case Sig::LRes:
        unify(t, dst(0), dst(1), "T / S needs T and S with equal targets");
        set_rel(id, src(0), src(1));
        break;
      case Sig::RRes:
      case Sig::Syq:
        unify(t, src(0), src(1), "operands need equal sources");
        set_rel(id, dst(0), dst(1));
        break;
      case Sig::CmpAny:
        unify(t, src(0), src(1), "compared relations need equal sources");
        unify(t, dst(0), dst(1), "compared relations need equal targets");
        impl_.nodes[id].boolean = true;
        break;
      case Sig::CmpInner:
        unify(t, src(0), src(1), "compared multirelations need equal sources");
        unify(t, dst(0), dst(1), "compared multirelations need equal targets");
        inner_of(t, dst(0));
        impl_.nodes[id].boolean = true;
        break;
      default: break;
    }
  }

  void type_var(int id, const Term& t) {
    auto it = std::find(vars_.begin(), vars_.end(), t.name);
    int slot;
    if (it == vars_.end()) {
      slot = static_cast<int>(vars_.size());
      vars_.push_back(t.name);
      if (auto ct = ctx_.variables.find(t.name); ct != ctx_.variables.end()) {
        impl_.var_types.emplace_back(st_.from_ty(*ct->second.src), st_.from_ty(*ct->second.dst));
      } else if (ctx_.allow_free_variables) {
        impl_.var_types.emplace_back(st_.var(), st_.var());
      } else {
        throw Error(ErrorKind::UnboundVariable, position(t) + ": unbound variable '" + t.name + "'");
      }
    } else {
      slot = static_cast<int>(it - vars_.begin());
    }
    impl_.nodes[id].slot = slot;
    auto [s, d] = impl_.var_types[slot];
    set_rel(id, s, d);
    if (t.annotated) {
      if (t.annotation.size() != 2) mismatch(t, "a variable annotation names source and target: R[X, P Y]");
      unify(t, s, annot_carrier(t.annotation[0]), "annotated source");
      unify(t, d, annot_carrier(t.annotation[1]), "annotated target");
    }
  }

  void type_const(int id, const Term& t) {
    const ConstInfo* c = find_const(t.name);
    std::vector<int> params;
    for (int i = 0; i < c->params; ++i) params.push_back(st_.var());
    if (t.annotated) {
      if (static_cast<int>(t.annotation.size()) != c->params) {
        mismatch(t, std::string("constant ") + c->name + " takes " + std::to_string(c->params) + " carrier" +
                        (c->params == 1 ? "" : "s"));
      }
      for (int i = 0; i < c->params; ++i) unify(t, params[i], annot_carrier(t.annotation[i]), "annotation");
    }
    const std::string& n = t.name;
    const int a = params[0];
    if (n == "Id") {
      set_rel(id, a, a);
    } else if (n == "0" || n == "U") {
      set_rel(id, a, params[1]);
    } else if (n == "1" || n == "eta" || n == "mem") {
      set_rel(id, a, st_.pow(a));
    } else if (n == "Om" || n == "Cc") {
      set_rel(id, st_.pow(a), st_.pow(a));
    } else if (n == "mu") {
      set_rel(id, st_.pow(st_.pow(a)), st_.pow(a));
    } else {  // ilow ihigh At coAt
      set_rel(id, a, st_.pow(params[1]));
    }
  }

  TypedTerm::Impl& impl_;
  TypeStore& st_;
  const TypeContext& ctx_;
  std::vector<std::string>& vars_;
  std::map<std::string, int> named_;
};

std::string fresh_name(std::size_t i, const std::set<std::string>& used, std::size_t& counter) {
  static constexpr const char* kNames[] = {"X", "Y", "Z", "W", "V", "T"};
  (void)i;
  while (true) {
    const std::size_t c = counter++;
    std::string n = c < 6 ? kNames[c] : "X" + std::to_string(c - 5);
    if (!used.count(n)) return n;
  }
}

}  // namespace

TypedTerm TypedTerm::infer(const TermPtr& term, const TypeContext& ctx) {
  auto impl = std::make_shared<Impl>();
  TypedTerm out;
  out.term_ = term;
  Inferer(*impl, ctx, out.variables_).walk(*term);
  // open carriers: variable types first, then every node in pre-order
  std::vector<int> order;
  for (auto [s, d] : impl->var_types) {
    impl->store.collect_vars(s, order);
    impl->store.collect_vars(d, order);
  }
  for (const auto& n : impl->nodes) {
    if (n.src >= 0) {
      impl->store.collect_vars(n.src, order);
      impl->store.collect_vars(n.dst, order);
    }
  }
  std::set<std::string> used;
  for (int v : order) {
    if (!impl->store.at(v).name.empty()) used.insert(impl->store.at(v).name);
  }
  std::size_t counter = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::string& n = impl->store.at(order[i]).name;
    out.free_names_.push_back(n.empty() ? fresh_name(i, used, counter) : n);
  }
  impl->free_vars = order;
  out.impl_ = impl;
  return out;
}

bool TypedTerm::is_boolean() const { return impl_->nodes.front().boolean; }

namespace {

Rel as_rel(const Instance& v) {
  if (const Rel* r = std::get_if<Rel>(&v)) return *r;
  return to_rel(std::get<MRel>(v));
}

MRel as_mrel(const Instance& v, std::size_t base) {
  if (const MRel* m = std::get_if<MRel>(&v)) return *m;
  return from_rel(std::get<Rel>(v), base);
}

std::size_t inner_count(const RelType& t) { return ty_count(*t.dst->inner); }

Instance make_constant(const std::string& n, const RelType& t) {
  const std::size_t src = ty_count(*t.src);
  if (n == "Id") return normalise(identity(src), t);
  if (n == "0") {
    if (stored_as_mrel(t)) return MRel(src, inner_count(t));
    return Rel(src, ty_count(*t.dst));
  }
  if (n == "U") {
    if (stored_as_mrel(t)) return mrel_const(MRelConst::Universal, src, inner_count(t));
    return rel_const(RelConst::Universal, src, ty_count(*t.dst));
  }
  if (n == "1" || n == "eta") return normalise(eta(src), t);
  if (n == "mem") return normalise(member_rel(src), t);
  const std::size_t base = inner_count(t);
  if (n == "Om") return normalise(omega(base), t);
  if (n == "Cc") return normalise(complementation(base), t);
  if (n == "mu") return normalise(mu(base), t);
  if (n == "ilow") return mrel_const(MRelConst::InnerUnit, src, base);
  if (n == "ihigh") return mrel_const(MRelConst::InnerCounit, src, base);
  if (n == "At") return mrel_const(MRelConst::Atoms, src, base);
  return mrel_const(MRelConst::Coatoms, src, base);
}

}  // namespace

Program TypedTerm::instantiate(const std::vector<std::size_t>& sizes) const {
  const Impl& impl = *impl_;
  std::map<int, std::size_t> assign;
  if (!impl.free_vars.empty() && sizes.empty()) {
    throw Error(ErrorKind::TypeError, "carrier " + free_names_.front() +
                                          " is not determined by the term; give sizes or annotate it");
  }
  Program p;
  for (std::size_t i = 0; i < impl.free_vars.size(); ++i) {
    const std::size_t s = sizes[std::min(i, sizes.size() - 1)];
    assign[impl.free_vars[i]] = s;
    p.carrier_sizes_.push_back(s);
  }
  p.term_ = term_;
  p.variables_ = variables_;
  for (auto [s, d] : impl.var_types) p.var_types_.push_back({impl.store.resolve(s, assign), impl.store.resolve(d, assign)});
  p.nodes_.resize(impl.nodes.size());
  for (std::size_t i = 0; i < impl.nodes.size(); ++i) {
    const auto& f = impl.nodes[i];
    auto& n = p.nodes_[i];
    n.op = f.op;
    n.kids = f.kids;
    n.slot = f.slot;
    n.boolean = f.boolean;
    n.source = f.term;
    if (!f.boolean) n.type = {impl.store.resolve(f.src, assign), impl.store.resolve(f.dst, assign)};
  }
  for (auto& n : p.nodes_) {
    if (n.op == Op::Const) n.constant = std::make_shared<const Instance>(make_constant(n.source->name, n.type));
  }
  return p;
}

// ============================================================== evaluation

Instance normalise(Instance value, const RelType& type) {
  if (stored_as_mrel(type)) {
    if (std::holds_alternative<Rel>(value)) return from_rel(std::get<Rel>(value), inner_count(type));
    return value;
  }
  if (std::holds_alternative<MRel>(value)) return to_rel(std::get<MRel>(value));
  return value;
}

namespace {

/// Composition where the left operand's row entries index the right operand's rows.
Instance compose_any(const Instance& l, const Instance& r, const RelType& out) {
  std::vector<std::vector<std::size_t>> index;
  if (const Rel* lr = std::get_if<Rel>(&l)) {
    index.resize(lr->src());
    for (auto [a, b] : lr->pairs()) index[a].push_back(b);
  } else {
    const MRel& lm = std::get<MRel>(l);
    index.resize(lm.src());
    for (std::size_t a = 0; a < lm.src(); ++a) {
      for (Mask m : lm.row(a)) index[a].push_back(static_cast<std::size_t>(m));
    }
  }
  const std::size_t src = index.size();
  if (const Rel* rr = std::get_if<Rel>(&r)) {
    Rel res(src, rr->dst());
    for (std::size_t a = 0; a < src; ++a) {
      auto row = res.row(a);
      for (std::size_t k : index[a]) {
        if (k >= rr->src()) throw Error(ErrorKind::ShapeMismatch, "composition: middle carriers differ");
        auto other = rr->row(k);
        for (std::size_t w = 0; w < row.size(); ++w) row[w] |= other[w];
      }
    }
    return normalise(std::move(res), out);
  }
  const MRel& rm = std::get<MRel>(r);
  std::vector<MRel::Row> rows(src);
  for (std::size_t a = 0; a < src; ++a) {
    for (std::size_t k : index[a]) {
      if (k >= rm.src()) throw Error(ErrorKind::ShapeMismatch, "composition: middle carriers differ");
      rows[a].insert(rows[a].end(), rm.row(k).begin(), rm.row(k).end());
    }
  }
  return normalise(MRel(src, rm.dst(), std::move(rows)), out);
}

bool flag_holds(const Instance& v, Flag f) {
  return std::visit([&](const auto& x) { return satisfies(x, FlagSet(f)); }, v);
}

}  // namespace

bool Program::is_boolean() const { return nodes_.front().boolean; }
const RelType& Program::type() const { return nodes_.front().type; }

EvalResult Program::run(std::span<const Instance> slots) const {
  if (slots.size() != variables_.size()) {
    throw Error(ErrorKind::InvalidValue, "expected " + std::to_string(variables_.size()) + " values, got " +
                                             std::to_string(slots.size()));
  }
  return eval(0, slots);
}

const Program::Node& Program::node(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }

std::optional<std::pair<Instance, Instance>> Program::sides(std::span<const Instance> slots) const {
  return sides_of(0, slots);
}

std::optional<std::pair<Instance, Instance>> Program::sides_of(int index, std::span<const Instance> slots) const {
  const Node& root = node(index);
  const Sig sig = (root.op == Op::Var || root.op == Op::Const) ? Sig::None : info(root.op).sig;
  if (sig != Sig::CmpAny && sig != Sig::CmpInner) return std::nullopt;
  return std::make_pair(std::get<Instance>(eval(root.kids[0], slots)), std::get<Instance>(eval(root.kids[1], slots)));
}

EvalResult Program::eval(int index, std::span<const Instance> slots) const {
  const Node& n = nodes_[index];
  auto rel = [&](int k) { return std::get<Instance>(eval(n.kids[k], slots)); };
  auto truth = [&](int k) { return std::get<bool>(eval(n.kids[k], slots)); };
  auto kid_type = [&](int k) -> const RelType& { return nodes_[n.kids[k]].type; };
  auto mrel = [&](int k) { return as_mrel(rel(k), inner_count(kid_type(k))); };
  auto done = [&](Instance v) -> EvalResult { return normalise(std::move(v), n.type); };

  switch (n.op) {
    case Op::Var: return slots[n.slot];
    case Op::Const: return *n.constant;
    case Op::Cnv: return done(converse(as_rel(rel(0))));
    case Op::Cpl: {
      Instance v = rel(0);
      if (const MRel* m = std::get_if<MRel>(&v)) return done(complement(*m));
      return done(complement(std::get<Rel>(v)));
    }
    case Op::Icpl: return done(inner_complement(mrel(0)));
    case Op::Up: return done(up_closure(mrel(0)));
    case Op::Down: return done(down_closure(mrel(0)));
    case Op::Convex: return done(convex_closure(mrel(0)));
    case Op::Dual: return done(inner_dual(mrel(0)));
    case Op::Nu: return done(nonterminal(mrel(0)));
    case Op::Tau: return done(terminal(mrel(0)));
    case Op::Dom: return done(domain(as_rel(rel(0))));
    case Op::Lambda: return done(power_transpose(as_rel(rel(0))));
    case Op::Alpha: return done(alpha(mrel(0)));
    case Op::Pf: return done(image_functor(as_rel(rel(0))));
    case Op::Kl: return done(kleisli_lift(mrel(0)));
    case Op::Pl: return done(peleg_lift(mrel(0)));
    case Op::Do: return done(fusion(mrel(0)));
    case Op::Di: return done(fission(mrel(0)));
    case Op::Cfo: return done(cofusion(mrel(0)));
    case Op::Cfi: return done(cofission(mrel(0)));
    case Op::Dd: return done(closed_repr(ClosureMode::Down, mrel(0)));
    case Op::Du: return done(closed_repr(ClosureMode::Up, mrel(0)));
    case Op::Dunion: return done(d_union(mrel(0)));
    case Op::IUniv: return flag_holds(mrel(0), Flag::InnerUnivalent);
    case Op::ITot: return flag_holds(mrel(0), Flag::InnerTotal);
    case Op::IDet: return flag_holds(mrel(0), Flag::InnerDeterministic);
    case Op::UpC: return flag_holds(mrel(0), Flag::UpClosed);
    case Op::DownC: return flag_holds(mrel(0), Flag::DownClosed);
    case Op::UnionC: return flag_holds(mrel(0), Flag::UnionClosed);
    case Op::OUniv: return flag_holds(rel(0), Flag::OuterUnivalent);
    case Op::OTot: return flag_holds(rel(0), Flag::OuterTotal);
    case Op::ODet: return flag_holds(rel(0), Flag::OuterDeterministic);
    case Op::Seq: return compose_any(rel(0), rel(1), n.type);
    case Op::Peleg: return done(peleg_compose(mrel(0), mrel(1)));
    case Op::Kleisli: return done(kleisli_compose(mrel(0), mrel(1)));
    case Op::Odot: return done(odot(mrel(0), mrel(1)));
    case Op::Pego: return done(peleg_compose_oracle(mrel(0), mrel(1)));
    case Op::Icup: return done(inner_union(mrel(0), mrel(1)));
    case Op::Icap: return done(inner_intersection(mrel(0), mrel(1)));
    case Op::Inter:
    case Op::Union:
    case Op::Minus: {
      Instance l = rel(0);
      Instance r = rel(1);
      if (std::holds_alternative<MRel>(l)) {
        const MRel& a = std::get<MRel>(l);
        const MRel& b = std::get<MRel>(r);
        if (n.op == Op::Inter) return done(intersect(a, b));
        if (n.op == Op::Union) return done(unite(a, b));
        return done(minus(a, b));
      }
      const Rel& a = std::get<Rel>(l);
      const Rel& b = std::get<Rel>(r);
      if (n.op == Op::Inter) return done(intersect(a, b));
      if (n.op == Op::Union) return done(unite(a, b));
      return done(minus(a, b));
    }
    case Op::LRes: return done(left_residual(as_rel(rel(0)), as_rel(rel(1))));
    case Op::RRes: return done(right_residual(as_rel(rel(0)), as_rel(rel(1))));
    case Op::Syq: return done(symmetric_quotient(as_rel(rel(0)), as_rel(rel(1))));
    case Op::Eq: return rel(0) == rel(1);
    case Op::Le: {
      Instance l = rel(0);
      Instance r = rel(1);
      if (std::holds_alternative<MRel>(l)) return is_subset(std::get<MRel>(l), std::get<MRel>(r));
      return is_subset(std::get<Rel>(l), std::get<Rel>(r));
    }
    case Op::LeU: return smyth(mrel(0), mrel(1));
    case Op::LeD: return hoare(mrel(0), mrel(1));
    case Op::LeUD: {
      const MRel a = mrel(0);
      const MRel b = mrel(1);
      return smyth(a, b) && hoare(a, b);
    }
    case Op::EqU: {
      const MRel a = mrel(0);
      const MRel b = mrel(1);
      return smyth(a, b) && smyth(b, a);
    }
    case Op::EqD: {
      const MRel a = mrel(0);
      const MRel b = mrel(1);
      return hoare(a, b) && hoare(b, a);
    }
    case Op::EqUD: {
      const MRel a = mrel(0);
      const MRel b = mrel(1);
      return smyth(a, b) && hoare(a, b) && smyth(b, a) && hoare(b, a);
    }
    case Op::Not: return !truth(0);
    case Op::And: return truth(0) && truth(1);
    case Op::Or: return truth(0) || truth(1);
    case Op::Implies: return !truth(0) || truth(1);
    case Op::Iff: return truth(0) == truth(1);
  }
  throw Error(ErrorKind::InvalidValue, "unhandled operator");
}

// ============================================================== environments

TyPtr parse_type(std::string_view text, const std::map<std::string, std::size_t>& carriers) {
  const TypeExpr e = Parser(text).parse_type_all();
  TyPtr t;
  if (e.literal) {
    t = base_ty(*e.literal);
  } else if (auto it = carriers.find(e.name); it != carriers.end()) {
    t = base_ty(it->second);
  } else {
    throw Error(ErrorKind::UnboundVariable, "unknown carrier '" + e.name + "'");
  }
  for (int i = 0; i < e.pow; ++i) t = pow_ty(t);
  return t;
}

namespace {

TyPtr field_type(const Json& j, const char* key, const std::map<std::string, std::size_t>& carriers) {
  if (!j.contains(key)) throw Error(ErrorKind::InvalidValue, std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (v.is_string()) return parse_type(v.get<std::string>(), carriers);
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) return base_ty(v.get<std::size_t>());
  throw Error(ErrorKind::InvalidValue, std::string("field \"") + key + "\" must be a size or a carrier");
}

}  // namespace

Env env_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidValue, "environment must be a JSON object");
  Env env;
  if (j.contains("carriers")) {
    for (const auto& [name, v] : j.at("carriers").items()) {
      if (name == "P") throw Error(ErrorKind::InvalidValue, "'P' is reserved for powersets");
      std::size_t size;
      if (v.is_array()) {
        size = v.size();
        (void)Carrier(size, v.get<std::vector<std::string>>());  // validates distinct names
      } else if (v.is_object()) {
        size = v.at("size").get<std::size_t>();
      } else {
        size = v.get<std::size_t>();
      }
      env.carriers[name] = size;
    }
  }
  auto add = [&](const std::string& name, Binding b) {
    if (!env.values.emplace(name, std::move(b)).second) {
      throw Error(ErrorKind::InvalidValue, "duplicate binding '" + name + "'");
    }
  };
  if (j.contains("rels")) {
    for (const auto& [name, v] : j.at("rels").items()) {
      RelType t{field_type(v, "src", env.carriers), field_type(v, "dst", env.carriers)};
      Json raw = v;
      raw["src"] = ty_count(*t.src);
      raw["dst"] = ty_count(*t.dst);
      add(name, {t, normalise(rel_from_json(raw), t)});
    }
  }
  if (j.contains("mrels")) {
    for (const auto& [name, v] : j.at("mrels").items()) {
      RelType t{field_type(v, "src", env.carriers), nullptr};
      TyPtr base = field_type(v, "dst", env.carriers);
      Json raw = v;
      raw["src"] = ty_count(*t.src);
      raw["dst"] = ty_count(*base);
      t.dst = pow_ty(base);
      add(name, {t, normalise(mrel_from_json(raw), t)});
    }
  }
  return env;
}

EvalResult evaluate(std::string_view expr, const Env& env, const std::vector<std::size_t>& sizes) {
  TypeContext ctx;
  ctx.carriers = env.carriers;
  for (const auto& [name, b] : env.values) ctx.variables[name] = b.type;
  const TypedTerm typed = TypedTerm::infer(parse(expr), ctx);
  const Program prog = typed.instantiate(sizes);
  std::vector<Instance> slots;
  for (const auto& name : prog.variables()) slots.push_back(env.values.at(name).value);
  return prog.run(slots);
}

Json result_to_json(const EvalResult& r) {
  if (const bool* b = std::get_if<bool>(&r)) return *b;
  return to_json(std::get<Instance>(r));
}

}  // namespace multirel
