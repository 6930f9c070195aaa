#include "multirel/rel.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace multirel {

Carrier::Carrier(std::size_t size, std::vector<std::string> names) : size_(size), names_(std::move(names)) {
  if (!names_.empty()) {
    if (names_.size() != size_) {
      throw Error(ErrorKind::InvalidValue, "carrier of size " + std::to_string(size_) + " given " +
                                               std::to_string(names_.size()) + " names");
    }
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw Error(ErrorKind::InvalidValue, "carrier names must be distinct");
  }
}

std::string Carrier::label(std::size_t i) const { return names_.empty() ? std::to_string(i) : names_.at(i); }

std::size_t powerset_size(std::size_t n) {
  if (n > kPowCap) {
    throw Error(ErrorKind::PowersetTooLarge,
                "powerset of a " + std::to_string(n) + "-element carrier exceeds the cap of " + std::to_string(kPowCap));
  }
  return std::size_t{1} << n;
}

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void require_same_shape(const Rel& r, const Rel& s, const char* op) {
  if (r.src() != s.src() || r.dst() != s.dst()) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": " + std::to_string(r.src()) + "x" +
                                              std::to_string(r.dst()) + " vs " + std::to_string(s.src()) + "x" +
                                              std::to_string(s.dst()));
  }
}

}  // namespace

Rel::Rel(std::size_t src, std::size_t dst)
    : src_(src), dst_(dst), words_(words_for(dst)), bits_(src * words_for(dst), 0) {}

Rel::Rel(std::size_t src, std::size_t dst, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : Rel(src, dst) {
  for (auto [a, b] : pairs) set(a, b);
}

bool Rel::test(std::size_t a, std::size_t b) const {
  if (a >= src_ || b >= dst_) throw Error(ErrorKind::InvalidValue, "pair index out of range");
  return (bits_[a * words_ + b / kWordBits] >> (b % kWordBits)) & 1U;
}

void Rel::set(std::size_t a, std::size_t b, bool value) {
  if (a >= src_ || b >= dst_) {
    throw Error(ErrorKind::InvalidValue, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") outside " + std::to_string(src_) + "x" + std::to_string(dst_));
  }
  Word& w = bits_[a * words_ + b / kWordBits];
  const Word bit = Word{1} << (b % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

bool Rel::row_empty(std::size_t a) const {
  auto r = row(a);
  return std::all_of(r.begin(), r.end(), [](Word w) { return w == 0; });
}

std::size_t Rel::row_count(std::size_t a) const {
  std::size_t n = 0;
  for (Word w : row(a)) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t Rel::count() const {
  std::size_t n = 0;
  for (Word w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Rel::empty() const {
  return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < src_; ++a) {
    auto r = row(a);
    for (std::size_t w = 0; w < words_; ++w) {
      for (Word bits = r[w]; bits != 0; bits &= bits - 1) {
        out.emplace_back(a, w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }
  return out;
}

void Rel::trim() {
  if (dst_ % kWordBits == 0 || words_ == 0) return;
  const Word keep = (Word{1} << (dst_ % kWordBits)) - 1;
  for (std::size_t a = 0; a < src_; ++a) bits_[a * words_ + words_ - 1] &= keep;
}

Rel rel_const(RelConst kind, std::size_t src, std::size_t dst) {
  switch (kind) {
    case RelConst::Identity: {
      if (src != dst) {
        throw Error(ErrorKind::IdentityShapeMismatch,
                    "identity requested on " + std::to_string(src) + "x" + std::to_string(dst));
      }
      return identity(src);
    }
    case RelConst::Empty: return Rel(src, dst);
    case RelConst::Universal: return complement(Rel(src, dst));
  }
  return Rel(src, dst);
}

Rel identity(std::size_t n) {
  Rel r(n, n);
  for (std::size_t a = 0; a < n; ++a) r.set(a, a);
  return r;
}

Rel rel_bool(BoolOp op, const Rel& r, const Rel* s) {
  if (op == BoolOp::Complement) return complement(r);
  if (s == nullptr) throw Error(ErrorKind::InvalidValue, "binary boolean operation needs two operands");
  switch (op) {
    case BoolOp::Union: return unite(r, *s);
    case BoolOp::Inter: return intersect(r, *s);
    case BoolOp::Minus: return minus(r, *s);
    case BoolOp::Complement: break;
  }
  return complement(r);
}

namespace {

template <typename F>
Rel zip_words(const Rel& r, const Rel& s, const char* name, F f) {
  require_same_shape(r, s, name);
  Rel out(r.src(), r.dst());
  for (std::size_t a = 0; a < r.src(); ++a) {
    auto x = r.row(a);
    auto y = s.row(a);
    auto z = out.row(a);
    for (std::size_t w = 0; w < z.size(); ++w) z[w] = f(x[w], y[w]);
  }
  return out;
}

}  // namespace

Rel unite(const Rel& r, const Rel& s) {
  return zip_words(r, s, "union", [](Rel::Word x, Rel::Word y) { return x | y; });
}

Rel intersect(const Rel& r, const Rel& s) {
  return zip_words(r, s, "intersection", [](Rel::Word x, Rel::Word y) { return x & y; });
}

Rel minus(const Rel& r, const Rel& s) {
  return zip_words(r, s, "difference", [](Rel::Word x, Rel::Word y) { return x & ~y; });
}

Rel complement(const Rel& r) {
  Rel out(r.src(), r.dst());
  for (std::size_t a = 0; a < r.src(); ++a) {
    auto x = r.row(a);
    auto z = out.row(a);
    for (std::size_t w = 0; w < z.size(); ++w) z[w] = ~x[w];
  }
  out.trim();
  return out;
}

bool is_subset(const Rel& r, const Rel& s) {
  require_same_shape(r, s, "inclusion");
  for (std::size_t a = 0; a < r.src(); ++a) {
    auto x = r.row(a);
    auto y = s.row(a);
    for (std::size_t w = 0; w < x.size(); ++w) {
      if ((x[w] & ~y[w]) != 0) return false;
    }
  }
  return true;
}

Rel compose(const Rel& r, const Rel& s) {
  if (r.dst() != s.src()) {
    throw Error(ErrorKind::ShapeMismatch, "composition of " + std::to_string(r.src()) + "x" +
                                              std::to_string(r.dst()) + " with " + std::to_string(s.src()) + "x" +
                                              std::to_string(s.dst()));
  }
  Rel out(r.src(), s.dst());
  for (std::size_t a = 0; a < r.src(); ++a) {
    auto x = r.row(a);
    auto z = out.row(a);
    for (std::size_t w = 0; w < x.size(); ++w) {
      for (Rel::Word bits = x[w]; bits != 0; bits &= bits - 1) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        auto y = s.row(b);
        for (std::size_t v = 0; v < z.size(); ++v) z[v] |= y[v];
      }
    }
  }
  return out;
}

Rel converse(const Rel& r) {
  Rel out(r.dst(), r.src());
  for (auto [a, b] : r.pairs()) out.set(b, a);
  return out;
}

Rel left_residual(const Rel& t, const Rel& s) {
  if (t.dst() != s.dst()) throw Error(ErrorKind::ShapeMismatch, "left residual T/S needs T and S with equal targets");
  return complement(compose(complement(t), converse(s)));
}

Rel right_residual(const Rel& t, const Rel& s) {
  if (t.src() != s.src()) throw Error(ErrorKind::ShapeMismatch, "right residual T\\S needs T and S with equal sources");
  return complement(compose(converse(t), complement(s)));
}

Rel residual(ResidualSide side, const Rel& t, const Rel& s) {
  return side == ResidualSide::Left ? left_residual(t, s) : right_residual(t, s);
}

Rel symmetric_quotient(const Rel& t, const Rel& s) {
  if (t.src() != s.src()) {
    throw Error(ErrorKind::ShapeMismatch, "symmetric quotient needs T and S with equal sources");
  }
  const Rel tc = converse(t);
  const Rel sc = converse(s);
  Rel out(t.dst(), s.dst());
  for (std::size_t a = 0; a < tc.src(); ++a) {
    auto x = tc.row(a);
    for (std::size_t b = 0; b < sc.src(); ++b) {
      auto y = sc.row(b);
      if (std::equal(x.begin(), x.end(), y.begin())) out.set(a, b);
    }
  }
  return out;
}

Rel domain(const Rel& r) {
  Rel out(r.src(), r.src());
  for (std::size_t a = 0; a < r.src(); ++a) {
    if (!r.row_empty(a)) out.set(a, a);
  }
  return out;
}

RelFlags classify_rel(const Rel& r) {
  RelFlags f;
  f.univalent = true;
  f.total = true;
  for (std::size_t a = 0; a < r.src(); ++a) {
    const std::size_t n = r.row_count(a);
    if (n > 1) f.univalent = false;
    if (n == 0) f.total = false;
  }
  f.deterministic = f.univalent && f.total;
  f.test = r.src() == r.dst() && is_subset(r, identity(r.src()));
  return f;
}

}  // namespace multirel
