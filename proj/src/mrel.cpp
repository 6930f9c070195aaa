#include "multirel/mrel.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace multirel {

namespace {

void require_same_shape(const MRel& r, const MRel& s, const char* op) {
  if (r.src() != s.src() || r.dst() != s.dst()) {
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": " + std::to_string(r.src()) + "->P" +
                                              std::to_string(r.dst()) + " vs " + std::to_string(s.src()) + "->P" +
                                              std::to_string(s.dst()));
  }
}

void normalise(MRel::Row& row) {
  std::sort(row.begin(), row.end());
  row.erase(std::unique(row.begin(), row.end()), row.end());
}

bool row_has(const MRel::Row& row, Mask m) { return std::binary_search(row.begin(), row.end(), m); }

/// Dense membership table over all 2^dst masks, used by the closures.
std::vector<char> dense_row(const MRel::Row& row, std::size_t dst) {
  std::vector<char> in(powerset_size(dst), 0);
  for (Mask m : row) in[m] = 1;
  return in;
}

MRel::Row sparse_row(const std::vector<char>& in) {
  MRel::Row row;
  for (std::size_t m = 0; m < in.size(); ++m) {
    if (in[m]) row.push_back(m);
  }
  return row;
}

template <typename F>
MRel pairwise(const MRel& r, const MRel& s, const char* name, F combine) {
  require_same_shape(r, s, name);
  std::vector<MRel::Row> rows(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) {
    auto& out = rows[a];
    out.reserve(r.row(a).size() * s.row(a).size());
    for (Mask x : r.row(a)) {
      for (Mask y : s.row(a)) out.push_back(combine(x, y));
    }
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

template <typename F>
MRel merge_rows(const MRel& r, const MRel& s, const char* name, F set_op) {
  require_same_shape(r, s, name);
  std::vector<MRel::Row> rows(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) {
    set_op(r.row(a).begin(), r.row(a).end(), s.row(a).begin(), s.row(a).end(), std::back_inserter(rows[a]));
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

}  // namespace

MRel::MRel(std::size_t src, std::size_t dst) : src_(src), dst_(dst), rows_(src) {
  if (dst > kMaskCap) throw Error(ErrorKind::MaskTooWide, "multirelation target of size " + std::to_string(dst));
}

MRel::MRel(std::size_t src, std::size_t dst, std::vector<Row> rows) : src_(src), dst_(dst), rows_(std::move(rows)) {
  if (dst > kMaskCap) throw Error(ErrorKind::MaskTooWide, "multirelation target of size " + std::to_string(dst));
  if (rows_.size() != src_) {
    throw Error(ErrorKind::InvalidValue,
                "expected " + std::to_string(src_) + " rows, got " + std::to_string(rows_.size()));
  }
  const Mask full = full_mask(dst_);
  for (auto& row : rows_) {
    for (Mask m : row) {
      if ((m & ~full) != 0) throw Error(ErrorKind::InvalidValue, "subset mask outside target carrier");
    }
    normalise(row);
  }
}

bool MRel::contains(std::size_t a, Mask m) const { return row_has(rows_.at(a), m); }

void MRel::insert(std::size_t a, Mask m) {
  if ((m & ~full_mask(dst_)) != 0) throw Error(ErrorKind::InvalidValue, "subset mask outside target carrier");
  auto& row = rows_.at(a);
  auto it = std::lower_bound(row.begin(), row.end(), m);
  if (it == row.end() || *it != m) row.insert(it, m);
}

void MRel::erase(std::size_t a, Mask m) {
  auto& row = rows_.at(a);
  auto it = std::lower_bound(row.begin(), row.end(), m);
  if (it != row.end() && *it == m) row.erase(it);
}

std::size_t MRel::count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool MRel::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

std::vector<std::pair<std::size_t, Mask>> MRel::pairs() const {
  std::vector<std::pair<std::size_t, Mask>> out;
  for (std::size_t a = 0; a < src_; ++a) {
    for (Mask m : rows_[a]) out.emplace_back(a, m);
  }
  return out;
}

FlagSet FlagSet::expanded() const {
  FlagSet f = *this;
  if (has(Flag::OuterDeterministic)) f |= Flag::OuterTotal | Flag::OuterUnivalent;
  if (has(Flag::InnerDeterministic)) f |= Flag::InnerTotal | Flag::InnerUnivalent;
  if (f.has(Flag::OuterTotal) && f.has(Flag::OuterUnivalent)) f |= Flag::OuterDeterministic;
  if (f.has(Flag::InnerTotal) && f.has(Flag::InnerUnivalent)) f |= Flag::InnerDeterministic;
  return f;
}

namespace {

constexpr std::pair<Flag, const char*> kFlagNames[] = {
    {Flag::OuterTotal, "outer_total"},
    {Flag::OuterUnivalent, "outer_univalent"},
    {Flag::OuterDeterministic, "outer_deterministic"},
    {Flag::InnerTotal, "inner_total"},
    {Flag::InnerUnivalent, "inner_univalent"},
    {Flag::InnerDeterministic, "inner_deterministic"},
    {Flag::UpClosed, "up_closed"},
    {Flag::DownClosed, "down_closed"},
    {Flag::UnionClosed, "union_closed"},
};

}  // namespace

std::string to_string(Flag f) {
  for (auto [flag, name] : kFlagNames) {
    if (flag == f) return name;
  }
  return "?";
}

FlagSet parse_flags(const std::string& comma_separated) {
  FlagSet out;
  std::stringstream in(comma_separated);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    bool found = false;
    for (auto [flag, name] : kFlagNames) {
      if (item == name) {
        out |= flag;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::InvalidValue, "unknown property flag '" + item + "'");
  }
  return out;
}

std::string to_string(FlagSet flags) {
  std::string out;
  for (auto [flag, name] : kFlagNames) {
    if (flags.has(flag)) {
      if (!out.empty()) out += ",";
      out += name;
    }
  }
  return out;
}

FlagSet PropertyFlags::as_set() const {
  FlagSet f;
  if (outer_total) f |= Flag::OuterTotal;
  if (outer_univalent) f |= Flag::OuterUnivalent;
  if (outer_deterministic) f |= Flag::OuterDeterministic;
  if (inner_total) f |= Flag::InnerTotal;
  if (inner_univalent) f |= Flag::InnerUnivalent;
  if (inner_deterministic) f |= Flag::InnerDeterministic;
  if (up_closed) f |= Flag::UpClosed;
  if (down_closed) f |= Flag::DownClosed;
  if (union_closed) f |= Flag::UnionClosed;
  return f;
}

MRel unite(const MRel& r, const MRel& s) {
  return merge_rows(r, s, "union", [](auto... args) { return std::set_union(args...); });
}

MRel intersect(const MRel& r, const MRel& s) {
  return merge_rows(r, s, "intersection", [](auto... args) { return std::set_intersection(args...); });
}

MRel minus(const MRel& r, const MRel& s) {
  return merge_rows(r, s, "difference", [](auto... args) { return std::set_difference(args...); });
}

MRel complement(const MRel& r) {
  const std::size_t n = powerset_size(r.dst());
  std::vector<MRel::Row> rows(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) {
    const auto& row = r.row(a);
    std::size_t k = 0;
    for (Mask m = 0; m < n; ++m) {
      if (k < row.size() && row[k] == m) {
        ++k;
      } else {
        rows[a].push_back(m);
      }
    }
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

bool is_subset(const MRel& r, const MRel& s) {
  require_same_shape(r, s, "inclusion");
  for (std::size_t a = 0; a < r.src(); ++a) {
    if (!std::includes(s.row(a).begin(), s.row(a).end(), r.row(a).begin(), r.row(a).end())) return false;
  }
  return true;
}

Rel to_rel(const MRel& r) {
  Rel out(r.src(), powerset_size(r.dst()));
  for (auto [a, m] : r.pairs()) out.set(a, m);
  return out;
}

MRel from_rel(const Rel& r, std::size_t base) {
  if (base > kPowCap || r.dst() != (std::size_t{1} << base)) {
    throw Error(ErrorKind::ShapeMismatch, "relation with " + std::to_string(r.dst()) +
                                              " columns is not a powerset view of a " + std::to_string(base) +
                                              "-element carrier");
  }
  std::vector<MRel::Row> rows(r.src());
  for (auto [a, m] : r.pairs()) rows[a].push_back(m);
  return MRel(r.src(), base, std::move(rows));
}

MRel mrel_const(MRelConst kind, std::size_t src, std::size_t dst) {
  MRel out(src, dst);
  const Mask full = full_mask(dst);
  switch (kind) {
    case MRelConst::InnerUnit:
      for (std::size_t a = 0; a < src; ++a) out.insert(a, 0);
      break;
    case MRelConst::InnerCounit:
      for (std::size_t a = 0; a < src; ++a) out.insert(a, full);
      break;
    case MRelConst::Atoms:
      for (std::size_t a = 0; a < src; ++a) {
        for (std::size_t b = 0; b < dst; ++b) out.insert(a, singleton(b));
      }
      break;
    case MRelConst::Coatoms:
      for (std::size_t a = 0; a < src; ++a) {
        for (std::size_t b = 0; b < dst; ++b) out.insert(a, full & ~singleton(b));
      }
      break;
    case MRelConst::Empty: break;
    case MRelConst::Universal: return complement(out);
    case MRelConst::Eta:
      if (src != dst) {
        throw Error(ErrorKind::IdentityShapeMismatch,
                    "unit requested on " + std::to_string(src) + "->P" + std::to_string(dst));
      }
      for (std::size_t a = 0; a < src; ++a) out.insert(a, singleton(a));
      break;
  }
  return out;
}

MRel inner_bool(InnerOp op, const MRel& r, const MRel* s) {
  if (op == InnerOp::Complement) return inner_complement(r);
  if (s == nullptr) throw Error(ErrorKind::InvalidValue, "binary inner operation needs two operands");
  return op == InnerOp::Cup ? inner_union(r, *s) : inner_intersection(r, *s);
}

MRel inner_union(const MRel& r, const MRel& s) {
  return pairwise(r, s, "inner union", [](Mask x, Mask y) { return x | y; });
}

MRel inner_intersection(const MRel& r, const MRel& s) {
  return pairwise(r, s, "inner intersection", [](Mask x, Mask y) { return x & y; });
}

MRel inner_complement(const MRel& r) {
  const Mask full = full_mask(r.dst());
  std::vector<MRel::Row> rows(r.src());
  for (std::size_t a = 0; a < r.src(); ++a) {
    for (Mask m : r.row(a)) rows[a].push_back(full & ~m);
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

MRel inner_union_family(std::span<const MRel> family, std::size_t src, std::size_t dst) {
  MRel acc = mrel_const(MRelConst::InnerUnit, src, dst);
  for (const MRel& r : family) acc = inner_union(acc, r);
  return acc;
}

MRel up_closure(const MRel& r) {
  std::vector<MRel::Row> rows(r.src());
  const std::size_t n = powerset_size(r.dst());
  for (std::size_t a = 0; a < r.src(); ++a) {
    auto in = dense_row(r.row(a), r.dst());
    for (std::size_t b = 0; b < r.dst(); ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t m = 0; m < n; ++m) {
        if (!(m & bit) && in[m]) in[m | bit] = 1;
      }
    }
    rows[a] = sparse_row(in);
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

MRel down_closure(const MRel& r) {
  std::vector<MRel::Row> rows(r.src());
  const std::size_t n = powerset_size(r.dst());
  for (std::size_t a = 0; a < r.src(); ++a) {
    auto in = dense_row(r.row(a), r.dst());
    for (std::size_t b = 0; b < r.dst(); ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t m = 0; m < n; ++m) {
        if (!(m & bit) && in[m | bit]) in[m] = 1;
      }
    }
    rows[a] = sparse_row(in);
  }
  return MRel(r.src(), r.dst(), std::move(rows));
}

MRel convex_closure(const MRel& r) { return intersect(up_closure(r), down_closure(r)); }

MRel closure(ClosureMode mode, const MRel& r) {
  switch (mode) {
    case ClosureMode::Up: return up_closure(r);
    case ClosureMode::Down: return down_closure(r);
    case ClosureMode::Convex: return convex_closure(r);
  }
  return r;
}

bool smyth(const MRel& r, const MRel& s) {
  require_same_shape(r, s, "Smyth preorder");
  for (std::size_t a = 0; a < r.src(); ++a) {
    for (Mask m : s.row(a)) {
      const auto& lower = r.row(a);
      if (std::none_of(lower.begin(), lower.end(), [m](Mask x) { return mask_subset(x, m); })) return false;
    }
  }
  return true;
}

bool hoare(const MRel& r, const MRel& s) {
  require_same_shape(r, s, "Hoare preorder");
  for (std::size_t a = 0; a < r.src(); ++a) {
    for (Mask m : r.row(a)) {
      const auto& upper = s.row(a);
      if (std::none_of(upper.begin(), upper.end(), [m](Mask x) { return mask_subset(m, x); })) return false;
    }
  }
  return true;
}

bool preorder(Preorder mode, const MRel& r, const MRel& s) {
  switch (mode) {
    case Preorder::Smyth: return smyth(r, s);
    case Preorder::Hoare: return hoare(r, s);
    case Preorder::EgliMilner: return smyth(r, s) && hoare(r, s);
    case Preorder::EqUp: return smyth(r, s) && smyth(s, r);
    case Preorder::EqDown: return hoare(r, s) && hoare(s, r);
    case Preorder::EqUpDown: return smyth(r, s) && smyth(s, r) && hoare(r, s) && hoare(s, r);
  }
  return false;
}

PropertyFlags classify_mrel(const MRel& r) {
  PropertyFlags f;
  f.outer_total = f.outer_univalent = true;
  f.inner_total = f.inner_univalent = true;
  f.up_closed = f.down_closed = f.union_closed = true;
  for (std::size_t a = 0; a < r.src(); ++a) {
    const auto& row = r.row(a);
    if (row.empty()) f.outer_total = false;
    if (row.size() > 1) f.outer_univalent = false;
    for (Mask m : row) {
      if (m == 0) f.inner_total = false;
      if (mask_size(m) > 1) f.inner_univalent = false;
      for (std::size_t b = 0; b < r.dst(); ++b) {
        const Mask bit = singleton(b);
        if (f.up_closed && !(m & bit) && !row_has(row, m | bit)) f.up_closed = false;
        if (f.down_closed && (m & bit) && !row_has(row, m & ~bit)) f.down_closed = false;
      }
      if (f.union_closed) {
        for (Mask n : row) {
          if (!row_has(row, m | n)) {
            f.union_closed = false;
            break;
          }
        }
      }
    }
  }
  f.outer_deterministic = f.outer_total && f.outer_univalent;
  f.inner_deterministic = f.inner_total && f.inner_univalent;
  return f;
}

bool satisfies(const MRel& r, FlagSet required) {
  if (required.none()) return true;
  return classify_mrel(r).as_set().contains(required);
}

bool satisfies(const Rel& r, FlagSet required) {
  if (required.none()) return true;
  const RelFlags f = classify_rel(r);
  if (required.has(Flag::OuterTotal) && !f.total) return false;
  if (required.has(Flag::OuterUnivalent) && !f.univalent) return false;
  if (required.has(Flag::OuterDeterministic) && !f.deterministic) return false;
  constexpr unsigned kInner = static_cast<unsigned>(Flag::InnerTotal) | static_cast<unsigned>(Flag::InnerUnivalent) |
                              static_cast<unsigned>(Flag::InnerDeterministic) | static_cast<unsigned>(Flag::UpClosed) |
                              static_cast<unsigned>(Flag::DownClosed) | static_cast<unsigned>(Flag::UnionClosed);
  if ((required.bits() & kInner) != 0) {
    throw Error(ErrorKind::InvalidValue, "inner properties are not defined for plain relations");
  }
  return true;
}

TerminalSplit split_terminal(const MRel& r) {
  TerminalSplit out{MRel(r.src(), r.dst()), MRel(r.src(), r.dst())};
  for (auto [a, m] : r.pairs()) (m == 0 ? out.tau : out.nu).insert(a, m);
  return out;
}

MRel nonterminal(const MRel& r) { return split_terminal(r).nu; }
MRel terminal(const MRel& r) { return split_terminal(r).tau; }

MRel inner_dual(const MRel& r) { return complement(inner_complement(r)); }

}  // namespace multirel
