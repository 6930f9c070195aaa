#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multirel/mask.hpp"
#include "multirel/rel.hpp"

namespace multirel {

/// A multirelation X <-> P(Y). Row a is the sorted, duplicate-free list of
/// subset masks that a is related to; the canonical form makes equality and
/// serialisation structural.
class MRel {
 public:
  using Row = std::vector<Mask>;

  MRel() = default;
  MRel(std::size_t src, std::size_t dst);
  /// Rows are normalised (sorted, deduplicated) and range-checked.
  MRel(std::size_t src, std::size_t dst, std::vector<Row> rows);

  std::size_t src() const noexcept { return src_; }
  std::size_t dst() const noexcept { return dst_; }

  const Row& row(std::size_t a) const { return rows_.at(a); }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  bool contains(std::size_t a, Mask m) const;
  void insert(std::size_t a, Mask m);
  void erase(std::size_t a, Mask m);

  std::size_t count() const;
  bool empty() const;

  /// All pairs (a, mask) in row order.
  std::vector<std::pair<std::size_t, Mask>> pairs() const;

  friend bool operator==(const MRel&, const MRel&) = default;

 private:
  std::size_t src_ = 0;
  std::size_t dst_ = 0;
  std::vector<Row> rows_;
};

enum class MRelConst { InnerUnit, InnerCounit, Atoms, Coatoms, Empty, Universal, Eta };
enum class InnerOp { Cup, Cap, Complement };
enum class ClosureMode { Up, Down, Convex };
enum class Preorder { Smyth, Hoare, EgliMilner, EqUp, EqDown, EqUpDown };

/// Property flags as a bit set so generators and law side conditions can name
/// any combination of them.
enum class Flag : unsigned {
  OuterTotal = 1U << 0,
  OuterUnivalent = 1U << 1,
  OuterDeterministic = 1U << 2,
  InnerTotal = 1U << 3,
  InnerUnivalent = 1U << 4,
  InnerDeterministic = 1U << 5,
  UpClosed = 1U << 6,
  DownClosed = 1U << 7,
  UnionClosed = 1U << 8,
};

class FlagSet {
 public:
  constexpr FlagSet() = default;
  constexpr FlagSet(Flag f) : bits_(static_cast<unsigned>(f)) {}  // NOLINT(google-explicit-constructor)

  constexpr bool has(Flag f) const { return (bits_ & static_cast<unsigned>(f)) != 0; }
  constexpr bool contains(FlagSet other) const { return (bits_ & other.bits_) == other.bits_; }
  constexpr bool none() const { return bits_ == 0; }
  constexpr unsigned bits() const { return bits_; }
  constexpr FlagSet& operator|=(FlagSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr FlagSet operator|(FlagSet a, FlagSet b) { return a |= b; }
  friend constexpr bool operator==(FlagSet, FlagSet) = default;

  /// Adds the flags implied by the given ones (deterministic = total and univalent).
  FlagSet expanded() const;

 private:
  unsigned bits_ = 0;
};

constexpr FlagSet operator|(Flag a, Flag b) { return FlagSet(a) | FlagSet(b); }

std::string to_string(Flag f);
FlagSet parse_flags(const std::string& comma_separated);
std::string to_string(FlagSet flags);

struct PropertyFlags {
  bool outer_total = false;
  bool outer_univalent = false;
  bool outer_deterministic = false;
  bool inner_total = false;
  bool inner_univalent = false;
  bool inner_deterministic = false;
  bool up_closed = false;
  bool down_closed = false;
  bool union_closed = false;

  FlagSet as_set() const;
  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

// Outer (relational) boolean structure. Complement ranges over all 2^dst masks.
MRel unite(const MRel& r, const MRel& s);
MRel intersect(const MRel& r, const MRel& s);
MRel minus(const MRel& r, const MRel& s);
MRel complement(const MRel& r);
bool is_subset(const MRel& r, const MRel& s);

/// The multirelation as a Rel src <-> P(dst), columns in numeric mask order.
Rel to_rel(const MRel& r);
/// Inverse of to_rel; r.dst() must equal 2^base.
MRel from_rel(const Rel& r, std::size_t base);

MRel mrel_const(MRelConst kind, std::size_t src, std::size_t dst);

MRel inner_bool(InnerOp op, const MRel& r, const MRel* s = nullptr);
MRel inner_union(const MRel& r, const MRel& s);
MRel inner_intersection(const MRel& r, const MRel& s);
MRel inner_complement(const MRel& r);
/// Big inner union; the empty family yields the inner unit of the given shape.
MRel inner_union_family(std::span<const MRel> family, std::size_t src, std::size_t dst);

MRel closure(ClosureMode mode, const MRel& r);
MRel up_closure(const MRel& r);
MRel down_closure(const MRel& r);
MRel convex_closure(const MRel& r);

bool preorder(Preorder mode, const MRel& r, const MRel& s);
/// r ⊑↑ s, i.e. s ⊆ ↑r.
bool smyth(const MRel& r, const MRel& s);
/// r ⊑↓ s, i.e. r ⊆ ↓s.
bool hoare(const MRel& r, const MRel& s);

PropertyFlags classify_mrel(const MRel& r);
bool satisfies(const MRel& r, FlagSet required);
bool satisfies(const Rel& r, FlagSet required);

struct TerminalSplit {
  MRel nu;   // pairs with a non-empty set
  MRel tau;  // pairs with the empty set
};
TerminalSplit split_terminal(const MRel& r);
MRel nonterminal(const MRel& r);
MRel terminal(const MRel& r);

/// ∂R = -∁R.
MRel inner_dual(const MRel& r);

}  // namespace multirel
