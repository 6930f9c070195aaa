#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "multirel/carrier.hpp"
#include "multirel/error.hpp"

namespace multirel {

/// A heterogeneous binary relation src <-> dst stored as a bit matrix. Row a
/// holds the image of a; rows are packed into 64-bit words and the padding
/// bits past dst are always zero.
class Rel {
 public:
  using Word = std::uint64_t;

  Rel() = default;
  Rel(std::size_t src, std::size_t dst);
  Rel(std::size_t src, std::size_t dst, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t src() const noexcept { return src_; }
  std::size_t dst() const noexcept { return dst_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t a, std::size_t b) const;
  void set(std::size_t a, std::size_t b, bool value = true);

  std::span<const Word> row(std::size_t a) const { return {bits_.data() + a * words_, words_}; }
  std::span<Word> row(std::size_t a) { return {bits_.data() + a * words_, words_}; }

  bool row_empty(std::size_t a) const;
  std::size_t row_count(std::size_t a) const;
  std::size_t count() const;
  bool empty() const;

  /// All pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  /// Clears the bits past dst in every row.
  void trim();

  friend bool operator==(const Rel&, const Rel&) = default;

 private:
  std::size_t src_ = 0;
  std::size_t dst_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

enum class RelConst { Identity, Empty, Universal };
enum class BoolOp { Union, Inter, Complement, Minus };
enum class ResidualSide { Left, Right };

struct RelFlags {
  bool univalent = false;
  bool total = false;
  bool deterministic = false;
  bool test = false;
  friend bool operator==(const RelFlags&, const RelFlags&) = default;
};

Rel rel_const(RelConst kind, std::size_t src, std::size_t dst);
Rel identity(std::size_t n);

Rel rel_bool(BoolOp op, const Rel& r, const Rel* s = nullptr);
Rel unite(const Rel& r, const Rel& s);
Rel intersect(const Rel& r, const Rel& s);
Rel complement(const Rel& r);
Rel minus(const Rel& r, const Rel& s);
bool is_subset(const Rel& r, const Rel& s);

Rel compose(const Rel& r, const Rel& s);
Rel converse(const Rel& r);

/// Left residual T / S = -(-T S˘), for T : X <-> Y and S : Z <-> Y; result X <-> Z.
Rel left_residual(const Rel& t, const Rel& s);
/// Right residual T \ S = -(T˘ (-S)), for T : Z <-> X and S : Z <-> Y; result X <-> Y.
Rel right_residual(const Rel& t, const Rel& s);
Rel residual(ResidualSide side, const Rel& t, const Rel& s);

/// Symmetric quotient of T : Z <-> X and S : Z <-> Y, a relation X <-> Y that
/// holds at (a, b) iff column a of T equals column b of S.
Rel symmetric_quotient(const Rel& t, const Rel& s);

Rel domain(const Rel& r);
RelFlags classify_rel(const Rel& r);

}  // namespace multirel
