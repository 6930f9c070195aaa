#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace multirel {

/// Widest carrier a subset mask may index (one machine word, two bits spare).
inline constexpr std::size_t kMaskCap = 62;
/// Largest carrier whose powerset is materialised as the rows or columns of a Rel.
inline constexpr std::size_t kPowCap = 16;
/// Bound on choice-function enumeration work (Peleg lifting and composition).
inline constexpr std::uint64_t kEnumCap = std::uint64_t{1} << 20;

/// A finite set {0, ..., size-1}. Names are display labels only.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::size_t size) : size_(size) {}
  Carrier(std::size_t size, std::vector<std::string> names);

  std::size_t size() const noexcept { return size_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has_names() const noexcept { return !names_.empty(); }

  /// Display label of element i: its name if present, otherwise the index.
  std::string label(std::size_t i) const;

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.size_ == b.size_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::string> names_;
};

/// 2^n, rejecting n beyond the materialisation cap.
std::size_t powerset_size(std::size_t n);

}  // namespace multirel
