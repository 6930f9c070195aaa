#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "multirel/mrel.hpp"
#include "multirel/rel.hpp"

namespace multirel {

using Instance = std::variant<Rel, MRel>;

enum class GenKind { Rel, MRel };
enum class GenMode { Exhaustive, Random };

/// Exhaustive enumeration refuses spaces above this many raw instances.
inline constexpr std::uint64_t kExhaustiveCap = std::uint64_t{1} << 24;

struct GenSpec {
  std::size_t src = 0;
  std::size_t dst = 0;
  GenMode mode = GenMode::Exhaustive;
  std::uint64_t count = 0;  // random mode
  double density = 0.5;     // random mode
  std::uint64_t seed = 0;   // random mode
  FlagSet filter;
};

/// SplitMix64 finaliser; also used to derive independent per-instance seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t slot, std::uint64_t attempt = 0);

/// One generator slot. Flags with a constructive form (outer/inner total,
/// univalent, deterministic) shape the space itself; the closure flags are
/// enforced by rejection.
class InstanceSpace {
 public:
  InstanceSpace(GenKind kind, std::size_t src, std::size_t dst, FlagSet filter = {});

  GenKind kind() const { return kind_; }
  std::size_t src() const { return src_; }
  std::size_t dst() const { return dst_; }
  FlagSet filter() const { return filter_; }

  /// Size of the constructive space before rejection; saturates at UINT64_MAX.
  std::uint64_t raw_count() const { return raw_count_; }
  /// Throws EnumerationTooLarge if raw_count() exceeds the cap.
  void require_enumerable(std::uint64_t cap = kExhaustiveCap) const;

  /// Instance number `index` in encoding order (row 0 least significant), or
  /// nothing if it fails a rejection flag.
  std::optional<Instance> at(std::uint64_t index) const;

  /// Seeded random instance; each allowed pair is kept with probability p.
  /// Retries a bounded number of times against rejection flags.
  std::optional<Instance> sample(std::uint64_t seed, std::uint64_t index, std::uint64_t slot, double p) const;

  bool accepts(const Instance& value) const;

 private:
  enum class RowKind { Any, Total, Univalent, Deterministic };

  std::vector<Mask> row_from_option(std::uint64_t option) const;
  Instance build(const std::vector<std::vector<Mask>>& rows) const;

  GenKind kind_;
  std::size_t src_;
  std::size_t dst_;
  FlagSet filter_;
  FlagSet rejection_;
  RowKind row_kind_ = RowKind::Any;
  std::vector<Mask> atoms_;  // allowed masks (MRel) or columns as singletons (Rel)
  std::uint64_t row_options_ = 0;
  std::uint64_t raw_count_ = 0;
};

/// Streams every instance of the spec (exhaustive or random) to `visit`.
void enumerate(GenKind kind, const GenSpec& spec, const std::function<void(const Instance&)>& visit);
std::uint64_t count_matching(GenKind kind, const GenSpec& spec);

}  // namespace multirel
