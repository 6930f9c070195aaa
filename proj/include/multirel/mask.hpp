#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "multirel/carrier.hpp"
#include "multirel/error.hpp"

namespace multirel {

using Mask = std::uint64_t;

/// One element of P(Y): the bits index a carrier of the given width.
struct SubsetMask {
  Mask bits = 0;
  std::size_t width = 0;

  SubsetMask() = default;
  SubsetMask(Mask b, std::size_t w) : bits(b), width(w) {
    if (w > kMaskCap) throw Error(ErrorKind::MaskTooWide, "mask width " + std::to_string(w) + " exceeds cap");
    if (w < 64 && (b >> w) != 0) throw Error(ErrorKind::InvalidValue, "mask has bits beyond its width");
  }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
};

/// The mask of the whole carrier {0..n-1}.
inline Mask full_mask(std::size_t n) {
  if (n > kMaskCap) throw Error(ErrorKind::MaskTooWide, "carrier of size " + std::to_string(n) + " exceeds mask cap");
  return n == 0 ? Mask{0} : (~Mask{0} >> (64 - n));
}

inline Mask singleton(std::size_t b) { return Mask{1} << b; }

inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline int mask_size(Mask m) { return std::popcount(m); }

inline std::vector<std::size_t> mask_elements(Mask m) {
  std::vector<std::size_t> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

inline Mask mask_of(std::initializer_list<std::size_t> elems) {
  Mask m = 0;
  for (auto e : elems) m |= singleton(e);
  return m;
}

inline Mask mask_of(const std::vector<std::size_t>& elems) {
  Mask m = 0;
  for (auto e : elems) m |= singleton(e);
  return m;
}

}  // namespace multirel
