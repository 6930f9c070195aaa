#include "multirel/generate.hpp"

#include <bit>
#include <limits>
#include <random>

namespace multirel {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr int kSampleAttempts = 64;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

bool bernoulli(std::mt19937_64& rng, double p) {
  // top 53 bits as a uniform double in [0, 1)
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

constexpr unsigned kRejectionBits = static_cast<unsigned>(Flag::UpClosed) | static_cast<unsigned>(Flag::DownClosed) |
                                    static_cast<unsigned>(Flag::UnionClosed);

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t slot, std::uint64_t attempt) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ index);
  h = splitmix64(h ^ (slot * 0x100000001b3ULL));
  return splitmix64(h ^ (attempt << 32));
}

InstanceSpace::InstanceSpace(GenKind kind, std::size_t src, std::size_t dst, FlagSet filter)
    : kind_(kind), src_(src), dst_(dst), filter_(filter) {
  const FlagSet f = filter.expanded();
  const bool inner_total = f.has(Flag::InnerTotal);
  const bool inner_univalent = f.has(Flag::InnerUnivalent);
  if (kind == GenKind::Rel) {
    if (f.has(Flag::InnerTotal) || f.has(Flag::InnerUnivalent) || (f.bits() & kRejectionBits) != 0) {
      throw Error(ErrorKind::InvalidValue, "filter " + to_string(filter) + " does not apply to relations");
    }
    for (std::size_t b = 0; b < dst; ++b) atoms_.push_back(b);  // column numbers
  } else {
    if (dst > kMaskCap) throw Error(ErrorKind::MaskTooWide, "multirelation target of size " + std::to_string(dst));
    if (inner_univalent) {
      if (!inner_total) atoms_.push_back(0);
      for (std::size_t b = 0; b < dst; ++b) atoms_.push_back(singleton(b));
    } else {
      const std::size_t n = powerset_size(dst);
      for (std::size_t m = inner_total ? 1 : 0; m < n; ++m) atoms_.push_back(m);
    }
  }
  const bool total = f.has(Flag::OuterTotal);
  const bool univalent = f.has(Flag::OuterUnivalent);
  const std::uint64_t k = atoms_.size();
  if (total && univalent) {
    row_kind_ = RowKind::Deterministic;
    row_options_ = k;
  } else if (univalent) {
    row_kind_ = RowKind::Univalent;
    row_options_ = k + 1;
  } else if (total) {
    row_kind_ = RowKind::Total;
    row_options_ = k >= 64 ? kSaturated : (std::uint64_t{1} << k) - 1;
  } else {
    row_kind_ = RowKind::Any;
    row_options_ = k >= 64 ? kSaturated : std::uint64_t{1} << k;
  }
  rejection_ = FlagSet();
  for (Flag g : {Flag::UpClosed, Flag::DownClosed, Flag::UnionClosed}) {
    if (f.has(g)) rejection_ |= g;
  }
  raw_count_ = 1;
  for (std::size_t a = 0; a < src; ++a) raw_count_ = sat_mul(raw_count_, row_options_);
}

void InstanceSpace::require_enumerable(std::uint64_t cap) const {
  if (raw_count_ > cap) {
    throw Error(ErrorKind::EnumerationTooLarge,
                "exhaustive space " + std::to_string(src_) + "x" + std::to_string(dst_) + " has " +
                    (raw_count_ == kSaturated ? std::string("over 2^64") : std::to_string(raw_count_)) +
                    " instances, cap " + std::to_string(cap));
  }
}

std::vector<Mask> InstanceSpace::row_from_option(std::uint64_t option) const {
  std::vector<Mask> row;
  switch (row_kind_) {
    case RowKind::Total: ++option; [[fallthrough]];
    case RowKind::Any:
      while (option != 0) {
        row.push_back(atoms_[static_cast<std::size_t>(std::countr_zero(option))]);
        option &= option - 1;
      }
      break;
    case RowKind::Univalent:
      if (option != 0) row.push_back(atoms_[option - 1]);
      break;
    case RowKind::Deterministic: row.push_back(atoms_[option]); break;
  }
  return row;
}

Instance InstanceSpace::build(const std::vector<std::vector<Mask>>& rows) const {
  if (kind_ == GenKind::MRel) return MRel(src_, dst_, rows);
  Rel out(src_, dst_);
  for (std::size_t a = 0; a < src_; ++a) {
    for (Mask b : rows[a]) out.set(a, b);
  }
  return out;
}

bool InstanceSpace::accepts(const Instance& value) const {
  if (rejection_.none()) return true;
  return std::visit([&](const auto& v) { return satisfies(v, rejection_); }, value);
}

std::optional<Instance> InstanceSpace::at(std::uint64_t index) const {
  std::vector<std::vector<Mask>> rows(src_);
  for (std::size_t a = 0; a < src_; ++a) {
    rows[a] = row_from_option(index % row_options_);
    index /= row_options_;
  }
  Instance value = build(rows);
  if (!accepts(value)) return std::nullopt;
  return value;
}

std::optional<Instance> InstanceSpace::sample(std::uint64_t seed, std::uint64_t index, std::uint64_t slot,
                                              double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidValue, "density must lie in [0,1]");
  if (src_ > 0 && atoms_.empty() && (row_kind_ == RowKind::Deterministic || row_kind_ == RowKind::Total)) {
    return std::nullopt;
  }
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    std::mt19937_64 rng(derive_seed(seed, index, slot, static_cast<std::uint64_t>(attempt)));
    std::vector<std::vector<Mask>> rows(src_);
    for (std::size_t a = 0; a < src_; ++a) {
      auto& row = rows[a];
      switch (row_kind_) {
        case RowKind::Any:
        case RowKind::Total:
          for (Mask m : atoms_) {
            if (bernoulli(rng, p)) row.push_back(m);
          }
          if (row_kind_ == RowKind::Total && row.empty()) row.push_back(atoms_[uniform_index(rng, atoms_.size())]);
          break;
        case RowKind::Univalent:
          if (!atoms_.empty() && bernoulli(rng, p)) row.push_back(atoms_[uniform_index(rng, atoms_.size())]);
          break;
        case RowKind::Deterministic: row.push_back(atoms_[uniform_index(rng, atoms_.size())]); break;
      }
    }
    Instance value = build(rows);
    if (accepts(value)) return value;
  }
  return std::nullopt;
}

void enumerate(GenKind kind, const GenSpec& spec, const std::function<void(const Instance&)>& visit) {
  InstanceSpace space(kind, spec.src, spec.dst, spec.filter);
  if (spec.mode == GenMode::Exhaustive) {
    space.require_enumerable();
    for (std::uint64_t i = 0; i < space.raw_count(); ++i) {
      if (auto v = space.at(i)) visit(*v);
    }
    return;
  }
  for (std::uint64_t i = 0; i < spec.count; ++i) {
    if (auto v = space.sample(spec.seed, i, 0, spec.density)) visit(*v);
  }
}

std::uint64_t count_matching(GenKind kind, const GenSpec& spec) {
  if (spec.mode == GenMode::Exhaustive) {
    InstanceSpace space(kind, spec.src, spec.dst, spec.filter);
    space.require_enumerable();
    if ((spec.filter.expanded().bits() & kRejectionBits) == 0) return space.raw_count();
  }
  std::uint64_t n = 0;
  enumerate(kind, spec, [&](const Instance&) { ++n; });
  return n;
}

}  // namespace multirel
