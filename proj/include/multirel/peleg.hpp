#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "multirel/mrel.hpp"
#include "multirel/rel.hpp"

namespace multirel {

/// A ⊆_d-part of a multirelation: one chosen mask per element of its domain.
struct DChoice {
  const MRel* base = nullptr;
  std::vector<std::size_t> domain;     // elements with a non-empty row, ascending
  std::vector<std::size_t> selection;  // index into base->row(domain[i])

  MRel materialise() const;
};

/// Visits every S ⊆_d R (univalent, same domain, S ⊆ R) in lexicographic
/// selection order, the first domain element varying slowest.
void for_each_d_subrelation(const MRel& r, const std::function<void(const DChoice&)>& visit,
                            std::uint64_t cap = kEnumCap);
std::vector<MRel> d_subrelations(const MRel& r, std::uint64_t cap = kEnumCap);

/// R_P : P X <-> P Y, A ↦ ⋃ α(R)(A).
Rel kleisli_lift(const MRel& r);

/// R_* : P X <-> P Y, A ↦ every ⋃_{a∈A} g(a) over choices g(a) ∈ R(a); rows
/// for sets A meeting an element with no sets are empty.
Rel peleg_lift(const MRel& r, std::uint64_t cap = kEnumCap);

/// Peleg composition R ∗ S by direct choice enumeration per pair (a, B).
MRel peleg_compose(const MRel& r, const MRel& s, std::uint64_t cap = kEnumCap);

/// R ∗ S assembled as R · dom(S)_* · ⋃_{T ⊆_d S} P(α(T)) over materialised
/// powerset relations. Independent of peleg_compose and used to check it.
MRel peleg_compose_oracle(const MRel& r, const MRel& s, std::uint64_t cap = kEnumCap);

/// Kleisli composition R ∘_P S = R S_P, row by row.
MRel kleisli_compose(const MRel& r, const MRel& s);

/// R ⊙ S = ∁(R ∗ ∁S).
MRel odot(const MRel& r, const MRel& s, std::uint64_t cap = kEnumCap);

/// Union of all ⊆_d-parts; equals R.
MRel d_union(const MRel& r, std::uint64_t cap = kEnumCap);

}  // namespace multirel
