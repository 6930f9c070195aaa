#pragma once

#include "multirel/mrel.hpp"

namespace multirel {

enum class DetMode { Fusion, Fission, Cofusion, Cofission };

/// fusion δ_o: a ↦ ⋃R(a) (always one pair, ∅ for an empty row)
/// fission δ_i: a ↦ {b} for each b ∈ ⋃R(a)
/// cofusion: ∁δ_o(∁R), i.e. a ↦ ⋂R(a), and Y for an empty row
/// cofission: ∁δ_i(∁R) = ↑R ∩ A⋒
MRel determinise(DetMode mode, const MRel& r);
MRel fusion(const MRel& r);
MRel fission(const MRel& r);
MRel cofusion(const MRel& r);
MRel cofission(const MRel& r);

/// Cofusion written with the meet ⋂ over each row directly (empty meet = Y).
MRel cofusion_by_meet(const MRel& r);

/// δ↓(R) = ↓δ_o(R), δ↑(R) = ↑δ_o(R).
MRel closed_repr(ClosureMode mode, const MRel& r);

struct OrderFlags {
  bool fix = false;   // R = f(R)
  bool pre = false;   // f(R) ≤ R
  bool post = false;  // R ≤ f(R)
  friend bool operator==(const OrderFlags&, const OrderFlags&) = default;
};

struct FixpointClass {
  // indexed by order: 0 = ⊆, 1 = ⊑↑, 2 = ⊑↓, 3 = ⊑↕ (Egli-Milner)
  OrderFlags fusion[4];
  OrderFlags fission[4];
  bool is_fix_fusion() const { return fusion[0].fix; }
  bool is_fix_fission() const { return fission[0].fix; }
};

FixpointClass fixpoint_class(const MRel& r);

}  // namespace multirel
