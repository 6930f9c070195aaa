#pragma once

#include <cstddef>
#include <variant>

#include "multirel/mrel.hpp"
#include "multirel/rel.hpp"

namespace multirel {

// Powerset carriers are materialised in numeric mask order: subset A of a
// carrier is element number A of P(carrier).

/// ∈_Y : Y <-> P Y. The has-element relation ∋ is its converse.
Rel member_rel(std::size_t y);

/// Λ(R) = {(a, R(a))}, always outer deterministic.
MRel power_transpose(const Rel& r);

/// α(M) = {(a, b) | b ∈ ⋃ M(a)}.
Rel alpha(const MRel& m);

/// P(R) : P X <-> P Y, A ↦ R(A).
Rel image_functor(const Rel& r);

/// η_X as a multirelation, a ↦ {a}.
MRel eta(std::size_t x);
/// μ_X : P²X <-> P X, 𝒜 ↦ ⋃𝒜. Needs 2^x ≤ POW_CAP, i.e. x ≤ 4.
Rel mu(std::size_t x);
/// Ω_X : P X <-> P X, the subset order.
Rel omega(std::size_t x);
/// C_X : P X <-> P X, A ↦ X - A.
Rel complementation(std::size_t x);

enum class MonadConst { Eta, Mu, Omega, CComp };
std::variant<Rel, MRel> monad_const(MonadConst kind, std::size_t x);

}  // namespace multirel
