#pragma once

#include <vector>

#include "mtp/finite_space.hpp"
#include "mtp/mt.hpp"

namespace mtp {

/// x is closed in some open neighbourhood: min_open(x) ∩ cl{x} = {x}.
bool is_locally_closed_point(const FinSpace& x, int p);
Mask locally_closed_points(const FinSpace& x);
/// Distinct points are separated by some open.
bool is_T0_space(const FinSpace& x);
bool is_TD_space(const FinSpace& x);

/// 𝒫X: atoms are the points, opens are ΩX. The empty space gives the
/// degenerate algebra.
MTAlgebra powerset_MT(const FinSpace& x);
/// 𝒫f = f⁻¹ : 𝒫Y → 𝒫X. Throws NotContinuous.
MTMorphism powerset_of_map(const ContMap& f, const MTRef& py, const MTRef& px);
MTMorphism powerset_of_map(const ContMap& f);

/// ε_X(x) = {x} as a map X → at 𝒫X.
ContMap epsilon(const SpaceRef& x);

/// sX = pt ΩX. Point i of sX is the prime open primes[i] of X (ascending
/// masks); its filter is the set of opens not below it.
struct Soberification {
  SpaceRef base;
  SpaceRef space;
  std::vector<Mask> primes;
  /// λ_X(x) = X ∖ cl{x}.
  ContMap lambda;

  int point_of(Mask prime) const;
};

Soberification soberify(const SpaceRef& x);
/// Every irreducible closed set is the closure of exactly one point.
bool is_sober(const FinSpace& x);
/// s h : sX → sY, sending the prime p to ⋃{V : h⁻¹(V) ⊆ p}.
ContMap sober_lift(const ContMap& h, const Soberification& sx, const Soberification& sy);

struct TDSubspace {
  SpaceRef space;
  /// i_D : X_D → X.
  ContMap inclusion;
};

TDSubspace td_subspace(const SpaceRef& x);

/// Locally closed points go to locally closed points. Throws NotContinuous.
Verdict is_locally_closed_map(const ContMap& f);

}  // namespace mtp
