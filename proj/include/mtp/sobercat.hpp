#pragma once

#include <optional>
#include <vector>

#include "mtp/envelope.hpp"
#include "mtp/proximity.hpp"
#include "mtp/space.hpp"

namespace mtp {

/// f : X ⤳ Y, a continuous map from X into sY.
struct SoberMap {
  SpaceRef source;
  Soberification target;  // target.base is Y
  ContMap carrier;

  const SpaceRef& target_space() const { return target.base; }

  friend bool operator==(const SoberMap& a, const SoberMap& b) {
    return *a.source == *b.source && *a.target.base == *b.target.base && a.carrier.map == b.carrier.map;
  }
};

/// Throws NotContinuous, or SourceTargetMismatch when the carrier does not land in sY.
SoberMap make_sober_map(const SpaceRef& x, const Soberification& sy, std::vector<int> map);
/// λ_X as the identity X ⤳ X.
SoberMap lambda_map(const SpaceRef& x);
/// Λf = λ_Y ∘ f.
SoberMap Lambda(const ContMap& f);
/// Every sober map X ⤳ Y. Throws TooLarge above the candidate guard.
std::vector<SoberMap> enumerate_sober_maps(const SpaceRef& x, const SpaceRef& y);

/// s f : sX → sY, read back through λ_{sY}⁻¹.
ContMap sober_extension(const SoberMap& f);
/// g • f = λ_{sZ}⁻¹ ∘ s(g) ∘ f. Throws SourceTargetMismatch.
SoberMap sober_compose(const SoberMap& g, const SoberMap& f);
/// The inverse g = (s f)⁻¹ ∘ λ_Y when s f is a homeomorphism.
std::optional<SoberMap> sober_inverse(const SoberMap& f);
inline bool sober_iso(const SoberMap& f) { return sober_inverse(f).has_value(); }

struct LiftH {
  SpaceRef space;
  /// h_X : 𝒫X → 𝒫sX, a proximity isomorphism.
  ProxMap table;
};

/// The lift of Ω(λ_X)⁻¹, built as ζ ⋆ ℱΩ(λ_X)⁻¹ ⋆ φ and compared with the
/// closed form on locally closed elements. Throws InternalInconsistency.
LiftH lift_h(const SpaceRef& x);

/// 𝒫ˢf = 𝒫f ∘ h_Y : 𝒫Y → 𝒫X. Checked on opens against U ↦ {x : U ∈ f(x)}.
ProxMap Pp(const SoberMap& f);
ProxMap Pp(const SoberMap& f, const LiftH& hy);

/// atˢf : at N ⤳ at M, y ↦ {a ∈ 𝒪M : y ≤ f(a)}. Also computed as
/// ψ ∘ pt(𝒪f) ∘ θ and compared. Throws NotProximityMorphism.
SoberMap ats(const ProxMap& f);

/// ε̂_X = λ_{at𝒫X} ∘ ε_X : X ⤳ at 𝒫X.
SoberMap epsilon_hat(const SpaceRef& x);
/// η̂_M = η_M ∘ 1_M : M → 𝒫 at M.
ProxMap eta_hat(const MTRef& m);

/// atˢ𝒫ˢf • ε̂_X = ε̂_Y • f.
Verdict epsilon_hat_natural(const SoberMap& f);
/// 𝒫ˢatˢg ⋆ η̂_M = η̂_N ⋆ g.
Verdict eta_hat_natural(const ProxMap& g);
/// atˢ𝒫ˢf and at𝒫f agree pointwise.
Verdict ats_Pp_agrees(const SoberMap& f);

}  // namespace mtp
