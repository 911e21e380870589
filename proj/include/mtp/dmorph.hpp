#pragma once

#include <vector>

#include "mtp/mt.hpp"
#include "mtp/space.hpp"

namespace mtp {

struct DMorphismReport {
  bool is_D = true;
  /// Locally closed atoms of the target whose image under f* is not a
  /// locally closed atom of the source.
  std::vector<int> witnesses;
};

/// f* sends locally closed atoms to locally closed atoms. Throws NotMTMorphism.
DMorphismReport is_D_morphism_MT(const MTMorphism& f);

struct DCrossCheck {
  bool mt_side;
  bool frame_side;
  /// (𝒪f)⁻¹(↑x ∩ 𝒪N) = ↑f*(x) ∩ 𝒪M for every atom x of N.
  bool filters_match;
  bool agree() const { return mt_side == frame_side && filters_match; }
};

/// The D-property computed on f and on 𝒪f. Throws NotT0 unless both algebras
/// are T0; NotMTMorphism.
DCrossCheck cross_check_D(const MTMorphism& f);

/// χ_M : M → 𝒫 at_D M, a ↦ {locally closed atoms below a}. Bit i of the
/// target stands for the i-th locally closed atom of M; the target's opens
/// are χ_M[𝒪M]. With no locally closed atoms the target is degenerate.
MTMorphism chi(const MTRef& m);

struct Reflection {
  /// f̂ : 𝒫 at_D M → N with f̂ ∘ χ_M = f.
  MTMorphism hat;
  /// No other MT-morphism closes the triangle.
  bool unique;
};

/// f̂(S) = ⋁{f(x) : x ∈ S}. Throws NotD; TargetNotTD; NotMTMorphism.
Reflection reflect(const MTMorphism& f);

struct Coreflection {
  /// f̂ : Y → X_D with i_D ∘ f̂ = f.
  ContMap hat;
  bool unique;
};

/// Factors a locally closed map from a TD space through X_D. Also derives the
/// factor from the algebra-side reflection of 𝒫f and compares.
/// Throws SourceNotTD; NotLocallyClosedMap; NotContinuous.
Coreflection td_coreflect(const ContMap& f);

/// 𝒫(i_D) and χ_{𝒫X} have the same table once at_D 𝒫X is read as X_D.
bool inclusion_matches_chi(const SpaceRef& x);

}  // namespace mtp
