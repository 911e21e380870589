#pragma once

#include <vector>

#include "mtp/frame.hpp"
#include "mtp/mt.hpp"
#include "mtp/proximity.hpp"

namespace mtp {

/// Free boolean extension of a finite distributive lattice, realized as the
/// powerset of its join-irreducibles. Bit i stands for irreducibles[i].
struct BooleanEnvelope {
  FrameRef base;
  std::vector<int> irreducibles;  // lattice indices, ascending
  std::vector<Mask> embed;        // e(a) = {j : j <= a}, by lattice index

  int atoms() const { return static_cast<int>(irreducibles.size()); }
  Mask top() const { return full_mask(atoms()); }
  /// ⋁{e(a) : e(a) ⊆ b}.
  Mask interior(Mask b) const;
};

BooleanEnvelope boolean_envelope(const FrameRef& l);

struct BooleanLift {
  /// ℬh, indexed by envelope mask, valued in the powerset of `atoms` points.
  std::vector<Mask> map;
  /// Exactly one boolean homomorphism agrees with h on e[L].
  bool unique = false;
};

/// Extends the bounded lattice homomorphism h: L → 2^atoms (by lattice index)
/// to the envelope. Uniqueness is decided by trying every boolean
/// homomorphism, so it is guarded by the candidate bound.
/// Throws NotBoundedLatticeHom; TooLarge.
BooleanLift check_universal_property(const BooleanEnvelope& env, int atoms, const std::vector<Mask>& h);

/// The boolean envelope completed (a no-op at finite size, run anyway and
/// compared) and equipped with the opens e[L].
struct FunayamaEnvelope {
  BooleanEnvelope boolean;
  MTRef mt;
};

FunayamaEnvelope funayama(const FrameRef& l);

/// ρ_L : L → 𝒪ℱL, an isomorphism onto the open frame.
FrameMorphism rho(const FunayamaEnvelope& f);

/// ℱh(a) = ⋁{ℬh(b) : b ≤ a}. Throws NotFrameMorphism; InternalInconsistency
/// if the boolean lift and the join over locally closed parts disagree.
ProxMap lift_frame_morphism(const FrameMorphism& h, const FunayamaEnvelope& source, const FunayamaEnvelope& target);
ProxMap lift_frame_morphism(const FrameMorphism& h);

/// ℱ𝒪M taken as the constructible elements of M: its atoms are the blocks of
/// M, and mask bit i stands for blocks[i].
struct ConsAlgebra {
  MTRef base;
  MTRef algebra;
  std::vector<Mask> blocks;

  /// The inclusion into M.
  Mask to_base(Mask a) const;
  /// Inverse of to_base on constructible elements of M.
  Mask from_base(Mask c) const;
};

ConsAlgebra cons_algebra(const MTRef& m);

/// ζ_M : ℱ𝒪M → M, a ↦ join of the locally closed x ≤ a.
ProxMap zeta(const ConsAlgebra& c);
/// φ_M : M → ℱ𝒪M, same formula read in the constructible algebra.
ProxMap phi(const ConsAlgebra& c);
/// ρ_{𝒪M} : 𝒪M → 𝒪ℱ𝒪M.
FrameMorphism rho_cons(const ConsAlgebra& c);
/// ℱ𝒪g between the constructible algebras of the source and target of g.
ProxMap fo_map(const ProxMap& g, const ConsAlgebra& source, const ConsAlgebra& target);

/// The constructible and Birkhoff realizations of ℱ𝒪M are homeomorphic on
/// atoms; returns the atom table Cons → Birkhoff. Throws InternalInconsistency.
std::vector<int> cons_vs_birkhoff(const ConsAlgebra& c);

struct EnvelopeComparison {
  bool td;
  bool iso;
  bool agree() const { return td == iso; }
};

/// is_TD by definition against an isomorphism search between M and ℱ𝒪M.
EnvelopeComparison td_iff_envelope(const MTRef& m);

}  // namespace mtp
