#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mtp/bits.hpp"
#include "mtp/error.hpp"
#include "mtp/finite_space.hpp"
#include "mtp/frame.hpp"

namespace mtp {

/// The powerset of atoms 0..n-1 (n <= 16) with a subframe of opens.
/// Element a of the algebra is the subset with mask a.
class MTAlgebra {
 public:
  /// Requires 1 <= atoms <= 16. Throws InvalidMTAlgebra when the opens are not
  /// a subframe or the induced interior breaks a Kuratowski axiom.
  MTAlgebra(int atoms, std::vector<Mask> opens);

  /// The one-element algebra on no atoms (0 = 1). Only arises as 𝒫 of an
  /// empty spectrum.
  static MTAlgebra degenerate();

  int atoms() const { return space_.size(); }
  std::size_t size() const { return std::size_t{1} << atoms(); }
  Mask top() const { return space_.full(); }
  Mask neg(Mask a) const { return top() & ~a; }

  const FinSpace& space() const { return space_; }
  const std::vector<Mask>& opens() const { return space_.opens(); }
  bool is_open(Mask a) const { return space_.is_open(a); }
  bool is_closed(Mask a) const { return space_.is_closed(a); }

  Mask box(Mask a) const { return space_.interior(a); }
  Mask diamond(Mask a) const { return space_.closure(a); }
  Mask min_open(int atom) const { return space_.min_open(atom); }

  /// Least open (= least saturated element) above a.
  Mask saturation(Mask a) const;
  /// Least constructible element above a.
  Mask cons_hull(Mask a) const;

  bool is_locally_closed(Mask a) const;
  bool is_saturated(Mask a) const { return saturation(a) == a; }
  bool is_weakly_locally_closed(Mask a) const;
  bool is_constructible(Mask a) const { return cons_hull(a) == a; }

  /// Every locally closed element, ascending.
  const std::vector<Mask>& locally_closed() const { return lc_; }
  /// Atoms of Cons M: classes of atoms lying in exactly the same opens.
  const std::vector<Mask>& blocks() const { return blocks_; }

  /// Opens as a frame; frame element i is opens()[i].
  const SetFrame& open_frame() const { return *open_frame_; }

  friend bool operator==(const MTAlgebra& a, const MTAlgebra& b) { return a.space_ == b.space_; }

 private:
  MTAlgebra() = default;
  void index();

  FinSpace space_;
  std::vector<Mask> lc_;
  std::vector<Mask> blocks_;
  std::shared_ptr<const SetFrame> open_frame_;
};

using MTRef = std::shared_ptr<const MTAlgebra>;

inline MTRef share(MTAlgebra m) { return std::make_shared<const MTAlgebra>(std::move(m)); }

/// Element families computed from their definitions by enumeration, as
/// opposed to the closed forms used by MTAlgebra.
struct Families {
  std::vector<Mask> opens, closeds, locally_closed, constructible, saturated, weakly_locally_closed;
};

Families element_families(const MTAlgebra& m);

/// u → v = □(¬u ∨ v) on opens; c ← d = ◇(d ∧ ¬c) on closeds.
Mask implication(const MTAlgebra& m, Mask u, Mask v);
Mask co_implication(const MTAlgebra& m, Mask c, Mask d);

/// The four Kuratowski laws, plus adjointness of □ to the inclusion of opens.
/// Pairwise laws are checked exhaustively up to `pairwise_atoms` atoms.
Verdict kuratowski_check(const MTAlgebra& m, int pairwise_atoms = 8);

bool is_T0(const MTAlgebra& m);
bool is_TD(const MTAlgebra& m);
/// Join-generation tested literally: every element is the join of the
/// family members below it.
bool lc_join_generates(const MTAlgebra& m);
bool wlc_join_generates(const MTAlgebra& m);
/// Finite boolean algebras are atomic, so η_M is always injective.
inline bool is_spatial(const MTAlgebra&) { return true; }

/// η_M(a): the atoms below a, as points of at M.
inline Mask eta(const MTAlgebra&, Mask a) { return a; }
FinSpace at_space(const MTAlgebra& m);
/// Locally closed atoms, ascending.
std::vector<int> lc_atoms(const MTAlgebra& m);
FinSpace atD_space(const MTAlgebra& m);

/// θ(x) = ↑x ∩ 𝒪M as a map at M → pt 𝒪M (points indexed as in pt_space).
ContMap theta(const MTAlgebra& m);
/// θ restricted to locally closed atoms, into pt_D 𝒪M.
ContMap theta_prime(const MTAlgebra& m);
/// x = ⋀F ∧ ⋀{¬a : a open, a ∉ F} for a slicing filter F of 𝒪M (frame
/// indices). Re-verifies that x is a locally closed atom with ↑x ∩ 𝒪M = F.
/// Throws NotT0 or NotSlicing.
int witness_atom(const MTAlgebra& m, const FramePoint& f);
/// ↑x ∩ 𝒪M as frame indices of the open frame.
FramePoint open_filter(const MTAlgebra& m, Mask x);

/// First element where "x is an atom" and "for every open u, x ≤ u iff
/// x ≰ ¬u" disagree; nullopt when the characterization holds everywhere.
std::optional<Mask> atom_characterization_counterexample(const MTAlgebra& m);
/// Throws NotT0.
bool atom_T0_characterization(const MTAlgebra& m);

/// A complete boolean homomorphism given by its table, indexed by source mask.
struct MTMorphism {
  MTRef source;
  MTRef target;
  std::vector<Mask> map;

  friend bool operator==(const MTMorphism& a, const MTMorphism& b) {
    return *a.source == *b.source && *a.target == *b.target && a.map == b.map;
  }
};

/// The boolean homomorphism sending atom i to atom_images[i].
MTMorphism mt_from_atom_images(const MTRef& source, const MTRef& target, const std::vector<Mask>& atom_images);
Verdict is_MT_morphism(const MTMorphism& f);
MTMorphism identity_mt(const MTRef& m);
MTMorphism compose(const MTMorphism& g, const MTMorphism& f);
/// Every MT-morphism source -> target, by atom images.
std::vector<MTMorphism> enumerate_mt_morphisms(const MTRef& source, const MTRef& target);

/// f*(y) = ⋀{a : y ≤ f(a)}, indexed by target mask.
std::vector<Mask> left_adjoint(const MTMorphism& f);
/// f* on atoms: at N → at M.
ContMap dual_map(const MTMorphism& f);
/// 𝒪f as a frame morphism between open frames. Throws NotMTMorphism when f
/// does not send opens to opens.
FrameMorphism open_part(const MTMorphism& f);

}  // namespace mtp
