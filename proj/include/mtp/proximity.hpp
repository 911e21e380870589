#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mtp/mt.hpp"

namespace mtp {

/// A total map between MT-algebras, indexed by source mask. Whether it is a
/// proximity morphism is decided by check_proximity, not on construction.
struct ProxMap {
  MTRef source;
  MTRef target;
  std::vector<Mask> map;

  Mask operator()(Mask a) const { return map[a]; }

  friend bool operator==(const ProxMap& a, const ProxMap& b) {
    return *a.source == *b.source && *a.target == *b.target && a.map == b.map;
  }
};

/// a ≺ b: some constructible c has a ≤ c ≤ b.
inline bool cons_below(const MTAlgebra& m, Mask a, Mask b) { return subset(m.cons_hull(a), b); }

/// S1-S6 for ≺_B, where B (sorted) must be a boolean subalgebra of M.
/// Throws NotSubalgebra; TooLarge above 6 atoms.
Verdict check_S_axioms(const MTAlgebra& m, const std::vector<Mask>& b);
/// The constructible elements, ascending.
std::vector<Mask> constructible_elements(const MTAlgebra& m);

/// a = ⋁{c : c ≺ a} for every a.
bool is_deVries(const MTAlgebra& m);

struct ProximityReport {
  Verdict p1, p2, p3, p4;

  bool ok() const { return p1.ok && p2.ok && p3.ok && p4.ok; }
  /// "P2: ..." for the first failing axiom, empty when all pass.
  std::string first_failure() const;
};

ProximityReport check_proximity(const ProxMap& f);
inline bool is_proximity_morphism(const ProxMap& f) { return check_proximity(f).ok(); }
/// Throws NotProximityMorphism with the first failure.
void require_proximity(const ProxMap& f);

/// a ↦ ⋁{v(x) : x locally closed, x ≤ a}.
ProxMap extend_from_lc(const MTRef& source, const MTRef& target, const std::function<Mask(Mask)>& v);
/// The proximity morphism whose restriction to opens is h: on a locally
/// closed x = U ∧ ¬V with U = □(x ∨ ¬◇x), V = ¬◇x it is h(U) ∧ ¬h(V),
/// extended to all elements by joins of locally closed parts.
ProxMap extend_from_opens(const MTRef& source, const MTRef& target, const std::function<Mask(Mask)>& h);
ProxMap extend_from_frame_morphism(const MTRef& source, const MTRef& target, const FrameMorphism& h);

/// 1_M(a) = ⋁{x locally closed : x ≤ a}.
ProxMap identity_prox(const MTRef& m);
/// (g ⋆ f)(a) = ⋁{g(f(x)) : x locally closed in the source of f, x ≤ a}.
/// Throws SourceTargetMismatch.
ProxMap star(const ProxMap& g, const ProxMap& f);
/// Γg = g ∘ 1_M. This agrees with 1_N ∘ g whenever M is T_D; for other
/// sources 1_N ∘ g can break P4, while g ∘ 1_M is always a proximity
/// morphism and turns ∘ into ⋆. Throws NotMTMorphism.
ProxMap gamma(const MTMorphism& g);
/// The restriction of f to opens, as a frame morphism. Throws NotProximityMorphism
/// when some open is not sent to an open.
FrameMorphism open_restriction(const ProxMap& f);

/// Consequences every proximity morphism has: complements on opens and
/// closeds, a co-frame map on closeds, locally closed to locally closed, and a
/// boolean homomorphism on constructibles.
struct DerivedReport {
  Verdict complements, coframe_on_closeds, lc_to_lc, boolean_on_cons;
  bool ok() const { return complements.ok && coframe_on_closeds.ok && lc_to_lc.ok && boolean_on_cons.ok; }
};

/// Throws NotProximityMorphism when f is not verified.
DerivedReport derived_properties(const ProxMap& f);

/// Three formulations of finite-join preservation, for maps satisfying P1,
/// P2 and P4: P3 itself; a1 ≺ b1, a2 ≺ b2 ⟹ f(a1 ∨ a2) ≺ f(b1) ∨ f(b2);
/// a ≺ b ⟹ ¬f(¬a) ≺ f(b). TooLarge above 4 atoms.
struct Formulations {
  bool join_preserving, two_pair, negation;
  bool agree() const { return join_preserving == two_pair && two_pair == negation; }
};

Formulations equivalent_formulations(const ProxMap& f);

struct Classification {
  bool iso, mono, epi;
  /// Set when both algebras are T_D: f is an order isomorphism of the tables
  /// whose inverse table is again a proximity morphism.
  std::optional<bool> order_iso;
};

/// Flags read off the open restriction: iso when bijective, mono when
/// injective, epi when distinct points of the target's opens pull back to
/// distinct points. Throws InternalInconsistency if the T_D cross-check fails.
Classification classify_morphism(const ProxMap& f);

/// All proximity morphisms M → N, by backtracking over values on locally
/// closed elements. Throws TooLarge when the product of per-element candidate
/// counts exceeds the candidate guard.
std::vector<ProxMap> enumerate_proximity_morphisms(const MTRef& m, const MTRef& n);
/// Second route: every frame morphism 𝒪M → 𝒪N extended to M.
std::vector<ProxMap> proximity_morphisms_via_frames(const MTRef& m, const MTRef& n);

}  // namespace mtp
