#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mtp/bits.hpp"
#include "mtp/error.hpp"

namespace mtp {

/// A finite topological space on points 0..n-1 (n <= 64) given by its open sets.
class FinSpace {
 public:
  FinSpace() : FinSpace(0, {0}) {}
  /// Validates that `opens` contains the empty and full sets and is closed
  /// under union and intersection. The family is stored sorted and deduplicated.
  FinSpace(int points, std::vector<Mask> opens);

  static FinSpace discrete(int n);
  static FinSpace indiscrete(int n);
  /// Points {0,1}, opens {∅, {1}, {0,1}}.
  static FinSpace sierpinski();

  int size() const { return n_; }
  Mask full() const { return full_mask(n_); }
  const std::vector<Mask>& opens() const { return opens_; }
  bool is_open(Mask u) const;
  bool is_closed(Mask c) const { return is_open(full() & ~c); }

  Mask interior(Mask a) const;
  Mask closure(Mask a) const { return full() & ~interior(full() & ~a); }
  /// Smallest open set containing point x.
  Mask min_open(int x) const { return min_open_[x]; }

  friend bool operator==(const FinSpace& a, const FinSpace& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

 private:
  int n_;
  std::vector<Mask> opens_;
  std::vector<Mask> min_open_;
};

using SpaceRef = std::shared_ptr<const FinSpace>;

inline SpaceRef share(FinSpace s) { return std::make_shared<const FinSpace>(std::move(s)); }

/// Subspace on `points`, relabelled in increasing order.
FinSpace subspace(const FinSpace& x, Mask points);

/// A map between finite spaces given by its point table. Continuity is
/// checked by `is_continuous`, not on construction.
struct ContMap {
  SpaceRef source;
  SpaceRef target;
  std::vector<int> map;

  Mask image(Mask a) const;
  Mask preimage(Mask b) const;
};

Verdict is_continuous(const ContMap& f);
/// Throws NotContinuous with the witness.
void require_continuous(const ContMap& f);

ContMap identity_map(const SpaceRef& x);
/// g ∘ f; throws SourceTargetMismatch.
ContMap compose(const ContMap& g, const ContMap& f);
bool is_homeomorphism(const ContMap& f);
/// Inverse of a bijective map.
ContMap inverse(const ContMap& f);

/// A point table x → y that is a homeomorphism, when one exists. Searches
/// bijections that preserve and reflect the specialization order.
std::optional<std::vector<int>> find_homeomorphism(const FinSpace& x, const FinSpace& y);

}  // namespace mtp
