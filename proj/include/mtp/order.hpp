#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtp/bits.hpp"

namespace mtp {

/// A finite partial order on the dense index set 0..n-1.
class Poset {
 public:
  Poset() = default;

  /// Validates reflexivity, antisymmetry and transitivity.
  static Poset from_matrix(const std::vector<std::vector<bool>>& leq);
  static Poset from_relation(int n, const std::function<bool(int, int)>& leq);
  /// Subsets ordered by inclusion, indexed by position in `sets`.
  static Poset of_sets(std::span<const Mask> sets);
  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  /// Elements below (resp. above) `a` as a mask; requires size() <= 64.
  Mask down(int a) const;
  Mask up(int a) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_ = 0;
  std::vector<unsigned char> leq_;
};

/// A finite lattice with tabulated meet and join.
class Lattice {
 public:
  /// Throws NotALattice when some pair lacks a meet or join, or the carrier is empty.
  static Lattice from_poset(Poset p);
  /// Sets ordered by inclusion; the family must be closed under union and
  /// intersection (InvalidInput otherwise). Element i is sets[i].
  static Lattice of_closed_family(std::span<const Mask> sets);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * size() + b]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * size() + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int join_all(std::span<const int> xs) const;
  int meet_all(std::span<const int> xs) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.poset_ == b.poset_; }

 private:
  Poset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = 0;
  int top_ = 0;
};

/// Cover pairs (a, b): a < b with nothing strictly between.
std::vector<std::pair<int, int>> covers(const Poset& p);

bool is_distributive(const Lattice& l);
std::optional<int> complement(const Lattice& l, int a);
bool is_boolean(const Lattice& l);

/// First triple (a, b, c) with a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c), if any.
std::optional<std::array<int, 3>> distributivity_witness(const Lattice& l);

/// Non-bottom elements that are not the join of two strictly smaller elements.
/// Throws NotDistributive.
std::vector<int> join_irreducibles(const Lattice& l);

struct DownsetLattice {
  Lattice lattice;
  std::vector<Mask> downsets;  // element i of the lattice is downsets[i]
};

/// All down-closed subsets of `p` ordered by inclusion. Requires p.size() <= 64.
DownsetLattice downset_lattice(const Poset& p);

struct Completion {
  Lattice lattice;
  std::vector<Mask> lower_sets;  // A-part of each cut, as a mask over the poset
  std::vector<int> embedding;    // poset element -> lattice element
};

/// Dedekind-MacNeille completion by cuts. Requires p.size() <= 64.
Completion macneille_completion(const Poset& p);

/// An order isomorphism a -> b when one exists.
std::optional<std::vector<int>> find_order_isomorphism(const Poset& a, const Poset& b);

/// Graphviz rendering of the Hasse diagram (edges are the covers).
std::string to_dot(const Poset& p, const std::vector<std::string>& labels = {},
                   const std::string& name = "hasse");

}  // namespace mtp
