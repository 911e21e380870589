#pragma once

#include <memory>
#include <span>
#include <vector>

#include "mtp/error.hpp"
#include "mtp/finite_space.hpp"
#include "mtp/order.hpp"

namespace mtp {

/// A finite frame, i.e. a finite distributive lattice.
class Frame {
 public:
  /// Throws NotDistributive with the failing triple.
  explicit Frame(Lattice l);
  /// Sets closed under union and intersection; distributive by construction.
  static Frame from_sets(std::span<const Mask> sets);

  const Lattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  bool leq(int a, int b) const { return lattice_.leq(a, b); }
  int meet(int a, int b) const { return lattice_.meet(a, b); }
  int join(int a, int b) const { return lattice_.join(a, b); }
  int bottom() const { return lattice_.bottom(); }
  int top() const { return lattice_.top(); }

  friend bool operator==(const Frame& a, const Frame& b) { return a.lattice_ == b.lattice_; }

 private:
  struct Trusted {};
  Frame(Lattice l, Trusted) : lattice_(std::move(l)) {}

  Lattice lattice_;
};

using FrameRef = std::shared_ptr<const Frame>;

inline FrameRef share(Frame f) { return std::make_shared<const Frame>(std::move(f)); }

/// A frame carried by a family of sets closed under union and intersection,
/// such as the opens of a space. Element i is sets[i]; sets are sorted.
struct SetFrame {
  FrameRef frame;
  std::vector<Mask> sets;

  int index_of(Mask s) const;
};

SetFrame set_frame(std::vector<Mask> sets);

struct FrameMorphism {
  FrameRef source;
  FrameRef target;
  std::vector<int> map;
};

/// Preservation of bottom, top, binary meets and binary joins (all joins, at
/// finite size). The witness names the violating pair.
Verdict is_frame_morphism(const FrameMorphism& f);
FrameMorphism identity_morphism(const FrameRef& l);
FrameMorphism compose(const FrameMorphism& g, const FrameMorphism& f);

/// Every frame morphism source -> target, determined by values on the
/// join-irreducibles of the source. Throws TooLarge past `limit` results.
std::vector<FrameMorphism> enumerate_frame_morphisms(const FrameRef& source, const FrameRef& target,
                                                     std::size_t limit = 1u << 20);

/// u → v = ⋁{w : w ∧ u ≤ v}.
int heyting_implication(const Frame& l, int u, int v);
/// Co-Heyting difference in a finite distributive lattice: least w with d ≤ c ∨ w.
int co_implication(const Lattice& l, int c, int d);

bool is_prime(const Frame& l, int p);
std::vector<int> prime_elements(const Frame& l);

/// A completely prime filter, as the sorted list of its elements.
struct FramePoint {
  std::vector<int> filter;
  friend bool operator==(const FramePoint&, const FramePoint&) = default;
};

FramePoint point_of_prime(const Frame& l, int p);
/// ⋁(L ∖ P).
int prime_of_point(const Frame& l, const FramePoint& point);
bool is_completely_prime_filter(const Frame& l, std::span<const int> elems);
/// Brute-force search over all subsets; for cross-checking only (size <= 24).
std::vector<FramePoint> completely_prime_filters_by_search(const Frame& l);

/// A spectrum of a frame: point i is the filter of prime primes[i];
/// sigma[a] is the set of points whose filter contains a.
struct Spectrum {
  FinSpace space;
  std::vector<int> primes;
  std::vector<Mask> sigma;

  int point_of(int prime) const;
};

Spectrum pt_space(const Frame& l);

/// Definition-level test: prime filter with some cover a ⋖ b, b in, a out.
bool is_slicing_filter(const Frame& l, std::span<const int> elems);

struct SlicingCharacterizations {
  std::vector<int> by_filter_definition;  // primes whose filter is slicing
  std::vector<int> by_covered_prime;
  std::vector<int> by_meet_irreducible;   // completely meet-irreducible primes

  bool agree() const {
    return by_filter_definition == by_covered_prime && by_covered_prime == by_meet_irreducible;
  }
};

SlicingCharacterizations slicing_characterizations(const Frame& l);
/// Primes whose filters are slicing. Throws InternalInconsistency when the
/// three characterizations disagree.
std::vector<int> slicing_primes(const Frame& l);
std::vector<FramePoint> slicing_filters(const Frame& l);
/// The subspace of pt on slicing filters.
Spectrum ptD_space(const Frame& l);

/// Prime of the source whose filter is f⁻¹ of the filter of target prime q.
int pulled_back_prime(const FrameMorphism& f, int q);

/// Preimages of slicing filters are slicing. Throws NotFrameMorphism.
Verdict is_D_morphism_frame(const FrameMorphism& f);

/// Continuous map pt(target) -> pt(source) induced by f.
ContMap pt_map(const FrameMorphism& f, const Spectrum& pt_target, const Spectrum& pt_source);

}  // namespace mtp
