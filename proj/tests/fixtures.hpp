#pragma once

#include <vector>

#include "mtp/frame.hpp"
#include "mtp/mt.hpp"
#include "mtp/order.hpp"

namespace fx {

using mtp::Mask;

// One atom, discrete.
inline mtp::MTRef two() { return mtp::share(mtp::MTAlgebra(1, {0b0, 0b1})); }
// Atoms p = 0, q = 1; only 0 and 1 open.
inline mtp::MTRef m4() { return mtp::share(mtp::MTAlgebra(2, {0b00, 0b11})); }
// Atoms x = 0, y = 1; {y} open.
inline mtp::MTRef sier() { return mtp::share(mtp::MTAlgebra(2, {0b00, 0b10, 0b11})); }
inline mtp::MTRef discrete2() { return mtp::share(mtp::MTAlgebra(2, {0b00, 0b01, 0b10, 0b11})); }

inline mtp::Frame chain(int n) { return mtp::Frame(mtp::Lattice::from_poset(mtp::Poset::chain(n))); }
// 0 < m < 1 with indices 0, 1, 2.
inline mtp::Frame c3() { return chain(3); }
inline mtp::Frame two_frame() { return chain(2); }
// Downsets of a 2-antichain: 0 = ∅, 1 = {0}, 2 = {1}, 3 = both.
inline mtp::Frame d4() { return mtp::Frame(mtp::downset_lattice(mtp::Poset::antichain(2)).lattice); }

// All topologies on n points by closing every family of subsets; slow but obviously right.
inline std::vector<mtp::MTRef> all_algebras(int n) {
  std::vector<mtp::MTRef> out;
  const int k = 1 << n;
  const Mask full = mtp::full_mask(n);
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << k); ++fam) {
    if (!(fam & 1) || !(fam >> full & 1)) continue;
    std::vector<Mask> opens;
    for (int s = 0; s < k; ++s)
      if (fam >> s & 1) opens.push_back(s);
    bool closed = true;
    for (Mask a : opens)
      for (Mask b : opens) closed = closed && (fam >> (a | b) & 1) && (fam >> (a & b) & 1);
    if (closed) out.push_back(mtp::share(mtp::MTAlgebra(n, opens)));
  }
  return out;
}

inline std::vector<mtp::MTRef> algebras_up_to(int n) {
  std::vector<mtp::MTRef> out;
  for (int k = 1; k <= n; ++k)
    for (auto& m : all_algebras(k)) out.push_back(m);
  return out;
}

inline std::vector<mtp::SpaceRef> spaces_up_to(int n) {
  std::vector<mtp::SpaceRef> out;
  for (const auto& m : algebras_up_to(n)) out.push_back(mtp::share(m->space()));
  return out;
}

// Every continuous map x → y, by trying all point tables.
inline std::vector<mtp::ContMap> continuous_maps(const mtp::SpaceRef& x, const mtp::SpaceRef& y) {
  std::vector<mtp::ContMap> out;
  mtp::ContMap f{x, y, std::vector<int>(x->size(), 0)};
  if (y->size() == 0 && x->size() > 0) return out;
  for (;;) {
    if (mtp::is_continuous(f)) out.push_back(f);
    int i = 0;
    while (i < x->size() && ++f.map[i] == y->size()) f.map[i++] = 0;
    if (i == x->size()) break;
  }
  return out;
}

}  // namespace fx
