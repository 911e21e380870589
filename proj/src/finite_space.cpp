#include "mtp/finite_space.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace mtp {

FinSpace::FinSpace(int points, std::vector<Mask> opens) : n_(points) {
  if (points < 0 || points > 64) throw Error(ErrorKind::InvalidInput, "space needs 0..64 points");
  const Mask all = full_mask(points);
  for (Mask u : opens) {
    if (!subset(u, all)) throw Error(ErrorKind::InvalidInput, "open " + show(u) + " has stray points");
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  opens_ = std::move(opens);
  if (!is_open(0) || !is_open(all)) {
    throw Error(ErrorKind::InvalidInput, "opens must contain the empty and the full set");
  }
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!is_open(opens_[i] | opens_[j]) || !is_open(opens_[i] & opens_[j])) {
        throw Error(ErrorKind::InvalidInput, "opens not closed under union/intersection at " +
                                                 show(opens_[i]) + ", " + show(opens_[j]));
      }
    }
  }
  min_open_.assign(n_, all);
  for (Mask u : opens_)
    for (int x : members(u)) min_open_[x] &= u;
}

FinSpace FinSpace::discrete(int n) {
  if (n > 16) throw Error(ErrorKind::TooLarge, "discrete space above 16 points");
  std::vector<Mask> opens(std::size_t{1} << n);
  for (Mask a = 0; a < opens.size(); ++a) opens[a] = a;
  return FinSpace(n, std::move(opens));
}

FinSpace FinSpace::indiscrete(int n) { return FinSpace(n, {0, full_mask(n)}); }

FinSpace FinSpace::sierpinski() { return FinSpace(2, {0b00, 0b10, 0b11}); }

bool FinSpace::is_open(Mask u) const { return std::binary_search(opens_.begin(), opens_.end(), u); }

Mask FinSpace::interior(Mask a) const {
  Mask r = 0;
  for (int x = 0; x < n_; ++x)
    if (subset(min_open_[x], a)) r |= bit(x);
  return r;
}

FinSpace subspace(const FinSpace& x, Mask points) {
  const std::vector<int> keep = members(points);
  auto relabel = [&](Mask u) {
    Mask r = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (u & bit(keep[i])) r |= bit(static_cast<int>(i));
    return r;
  };
  std::vector<Mask> opens;
  opens.reserve(x.opens().size());
  for (Mask u : x.opens()) opens.push_back(relabel(u & points));
  return FinSpace(static_cast<int>(keep.size()), std::move(opens));
}

Mask ContMap::image(Mask a) const {
  Mask r = 0;
  for (int x : members(a)) r |= bit(map[x]);
  return r;
}

Mask ContMap::preimage(Mask b) const {
  Mask r = 0;
  for (std::size_t x = 0; x < map.size(); ++x)
    if (b & bit(map[x])) r |= bit(static_cast<int>(x));
  return r;
}

Verdict is_continuous(const ContMap& f) {
  if (static_cast<int>(f.map.size()) != f.source->size()) {
    return Verdict::fail("table has " + std::to_string(f.map.size()) + " entries for " +
                         std::to_string(f.source->size()) + " points");
  }
  for (int y : f.map) {
    if (y < 0 || y >= f.target->size()) return Verdict::fail("point " + std::to_string(y) + " out of range");
  }
  for (Mask v : f.target->opens()) {
    if (!f.source->is_open(f.preimage(v))) {
      return Verdict::fail("preimage of open " + show(v) + " is " + show(f.preimage(v)));
    }
  }
  return Verdict::pass();
}

void require_continuous(const ContMap& f) {
  if (auto v = is_continuous(f); !v) throw Error(ErrorKind::NotContinuous, v.witness);
}

ContMap identity_map(const SpaceRef& x) {
  ContMap f{x, x, std::vector<int>(x->size())};
  for (int i = 0; i < x->size(); ++i) f.map[i] = i;
  return f;
}

ContMap compose(const ContMap& g, const ContMap& f) {
  if (!(*f.target == *g.source)) throw Error(ErrorKind::SourceTargetMismatch, "compose: spaces differ");
  ContMap h{f.source, g.target, std::vector<int>(f.map.size())};
  for (std::size_t x = 0; x < f.map.size(); ++x) h.map[x] = g.map[f.map[x]];
  return h;
}

bool is_homeomorphism(const ContMap& f) {
  if (f.source->size() != f.target->size() || !is_continuous(f)) return false;
  if (f.image(f.source->full()) != f.target->full()) return false;
  for (Mask u : f.source->opens())
    if (!f.target->is_open(f.image(u))) return false;
  return true;
}

ContMap inverse(const ContMap& f) {
  ContMap g{f.target, f.source, std::vector<int>(f.target->size(), -1)};
  for (std::size_t x = 0; x < f.map.size(); ++x) g.map[f.map[x]] = static_cast<int>(x);
  if (std::find(g.map.begin(), g.map.end(), -1) != g.map.end()) {
    throw Error(ErrorKind::InvalidInput, "inverse of a non-bijective map");
  }
  return g;
}

}  // namespace mtp

namespace mtp {

std::optional<std::vector<int>> find_homeomorphism(const FinSpace& x, const FinSpace& y) {
  const int n = x.size();
  if (n != y.size() || x.opens().size() != y.opens().size()) return std::nullopt;
  std::vector<int> to(n, -1);
  Mask used = 0;
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used & bit(j)) continue;
      if (popcount(x.min_open(i)) != popcount(y.min_open(j))) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        ok = ((x.min_open(i) >> k & 1) == (y.min_open(j) >> to[k] & 1)) &&
             ((x.min_open(k) >> i & 1) == (y.min_open(to[k]) >> j & 1));
      }
      if (!ok) continue;
      to[i] = j;
      used |= bit(j);
      if (place(i + 1)) return true;
      used &= ~bit(j);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return to;
}

}  // namespace mtp
