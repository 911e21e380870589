#include "mtp/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mtp/config.hpp"
#include "mtp/error.hpp"

namespace mtp {

namespace {

void require_small(const Poset& p, const char* what) {
  if (p.size() > 64) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " needs at most 64 poset elements");
  }
}

bool canonical_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

Poset Poset::from_relation(int n, const std::function<bool(int, int)>& leq) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative poset size");
  check_carrier_size(static_cast<std::size_t>(n), "poset");
  Poset p;
  p.n_ = n;
  p.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.leq_[static_cast<std::size_t>(a) * n + b] = leq(a, b) ? 1 : 0;

  for (int a = 0; a < n; ++a) {
    if (!p.leq(a, a)) throw Error(ErrorKind::InvalidInput, "not reflexive at " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (a != b && p.leq(a, b) && p.leq(b, a)) {
        throw Error(ErrorKind::InvalidInput, "not antisymmetric at " + std::to_string(a) + "," +
                                                 std::to_string(b));
      }
      if (!p.leq(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (p.leq(b, c) && !p.leq(a, c)) {
          throw Error(ErrorKind::InvalidInput, "not transitive at " + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c));
        }
      }
    }
  }
  return p;
}

Poset Poset::from_matrix(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  for (const auto& row : leq) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidInput, "leq is not square");
  }
  return from_relation(n, [&](int a, int b) { return static_cast<bool>(leq[a][b]); });
}

Poset Poset::of_sets(std::span<const Mask> sets) {
  return from_relation(static_cast<int>(sets.size()),
                       [&](int a, int b) { return subset(sets[a], sets[b]); });
}

Poset Poset::chain(int n) {
  return from_relation(n, [](int a, int b) { return a <= b; });
}

Poset Poset::antichain(int n) {
  return from_relation(n, [](int a, int b) { return a == b; });
}

Mask Poset::down(int a) const {
  Mask m = 0;
  for (int b = 0; b < n_; ++b)
    if (leq(b, a)) m |= bit(b);
  return m;
}

Mask Poset::up(int a) const {
  Mask m = 0;
  for (int b = 0; b < n_; ++b)
    if (leq(a, b)) m |= bit(b);
  return m;
}

Lattice Lattice::from_poset(Poset p) {
  const int n = p.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "empty carrier");
  Lattice l;
  l.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  l.join_.assign(static_cast<std::size_t>(n) * n, -1);

  auto extremal = [&](int a, int b, bool lower) {
    // greatest lower bound (lower) or least upper bound (!lower)
    int best = -1;
    for (int c = 0; c < n; ++c) {
      bool bound = lower ? (p.leq(c, a) && p.leq(c, b)) : (p.leq(a, c) && p.leq(b, c));
      if (!bound) continue;
      if (best < 0 || (lower ? p.leq(best, c) : p.leq(c, best))) best = c;
    }
    if (best < 0) return -1;
    for (int c = 0; c < n; ++c) {
      bool bound = lower ? (p.leq(c, a) && p.leq(c, b)) : (p.leq(a, c) && p.leq(b, c));
      if (bound && !(lower ? p.leq(c, best) : p.leq(best, c))) return -1;
    }
    return best;
  };

  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int m = extremal(a, b, true);
      int j = extremal(a, b, false);
      if (m < 0 || j < 0) {
        throw Error(ErrorKind::NotALattice,
                    "no " + std::string(m < 0 ? "meet" : "join") + " for " + std::to_string(a) +
                        "," + std::to_string(b));
      }
      l.meet_[static_cast<std::size_t>(a) * n + b] = l.meet_[static_cast<std::size_t>(b) * n + a] = m;
      l.join_[static_cast<std::size_t>(a) * n + b] = l.join_[static_cast<std::size_t>(b) * n + a] = j;
    }
  }
  l.bottom_ = 0;
  l.top_ = 0;
  for (int a = 1; a < n; ++a) {
    l.bottom_ = l.meet_[static_cast<std::size_t>(l.bottom_) * n + a];
    l.top_ = l.join_[static_cast<std::size_t>(l.top_) * n + a];
  }
  l.poset_ = std::move(p);
  return l;
}

Lattice Lattice::of_closed_family(std::span<const Mask> sets) {
  const int n = static_cast<int>(sets.size());
  if (n == 0) throw Error(ErrorKind::NotALattice, "empty carrier");
  check_carrier_size(sets.size(), "set lattice");
  std::unordered_map<Mask, int> index;
  for (int i = 0; i < n; ++i) index.emplace(sets[i], i);
  if (static_cast<int>(index.size()) != n) throw Error(ErrorKind::InvalidInput, "repeated set in family");
  auto find = [&](Mask m) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw Error(ErrorKind::InvalidInput, "family not closed: missing " + show(m));
    }
    return it->second;
  };
  Lattice l;
  l.meet_.resize(static_cast<std::size_t>(n) * n);
  l.join_.resize(static_cast<std::size_t>(n) * n);
  Mask lo = sets[0], hi = sets[0];
  for (int a = 0; a < n; ++a) {
    lo &= sets[a];
    hi |= sets[a];
    for (int b = 0; b < n; ++b) {
      l.meet_[static_cast<std::size_t>(a) * n + b] = find(sets[a] & sets[b]);
      l.join_[static_cast<std::size_t>(a) * n + b] = find(sets[a] | sets[b]);
    }
  }
  l.bottom_ = find(lo);
  l.top_ = find(hi);
  l.poset_ = Poset::of_sets(sets);
  return l;
}

int Lattice::join_all(std::span<const int> xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int Lattice::meet_all(std::span<const int> xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<std::pair<int, int>> covers(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool between = false;
      for (int c = 0; c < n && !between; ++c) between = p.less(a, c) && p.less(c, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<std::array<int, 3>> distributivity_witness(const Lattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return std::array{a, b, c};
  return std::nullopt;
}

bool is_distributive(const Lattice& l) { return !distributivity_witness(l).has_value(); }

std::optional<int> complement(const Lattice& l, int a) {
  for (int b = 0; b < l.size(); ++b) {
    if (l.meet(a, b) == l.bottom() && l.join(a, b) == l.top()) return b;
  }
  return std::nullopt;
}

bool is_boolean(const Lattice& l) {
  if (!is_distributive(l)) return false;
  for (int a = 0; a < l.size(); ++a)
    if (!complement(l, a)) return false;
  return true;
}

std::vector<int> join_irreducibles(const Lattice& l) {
  if (auto w = distributivity_witness(l)) {
    throw Error(ErrorKind::NotDistributive, "triple " + std::to_string((*w)[0]) + "," +
                                                std::to_string((*w)[1]) + "," +
                                                std::to_string((*w)[2]));
  }
  std::vector<int> out;
  const int n = l.size();
  for (int j = 0; j < n; ++j) {
    if (j == l.bottom()) continue;
    bool decomposes = false;
    for (int a = 0; a < n && !decomposes; ++a) {
      if (!l.poset().less(a, j)) continue;
      for (int b = 0; b < n && !decomposes; ++b)
        decomposes = l.poset().less(b, j) && l.join(a, b) == j;
    }
    if (!decomposes) out.push_back(j);
  }
  return out;
}

DownsetLattice downset_lattice(const Poset& p) {
  require_small(p, "downset_lattice");
  const int n = p.size();
  // Linear extension: order by number of elements below.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return popcount(p.down(a)) < popcount(p.down(b)); });
  std::vector<Mask> strict_below(n);
  for (int a = 0; a < n; ++a) strict_below[a] = p.down(a) & ~bit(a);

  std::vector<Mask> downsets;
  std::function<void(int, Mask)> walk = [&](int k, Mask d) {
    if (k == n) {
      downsets.push_back(d);
      check_carrier_size(downsets.size(), "downset lattice");
      return;
    }
    int x = order[k];
    walk(k + 1, d);
    if (subset(strict_below[x], d)) walk(k + 1, d | bit(x));
  };
  walk(0, 0);
  std::sort(downsets.begin(), downsets.end(), canonical_less);
  Lattice lat = Lattice::from_poset(Poset::of_sets(downsets));
  return {std::move(lat), std::move(downsets)};
}

Completion macneille_completion(const Poset& p) {
  require_small(p, "macneille_completion");
  const int n = p.size();
  // Closed lower sets are exactly the intersections of principal downsets;
  // the empty intersection is the whole carrier.
  std::vector<Mask> closed{full_mask(n)};
  for (int a = 0; a < n; ++a) closed.push_back(p.down(a));
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t sz = closed.size();
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = i + 1; j < sz; ++j) {
        Mask m = closed[i] & closed[j];
        if (!std::binary_search(closed.begin(), closed.end(), m)) {
          closed.insert(std::lower_bound(closed.begin(), closed.end(), m), m);
          check_carrier_size(closed.size(), "MacNeille completion");
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  std::sort(closed.begin(), closed.end(), canonical_less);
  Completion c{Lattice::from_poset(Poset::of_sets(closed)), closed, std::vector<int>(n)};
  for (int a = 0; a < n; ++a) {
    c.embedding[a] = static_cast<int>(std::find(closed.begin(), closed.end(), p.down(a)) - closed.begin());
  }
  return c;
}

std::optional<std::vector<int>> find_order_isomorphism(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  auto signature = [](const Poset& p, int x) {
    int below = 0, above = 0;
    for (int y = 0; y < p.size(); ++y) {
      below += p.leq(y, x);
      above += p.leq(x, y);
    }
    return std::pair{below, above};
  };
  std::vector<std::pair<int, int>> sa(n), sb(n);
  for (int x = 0; x < n; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || sb[y] != sa[x]) continue;
      bool consistent = true;
      for (int z = 0; z < x && consistent; ++z) {
        consistent = a.leq(z, x) == b.leq(image[z], y) && a.leq(x, z) == b.leq(y, image[z]);
      }
      if (!consistent) continue;
      image[x] = y;
      used[y] = true;
      if (place(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return image;
}

std::string to_dot(const Poset& p, const std::vector<std::string>& labels, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (int a = 0; a < p.size(); ++a) {
    os << "  n" << a << " [label=\""
       << (a < static_cast<int>(labels.size()) ? labels[a] : std::to_string(a)) << "\"];\n";
  }
  for (auto [a, b] : covers(p)) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mtp
