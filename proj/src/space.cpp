#include "mtp/space.hpp"

#include <algorithm>
#include <string>

namespace mtp {

bool is_locally_closed_point(const FinSpace& x, int p) {
  return (x.min_open(p) & x.closure(bit(p))) == bit(p);
}

Mask locally_closed_points(const FinSpace& x) {
  Mask r = 0;
  for (int p = 0; p < x.size(); ++p)
    if (is_locally_closed_point(x, p)) r |= bit(p);
  return r;
}

bool is_T0_space(const FinSpace& x) {
  for (int p = 0; p < x.size(); ++p) {
    for (int q = p + 1; q < x.size(); ++q) {
      bool separated = false;
      for (Mask u : x.opens()) {
        if (((u >> p) & 1) != ((u >> q) & 1)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool is_TD_space(const FinSpace& x) { return locally_closed_points(x) == x.full(); }

MTAlgebra powerset_MT(const FinSpace& x) {
  if (x.size() == 0) return MTAlgebra::degenerate();
  return MTAlgebra(x.size(), x.opens());
}

MTMorphism powerset_of_map(const ContMap& f, const MTRef& py, const MTRef& px) {
  require_continuous(f);
  MTMorphism g{py, px, std::vector<Mask>(py->size())};
  for (Mask b = 0; b < py->size(); ++b) g.map[b] = f.preimage(b);
  return g;
}

MTMorphism powerset_of_map(const ContMap& f) {
  return powerset_of_map(f, share(powerset_MT(*f.target)), share(powerset_MT(*f.source)));
}

ContMap epsilon(const SpaceRef& x) {
  ContMap e{x, share(at_space(powerset_MT(*x))), std::vector<int>(x->size())};
  for (int p = 0; p < x->size(); ++p) e.map[p] = p;
  return e;
}

int Soberification::point_of(Mask prime) const {
  auto it = std::lower_bound(primes.begin(), primes.end(), prime);
  if (it == primes.end() || *it != prime) return -1;
  return static_cast<int>(it - primes.begin());
}

Soberification soberify(const SpaceRef& x) {
  const SetFrame omega = set_frame(x->opens());
  Soberification s;
  s.base = x;
  for (int p : prime_elements(*omega.frame)) s.primes.push_back(omega.sets[p]);
  std::sort(s.primes.begin(), s.primes.end());
  if (s.primes.size() > 64) throw Error(ErrorKind::TooLarge, "soberification above 64 points");
  std::vector<Mask> opens;
  for (Mask u : x->opens()) {
    Mask sigma = 0;
    for (std::size_t i = 0; i < s.primes.size(); ++i)
      if (!subset(u, s.primes[i])) sigma |= bit(static_cast<int>(i));
    opens.push_back(sigma);
  }
  s.space = share(FinSpace(static_cast<int>(s.primes.size()), std::move(opens)));
  s.lambda = ContMap{x, s.space, std::vector<int>(x->size())};
  for (int p = 0; p < x->size(); ++p) {
    s.lambda.map[p] = s.point_of(x->full() & ~x->closure(bit(p)));
    if (s.lambda.map[p] < 0) throw Error(ErrorKind::InternalInconsistency, "complement of a point closure is not prime");
  }
  return s;
}

bool is_sober(const FinSpace& x) {
  std::vector<Mask> closeds;
  for (Mask u : x.opens()) closeds.push_back(x.full() & ~u);
  for (Mask c : closeds) {
    if (c == 0) continue;
    bool reducible = false;
    for (Mask a : closeds) {
      if (a == c || !subset(a, c)) continue;
      for (Mask b : closeds) {
        if (b != c && subset(b, c) && (a | b) == c) {
          reducible = true;
          break;
        }
      }
      if (reducible) break;
    }
    if (reducible) continue;
    int generic = 0;
    for (int p = 0; p < x.size(); ++p) generic += x.closure(bit(p)) == c;
    if (generic != 1) return false;
  }
  return true;
}

ContMap sober_lift(const ContMap& h, const Soberification& sx, const Soberification& sy) {
  ContMap g{sx.space, sy.space, std::vector<int>(sx.primes.size())};
  for (std::size_t i = 0; i < sx.primes.size(); ++i) {
    Mask q = 0;
    for (Mask v : h.target->opens())
      if (subset(h.preimage(v), sx.primes[i])) q |= v;
    g.map[i] = sy.point_of(q);
    if (g.map[i] < 0) throw Error(ErrorKind::InternalInconsistency, "lifted prime " + show(q) + " is not prime");
  }
  return g;
}

TDSubspace td_subspace(const SpaceRef& x) {
  const Mask keep = locally_closed_points(*x);
  TDSubspace d{share(subspace(*x, keep)), {}};
  d.inclusion = ContMap{d.space, x, members(keep)};
  return d;
}

Verdict is_locally_closed_map(const ContMap& f) {
  require_continuous(f);
  for (int p = 0; p < f.source->size(); ++p) {
    if (is_locally_closed_point(*f.source, p) && !is_locally_closed_point(*f.target, f.map[p])) {
      return Verdict::fail("locally closed point " + std::to_string(p) + " goes to " + std::to_string(f.map[p]));
    }
  }
  return Verdict::pass();
}

}  // namespace mtp
