#include "mtp/mt.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "mtp/config.hpp"

namespace mtp {

namespace {

void sort_unique(std::vector<Mask>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

SpaceRef share_space(FinSpace s) { return std::make_shared<const FinSpace>(std::move(s)); }

}  // namespace

MTAlgebra::MTAlgebra(int atoms, std::vector<Mask> opens) {
  if (atoms < 1 || atoms > 16) throw Error(ErrorKind::InvalidMTAlgebra, "atom count must be in 1..16");
  check_carrier_size(std::size_t{1} << atoms, "MT-algebra");
  try {
    space_ = FinSpace(atoms, std::move(opens));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidMTAlgebra, e.detail());
  }
  if (auto v = kuratowski_check(*this); !v) throw Error(ErrorKind::InvalidMTAlgebra, v.witness);
  index();
}

MTAlgebra MTAlgebra::degenerate() {
  MTAlgebra m;
  m.index();
  return m;
}

void MTAlgebra::index() {
  lc_.clear();
  for (Mask a = 0; a < size(); ++a)
    if (is_locally_closed(a)) lc_.push_back(a);
  blocks_.clear();
  Mask seen = 0;
  for (int x = 0; x < atoms(); ++x) {
    if (seen & bit(x)) continue;
    Mask block = 0;
    for (int y = x; y < atoms(); ++y)
      if (min_open(y) == min_open(x)) block |= bit(y);
    seen |= block;
    blocks_.push_back(block);
  }
  open_frame_ = std::make_shared<const SetFrame>(set_frame(opens()));
}

Mask MTAlgebra::saturation(Mask a) const {
  Mask r = 0;
  for (int x : members(a)) r |= min_open(x);
  return r;
}

Mask MTAlgebra::cons_hull(Mask a) const {
  Mask r = 0;
  for (Mask b : blocks_)
    if (b & a) r |= b;
  return r;
}

bool MTAlgebra::is_locally_closed(Mask a) const {
  // a = u ∧ c forces c ≥ ◇a, and □(a ∨ ¬◇a) is the largest usable u.
  const Mask c = diamond(a);
  return a == (c & box(a | neg(c)));
}

bool MTAlgebra::is_weakly_locally_closed(Mask a) const { return a == (saturation(a) & diamond(a)); }

Families element_families(const MTAlgebra& m) {
  Families f;
  f.opens = m.opens();
  for (Mask u : f.opens) f.closeds.push_back(m.neg(u));
  sort_unique(f.closeds);
  for (Mask u : f.opens)
    for (Mask c : f.closeds) f.locally_closed.push_back(u & c);
  sort_unique(f.locally_closed);

  f.constructible = f.locally_closed;
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t sz = f.constructible.size();
    for (std::size_t i = 0; i < sz && !grew; ++i) {
      for (std::size_t j = i + 1; j < sz && !grew; ++j) {
        Mask u = f.constructible[i] | f.constructible[j];
        if (!std::binary_search(f.constructible.begin(), f.constructible.end(), u)) {
          f.constructible.insert(std::lower_bound(f.constructible.begin(), f.constructible.end(), u), u);
          grew = true;
        }
      }
    }
  }

  // Meets of opens, including the empty meet.
  f.saturated = {m.top()};
  for (bool grew = true; grew;) {
    grew = false;
    for (Mask u : f.opens) {
      for (std::size_t i = 0; i < f.saturated.size(); ++i) {
        Mask s = f.saturated[i] & u;
        if (!std::binary_search(f.saturated.begin(), f.saturated.end(), s)) {
          f.saturated.insert(std::lower_bound(f.saturated.begin(), f.saturated.end(), s), s);
          grew = true;
        }
      }
    }
  }
  for (Mask s : f.saturated)
    for (Mask c : f.closeds) f.weakly_locally_closed.push_back(s & c);
  sort_unique(f.weakly_locally_closed);
  return f;
}

Mask implication(const MTAlgebra& m, Mask u, Mask v) { return m.box(m.neg(u) | v); }

Mask co_implication(const MTAlgebra& m, Mask c, Mask d) { return m.diamond(d & m.neg(c)); }

Verdict kuratowski_check(const MTAlgebra& m, int pairwise_atoms) {
  if (m.box(m.top()) != m.top()) return Verdict::fail("□1 != 1");
  for (Mask a = 0; a < m.size(); ++a) {
    const Mask b = m.box(a);
    if (!subset(b, a)) return Verdict::fail("□a ≰ a at " + show(a));
    if (m.box(b) != b) return Verdict::fail("□□a != □a at " + show(a));
    if (!m.is_open(b)) return Verdict::fail("□a not open at " + show(a));
  }
  if (m.atoms() > pairwise_atoms) return Verdict::pass();
  for (Mask a = 0; a < m.size(); ++a) {
    for (Mask b = a + 1; b < m.size(); ++b) {
      if (m.box(a & b) != (m.box(a) & m.box(b))) {
        return Verdict::fail("□(a∧b) != □a∧□b at " + show(a) + ", " + show(b));
      }
    }
    for (Mask u : m.opens()) {
      if (subset(u, a) != subset(u, m.box(a))) return Verdict::fail("□ not right adjoint at " + show(a));
    }
  }
  return Verdict::pass();
}

bool is_T0(const MTAlgebra& m) {
  for (int x = 0; x < m.atoms(); ++x)
    if (!m.is_weakly_locally_closed(bit(x))) return false;
  return true;
}

bool is_TD(const MTAlgebra& m) {
  for (int x = 0; x < m.atoms(); ++x)
    if (!m.is_locally_closed(bit(x))) return false;
  return true;
}

namespace {

bool join_generates(const MTAlgebra& m, const std::vector<Mask>& family) {
  for (Mask a = 0; a < m.size(); ++a) {
    Mask j = 0;
    for (Mask x : family)
      if (subset(x, a)) j |= x;
    if (j != a) return false;
  }
  return true;
}

}  // namespace

bool lc_join_generates(const MTAlgebra& m) { return join_generates(m, m.locally_closed()); }

bool wlc_join_generates(const MTAlgebra& m) { return join_generates(m, element_families(m).weakly_locally_closed); }

FinSpace at_space(const MTAlgebra& m) { return m.space(); }

std::vector<int> lc_atoms(const MTAlgebra& m) {
  std::vector<int> out;
  for (int x = 0; x < m.atoms(); ++x)
    if (m.is_locally_closed(bit(x))) out.push_back(x);
  return out;
}

FinSpace atD_space(const MTAlgebra& m) { return subspace(m.space(), mask_of(lc_atoms(m))); }

namespace {

// Frame index of ⋁{u open : x ∉ u}, the prime of ↑x ∩ 𝒪M.
int prime_of_atom(const MTAlgebra& m, int x) {
  Mask p = 0;
  for (Mask u : m.opens())
    if (!(u & bit(x))) p |= u;
  return m.open_frame().index_of(p);
}

}  // namespace

ContMap theta(const MTAlgebra& m) {
  Spectrum pt = pt_space(*m.open_frame().frame);
  std::vector<int> map(m.atoms());
  for (int x = 0; x < m.atoms(); ++x) map[x] = pt.point_of(prime_of_atom(m, x));
  return {share_space(at_space(m)), share_space(pt.space), std::move(map)};
}

ContMap theta_prime(const MTAlgebra& m) {
  Spectrum ptd = ptD_space(*m.open_frame().frame);
  const std::vector<int> atoms = lc_atoms(m);
  std::vector<int> map(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) map[i] = ptd.point_of(prime_of_atom(m, atoms[i]));
  return {share_space(atD_space(m)), share_space(ptd.space), std::move(map)};
}

FramePoint open_filter(const MTAlgebra& m, Mask x) {
  FramePoint f;
  const auto& sets = m.open_frame().sets;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (subset(x, sets[i])) f.filter.push_back(static_cast<int>(i));
  return f;
}

int witness_atom(const MTAlgebra& m, const FramePoint& f) {
  if (!is_T0(m)) throw Error(ErrorKind::NotT0, "witness_atom needs a T0 algebra");
  const Frame& frame = *m.open_frame().frame;
  if (!is_slicing_filter(frame, f.filter)) throw Error(ErrorKind::NotSlicing, "filter is not slicing");
  const auto& sets = m.open_frame().sets;
  Mask x = m.top();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (std::binary_search(f.filter.begin(), f.filter.end(), static_cast<int>(i))) {
      x &= sets[i];
    } else {
      x &= m.neg(sets[i]);
    }
  }
  if (!is_singleton(x)) throw Error(ErrorKind::InternalInconsistency, "witness " + show(x) + " is not an atom");
  if (!(open_filter(m, x) == f)) throw Error(ErrorKind::InternalInconsistency, "witness does not recover the filter");
  if (!m.is_locally_closed(x)) throw Error(ErrorKind::InternalInconsistency, "witness is not locally closed");
  return lowest(x);
}

std::optional<Mask> atom_characterization_counterexample(const MTAlgebra& m) {
  for (Mask x = 0; x < m.size(); ++x) {
    bool condition = true;
    for (Mask u : m.opens()) condition = condition && subset(x, u) == !subset(x, m.neg(u));
    if (condition != is_singleton(x)) return x;
  }
  return std::nullopt;
}

bool atom_T0_characterization(const MTAlgebra& m) {
  if (!is_T0(m)) throw Error(ErrorKind::NotT0, "atom characterization needs a T0 algebra");
  return !atom_characterization_counterexample(m).has_value();
}

MTMorphism mt_from_atom_images(const MTRef& source, const MTRef& target, const std::vector<Mask>& atom_images) {
  if (static_cast<int>(atom_images.size()) != source->atoms()) {
    throw Error(ErrorKind::InvalidInput, "one image per source atom expected");
  }
  MTMorphism f{source, target, std::vector<Mask>(source->size(), 0)};
  for (Mask a = 1; a < source->size(); ++a) f.map[a] = f.map[a & (a - 1)] | atom_images[lowest(a)];
  return f;
}

Verdict is_MT_morphism(const MTMorphism& f) {
  const MTAlgebra& m = *f.source;
  const MTAlgebra& n = *f.target;
  if (f.map.size() != m.size()) return Verdict::fail("table size differs from source");
  for (Mask a = 0; a < m.size(); ++a)
    if (!subset(f.map[a], n.top())) return Verdict::fail("value out of range at " + show(a));
  if (f.map[0] != 0) return Verdict::fail("0 not preserved");
  if (f.map[m.top()] != n.top()) return Verdict::fail("1 not preserved");
  Mask seen = 0;
  for (int x = 0; x < m.atoms(); ++x) {
    if (f.map[bit(x)] & seen) return Verdict::fail("atom images overlap at " + std::to_string(x));
    seen |= f.map[bit(x)];
  }
  for (Mask a = 1; a < m.size(); ++a) {
    if (f.map[a] != (f.map[a & (a - 1)] | f.map[bit(lowest(a))])) {
      return Verdict::fail("joins not preserved at " + show(a));
    }
  }
  for (Mask a = 0; a < m.size(); ++a) {
    if (!subset(f.map[m.box(a)], n.box(f.map[a]))) return Verdict::fail("h(□a) ≰ □h(a) at " + show(a));
  }
  return Verdict::pass();
}

MTMorphism identity_mt(const MTRef& m) {
  MTMorphism f{m, m, std::vector<Mask>(m->size())};
  for (Mask a = 0; a < m->size(); ++a) f.map[a] = a;
  return f;
}

MTMorphism compose(const MTMorphism& g, const MTMorphism& f) {
  if (!(*f.target == *g.source)) throw Error(ErrorKind::SourceTargetMismatch, "compose: algebras differ");
  MTMorphism h{f.source, g.target, std::vector<Mask>(f.map.size())};
  for (std::size_t a = 0; a < f.map.size(); ++a) h.map[a] = g.map[f.map[a]];
  return h;
}

std::vector<MTMorphism> enumerate_mt_morphisms(const MTRef& source, const MTRef& target) {
  // A boolean homomorphism is fixed by which source atom covers each target atom.
  std::vector<MTMorphism> out;
  const int m = source->atoms();
  const int n = target->atoms();
  if (m == 0) {
    if (n == 0) out.push_back(identity_mt(source));
    return out;
  }
  std::vector<int> owner(n, 0);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(m);
    if (total > guards().max_elements) throw Error(ErrorKind::TooLarge, "MT-morphism enumeration");
  }
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<Mask> images(m, 0);
    for (int y = 0; y < n; ++y) {
      images[c % m] |= bit(y);
      c /= m;
    }
    MTMorphism f = mt_from_atom_images(source, target, images);
    if (is_MT_morphism(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Mask> left_adjoint(const MTMorphism& f) {
  const MTAlgebra& m = *f.source;
  std::vector<Mask> star(f.target->size(), 0);
  for (Mask b = 1; b < f.target->size(); ++b) {
    const Mask y = bit(lowest(b));
    Mask x = 0;
    for (int a = 0; a < m.atoms(); ++a)
      if (f.map[bit(a)] & y) x |= bit(a);
    star[b] = star[b & (b - 1)] | x;
  }
  return star;
}

ContMap dual_map(const MTMorphism& f) {
  const std::vector<Mask> star = left_adjoint(f);
  std::vector<int> map(f.target->atoms());
  for (int y = 0; y < f.target->atoms(); ++y) {
    if (!is_singleton(star[bit(y)])) throw Error(ErrorKind::NotMTMorphism, "f* of an atom is not an atom");
    map[y] = lowest(star[bit(y)]);
  }
  return {share_space(at_space(*f.target)), share_space(at_space(*f.source)), std::move(map)};
}

FrameMorphism open_part(const MTMorphism& f) {
  const SetFrame& src = f.source->open_frame();
  const SetFrame& dst = f.target->open_frame();
  FrameMorphism g{src.frame, dst.frame, std::vector<int>(src.sets.size())};
  for (std::size_t i = 0; i < src.sets.size(); ++i) {
    const Mask v = f.map[src.sets[i]];
    if (!f.target->is_open(v)) throw Error(ErrorKind::NotMTMorphism, "open " + show(src.sets[i]) + " not sent to an open");
    g.map[i] = dst.index_of(v);
  }
  return g;
}

}  // namespace mtp
