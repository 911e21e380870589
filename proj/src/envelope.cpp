#include "mtp/envelope.hpp"

#include <algorithm>
#include <string>

#include "mtp/config.hpp"

namespace mtp {

namespace {

void require_bounded_lattice_hom(const Frame& l, int atoms, const std::vector<Mask>& h) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::NotBoundedLatticeHom, what); };
  if (h.size() != static_cast<std::size_t>(l.size())) fail("table size differs from the lattice");
  const Mask all = full_mask(atoms);
  for (Mask v : h)
    if (!subset(v, all)) fail("value " + show(v) + " outside the target");
  if (h[l.bottom()] != 0) fail("bottom not preserved");
  if (h[l.top()] != all) fail("top not preserved");
  for (int a = 0; a < l.size(); ++a)
    for (int b = a + 1; b < l.size(); ++b) {
      if (h[l.meet(a, b)] != (h[a] & h[b])) fail("meet of " + std::to_string(a) + ", " + std::to_string(b));
      if (h[l.join(a, b)] != (h[a] | h[b])) fail("join of " + std::to_string(a) + ", " + std::to_string(b));
    }
}

// The boolean homomorphism S ↦ {t : S contains pick[t]}.
std::vector<Mask> hom_from_picks(int source_atoms, const std::vector<int>& pick) {
  std::vector<Mask> out(std::size_t{1} << source_atoms);
  for (Mask s = 0; s < out.size(); ++s) {
    Mask r = 0;
    for (std::size_t t = 0; t < pick.size(); ++t)
      if (s >> pick[t] & 1) r |= bit(static_cast<int>(t));
    out[s] = r;
  }
  return out;
}

// Each target atom t sees a prime filter {a : t ∈ h(a)}; its least element is
// the irreducible that t picks.
std::vector<Mask> boolean_lift(const BooleanEnvelope& env, int atoms, const std::vector<Mask>& h) {
  const Frame& l = *env.base;
  std::vector<int> pick(atoms);
  for (int t = 0; t < atoms; ++t) {
    int least = l.top();
    for (int a = 0; a < l.size(); ++a)
      if (h[a] >> t & 1) least = l.meet(least, a);
    int i = 0;
    while (i < env.atoms() && env.irreducibles[i] != least) ++i;
    if (i == env.atoms()) throw Error(ErrorKind::InternalInconsistency, "prime filter without an irreducible base");
    pick[t] = i;
  }
  std::vector<Mask> out = hom_from_picks(env.atoms(), pick);
  for (int a = 0; a < l.size(); ++a)
    if (out[env.embed[a]] != h[a]) throw Error(ErrorKind::InternalInconsistency, "boolean lift misses h");
  return out;
}

}  // namespace

Mask BooleanEnvelope::interior(Mask b) const {
  Mask r = 0;
  for (Mask e : embed)
    if (subset(e, b)) r |= e;
  return r;
}

BooleanEnvelope boolean_envelope(const FrameRef& l) {
  BooleanEnvelope env{l, join_irreducibles(l->lattice()), {}};
  if (env.atoms() > 64) throw Error(ErrorKind::TooLarge, "more than 64 join-irreducibles");
  env.embed.resize(l->size());
  for (int a = 0; a < l->size(); ++a)
    for (int i = 0; i < env.atoms(); ++i)
      if (l->leq(env.irreducibles[i], a)) env.embed[a] |= bit(i);
  return env;
}

BooleanLift check_universal_property(const BooleanEnvelope& env, int atoms, const std::vector<Mask>& h) {
  require_bounded_lattice_hom(*env.base, atoms, h);
  BooleanLift out{boolean_lift(env, atoms, h), false};
  // Boolean homomorphisms 2^k → 2^atoms are exactly the maps of atoms back to 0..k-1.
  const int k = env.atoms();
  double total = 1;
  for (int t = 0; t < atoms; ++t) total *= k;
  if (total > static_cast<double>(guards().max_candidates)) {
    throw Error(ErrorKind::TooLarge, "uniqueness search over " + std::to_string(static_cast<long long>(total)) +
                                         " boolean homomorphisms");
  }
  std::vector<int> pick(atoms, 0);
  int agreeing = 0;
  for (;;) {
    const std::vector<Mask> cand = hom_from_picks(k, pick);
    bool same = true;
    for (int a = 0; a < env.base->size() && same; ++a) same = cand[env.embed[a]] == h[a];
    agreeing += same;
    int t = 0;
    while (t < atoms && ++pick[t] == k) pick[t++] = 0;
    if (t == atoms || k == 0) break;
  }
  out.unique = agreeing == 1;
  return out;
}

FunayamaEnvelope funayama(const FrameRef& l) {
  FunayamaEnvelope f{boolean_envelope(l), nullptr};
  const int k = f.boolean.atoms();
  if (k > 16) throw Error(ErrorKind::TooLarge, "Funayama envelope above 16 atoms");
  if (k == 0) {
    f.mt = share(MTAlgebra::degenerate());
    return f;
  }
  const std::size_t n = std::size_t{1} << k;
  if (k <= 6) {
    // Completion of a finite boolean lattice: must hand back the same carrier.
    std::vector<Mask> all(n);
    for (Mask s = 0; s < n; ++s) all[s] = s;
    Completion c = macneille_completion(Poset::of_sets(all));
    std::vector<bool> hit(c.lattice.size(), false);
    for (int x : c.embedding) hit[x] = true;
    if (c.lattice.size() != static_cast<int>(n) || std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw Error(ErrorKind::InternalInconsistency, "completion of a finite boolean algebra grew");
    }
  }
  f.mt = share(MTAlgebra(k, f.boolean.embed));
  if (n * l->size() <= (std::size_t{1} << 20)) {
    for (Mask a = 0; a < n; ++a)
      if (f.mt->box(a) != f.boolean.interior(a)) {
        throw Error(ErrorKind::InternalInconsistency, "lifted interior differs at " + show(a));
      }
  }
  return f;
}

FrameMorphism rho(const FunayamaEnvelope& f) {
  const SetFrame& opens = f.mt->open_frame();
  FrameMorphism r{f.boolean.base, opens.frame, std::vector<int>(f.boolean.embed.size())};
  for (std::size_t a = 0; a < r.map.size(); ++a) r.map[a] = opens.index_of(f.boolean.embed[a]);
  return r;
}

ProxMap lift_frame_morphism(const FrameMorphism& h, const FunayamaEnvelope& source, const FunayamaEnvelope& target) {
  if (auto v = is_frame_morphism(h); !v) throw Error(ErrorKind::NotFrameMorphism, v.witness);
  if (!(*h.source == *source.boolean.base) || !(*h.target == *target.boolean.base)) {
    throw Error(ErrorKind::SourceTargetMismatch, "envelopes do not match the frame morphism");
  }
  std::vector<Mask> via_e(h.map.size());
  for (std::size_t a = 0; a < h.map.size(); ++a) via_e[a] = target.boolean.embed[h.map[a]];
  const std::vector<Mask> bh = boolean_lift(source.boolean, target.boolean.atoms(), via_e);
  ProxMap f = extend_from_lc(source.mt, target.mt, [&](Mask x) { return bh[x]; });
  if (f.map != bh) throw Error(ErrorKind::InternalInconsistency, "ℱh differs from ℬh on the envelope");
  return f;
}

ProxMap lift_frame_morphism(const FrameMorphism& h) {
  return lift_frame_morphism(h, funayama(h.source), funayama(h.target));
}

Mask ConsAlgebra::to_base(Mask a) const {
  Mask r = 0;
  for (int i : members(a)) r |= blocks[i];
  return r;
}

Mask ConsAlgebra::from_base(Mask c) const {
  Mask r = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (subset(blocks[i], c)) r |= bit(static_cast<int>(i));
  if (to_base(r) != c) throw Error(ErrorKind::InvalidInput, show(c) + " is not constructible");
  return r;
}

ConsAlgebra cons_algebra(const MTRef& m) {
  ConsAlgebra c{m, nullptr, m->blocks()};
  if (c.blocks.empty()) {
    c.algebra = share(MTAlgebra::degenerate());
    return c;
  }
  std::vector<Mask> opens;
  for (Mask u : m->opens()) opens.push_back(c.from_base(u));
  c.algebra = share(MTAlgebra(static_cast<int>(c.blocks.size()), std::move(opens)));
  return c;
}

ProxMap zeta(const ConsAlgebra& c) {
  const ProxMap one = identity_prox(c.base);
  ProxMap z{c.algebra, c.base, std::vector<Mask>(c.algebra->size())};
  for (Mask a = 0; a < z.map.size(); ++a) z.map[a] = one(c.to_base(a));
  return z;
}

ProxMap phi(const ConsAlgebra& c) {
  const ProxMap one = identity_prox(c.base);
  ProxMap p{c.base, c.algebra, std::vector<Mask>(c.base->size())};
  for (Mask b = 0; b < p.map.size(); ++b) p.map[b] = c.from_base(one(b));
  return p;
}

FrameMorphism rho_cons(const ConsAlgebra& c) {
  const SetFrame& src = c.base->open_frame();
  const SetFrame& dst = c.algebra->open_frame();
  FrameMorphism r{src.frame, dst.frame, std::vector<int>(src.sets.size())};
  for (std::size_t i = 0; i < src.sets.size(); ++i) r.map[i] = dst.index_of(c.from_base(src.sets[i]));
  return r;
}

ProxMap fo_map(const ProxMap& g, const ConsAlgebra& source, const ConsAlgebra& target) {
  if (!(*g.source == *source.base) || !(*g.target == *target.base)) {
    throw Error(ErrorKind::SourceTargetMismatch, "fo_map: constructible algebras do not match g");
  }
  open_restriction(g);  // throws unless opens go to opens
  return extend_from_opens(source.algebra, target.algebra,
                           [&](Mask u) { return target.from_base(g(source.to_base(u))); });
}

std::vector<int> cons_vs_birkhoff(const ConsAlgebra& c) {
  const SetFrame& opens = c.base->open_frame();
  const FunayamaEnvelope b = funayama(opens.frame);
  auto fail = [](const std::string& w) { throw Error(ErrorKind::InternalInconsistency, w); };
  if (b.boolean.atoms() != static_cast<int>(c.blocks.size())) fail("block count differs from irreducible count");
  // A block corresponds to the least open containing it, which is irreducible.
  std::vector<int> to(c.blocks.size(), -1);
  Mask used = 0;
  for (std::size_t i = 0; i < c.blocks.size(); ++i) {
    const int j = opens.index_of(c.base->min_open(lowest(c.blocks[i])));
    for (int k = 0; k < b.boolean.atoms(); ++k)
      if (b.boolean.irreducibles[k] == j) to[i] = k;
    if (to[i] < 0 || (used & bit(to[i]))) fail("block " + show(c.blocks[i]) + " has no irreducible of its own");
    used |= bit(to[i]);
  }
  for (std::size_t u = 0; u < opens.sets.size(); ++u) {
    Mask img = 0;
    for (int i : members(c.from_base(opens.sets[u]))) img |= bit(to[i]);
    if (img != b.boolean.embed[u]) fail("open " + show(opens.sets[u]) + " lands elsewhere in the Birkhoff envelope");
  }
  return to;
}

EnvelopeComparison td_iff_envelope(const MTRef& m) {
  const FunayamaEnvelope f = funayama(m->open_frame().frame);
  return {is_TD(*m), find_homeomorphism(m->space(), f.mt->space()).has_value()};
}

}  // namespace mtp
