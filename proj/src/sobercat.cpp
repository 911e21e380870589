#include "mtp/sobercat.hpp"

#include <string>

#include "mtp/config.hpp"

namespace mtp {

namespace {

// λ_{sZ}⁻¹ ∘ s(g) : s_source.space → sz.space for g : Y → sZ.
ContMap lift_through(const ContMap& g, const Soberification& s_source, const Soberification& sz) {
  const Soberification ssz = soberify(sz.space);
  return compose(inverse(ssz.lambda), sober_lift(g, s_source, ssz));
}

[[noreturn]] void inconsistent(const std::string& w) { throw Error(ErrorKind::InternalInconsistency, w); }

}  // namespace

SoberMap make_sober_map(const SpaceRef& x, const Soberification& sy, std::vector<int> map) {
  SoberMap f{x, sy, ContMap{x, sy.space, std::move(map)}};
  if (f.carrier.map.size() != static_cast<std::size_t>(x->size())) {
    throw Error(ErrorKind::SourceTargetMismatch, "sober map table has the wrong length");
  }
  for (int p : f.carrier.map)
    if (p < 0 || p >= sy.space->size()) throw Error(ErrorKind::SourceTargetMismatch, "sober map leaves sY");
  require_continuous(f.carrier);
  return f;
}

SoberMap lambda_map(const SpaceRef& x) {
  Soberification sx = soberify(x);
  ContMap l = sx.lambda;
  return {x, std::move(sx), std::move(l)};
}

SoberMap Lambda(const ContMap& f) {
  require_continuous(f);
  Soberification sy = soberify(f.target);
  ContMap c = compose(sy.lambda, f);
  return {f.source, std::move(sy), std::move(c)};
}

std::vector<SoberMap> enumerate_sober_maps(const SpaceRef& x, const SpaceRef& y) {
  const Soberification sy = soberify(y);
  const int n = sy.space->size();
  double total = 1;
  for (int i = 0; i < x->size(); ++i) total *= n;
  if (total > static_cast<double>(guards().max_candidates)) throw Error(ErrorKind::TooLarge, "sober map enumeration");
  std::vector<SoberMap> out;
  if (n == 0 && x->size() > 0) return out;
  ContMap c{x, sy.space, std::vector<int>(x->size(), 0)};
  for (;;) {
    if (is_continuous(c)) out.push_back({x, sy, c});
    int i = 0;
    while (i < x->size() && ++c.map[i] == n) c.map[i++] = 0;
    if (i == x->size()) break;
  }
  return out;
}

ContMap sober_extension(const SoberMap& f) { return lift_through(f.carrier, soberify(f.source), f.target); }

SoberMap sober_compose(const SoberMap& g, const SoberMap& f) {
  if (!(*f.target.base == *g.source)) throw Error(ErrorKind::SourceTargetMismatch, "sober maps do not compose");
  ContMap c = compose(lift_through(g.carrier, f.target, g.target), f.carrier);
  return {f.source, g.target, std::move(c)};
}

std::optional<SoberMap> sober_inverse(const SoberMap& f) {
  const ContMap e = sober_extension(f);
  if (!is_homeomorphism(e)) return std::nullopt;
  Soberification sx = soberify(f.source);
  ContMap back = inverse(e);
  back.target = sx.space;
  ContMap c = compose(back, f.target.lambda);
  return SoberMap{f.target.base, std::move(sx), std::move(c)};
}

LiftH lift_h(const SpaceRef& x) {
  const Soberification sx = soberify(x);
  const MTRef px = share(powerset_MT(*x));
  const MTRef psx = share(powerset_MT(*sx.space));

  // Ω(λ_X)⁻¹ on opens of X.
  const SetFrame& ox = px->open_frame();
  std::vector<Mask> inv(ox.sets.size(), 0);
  std::vector<bool> seen(ox.sets.size(), false);
  for (Mask v : sx.space->opens()) {
    const int u = ox.index_of(sx.lambda.preimage(v));
    if (seen[u]) inconsistent("Ω(λ_X) is not injective");
    seen[u] = true;
    inv[u] = v;
  }
  auto omega_inv = [&](Mask u) { return inv[ox.index_of(u)]; };

  const ConsAlgebra cx = cons_algebra(px), csx = cons_algebra(psx);
  const ProxMap mid = extend_from_opens(cx.algebra, csx.algebra,
                                        [&](Mask u) { return csx.from_base(omega_inv(cx.to_base(u))); });
  LiftH h{x, star(zeta(csx), star(mid, phi(cx)))};

  const ProxMap closed_form = extend_from_opens(px, psx, omega_inv);
  if (!(closed_form == h.table)) inconsistent("h_X: composite and closed form differ");
  for (Mask u : px->opens())
    if (h.table(u) != omega_inv(u)) inconsistent("h_X differs from Ω(λ_X)⁻¹ at " + show(u));
  return h;
}

ProxMap Pp(const SoberMap& f, const LiftH& hy) {
  if (!(*hy.space == *f.target.base)) throw Error(ErrorKind::SourceTargetMismatch, "h_Y belongs to another space");
  const MTRef px = share(powerset_MT(*f.source));
  ProxMap p{hy.table.source, px, std::vector<Mask>(hy.table.map.size())};
  for (Mask a = 0; a < p.map.size(); ++a) p.map[a] = f.carrier.preimage(hy.table(a));
  for (Mask u : f.target.base->opens()) {
    Mask expect = 0;
    for (int x = 0; x < f.source->size(); ++x)
      if (!subset(u, f.target.primes[f.carrier.map[x]])) expect |= bit(x);
    if (p(u) != expect) inconsistent("𝒫ˢf on the open " + show(u) + " misses the points whose filter holds it");
  }
  return p;
}

ProxMap Pp(const SoberMap& f) { return Pp(f, lift_h(f.target.base)); }

SoberMap ats(const ProxMap& f) {
  require_proximity(f);
  const MTAlgebra& m = *f.source;
  const MTAlgebra& n = *f.target;
  const SpaceRef at_n = share(at_space(n));
  const Soberification s = soberify(share(at_space(m)));
  std::vector<int> map(n.atoms());
  for (int y = 0; y < n.atoms(); ++y) {
    Mask prime = 0;
    for (Mask a : m.opens())
      if (!(f(a) & bit(y))) prime |= a;
    map[y] = s.point_of(prime);
    if (map[y] < 0) inconsistent("atˢf(" + std::to_string(y) + ") is not a point");
  }

  // ψ ∘ pt(𝒪f) ∘ θ, with ψ sending a prime open of M to the same set in s at M.
  const Spectrum pt_n = pt_space(*n.open_frame().frame);
  const Spectrum pt_m = pt_space(*m.open_frame().frame);
  const ContMap th = theta(n);
  const ContMap pf = pt_map(open_restriction(f), pt_n, pt_m);
  std::vector<int> psi(pt_m.primes.size());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = s.point_of(m.open_frame().sets[pt_m.primes[i]]);
  for (int y = 0; y < n.atoms(); ++y)
    if (psi[pf.map[th.map[y]]] != map[y]) inconsistent("atˢf and ψ ∘ pt(𝒪f) ∘ θ differ at " + std::to_string(y));
  const ContMap th_m = theta(m);
  for (int x = 0; x < m.atoms(); ++x)
    if (psi[th_m.map[x]] != s.lambda.map[x]) inconsistent("ψ ∘ θ differs from λ at " + std::to_string(x));

  return make_sober_map(at_n, s, std::move(map));
}

SoberMap epsilon_hat(const SpaceRef& x) { return Lambda(epsilon(x)); }

ProxMap eta_hat(const MTRef& m) {
  ProxMap one = identity_prox(m);
  one.target = share(powerset_MT(at_space(*m)));
  return one;
}

Verdict epsilon_hat_natural(const SoberMap& f) {
  const SoberMap lhs = sober_compose(ats(Pp(f)), epsilon_hat(f.source));
  const SoberMap rhs = sober_compose(epsilon_hat(f.target.base), f);
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("ε̂ square differs on a point of a " + std::to_string(f.source->size()) + "-point space");
}

Verdict eta_hat_natural(const ProxMap& g) {
  const ProxMap lhs = star(Pp(ats(g)), eta_hat(g.source));
  const ProxMap rhs = star(eta_hat(g.target), g);
  for (Mask a = 0; a < lhs.map.size(); ++a)
    if (lhs(a) != rhs(a)) return Verdict::fail("η̂ square differs at " + show(a));
  return Verdict::pass();
}

Verdict ats_Pp_agrees(const SoberMap& f) {
  const SoberMap a = ats(Pp(f));
  for (int x = 0; x < f.source->size(); ++x)
    if (a.carrier.map[x] != f.carrier.map[x]) return Verdict::fail("atˢ𝒫ˢf moves point " + std::to_string(x));
  return Verdict::pass();
}

}  // namespace mtp
