#include "mtp/dmorph.hpp"

#include <algorithm>
#include <string>

#include "mtp/config.hpp"

namespace mtp {

DMorphismReport is_D_morphism_MT(const MTMorphism& f) {
  if (auto v = is_MT_morphism(f); !v) throw Error(ErrorKind::NotMTMorphism, v.witness);
  const std::vector<Mask> star = left_adjoint(f);
  DMorphismReport r;
  for (int x : lc_atoms(*f.target)) {
    const Mask s = star[bit(x)];
    if (!is_singleton(s) || !f.source->is_locally_closed(s)) r.witnesses.push_back(x);
  }
  r.is_D = r.witnesses.empty();
  return r;
}

DCrossCheck cross_check_D(const MTMorphism& f) {
  if (!is_T0(*f.source) || !is_T0(*f.target)) throw Error(ErrorKind::NotT0, "cross_check_D needs T0 algebras");
  DCrossCheck c{is_D_morphism_MT(f).is_D, false, true};
  const FrameMorphism of = open_part(f);
  c.frame_side = static_cast<bool>(is_D_morphism_frame(of));
  const std::vector<Mask> star = left_adjoint(f);
  const auto& src = f.source->open_frame().sets;
  for (int x = 0; x < f.target->atoms(); ++x) {
    const FramePoint up = open_filter(*f.target, bit(x));
    const FramePoint mine = open_filter(*f.source, star[bit(x)]);
    FramePoint pre;
    for (std::size_t u = 0; u < src.size(); ++u)
      if (std::binary_search(up.filter.begin(), up.filter.end(), of.map[u])) pre.filter.push_back(static_cast<int>(u));
    c.filters_match = c.filters_match && pre == mine;
  }
  return c;
}

MTMorphism chi(const MTRef& m) {
  const std::vector<int> lc = lc_atoms(*m);
  auto image = [&](Mask a) {
    Mask r = 0;
    for (std::size_t i = 0; i < lc.size(); ++i)
      if (a & bit(lc[i])) r |= bit(static_cast<int>(i));
    return r;
  };
  MTRef target;
  if (lc.empty()) {
    target = share(MTAlgebra::degenerate());
  } else {
    std::vector<Mask> opens;
    for (Mask u : m->opens()) opens.push_back(image(u));
    target = share(MTAlgebra(static_cast<int>(lc.size()), std::move(opens)));
  }
  MTMorphism c{m, target, std::vector<Mask>(m->size())};
  for (Mask a = 0; a < m->size(); ++a) c.map[a] = image(a);
  return c;
}

Reflection reflect(const MTMorphism& f) {
  DMorphismReport d = is_D_morphism_MT(f);
  if (!d.is_D) throw Error(ErrorKind::NotD, "f* misses local closedness at atom " + std::to_string(d.witnesses[0]));
  if (!is_TD(*f.target)) throw Error(ErrorKind::TargetNotTD, "reflect needs a TD target");
  const MTMorphism c = chi(f.source);
  const std::vector<int> lc = lc_atoms(*f.source);
  Reflection r{{c.target, f.target, std::vector<Mask>(c.target->size())}, false};
  for (Mask s = 1; s < r.hat.map.size(); ++s) r.hat.map[s] = r.hat.map[s & (s - 1)] | f.map[bit(lc[lowest(s)])];
  if (auto v = is_MT_morphism(r.hat); !v) throw Error(ErrorKind::InternalInconsistency, "f̂ is no MT-morphism: " + v.witness);
  if (compose(r.hat, c).map != f.map) throw Error(ErrorKind::InternalInconsistency, "f̂ ∘ χ differs from f");
  int closing = 0;
  for (const MTMorphism& g : enumerate_mt_morphisms(c.target, f.target)) closing += compose(g, c).map == f.map;
  r.unique = closing == 1;
  return r;
}

Coreflection td_coreflect(const ContMap& f) {
  if (!is_TD_space(*f.source)) throw Error(ErrorKind::SourceNotTD, "td_coreflect needs a TD source");
  if (auto v = is_locally_closed_map(f); !v) throw Error(ErrorKind::NotLocallyClosedMap, v.witness);
  const TDSubspace xd = td_subspace(f.target);
  const std::vector<int>& incl = xd.inclusion.map;
  Coreflection c{{f.source, xd.space, std::vector<int>(f.source->size())}, false};
  for (int y = 0; y < f.source->size(); ++y) {
    const auto it = std::find(incl.begin(), incl.end(), f.map[y]);
    c.hat.map[y] = static_cast<int>(it - incl.begin());
  }
  auto fail = [](const std::string& w) { throw Error(ErrorKind::InternalInconsistency, w); };
  if (!is_continuous(c.hat) || !is_locally_closed_map(c.hat)) fail("f̂ is not a locally closed map");
  if (compose(xd.inclusion, c.hat).map != f.map) fail("i_D ∘ f̂ differs from f");

  // Same factor through the algebra side: the reflection of 𝒫f is 𝒫f̂.
  const Reflection r = reflect(powerset_of_map(f));
  const MTMorphism ph = powerset_of_map(c.hat);
  if (!(*r.hat.source == *ph.source) || r.hat.map != ph.map) fail("reflection of 𝒫f is not 𝒫f̂");

  double total = 1;
  for (int y = 0; y < f.source->size(); ++y) total *= xd.space->size();
  if (total > static_cast<double>(guards().max_candidates)) throw Error(ErrorKind::TooLarge, "coreflection uniqueness search");
  ContMap g{f.source, xd.space, std::vector<int>(f.source->size(), 0)};
  int closing = 0;
  const int n = xd.space->size();
  for (bool more = n > 0 || f.source->size() == 0; more;) {
    closing += is_continuous(g) && compose(xd.inclusion, g).map == f.map;
    int y = 0;
    while (y < f.source->size() && ++g.map[y] == n) g.map[y++] = 0;
    more = y < f.source->size();
  }
  c.unique = closing == 1;
  return c;
}

bool inclusion_matches_chi(const SpaceRef& x) {
  const TDSubspace xd = td_subspace(x);
  const MTMorphism p = powerset_of_map(xd.inclusion);
  const MTMorphism c = chi(share(powerset_MT(*x)));
  return *p.target == *c.target && p.map == c.map;
}

}  // namespace mtp
