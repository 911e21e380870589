#include "mtp/proximity.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mtp/config.hpp"

namespace mtp {

namespace {

std::string show_family(const std::vector<Mask>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + show(s[i]);
  return out + "]";
}

// r[a] = ⋁{v[x] : x ≤ a} over the given seeds, by an OR-transform over subsets.
std::vector<Mask> subset_or_transform(int atoms, std::vector<Mask> r) {
  for (int i = 0; i < atoms; ++i)
    for (Mask a = 0; a < r.size(); ++a)
      if (a & bit(i)) r[a] |= r[a ^ bit(i)];
  return r;
}

bool table_in_range(const ProxMap& f, std::string& why) {
  if (f.map.size() != f.source->size()) {
    why = "table has " + std::to_string(f.map.size()) + " entries for " + std::to_string(f.source->size());
    return false;
  }
  for (Mask a = 0; a < f.map.size(); ++a) {
    if (!subset(f.map[a], f.target->top())) {
      why = "value at " + show(a) + " out of range";
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Mask> constructible_elements(const MTAlgebra& m) {
  std::vector<Mask> out;
  for (Mask a = 0; a < m.size(); ++a)
    if (m.is_constructible(a)) out.push_back(a);
  return out;
}

Verdict check_S_axioms(const MTAlgebra& m, const std::vector<Mask>& b) {
  if (m.atoms() > 6) throw Error(ErrorKind::TooLarge, "S-axiom check above 6 atoms");
  auto in_b = [&](Mask c) { return std::binary_search(b.begin(), b.end(), c); };
  if (!std::is_sorted(b.begin(), b.end())) throw Error(ErrorKind::NotSubalgebra, "family must be sorted");
  if (!in_b(0) || !in_b(m.top())) throw Error(ErrorKind::NotSubalgebra, "missing 0 or 1");
  for (Mask c : b) {
    if (!subset(c, m.top()) || !in_b(m.neg(c))) throw Error(ErrorKind::NotSubalgebra, "not closed under ¬ at " + show(c));
    for (Mask d : b)
      if (!in_b(c | d)) throw Error(ErrorKind::NotSubalgebra, "not closed under ∨ at " + show(c) + ", " + show(d));
  }
  std::vector<Mask> hull(m.size());
  for (Mask a = 0; a < m.size(); ++a) {
    hull[a] = m.top();
    for (Mask c : b)
      if (subset(a, c)) hull[a] &= c;
  }
  auto prec = [&](Mask a, Mask c) { return subset(hull[a], c); };
  const Mask n = m.size();

  if (!prec(m.top(), m.top())) return Verdict::fail("S1");
  for (Mask a = 0; a < n; ++a) {
    for (Mask c = 0; c < n; ++c) {
      if (!prec(a, c)) continue;
      if (!subset(a, c)) return Verdict::fail("S2 at " + show(a) + ", " + show(c));
      if (!prec(m.neg(c), m.neg(a))) return Verdict::fail("S5 at " + show(a) + ", " + show(c));
      bool between = false;
      for (Mask d : b) between = between || (prec(a, d) && prec(d, c));
      if (!between) return Verdict::fail("S6 at " + show(a) + ", " + show(c));
      // S3: every a0 ≤ a and c0 ≥ c.
      for (Mask a0 = a;; a0 = (a0 - 1) & a) {
        for (Mask c0 = c; c0 < n; c0 = (c0 + 1) | c)
          if (!prec(a0, c0)) return Verdict::fail("S3 at " + show(a0) + ", " + show(c0));
        if (a0 == 0) break;
      }
      for (Mask d = 0; d < n; ++d)
        if (prec(a, d) && !prec(a, c & d)) return Verdict::fail("S4 at " + show(a) + ", " + show(c) + ", " + show(d));
    }
  }
  return Verdict::pass();
}

bool is_deVries(const MTAlgebra& m) {
  for (Mask a = 0; a < m.size(); ++a) {
    Mask j = 0;
    for (Mask c = a;; c = (c - 1) & a) {
      if (cons_below(m, c, a)) j |= c;
      if (c == 0) break;
    }
    if (j != a) return false;
  }
  return true;
}

std::string ProximityReport::first_failure() const {
  if (!p1.ok) return "P1: " + p1.witness;
  if (!p2.ok) return "P2: " + p2.witness;
  if (!p3.ok) return "P3: " + p3.witness;
  if (!p4.ok) return "P4: " + p4.witness;
  return {};
}

ProximityReport check_proximity(const ProxMap& f) {
  ProximityReport r;
  std::string why;
  if (!table_in_range(f, why)) {
    r.p1 = r.p2 = r.p3 = r.p4 = Verdict::fail(why);
    return r;
  }
  const MTAlgebra& m = *f.source;
  const MTAlgebra& n = *f.target;

  for (Mask u : m.opens()) {
    if (!n.is_open(f(u))) {
      r.p1 = Verdict::fail("open " + show(u) + " goes to " + show(f(u)));
      break;
    }
  }
  if (r.p1.ok && f(0) != 0) r.p1 = Verdict::fail("0 not preserved");
  if (r.p1.ok && f(m.top()) != n.top()) r.p1 = Verdict::fail("1 not preserved");
  for (std::size_t i = 0; i < m.opens().size() && r.p1.ok; ++i) {
    for (std::size_t j = i + 1; j < m.opens().size(); ++j) {
      const Mask u = m.opens()[i], v = m.opens()[j];
      if (f(u & v) != (f(u) & f(v))) {
        r.p1 = Verdict::fail("meet of opens " + show(u) + ", " + show(v));
        break;
      }
      if (f(u | v) != (f(u) | f(v))) {
        r.p1 = Verdict::fail("join of opens " + show(u) + ", " + show(v));
        break;
      }
    }
  }

  for (Mask a = 0; a < m.size() && r.p2.ok; ++a) {
    for (Mask b = a + 1; b < m.size(); ++b) {
      if (f(a & b) != (f(a) & f(b))) {
        r.p2 = Verdict::fail("meet of " + show(a) + ", " + show(b));
        break;
      }
    }
  }

  // P3: walk every join of locally closed elements, remembering how it was reached.
  {
    std::vector<std::pair<Mask, Mask>> parent(m.size(), {~Mask{0}, 0});
    std::vector<Mask> reached{0};
    parent[0] = {0, 0};
    if (f(0) != 0) r.p3 = Verdict::fail("empty join: f(0) = " + show(f(0)));
    for (Mask x : m.locally_closed()) {
      if (!r.p3.ok) break;
      const std::size_t sz = reached.size();
      for (std::size_t i = 0; i < sz; ++i) {
        const Mask j = reached[i];
        const Mask nj = j | x;
        if (f(nj) != (f(j) | f(x))) {
          std::vector<Mask> family{x};
          for (Mask k = j; k != 0; k = parent[k].first) family.push_back(parent[k].second);
          r.p3 = Verdict::fail("join of " + show_family(family));
          break;
        }
        if (parent[nj].first == ~Mask{0}) {
          parent[nj] = {j, x};
          reached.push_back(nj);
        }
      }
    }
  }

  {
    std::vector<Mask> seeds(m.size(), 0);
    for (Mask x : m.locally_closed()) seeds[x] = f(x);
    const std::vector<Mask> ext = subset_or_transform(m.atoms(), std::move(seeds));
    for (Mask a = 0; a < m.size(); ++a) {
      if (ext[a] != f(a)) {
        r.p4 = Verdict::fail("at " + show(a) + ": " + show(f(a)) + " vs " + show(ext[a]));
        break;
      }
    }
  }
  return r;
}

void require_proximity(const ProxMap& f) {
  ProximityReport r = check_proximity(f);
  if (!r.ok()) throw Error(ErrorKind::NotProximityMorphism, r.first_failure());
}

ProxMap extend_from_lc(const MTRef& source, const MTRef& target, const std::function<Mask(Mask)>& v) {
  std::vector<Mask> seeds(source->size(), 0);
  for (Mask x : source->locally_closed()) seeds[x] = v(x);
  return {source, target, subset_or_transform(source->atoms(), std::move(seeds))};
}

ProxMap extend_from_opens(const MTRef& source, const MTRef& target, const std::function<Mask(Mask)>& h) {
  const MTAlgebra& m = *source;
  return extend_from_lc(source, target, [&](Mask x) {
    const Mask c = m.diamond(x);
    const Mask u = m.box(x | m.neg(c));
    const Mask v = m.neg(c);
    return h(u) & target->neg(h(v));
  });
}

ProxMap extend_from_frame_morphism(const MTRef& source, const MTRef& target, const FrameMorphism& h) {
  const SetFrame& src = source->open_frame();
  const SetFrame& dst = target->open_frame();
  return extend_from_opens(source, target, [&](Mask u) { return dst.sets[h.map[src.index_of(u)]]; });
}

ProxMap identity_prox(const MTRef& m) {
  return extend_from_lc(m, m, [](Mask x) { return x; });
}

ProxMap star(const ProxMap& g, const ProxMap& f) {
  if (!(*f.target == *g.source)) throw Error(ErrorKind::SourceTargetMismatch, "star: algebras differ");
  return extend_from_lc(f.source, g.target, [&](Mask x) { return g(f(x)); });
}

ProxMap gamma(const MTMorphism& g) {
  if (auto v = is_MT_morphism(g); !v) throw Error(ErrorKind::NotMTMorphism, v.witness);
  const ProxMap one = identity_prox(g.source);
  ProxMap r{g.source, g.target, std::vector<Mask>(g.map.size())};
  for (std::size_t a = 0; a < g.map.size(); ++a) r.map[a] = g.map[one(a)];
  return r;
}

FrameMorphism open_restriction(const ProxMap& f) {
  const SetFrame& src = f.source->open_frame();
  const SetFrame& dst = f.target->open_frame();
  FrameMorphism g{src.frame, dst.frame, std::vector<int>(src.sets.size())};
  for (std::size_t i = 0; i < src.sets.size(); ++i) {
    const Mask v = f(src.sets[i]);
    if (!f.target->is_open(v)) {
      throw Error(ErrorKind::NotProximityMorphism, "open " + show(src.sets[i]) + " not sent to an open");
    }
    g.map[i] = dst.index_of(v);
  }
  return g;
}

DerivedReport derived_properties(const ProxMap& f) {
  require_proximity(f);
  const MTAlgebra& m = *f.source;
  const MTAlgebra& n = *f.target;
  DerivedReport r;

  std::vector<Mask> closeds;
  for (Mask u : m.opens()) closeds.push_back(m.neg(u));
  std::sort(closeds.begin(), closeds.end());

  for (const std::vector<Mask>* family : {&m.opens(), static_cast<const std::vector<Mask>*>(&closeds)}) {
    for (Mask x : *family) {
      if (r.complements.ok && f(m.neg(x)) != n.neg(f(x))) r.complements = Verdict::fail("¬ at " + show(x));
    }
  }

  if (f(0) != 0 || f(m.top()) != n.top()) r.coframe_on_closeds = Verdict::fail("bounds");
  for (Mask c : closeds) {
    if (!r.coframe_on_closeds.ok) break;
    if (!n.is_closed(f(c))) {
      r.coframe_on_closeds = Verdict::fail("closed " + show(c) + " goes to " + show(f(c)));
      break;
    }
    for (Mask d : closeds) {
      if (f(c | d) != (f(c) | f(d)) || f(c & d) != (f(c) & f(d))) {
        r.coframe_on_closeds = Verdict::fail("closeds " + show(c) + ", " + show(d));
        break;
      }
    }
  }

  for (Mask x : m.locally_closed()) {
    if (!n.is_locally_closed(f(x))) {
      r.lc_to_lc = Verdict::fail(show(x) + " goes to " + show(f(x)));
      break;
    }
  }

  const std::vector<Mask> cons = constructible_elements(m);
  for (Mask c : cons) {
    if (!r.boolean_on_cons.ok) break;
    if (!n.is_constructible(f(c)) || f(m.neg(c)) != n.neg(f(c))) {
      r.boolean_on_cons = Verdict::fail("at " + show(c));
      break;
    }
    for (Mask d : cons) {
      if (f(c | d) != (f(c) | f(d)) || f(c & d) != (f(c) & f(d))) {
        r.boolean_on_cons = Verdict::fail("at " + show(c) + ", " + show(d));
        break;
      }
    }
  }

  if (!r.ok()) throw Error(ErrorKind::InternalInconsistency, "verified proximity morphism breaks a derived property");
  return r;
}

Formulations equivalent_formulations(const ProxMap& f) {
  if (f.source->atoms() > 4) throw Error(ErrorKind::TooLarge, "formulation check above 4 atoms");
  ProximityReport r = check_proximity(f);
  if (!r.p1.ok || !r.p2.ok || !r.p4.ok) throw Error(ErrorKind::NotProximityMorphism, r.first_failure());
  const MTAlgebra& m = *f.source;
  const MTAlgebra& n = *f.target;
  std::vector<std::pair<Mask, Mask>> below;
  for (Mask a = 0; a < m.size(); ++a)
    for (Mask b = 0; b < m.size(); ++b)
      if (cons_below(m, a, b)) below.emplace_back(a, b);

  Formulations out{r.p3.ok, true, true};
  for (auto [a1, b1] : below) {
    for (auto [a2, b2] : below) {
      if (!cons_below(n, f(a1 | a2), f(b1) | f(b2))) {
        out.two_pair = false;
        break;
      }
    }
    if (!out.two_pair) break;
  }
  for (auto [a, b] : below) {
    if (!cons_below(n, n.neg(f(m.neg(a))), f(b))) {
      out.negation = false;
      break;
    }
  }
  return out;
}

Classification classify_morphism(const ProxMap& f) {
  const FrameMorphism g = open_restriction(f);
  Classification c{};
  std::vector<int> seen(g.target->size(), 0);
  bool injective = true;
  for (int v : g.map) injective = injective && seen[v]++ == 0;
  const bool surjective = std::find(seen.begin(), seen.end(), 0) == seen.end();
  c.mono = injective;
  c.iso = injective && surjective;

  const Spectrum pt_src = pt_space(*g.source);
  const Spectrum pt_dst = pt_space(*g.target);
  const ContMap points = pt_map(g, pt_dst, pt_src);
  std::vector<int> images = points.map;
  std::sort(images.begin(), images.end());
  c.epi = std::adjacent_find(images.begin(), images.end()) == images.end();

  if (is_TD(*f.source) && is_TD(*f.target)) {
    bool order_iso = f.source->size() == f.target->size();
    if (order_iso) {
      std::vector<Mask> values = f.map;
      std::sort(values.begin(), values.end());
      order_iso = std::adjacent_find(values.begin(), values.end()) == values.end();
    }
    for (Mask a = 0; a < f.source->size() && order_iso; ++a)
      for (Mask b = 0; b < f.source->size() && order_iso; ++b)
        order_iso = subset(a, b) == subset(f(a), f(b));
    if (order_iso) {
      ProxMap inverse{f.target, f.source, std::vector<Mask>(f.map.size())};
      for (Mask a = 0; a < f.source->size(); ++a) inverse.map[f(a)] = a;
      order_iso = is_proximity_morphism(inverse);
    }
    c.order_iso = order_iso;
    if (order_iso != c.iso) throw Error(ErrorKind::InternalInconsistency, "iso flag disagrees with order isomorphism");
  }
  return c;
}

std::vector<ProxMap> enumerate_proximity_morphisms(const MTRef& m, const MTRef& n) {
  const MTAlgebra& src = *m;
  const MTAlgebra& dst = *n;
  std::vector<Mask> free_lc;
  for (Mask x : src.locally_closed())
    if (x != 0 && x != src.top()) free_lc.push_back(x);
  std::stable_sort(free_lc.begin(), free_lc.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });

  std::vector<std::vector<Mask>> candidates(free_lc.size());
  std::size_t product = 1;
  for (std::size_t i = 0; i < free_lc.size(); ++i) {
    const Mask x = free_lc[i];
    for (Mask y : dst.locally_closed()) {
      if (src.is_open(x) && !dst.is_open(y)) continue;
      if (src.is_closed(x) && !dst.is_closed(y)) continue;
      candidates[i].push_back(y);
    }
    product *= std::max<std::size_t>(candidates[i].size(), 1);
    if (product > guards().max_candidates) {
      throw Error(ErrorKind::TooLarge, "more than " + std::to_string(guards().max_candidates) + " candidate tables");
    }
  }

  std::map<Mask, Mask> value{{Mask{0}, Mask{0}}, {src.top(), dst.top()}};
  std::vector<ProxMap> out;
  auto consistent = [&](Mask x, Mask y) {
    for (auto [w, vw] : value) {
      if (subset(w, x) && !subset(vw, y)) return false;
      if (subset(x, w) && !subset(y, vw)) return false;
      if (auto it = value.find(x & w); it != value.end() && it->second != (y & vw)) return false;
      if (auto it = value.find(x | w); it != value.end() && it->second != (y | vw)) return false;
      if (w == src.neg(x) && (src.is_open(x) || src.is_closed(x)) && vw != dst.neg(y)) return false;
    }
    // x may itself be the join of two earlier elements.
    for (auto [a, va] : value)
      for (auto [b, vb] : value)
        if ((a | b) == x && (va | vb) != y) return false;
    return true;
  };
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == free_lc.size()) {
      ProxMap f = extend_from_lc(m, n, [&](Mask x) { return value.at(x); });
      if (is_proximity_morphism(f)) out.push_back(std::move(f));
      return;
    }
    const Mask x = free_lc[k];
    for (Mask y : candidates[k]) {
      if (!consistent(x, y)) continue;
      value[x] = y;
      walk(k + 1);
      value.erase(x);
    }
  };
  if (src.top() != 0 || dst.top() == 0) walk(0);
  std::sort(out.begin(), out.end(), [](const ProxMap& a, const ProxMap& b) { return a.map < b.map; });
  return out;
}

std::vector<ProxMap> proximity_morphisms_via_frames(const MTRef& m, const MTRef& n) {
  std::vector<ProxMap> out;
  for (const FrameMorphism& h : enumerate_frame_morphisms(m->open_frame().frame, n->open_frame().frame)) {
    ProxMap f = extend_from_frame_morphism(m, n, h);
    if (is_proximity_morphism(f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const ProxMap& a, const ProxMap& b) { return a.map < b.map; });
  return out;
}

}  // namespace mtp
