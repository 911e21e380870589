#include "mtp/harness.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <set>

#include "mtp/config.hpp"
#include "mtp/dmorph.hpp"
#include "mtp/envelope.hpp"

namespace mtp {

// ---------------------------------------------------------------------------
// Generators

namespace {

std::vector<Mask> close_family(int n, std::vector<Mask> gens) {
  std::set<Mask> fam{0, full_mask(n)};
  fam.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Mask> cur(fam.begin(), fam.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        for (Mask c : {cur[i] | cur[j], cur[i] & cur[j]}) grew |= fam.insert(c).second;
  }
  return {fam.begin(), fam.end()};
}

// Every preorder on n points: off-diagonal pairs enumerated as bits, kept when transitive.
template <class F>
void for_each_preorder(int n, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<Mask> up(n);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << pairs.size()); ++r) {
    for (int a = 0; a < n; ++a) up[a] = bit(a);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (r >> k & 1) up[pairs[k].first] |= bit(pairs[k].second);
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b : members(up[a])) transitive = transitive && subset(up[b], up[a]);
    if (transitive) f(up);
  }
}

FinSpace space_of_preorder(int n, const std::vector<Mask>& up) {
  std::vector<Mask> opens;
  for (Mask u = 0; u <= full_mask(n); ++u) {
    bool upset = true;
    for (int a : members(u)) upset = upset && subset(up[a], u);
    if (upset) opens.push_back(u);
  }
  return FinSpace(n, std::move(opens));
}

FinSpace random_space(int n, Rng& rng) {
  std::uniform_int_distribution<int> count(0, n);
  std::uniform_int_distribution<Mask> pick(0, full_mask(n));
  std::vector<Mask> gens(count(rng));
  for (Mask& g : gens) g = pick(rng);
  return FinSpace(n, close_family(n, std::move(gens)));
}

}  // namespace

std::vector<FinSpace> gen_spaces(int n, GenMode mode, Rng* rng, int samples) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative point count");
  std::vector<FinSpace> out;
  if (mode == GenMode::Random) {
    if (!rng) throw Error(ErrorKind::InvalidInput, "random generation needs a generator");
    if (n > 16) throw Error(ErrorKind::TooLarge, "random spaces above 16 points");
    for (int i = 0; i < samples; ++i) out.push_back(random_space(n, *rng));
    return out;
  }
  if (n > 5) throw Error(ErrorKind::TooLarge, "exhaustive topologies above 5 points");
  for_each_preorder(n, [&](const std::vector<Mask>& up) { out.push_back(space_of_preorder(n, up)); });
  return out;
}

std::vector<MTRef> gen_mt(int n, GenMode mode, Rng* rng, int samples) {
  if (n < 1 || n > 16) throw Error(ErrorKind::TooLarge, "MT-algebras need 1..16 atoms");
  std::vector<MTRef> out;
  for (FinSpace& x : gen_spaces(n, mode, rng, samples)) out.push_back(share(MTAlgebra(n, x.opens())));
  return out;
}

std::vector<Poset> gen_posets(int n) {
  if (n > 5) throw Error(ErrorKind::TooLarge, "poset enumeration above 5 points");
  std::vector<Poset> out;
  for_each_preorder(n, [&](const std::vector<Mask>& up) {
    for (int a = 0; a < n; ++a)
      for (int b : members(up[a]))
        if (b != a && (up[b] >> a & 1)) return;
    Poset p = Poset::from_relation(n, [&](int a, int b) { return (up[a] >> b & 1) != 0; });
    for (const Poset& q : out)
      if (find_order_isomorphism(p, q)) return;
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<FrameRef> gen_frames(int max_poset, int max_frame) {
  std::vector<FrameRef> out;
  for (int n = 1; n <= max_poset; ++n)
    for (const Poset& p : gen_posets(n)) {
      DownsetLattice d = downset_lattice(p);
      if (d.lattice.size() <= max_frame) out.push_back(share(Frame(std::move(d.lattice))));
    }
  return out;
}

std::size_t count_topologies_brute(int n) {
  if (n > 4) throw Error(ErrorKind::TooLarge, "brute-force topology count above 4 points");
  const int k = 1 << n;
  const Mask full = full_mask(n);
  std::size_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << k); ++fam) {
    if (!(fam & 1) || !(fam >> full & 1)) continue;
    bool closed = true;
    for (int a = 0; a < k && closed; ++a)
      for (int b = 0; b < k && closed; ++b)
        if ((fam >> a & 1) && (fam >> b & 1)) closed = (fam >> (a | b) & 1) && (fam >> (a & b) & 1);
    count += closed;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Config and report

void RunConfig::validate() const {
  auto bad = [](const std::string& w) { throw Error(ErrorKind::InvalidInput, "config: " + w); };
  if (max_atoms < 1 || max_atoms > 16) bad("max_atoms must be 1..16");
  if (max_points < 1 || max_points > 16) bad("max_points must be 1..16");
  if (max_poset < 1 || max_poset > 5) bad("max_poset must be 1..5");
  if (max_frame < 2 || static_cast<std::size_t>(max_frame) > guards().max_elements) bad("max_frame outside guards");
  if (samples < 0 || frame_pairs < 0) bad("sample counts must be non-negative");
  if (jobs < 1) bad("jobs must be positive");
}

json RunConfig::to_json() const {
  return {{"max_atoms", max_atoms}, {"max_points", max_points}, {"max_poset", max_poset},
          {"max_frame", max_frame}, {"seed", seed},             {"exhaustive", exhaustive},
          {"samples", samples},     {"frame_pairs", frame_pairs}};
}

bool Report::ok() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.ok; });
}

json Report::to_json() const {
  json checks = json::array();
  std::size_t total = 0, failed = 0;
  for (const CheckResult& r : results) {
    json c{{"id", r.id}, {"topic", r.topic}, {"instances", r.instances}, {"status", r.ok ? "pass" : "fail"}};
    if (!r.ok) {
      c["witness"] = r.witness;
      c["counterexample"] = r.counterexample;
    }
    checks.push_back(std::move(c));
    total += r.instances;
    failed += !r.ok;
  }
  return {{"config", config.to_json()},
          {"checks", checks},
          {"summary", {{"checks", results.size()}, {"failed", failed}, {"instances", total}}},
          {"status", ok() ? "pass" : "fail"}};
}

// ---------------------------------------------------------------------------
// Registry

namespace {

template <class T>
const T& item(const Instance& in, std::size_t i) {
  if (i >= in.items.size()) throw Error(ErrorKind::InvalidInput, "instance has too few items");
  const T* p = std::get_if<T>(&in.items[i]);
  if (!p) throw Error(ErrorKind::InvalidInput, "instance item " + std::to_string(i) + " has the wrong kind");
  return *p;
}

Verdict fail(std::string w) { return Verdict::fail(std::move(w)); }

Verdict all_of(std::initializer_list<std::pair<bool, const char*>> conds) {
  for (const auto& [ok, what] : conds)
    if (!ok) return fail(what);
  return Verdict::pass();
}

constexpr int kExhaustiveAtoms = 3;

// Algebras on 1..cap atoms: exhaustive within the default bound, sampled above it.
std::vector<MTRef> algebras(const RunConfig& c, Rng& rng, int cap) {
  std::vector<MTRef> out;
  const int top = std::min(c.max_atoms, cap);
  for (int n = 1; n <= top; ++n) {
    const bool all = c.exhaustive && n <= kExhaustiveAtoms;
    for (MTRef& m : gen_mt(n, all ? GenMode::Exhaustive : GenMode::Random, &rng, c.samples)) out.push_back(m);
  }
  return out;
}

std::vector<SpaceRef> spaces(const RunConfig& c, Rng& rng, int cap) {
  std::vector<SpaceRef> out;
  const int top = std::min(c.max_points, cap);
  for (int n = 1; n <= top; ++n) {
    const bool all = c.exhaustive && n <= kExhaustiveAtoms;
    for (FinSpace& x : gen_spaces(n, all ? GenMode::Exhaustive : GenMode::Random, &rng, c.samples))
      out.push_back(share(std::move(x)));
  }
  return out;
}

auto each_algebra(int cap) {
  return [cap](const RunConfig& c, Rng& rng, const Emit& emit) {
    for (const MTRef& m : algebras(c, rng, cap))
      if (!emit({{m}})) return;
  };
}

auto each_space(int cap) {
  return [cap](const RunConfig& c, Rng& rng, const Emit& emit) {
    for (const SpaceRef& x : spaces(c, rng, cap))
      if (!emit({{x}})) return;
  };
}

auto each_frame() {
  return [](const RunConfig& c, Rng&, const Emit& emit) {
    for (const FrameRef& l : gen_frames(c.max_poset, c.max_frame))
      if (!emit({{l}})) return;
  };
}

// The frame route reaches pairs whose direct enumeration exceeds the candidate guard.
auto each_prox(int cap, bool via_frames = false) {
  return [cap, via_frames](const RunConfig& c, Rng& rng, const Emit& emit) {
    const auto algs = algebras(c, rng, cap);
    for (const MTRef& a : algs)
      for (const MTRef& b : algs)
        for (const ProxMap& f : via_frames ? proximity_morphisms_via_frames(a, b) : enumerate_proximity_morphisms(a, b))
          if (!emit({{f}})) return;
  };
}

auto each_mt_morphism(int cap) {
  return [cap](const RunConfig& c, Rng& rng, const Emit& emit) {
    const auto algs = algebras(c, rng, cap);
    for (const MTRef& a : algs)
      for (const MTRef& b : algs)
        for (const MTMorphism& f : enumerate_mt_morphisms(a, b))
          if (!emit({{f}})) return;
  };
}

std::vector<ContMap> maps_between(const SpaceRef& x, const SpaceRef& y) {
  std::vector<ContMap> out;
  if (y->size() == 0 && x->size() > 0) return out;
  ContMap f{x, y, std::vector<int>(x->size(), 0)};
  for (;;) {
    if (is_continuous(f)) out.push_back(f);
    int i = 0;
    while (i < x->size() && ++f.map[i] == y->size()) f.map[i++] = 0;
    if (i == x->size()) break;
  }
  return out;
}

auto each_cont_map(int cap) {
  return [cap](const RunConfig& c, Rng& rng, const Emit& emit) {
    const auto sp = spaces(c, rng, cap);
    for (const SpaceRef& x : sp)
      for (const SpaceRef& y : sp)
        for (const ContMap& f : maps_between(x, y))
          if (!emit({{f}})) return;
  };
}

auto each_sober_map(int cap) {
  return [cap](const RunConfig& c, Rng& rng, const Emit& emit) {
    const auto sp = spaces(c, rng, cap);
    for (const SpaceRef& x : sp)
      for (const SpaceRef& y : sp)
        for (const SoberMap& f : enumerate_sober_maps(x, y))
          if (!emit({{f}})) return;
  };
}

bool injective(const std::vector<Mask>& t) {
  std::set<Mask> s(t.begin(), t.end());
  return s.size() == t.size();
}

bool onto(const std::vector<Mask>& t, std::size_t target_size) {
  return std::set<Mask>(t.begin(), t.end()).size() == target_size;
}

// --- algebra checks ---

Verdict verify_families(const Instance& in) {
  const MTAlgebra& m = *item<MTRef>(in, 0);
  if (Verdict k = kuratowski_check(m); !k) return k;
  const Families f = element_families(m);
  std::vector<Mask> lc, sat, cons;
  for (Mask a = 0; a < m.size(); ++a) {
    if (m.is_locally_closed(a)) lc.push_back(a);
    if (m.is_saturated(a)) sat.push_back(a);
    if (m.is_constructible(a)) cons.push_back(a);
  }
  return all_of({{f.opens == m.opens(), "opens differ from the definition"},
                 {f.locally_closed == lc, "locally closed closed form differs from u ∧ c enumeration"},
                 {f.locally_closed == m.locally_closed(), "cached locally closed list differs"},
                 {f.saturated == sat, "saturated elements differ"},
                 {f.constructible == cons, "constructible elements differ"}});
}

Verdict verify_separation(const Instance& in) {
  const MTAlgebra& m = *item<MTRef>(in, 0);
  return all_of({{is_T0(m) == is_T0_space(m.space()), "T0 differs from point separation of at M"},
                 {is_TD(m) == lc_join_generates(m), "TD differs from join-generation by locally closed elements"},
                 {is_T0(m) == wlc_join_generates(m), "T0 differs from join-generation by WLC elements"},
                 {is_TD(m) == is_TD_space(m.space()), "TD differs from TD of at M"}});
}

Verdict verify_atom_characterization(const Instance& in) {
  const MTAlgebra& m = *item<MTRef>(in, 0);
  if (!is_T0(m)) return Verdict::pass();
  if (auto x = atom_characterization_counterexample(m)) return fail("open-separation test disagrees at " + show(*x));
  return Verdict::pass();
}

Verdict verify_theta_prime(const Instance& in) {
  const MTAlgebra& m = *item<MTRef>(in, 0);
  if (!is_continuous(theta(m))) return fail("θ is not continuous");
  const ContMap tp = theta_prime(m);
  const auto filters = slicing_filters(*m.open_frame().frame);
  if (std::set<int>(tp.map.begin(), tp.map.end()).size() != tp.map.size()) return fail("θ′ is not injective");
  if (!is_T0(m)) {
    if (tp.map.size() == filters.size()) return fail("θ′ is onto for a non-T0 algebra");
    return Verdict::pass();
  }
  if (!is_homeomorphism(tp)) return fail("θ′ is not a homeomorphism");
  const auto lc = lc_atoms(m);
  for (std::size_t i = 0; i < lc.size(); ++i)
    if (witness_atom(m, filters[tp.map[i]]) != lc[i]) return fail("witness atom misses atom " + std::to_string(lc[i]));
  for (const FramePoint& f : filters)
    if (open_filter(m, bit(witness_atom(m, f))) != f) return fail("witness atom does not regenerate its filter");
  return Verdict::pass();
}

Verdict verify_S_axioms(const Instance& in) {
  const MTAlgebra& m = *item<MTRef>(in, 0);
  return check_S_axioms(m, constructible_elements(m));
}

Verdict verify_td_characterizations(const Instance& in) {
  const MTRef& m = item<MTRef>(in, 0);
  const bool td = is_TD(*m), dv = is_deVries(*m), env = td_iff_envelope(m).iso;
  if (td == dv && dv == env) return Verdict::pass();
  return fail(std::string("TD=") + (td ? "1" : "0") + " deVries=" + (dv ? "1" : "0") + " envelope=" + (env ? "1" : "0"));
}

Verdict verify_chi_reflection(const Instance& in) {
  const MTRef& m = item<MTRef>(in, 0);
  const MTMorphism c = chi(m);
  const Reflection r = reflect(c);
  return all_of({{r.unique, "reflection of χ is not unique"},
                 {r.hat == identity_mt(c.target), "reflection of χ is not the identity"},
                 {compose(r.hat, c) == c, "triangle fails for χ"}});
}

Verdict verify_unit_iso(const Instance& in) {
  const MTRef& m = item<MTRef>(in, 0);
  const ProxMap e = eta_hat(m);
  if (!is_proximity_morphism(e)) return fail("η̂ is not a proximity morphism");
  if (!classify_morphism(e).iso) return fail("η̂ is not an isomorphism");
  const ConsAlgebra c = cons_algebra(m);
  const ProxMap z = zeta(c), p = phi(c);
  return all_of({{star(z, p) == identity_prox(m), "ζ ⋆ φ is not the identity"},
                 {star(p, z) == identity_prox(c.algebra), "φ ⋆ ζ is not the identity"}});
}

Verdict verify_td_closure_algebra(const Instance& in) {
  const MTAlgebra& m = *item<MTRef>(in, 0);
  if (is_TD(m) && !is_TD_space(at_space(m))) return fail("at M is not TD for a TD algebra");
  if (!is_TD_space(atD_space(m))) return fail("at_D M is not TD");
  return Verdict::pass();
}

// --- frame checks ---

Verdict verify_birkhoff(const Instance& in) {
  const Frame& l = *item<FrameRef>(in, 0);
  const std::vector<int> irr = join_irreducibles(l.lattice());
  const Poset j = Poset::from_relation(static_cast<int>(irr.size()), [&](int a, int b) { return l.leq(irr[a], irr[b]); });
  if (!find_order_isomorphism(downset_lattice(j).lattice.poset(), l.lattice().poset()))
    return fail("L is not the downset lattice of its join-irreducibles");
  for (int a = 0; a < l.size(); ++a) {
    std::vector<int> below;
    for (int x : irr)
      if (l.leq(x, a)) below.push_back(x);
    if (l.lattice().join_all(below) != a) return fail("element " + std::to_string(a) + " is not the join of irreducibles below it");
  }
  return Verdict::pass();
}

Verdict verify_macneille(const Instance& in) {
  const Frame& l = *item<FrameRef>(in, 0);
  const Completion c = macneille_completion(l.lattice().poset());
  if (!find_order_isomorphism(c.lattice.poset(), l.lattice().poset())) return fail("completion of a lattice grew");
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      if (l.leq(a, b) != c.lattice.leq(c.embedding[a], c.embedding[b])) return fail("completion embedding is not an order embedding");
  return Verdict::pass();
}

Verdict verify_heyting(const Instance& in) {
  const Frame& l = *item<FrameRef>(in, 0);
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      const int i = heyting_implication(l, a, b);
      for (int c = 0; c < l.size(); ++c)
        if (l.leq(l.meet(c, a), b) != l.leq(c, i)) return fail("residuation fails at " + std::to_string(a) + ", " + std::to_string(b));
    }
  return Verdict::pass();
}

Verdict verify_spectrum(const Instance& in) {
  const Frame& l = *item<FrameRef>(in, 0);
  const Spectrum pt = pt_space(l);
  const auto search = completely_prime_filters_by_search(l);
  if (pt.primes.size() != search.size()) return fail("prime count differs from the filter search");
  for (int p : pt.primes)
    if (std::find(search.begin(), search.end(), point_of_prime(l, p)) == search.end()) return fail("prime filter missed by search");
  if (!slicing_characterizations(l).agree()) return fail("slicing characterizations disagree");
  if (!(ptD_space(l).space == pt.space)) return fail("pt_D differs from pt");
  return Verdict::pass();
}

Verdict verify_boolean_universal(const Instance& in) {
  const FrameRef& l = item<FrameRef>(in, 0);
  const BooleanEnvelope env = boolean_envelope(l);
  // Bounded lattice maps into 2 and into the four-element boolean algebra are frame morphisms into them.
  const Frame two(Lattice::from_poset(Poset::chain(2)));
  const DownsetLattice d4 = downset_lattice(Poset::antichain(2));
  const std::vector<std::pair<FrameRef, std::vector<Mask>>> targets{
      {share(two), {0, 1}}, {share(Frame(d4.lattice)), d4.downsets}};
  for (const auto& [t, sets] : targets) {
    const int atoms = static_cast<int>(std::countr_zero(sets.size()));
    for (const FrameMorphism& h : enumerate_frame_morphisms(l, t)) {
      std::vector<Mask> hm(h.map.size());
      for (std::size_t a = 0; a < hm.size(); ++a) hm[a] = sets[h.map[a]];
      const BooleanLift lift = check_universal_property(env, atoms, hm);
      if (!lift.unique) return fail("boolean lift is not unique");
    }
  }
  return Verdict::pass();
}

Verdict verify_funayama(const Instance& in) {
  const FrameRef& l = item<FrameRef>(in, 0);
  const FunayamaEnvelope f = funayama(l);
  if (!is_TD(*f.mt)) return fail("ℱL is not TD");
  const FrameMorphism r = rho(f);
  if (!is_frame_morphism(r)) return fail("ρ is not a frame morphism");
  if (std::set<int>(r.map.begin(), r.map.end()).size() != r.map.size() || r.map.size() != f.mt->opens().size())
    return fail("ρ is not a bijection onto the opens");
  const ConsAlgebra c = cons_algebra(f.mt);
  cons_vs_birkhoff(c);
  // ζ ⋆ ℱρ = 1 on the envelope.
  const ProxMap lifted = extend_from_frame_morphism(f.mt, c.algebra, rho_cons(c));
  if (!(star(zeta(c), lifted) == identity_prox(f.mt))) return fail("counit triangle fails on ℱL");
  const FrameMorphism back = compose(open_restriction(zeta(c)), rho_cons(c));
  for (std::size_t i = 0; i < back.map.size(); ++i)
    if (back.map[i] != static_cast<int>(i)) return fail("unit triangle fails on 𝒪ℱL");
  return Verdict::pass();
}

// --- frame morphisms between sampled pairs ---

void gen_frame_pairs(const RunConfig& c, Rng& rng, const Emit& emit) {
  const auto frames = gen_frames(c.max_poset, c.max_frame);
  std::vector<std::pair<std::size_t, std::size_t>> pairs, picked;
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = 0; j < frames.size(); ++j) pairs.emplace_back(i, j);
  std::sample(pairs.begin(), pairs.end(), std::back_inserter(picked), c.frame_pairs, rng);
  for (const auto& [i, j] : picked)
    for (const FrameMorphism& f : enumerate_frame_morphisms(frames[i], frames[j]))
      if (!emit({{f}})) return;
}

Verdict verify_frame_equivalence(const Instance& in) {
  const FrameMorphism& h = item<FrameMorphism>(in, 0);
  const FunayamaEnvelope a = funayama(h.source), b = funayama(h.target);
  const ProxMap fh = lift_frame_morphism(h, a, b);
  if (!is_proximity_morphism(fh)) return fail("ℱh is not a proximity morphism");
  const FrameMorphism ra = rho(a), rb = rho(b), of = open_restriction(fh);
  for (int x = 0; x < h.source->size(); ++x)
    if (of.map[ra.map[x]] != rb.map[h.map[x]]) return fail("ρ is not natural at " + std::to_string(x));
  if (!(lift_frame_morphism(identity_morphism(h.source), a, a) == identity_prox(a.mt))) return fail("ℱ1 ≠ 1");
  const ConsAlgebra ca = cons_algebra(a.mt), cb = cons_algebra(b.mt);
  if (!(star(zeta(cb), fo_map(fh, ca, cb)) == star(fh, zeta(ca)))) return fail("ζ is not natural at ℱh");
  for (const auto* f : {&a, &b}) {
    const ConsAlgebra c = cons_algebra(f->mt);
    if (!(star(zeta(c), extend_from_frame_morphism(f->mt, c.algebra, rho_cons(c))) == identity_prox(f->mt)))
      return fail("counit triangle fails");
    const FrameMorphism back = compose(open_restriction(zeta(c)), rho_cons(c));
    for (std::size_t i = 0; i < back.map.size(); ++i)
      if (back.map[i] != static_cast<int>(i)) return fail("unit triangle fails");
  }
  return Verdict::pass();
}

// --- proximity morphisms ---

Verdict verify_indiscrete_pair(const Instance& in) {
  const MTRef& m4 = item<MTRef>(in, 0);
  const MTRef& two = item<MTRef>(in, 1);
  const auto fs = enumerate_proximity_morphisms(m4, two);
  const auto gs = enumerate_proximity_morphisms(two, m4);
  if (fs.empty() || gs.empty()) return fail("no proximity morphisms between the pair and the point");
  for (const ProxMap& f : fs)
    for (const ProxMap& g : gs) {
      if (!(star(g, f) == identity_prox(m4))) return fail("g ⋆ f ≠ 1");
      if (!(star(f, g) == identity_prox(two))) return fail("f ⋆ g ≠ 1");
      if (!classify_morphism(f).iso || !classify_morphism(g).iso) return fail("not classified iso");
      if (injective(f.map)) return fail("f is injective");
      if (onto(g.map, m4->size())) return fail("g is surjective");
    }
  return Verdict::pass();
}

// Index chains a → b → c → d for composable triples: all of them when
// exhaustive, otherwise a sample.
std::vector<std::array<std::size_t, 4>> chains(std::size_t n, const RunConfig& c, Rng& rng) {
  std::vector<std::array<std::size_t, 4>> out;
  if (n == 0) return out;
  if (c.exhaustive) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c2 = 0; c2 < n; ++c2)
          for (std::size_t d = 0; d < n; ++d) out.push_back({a, b, c2, d});
    return out;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int i = 0; i < c.samples * 8; ++i) out.push_back({pick(rng), pick(rng), pick(rng), pick(rng)});
  return out;
}

void gen_indiscrete_pair(const RunConfig&, Rng&, const Emit& emit) {
  emit({{share(MTAlgebra(2, {0b00, 0b11})), share(MTAlgebra(1, {0b0, 0b1}))}});
}

void gen_prox_triples(const RunConfig& c, Rng& rng, const Emit& emit) {
  const auto algs = algebras(c, rng, 2);
  std::vector<std::vector<std::vector<ProxMap>>> hom(algs.size(), std::vector<std::vector<ProxMap>>(algs.size()));
  for (std::size_t i = 0; i < algs.size(); ++i)
    for (std::size_t j = 0; j < algs.size(); ++j) hom[i][j] = enumerate_proximity_morphisms(algs[i], algs[j]);
  for (const auto& [a, b, c2, d] : chains(algs.size(), c, rng))
    for (const ProxMap& f : hom[a][b])
      for (const ProxMap& g : hom[b][c2])
        for (const ProxMap& h : hom[c2][d])
          if (!emit({{f, g, h}})) return;
}

Verdict verify_category_laws(const Instance& in) {
  const ProxMap& f = item<ProxMap>(in, 0);
  const ProxMap& g = item<ProxMap>(in, 1);
  const ProxMap& h = item<ProxMap>(in, 2);
  if (!(star(h, star(g, f)) == star(star(h, g), f))) return fail("⋆ is not associative");
  for (const ProxMap* p : {&f, &g, &h})
    if (!(star(identity_prox(p->target), *p) == *p) || !(star(*p, identity_prox(p->source)) == *p))
      return fail("1_M is not neutral");
  return Verdict::pass();
}

Verdict verify_derived(const Instance& in) {
  const ProxMap& f = item<ProxMap>(in, 0);
  const DerivedReport d = derived_properties(f);
  if (!d.ok()) return fail("derived property fails");
  if (f.source->atoms() <= 4 && f.target->atoms() <= 4 && !equivalent_formulations(f).agree())
    return fail("formulations of join preservation disagree");
  if (!(extend_from_frame_morphism(f.source, f.target, open_restriction(f)) == f)) return fail("f is not determined by its opens");
  return Verdict::pass();
}

Verdict verify_iso(const Instance& in) {
  const ProxMap& f = item<ProxMap>(in, 0);
  const Classification c = classify_morphism(f);
  bool inverse = false;
  for (const ProxMap& g : enumerate_proximity_morphisms(f.target, f.source))
    inverse = inverse || (star(g, f) == identity_prox(f.source) && star(f, g) == identity_prox(f.target));
  if (inverse != c.iso) return fail(std::string("iso flag ") + (c.iso ? "set" : "clear") + " but an inverse " + (inverse ? "exists" : "is missing"));
  if (c.iso && !(c.mono && c.epi)) return fail("iso without mono and epi");
  if (c.order_iso && *c.order_iso != c.iso) return fail("order-isomorphism flag differs for TD algebras");
  return Verdict::pass();
}

Verdict verify_gamma(const Instance& in) {
  const MTMorphism& g = item<MTMorphism>(in, 0);
  const ProxMap p = gamma(g);
  if (!is_proximity_morphism(p)) return fail("Γg is not a proximity morphism");
  if (open_restriction(p).map != open_part(g).map) return fail("Γg and g differ on opens");
  if (!(gamma(identity_mt(g.source)) == identity_prox(g.source))) return fail("Γ1 ≠ 1");
  return Verdict::pass();
}

Verdict verify_zeta_natural(const Instance& in) {
  const ProxMap& g = item<ProxMap>(in, 0);
  const ConsAlgebra a = cons_algebra(g.source), b = cons_algebra(g.target);
  const ProxMap fg = fo_map(g, a, b);
  if (!is_proximity_morphism(fg)) return fail("ℱ𝒪g is not a proximity morphism");
  if (!(star(zeta(b), fg) == star(g, zeta(a)))) return fail("ζ is not natural");
  return Verdict::pass();
}

// --- maps and D-morphisms ---

Verdict verify_lc_iff_d(const Instance& in) {
  const ContMap& f = item<ContMap>(in, 0);
  const bool lc = static_cast<bool>(is_locally_closed_map(f));
  const MTMorphism pf = powerset_of_map(f);
  if (lc != is_D_morphism_MT(pf).is_D) return fail("locally closed map and D-morphism of 𝒫f disagree");
  if (is_T0_space(*f.source) && is_T0_space(*f.target)) {
    if (lc != static_cast<bool>(is_D_morphism_frame(open_part(pf)))) return fail("frame-side D-morphism disagrees");
    if (!cross_check_D(pf).agree()) return fail("D cross-check disagrees");
  }
  return Verdict::pass();
}

Verdict verify_td_are_d(const Instance& in) {
  const MTMorphism& f = item<MTMorphism>(in, 0);
  if (is_TD(*f.source) && is_TD(*f.target) && !is_D_morphism_MT(f).is_D) return fail("MT-morphism between TD algebras is not D");
  return Verdict::pass();
}

Verdict verify_reflection(const Instance& in) {
  const MTMorphism& f = item<MTMorphism>(in, 0);
  if (!is_TD(*f.target) || !is_D_morphism_MT(f).is_D) return Verdict::pass();
  const Reflection r = reflect(f);
  if (!r.unique) return fail("reflection is not unique");
  if (!is_MT_morphism(r.hat)) return fail("f̂ is not an MT-morphism");
  if (!(compose(r.hat, chi(f.source)) == f)) return fail("f̂ ∘ χ ≠ f");
  return Verdict::pass();
}

Verdict verify_coreflection(const Instance& in) {
  const ContMap& f = item<ContMap>(in, 0);
  if (!is_TD_space(*f.source) || !is_locally_closed_map(f)) return Verdict::pass();
  const Coreflection c = td_coreflect(f);
  if (!c.unique) return fail("coreflection is not unique");
  if (!is_continuous(c.hat)) return fail("f̂ is not continuous");
  const TDSubspace d = td_subspace(f.target);
  for (int y = 0; y < f.source->size(); ++y)
    if (d.inclusion.map[c.hat.map[y]] != f.map[y]) return fail("i_D ∘ f̂ ≠ f at " + std::to_string(y));
  return Verdict::pass();
}

Verdict verify_epsilon(const Instance& in) {
  const ContMap& f = item<ContMap>(in, 0);
  if (!is_homeomorphism(epsilon(f.source))) return fail("ε is not a homeomorphism");
  const ContMap lhs = compose(dual_map(powerset_of_map(f)), epsilon(f.source));
  const ContMap rhs = compose(epsilon(f.target), f);
  if (lhs.map != rhs.map) return fail("ε is not natural");
  return Verdict::pass();
}

// --- spaces and sober maps ---

Verdict verify_soberification(const Instance& in) {
  const SpaceRef& x = item<SpaceRef>(in, 0);
  const Soberification s = soberify(x);
  if (!is_sober(*s.space)) return fail("sX is not sober");
  if (!is_homeomorphism(soberify(s.space).lambda)) return fail("λ_{sX} is not a homeomorphism");
  if (is_homeomorphism(s.lambda) != is_sober(*x)) return fail("λ_X is a homeomorphism exactly when X is sober, but not here");
  const LiftH h = lift_h(x);
  if (!classify_morphism(h.table).iso) return fail("h_X is not an isomorphism");
  if (!sober_iso(epsilon_hat(x))) return fail("ε̂ is not an isomorphism");
  return Verdict::pass();
}

Verdict verify_td_closure_space(const Instance& in) {
  const SpaceRef& x = item<SpaceRef>(in, 0);
  const MTRef px = share(powerset_MT(*x));
  if (is_TD_space(*x) != is_TD(*px)) return fail("𝒫X is TD exactly when X is, but not here");
  if (is_TD_space(*x) && !td_iff_envelope(px).iso) return fail("ℱΩX is not isomorphic to 𝒫X for TD X");
  if (!is_TD_space(*td_subspace(x).space)) return fail("X_D is not TD");
  return Verdict::pass();
}

void gen_sober_triples(const RunConfig& c, Rng& rng, const Emit& emit) {
  const auto sp = spaces(c, rng, 2);
  for (const auto& [x, y, z, w] : chains(sp.size(), c, rng)) {
    const auto fs = enumerate_sober_maps(sp[x], sp[y]), gs = enumerate_sober_maps(sp[y], sp[z]),
               hs = enumerate_sober_maps(sp[z], sp[w]);
    for (const SoberMap& f : fs)
      for (const SoberMap& g : gs)
        for (const SoberMap& h : hs)
          if (!emit({{f, g, h}})) return;
  }
}

Verdict verify_sober_laws(const Instance& in) {
  const SoberMap& f = item<SoberMap>(in, 0);
  const SoberMap& g = item<SoberMap>(in, 1);
  const SoberMap& h = item<SoberMap>(in, 2);
  if (!(sober_compose(h, sober_compose(g, f)) == sober_compose(sober_compose(h, g), f))) return fail("• is not associative");
  for (const SoberMap* p : {&f, &g, &h})
    if (!(sober_compose(*p, lambda_map(p->source)) == *p) || !(sober_compose(lambda_map(p->target.base), *p) == *p))
      return fail("λ is not neutral");
  return Verdict::pass();
}

Verdict verify_sober_duality(const Instance& in) {
  const SoberMap& f = item<SoberMap>(in, 0);
  if (!is_proximity_morphism(Pp(f))) return fail("𝒫ˢf is not a proximity morphism");
  if (Verdict v = epsilon_hat_natural(f); !v) return v;
  return ats_Pp_agrees(f);
}

Verdict verify_unit_natural(const Instance& in) { return eta_hat_natural(item<ProxMap>(in, 0)); }

// --- generators ---

void gen_counts(const RunConfig&, Rng&, const Emit& emit) {
  for (int n = 1; n <= 4; ++n)
    if (!emit({{}, {{"points", n}}})) return;
}

Verdict verify_counts(const Instance& in) {
  if (!in.params.contains("points") || !in.params["points"].is_number_integer())
    throw Error(ErrorKind::InvalidInput, "instance needs params.points");
  const int n = in.params["points"].get<int>();
  const auto xs = gen_spaces(n, GenMode::Exhaustive);
  std::set<std::vector<Mask>> distinct;
  for (const FinSpace& x : xs) distinct.insert(x.opens());
  if (distinct.size() != xs.size()) return fail("a topology was generated twice");
  const std::size_t brute = count_topologies_brute(n);
  if (xs.size() != brute) return fail(std::to_string(xs.size()) + " topologies generated, " + std::to_string(brute) + " by closure");
  if (gen_mt(n, GenMode::Exhaustive).size() != xs.size()) return fail("gen_mt and gen_spaces disagree");
  return Verdict::pass();
}

std::vector<TheoremCheck> build_registry() {
  return {
      {"order.birkhoff", "birkhoff-representation",
       "A finite distributive lattice is the downset lattice of its join-irreducibles.", each_frame(), verify_birkhoff},
      {"order.macneille", "macneille-completion",
       "Completing a finite lattice by cuts returns the lattice, with an order embedding.", each_frame(), verify_macneille},
      {"frame.heyting", "heyting-residuation", "c ∧ a ≤ b exactly when c ≤ a → b.", each_frame(), verify_heyting},
      {"frame.spectrum", "frame-spectrum",
       "Prime elements and completely prime filters match; the slicing tests agree; pt_D = pt.", each_frame(),
       verify_spectrum},
      {"mt.families", "element-families",
       "Closed forms of the element families match their definitions; the interior is Kuratowski.",
       each_algebra(16), verify_families},
      {"mt.separation", "separation-axioms",
       "T0 and TD agree with point separation and with join-generation.", each_algebra(16), verify_separation},
      {"mt.atom-characterization", "atom-characterization",
       "In a T0 algebra the atoms are the elements that sit under each open or under its complement.",
       each_algebra(16), verify_atom_characterization},
      {"mt.theta-prime", "lc-atom-homeomorphism",
       "θ′ is a homeomorphism onto the slicing points with the witness atom as inverse, exactly for T0 algebras.",
       each_algebra(16), verify_theta_prime},
      {"prox.cons-below", "cons-below-axioms", "The cons-below relation satisfies S1-S6.", each_algebra(6),
       verify_S_axioms},
      {"prox.indiscrete-pair", "indiscrete-pair-isomorphism",
       "The indiscrete pair and the point are isomorphic through a non-injective map and a non-surjective inverse.",
       gen_indiscrete_pair, verify_indiscrete_pair},
      {"prox.category-laws", "proximity-category-laws", "⋆ is associative and 1_M is a two-sided unit.",
       gen_prox_triples, verify_category_laws},
      {"prox.derived", "proximity-derived-properties",
       "Proximity morphisms have the derived properties and are determined by their opens.", each_prox(2),
       verify_derived},
      {"prox.iso", "iso-characterization",
       "A proximity morphism is invertible exactly when its open part is a frame isomorphism; between TD algebras, exactly when it is an order isomorphism.",
       each_prox(2), verify_iso},
      {"prox.gamma", "gamma-embedding", "Γ sends MT-morphisms to proximity morphisms with the same open part.",
       each_mt_morphism(2), verify_gamma},
      {"envelope.universal", "boolean-envelope-universal-property",
       "Bounded lattice maps into a finite boolean algebra extend uniquely to the boolean envelope.", each_frame(),
       verify_boolean_universal},
      {"envelope.funayama", "funayama-envelope",
       "ℱL is TD, ρ is an isomorphism onto its opens, and both triangle identities hold.", each_frame(),
       verify_funayama},
      {"envelope.equivalence", "frame-algebra-equivalence",
       "ρ and ζ are natural and ℱ is a functor on frame morphisms.", gen_frame_pairs, verify_frame_equivalence},
      {"envelope.td-characterizations", "td-characterizations",
       "TD, de Vries and M ≅ ℱ𝒪M are the same condition.", each_algebra(16), verify_td_characterizations},
      {"envelope.zeta-natural", "counit-naturality", "ζ_N ⋆ ℱ𝒪g = g ⋆ ζ_M.", each_prox(2), verify_zeta_natural},
      {"dmorph.lc-iff-d", "lc-maps-are-d-morphisms",
       "A continuous map is locally closed exactly when 𝒫f is a D-morphism, and for T0 spaces when Ωf is.",
       each_cont_map(3), verify_lc_iff_d},
      {"dmorph.td-are-d", "td-morphisms-are-d", "Every MT-morphism between TD algebras is a D-morphism.",
       each_mt_morphism(3), verify_td_are_d},
      {"dmorph.reflection", "spatial-td-reflection",
       "A D-morphism into a TD algebra factors uniquely through χ.", each_mt_morphism(3), verify_reflection},
      {"dmorph.chi", "spatial-td-reflection", "χ reflects onto itself.", each_algebra(6), verify_chi_reflection},
      {"dmorph.coreflection", "td-coreflection",
       "A locally closed map from a TD space factors uniquely through X_D.", each_cont_map(3), verify_coreflection},
      {"space.epsilon", "epsilon-naturality", "ε is a natural homeomorphism X → at 𝒫X.", each_cont_map(3),
       verify_epsilon},
      {"space.soberify", "soberification",
       "sX is sober, λ is invertible exactly on sober spaces, h_X and ε̂ are isomorphisms.", each_space(4),
       verify_soberification},
      {"sober.category-laws", "sober-category-laws", "• is associative and λ is a two-sided unit.",
       gen_sober_triples, verify_sober_laws},
      {"sober.duality", "sober-duality",
       "𝒫ˢf is a proximity morphism, ε̂ is natural and atˢ𝒫ˢf = f.", each_sober_map(3), verify_sober_duality},
      {"sober.unit-natural", "sober-duality", "η̂ is natural: 𝒫ˢatˢg ⋆ η̂_M = η̂_N ⋆ g.", each_prox(3, true),
       verify_unit_natural},
      {"sober.unit-iso", "unit-isomorphisms", "η̂ and ζ are isomorphisms.", each_algebra(6), verify_unit_iso},
      {"sober.td-closure-space", "td-closure",
       "𝒫X is TD exactly for TD X, and then 𝒫X ≅ ℱΩX.", each_space(4), verify_td_closure_space},
      {"sober.td-closure-algebra", "td-closure", "at M is TD for TD M, and at_D M is always TD.",
       each_algebra(16), verify_td_closure_algebra},
      {"gen.counts", "generator-counts",
       "The topology generator lists each topology once, as many as closing every family finds.", gen_counts,
       verify_counts},
  };
}

}  // namespace

const std::vector<TheoremCheck>& default_registry() {
  static const std::vector<TheoremCheck> registry = build_registry();
  return registry;
}

const std::vector<std::string>& required_topics() {
  static const std::vector<std::string> topics{
      "birkhoff-representation", "macneille-completion", "heyting-residuation", "frame-spectrum",
      "element-families", "separation-axioms", "atom-characterization", "lc-atom-homeomorphism",
      "cons-below-axioms", "indiscrete-pair-isomorphism", "proximity-category-laws",
      "proximity-derived-properties", "iso-characterization", "gamma-embedding",
      "boolean-envelope-universal-property", "funayama-envelope", "frame-algebra-equivalence",
      "td-characterizations", "counit-naturality", "lc-maps-are-d-morphisms", "td-morphisms-are-d",
      "spatial-td-reflection", "td-coreflection", "epsilon-naturality", "soberification",
      "sober-category-laws", "sober-duality", "unit-isomorphisms", "td-closure", "generator-counts"};
  return topics;
}

std::vector<std::string> audit_registry(const std::vector<TheoremCheck>& registry) {
  std::vector<std::string> missing;
  for (const std::string& t : required_topics())
    if (std::none_of(registry.begin(), registry.end(), [&](const TheoremCheck& c) { return c.topic == t; }))
      missing.push_back(t);
  return missing;
}

json counterexample_json(const TheoremCheck& check, const Instance& instance, const Verdict& verdict) {
  json items = json::array();
  for (const Object& o : instance.items) items.push_back(object_to_json(o));
  return {{"check", check.id},
          {"statement", check.statement},
          {"witness", verdict.witness},
          {"instance", {{"items", items}, {"params", instance.params}}}};
}

namespace {

Verdict guarded_verify(const TheoremCheck& check, const Instance& in) {
  try {
    return check.verify(in);
  } catch (const Error& e) {
    return Verdict::fail(std::string("threw ") + e.what());
  }
}

CheckResult run_one(const TheoremCheck& check, const RunConfig& config) {
  std::vector<std::uint32_t> seeds{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32)};
  for (char ch : check.id) seeds.push_back(static_cast<unsigned char>(ch));
  std::seed_seq seq(seeds.begin(), seeds.end());
  Rng rng(seq);
  CheckResult r;
  r.id = check.id;
  r.topic = check.topic;
  try {
    check.generate(config, rng, [&](const Instance& in) {
      ++r.instances;
      const Verdict v = guarded_verify(check, in);
      if (v) return true;
      r.ok = false;
      r.witness = v.witness;
      r.counterexample = counterexample_json(check, in, v);
      return false;
    });
  } catch (const Error& e) {
    r.ok = false;
    r.witness = std::string("generator threw ") + e.what();
  }
  return r;
}

}  // namespace

Report run_checks(const std::vector<TheoremCheck>& registry, const RunConfig& config,
                  const std::vector<std::string>& only) {
  config.validate();
  std::vector<const TheoremCheck*> selected;
  for (const std::string& id : only)
    if (std::none_of(registry.begin(), registry.end(), [&](const TheoremCheck& c) { return c.id == id; }))
      throw Error(ErrorKind::InvalidInput, "unknown check id " + id);
  for (const TheoremCheck& c : registry)
    if (only.empty() || std::find(only.begin(), only.end(), c.id) != only.end()) selected.push_back(&c);

  Report report{config, std::vector<CheckResult>(selected.size())};
  if (config.jobs == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) report.results[i] = run_one(*selected[i], config);
    return report;
  }
  for (std::size_t start = 0; start < selected.size(); start += config.jobs) {
    std::vector<std::future<CheckResult>> batch;
    for (std::size_t i = start; i < std::min(selected.size(), start + config.jobs); ++i)
      batch.push_back(std::async(std::launch::async, run_one, std::cref(*selected[i]), std::cref(config)));
    for (std::size_t k = 0; k < batch.size(); ++k) report.results[start + k] = batch[k].get();
  }
  return report;
}

Verdict replay(const std::vector<TheoremCheck>& registry, const json& cx) {
  if (!cx.is_object() || !cx.contains("check") || !cx["check"].is_string() || !cx.contains("instance"))
    throw Error(ErrorKind::InvalidInput, "counterexample needs \"check\" and \"instance\"");
  const std::string id = cx["check"].get<std::string>();
  auto it = std::find_if(registry.begin(), registry.end(), [&](const TheoremCheck& c) { return c.id == id; });
  if (it == registry.end()) throw Error(ErrorKind::InvalidInput, "unknown check id " + id);
  const json& inst = cx["instance"];
  Instance in;
  if (inst.contains("items")) {
    if (!inst["items"].is_array()) throw Error(ErrorKind::InvalidInput, "\"items\" must be an array");
    for (const json& o : inst["items"]) in.items.push_back(object_from_json(o));
  }
  if (inst.contains("params")) in.params = inst["params"];
  return guarded_verify(*it, in);
}

}  // namespace mtp
