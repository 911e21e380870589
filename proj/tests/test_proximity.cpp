#include <set>

#include <algorithm>
#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "mtp/config.hpp"
#include "mtp/proximity.hpp"
#include "mtp/space.hpp"

using namespace mtp;

namespace {

std::vector<MTRef> algebras_up_to_two() {
  return {fx::two(), fx::m4(), fx::sier(), fx::discrete2(), share(MTAlgebra(2, {0b00, 0b01, 0b11}))};
}

// Oracle for 1_M: join of the enumerated u ∧ c below a.
Mask one_brute(const MTAlgebra& m, Mask a) {
  Mask r = 0;
  for (Mask u : m.opens())
    for (Mask v : m.opens()) {
      const Mask x = u & m.neg(v);
      if (subset(x, a)) r |= x;
    }
  return r;
}

// The map of the indiscrete-pair example: the interior, landing in the one-atom algebra.
ProxMap example_f() {
  auto m4 = fx::m4();
  auto two = fx::two();
  return {m4, two, {0, 0, 0, 1}};
}

ProxMap example_g() { return {fx::two(), fx::m4(), {0, 0b11}}; }

}  // namespace

TEST_CASE("cons-below on fixtures") {
  auto m4 = fx::m4();
  CHECK(cons_below(*m4, 0b01, 0b11));
  CHECK_FALSE(cons_below(*m4, 0b01, 0b01));
  auto s = fx::sier();
  for (Mask a = 0; a < 4; ++a)
    for (Mask b = 0; b < 4; ++b) {
      CHECK(cons_below(*s, a, b) == subset(a, b));
      CHECK(cons_below(*m4, 0, a));
      CHECK(cons_below(*m4, a, m4->top()));
    }
  for (const MTRef& m : algebras_up_to_two()) CHECK(check_S_axioms(*m, constructible_elements(*m)));
  CHECK_THROWS_AS(check_S_axioms(*s, {0, 0b01, 0b11}), Error);
}

TEST_CASE("de Vries exactly on TD algebras") {
  CHECK_FALSE(is_deVries(*fx::m4()));
  CHECK(is_deVries(*fx::sier()));
  CHECK(is_deVries(*fx::two()));
  for (const MTRef& m : algebras_up_to_two()) CHECK(is_deVries(*m) == is_TD(*m));
}

TEST_CASE("identity proximity morphisms") {
  auto m4 = fx::m4();
  ProxMap one = identity_prox(m4);
  CHECK(one.map == std::vector<Mask>{0, 0, 0, 0b11});
  for (Mask a = 0; a < 4; ++a) CHECK(one(a) == m4->box(a));
  for (const MTRef& m : algebras_up_to_two()) {
    ProxMap id = identity_prox(m);
    CHECK(is_proximity_morphism(id));
    for (Mask a = 0; a < m->size(); ++a) CHECK(id(a) == one_brute(*m, a));
    bool plain = true;
    for (Mask a = 0; a < m->size(); ++a) plain = plain && id(a) == a;
    CHECK(plain == is_TD(*m));
  }
}

TEST_CASE("proximity validation reports the failing axiom") {
  auto s = fx::sier();
  ProxMap non_monotone{s, s, {0, 0b11, 0b10, 0b01}};
  ProximityReport r = check_proximity(non_monotone);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.p2.ok);
  ProxMap plain_identity{fx::m4(), fx::m4(), {0, 1, 2, 3}};
  ProximityReport q = check_proximity(plain_identity);
  CHECK(q.p1.ok);
  CHECK(q.p2.ok);
  CHECK(q.p3.ok);
  CHECK_FALSE(q.p4.ok);
}

TEST_CASE("the indiscrete-pair example") {
  ProxMap f = example_f();
  ProxMap g = example_g();
  CHECK(is_proximity_morphism(f));
  CHECK(is_proximity_morphism(g));
  CHECK(star(g, f) == identity_prox(fx::m4()));
  CHECK(star(f, g) == identity_prox(fx::two()));
  CHECK(classify_morphism(f).iso);
  CHECK(classify_morphism(g).iso);
  auto fs = enumerate_proximity_morphisms(fx::m4(), fx::two());
  CHECK(std::find(fs.begin(), fs.end(), f) != fs.end());
  auto gs = enumerate_proximity_morphisms(fx::two(), fx::m4());
  CHECK(std::find(gs.begin(), gs.end(), g) != gs.end());
}

TEST_CASE("enumeration routes agree and category laws hold") {
  auto algs = algebras_up_to_two();
  CHECK(enumerate_proximity_morphisms(fx::two(), fx::two()).size() == 1);
  for (const MTRef& a : algs) {
    for (const MTRef& b : algs) {
      auto direct = enumerate_proximity_morphisms(a, b);
      auto via = proximity_morphisms_via_frames(a, b);
      CHECK(direct == via);
      for (const ProxMap& f : direct) {
        CHECK(star(identity_prox(b), f) == f);
        CHECK(star(f, identity_prox(a)) == f);
        CHECK(derived_properties(f).ok());
        Formulations e = equivalent_formulations(f);
        CHECK(e.agree());
        CHECK(e.join_preserving);
        Classification c = classify_morphism(f);
        CHECK((!c.iso || (c.mono && c.epi)));
      }
      // Two proximity morphisms agreeing on opens are equal.
      for (std::size_t i = 0; i < direct.size(); ++i)
        for (std::size_t j = i + 1; j < direct.size(); ++j) {
          bool same_on_opens = true;
          for (Mask u : a->opens()) same_on_opens = same_on_opens && direct[i](u) == direct[j](u);
          CHECK_FALSE(same_on_opens);
        }
    }
  }
}

TEST_CASE("equivalent formulations agree on every P1/P2/P4 table") {
  // The plain identity table of the indiscrete pair breaks P4, so it is outside the hypothesis.
  ProxMap plain{fx::m4(), fx::m4(), {0, 1, 2, 3}};
  CHECK_THROWS_AS(equivalent_formulations(plain), Error);
  int in_scope = 0, without_p3 = 0;
  for (const MTRef& a : algebras_up_to_two()) {
    for (const MTRef& b : algebras_up_to_two()) {
      ProxMap f{a, b, std::vector<Mask>(a->size())};
      std::function<void(Mask)> all = [&](Mask k) {
        if (k == a->size()) {
          ProximityReport r = check_proximity(f);
          if (!r.p1.ok || !r.p2.ok || !r.p4.ok) return;
          ++in_scope;
          without_p3 += !r.p3.ok;
          CHECK(equivalent_formulations(f).agree());
          return;
        }
        for (Mask v = 0; v < b->size(); ++v) {
          f.map[k] = v;
          all(k + 1);
        }
      };
      all(0);
    }
  }
  CHECK(in_scope > 0);
  MESSAGE("tables in scope: " << in_scope << ", failing P3: " << without_p3);
}

TEST_CASE("gamma embeds MT-morphisms") {
  for (const MTRef& a : algebras_up_to_two()) {
    CHECK(gamma(identity_mt(a)) == identity_prox(a));
    for (const MTRef& b : algebras_up_to_two())
      for (const MTMorphism& f : enumerate_mt_morphisms(a, b)) {
        ProxMap gf = gamma(f);
        CHECK(is_proximity_morphism(gf));
        // 1_N ∘ f gives the same table whenever the source is TD.
        ProxMap after{a, b, std::vector<Mask>(a->size())};
        const ProxMap one = identity_prox(b);
        for (Mask x = 0; x < a->size(); ++x) after.map[x] = one(f.map[x]);
        if (is_TD(*a)) CHECK(after == gf);
        for (const MTRef& c : algebras_up_to_two())
          for (const MTMorphism& g : enumerate_mt_morphisms(b, c)) CHECK(gamma(compose(g, f)) == star(gamma(g), gamma(f)));
      }
  }
  // Identity of boolean algebras from the indiscrete pair to the discrete pair:
  // composing with 1_N afterwards keeps atoms, which P4 forbids.
  MTMorphism id{fx::m4(), fx::discrete2(), {0, 1, 2, 3}};
  REQUIRE(is_MT_morphism(id));
  ProxMap after{fx::m4(), fx::discrete2(), {0, 1, 2, 3}};
  CHECK_FALSE(check_proximity(after).p4.ok);
  CHECK(gamma(id).map == std::vector<Mask>{0, 0, 0, 3});
}

TEST_CASE("enumeration guard") {
  Guards saved = guards();
  set_guards({saved.max_elements, 2});
  CHECK_THROWS_AS(enumerate_proximity_morphisms(fx::discrete2(), fx::discrete2()), Error);
  set_guards(saved);
}

TEST_CASE("epi with a non-surjective open part") {
  // Opens of the Sierpiński algebra go to the same sets in the discrete pair.
  const ProxMap f = extend_from_opens(fx::sier(), fx::discrete2(), [](Mask u) { return u; });
  REQUIRE(is_proximity_morphism(f));
  const Classification c = classify_morphism(f);
  CHECK(c.epi);
  CHECK(c.mono);
  CHECK_FALSE(c.iso);
  const FrameMorphism o = open_restriction(f);
  CHECK(std::set<int>(o.map.begin(), o.map.end()).size() == 3);
  CHECK(o.target->size() == 4);
}
