#include "doctest.h"
#include "fixtures.hpp"
#include "mtp/dmorph.hpp"

using namespace mtp;

namespace {

// Sierpinski on {0,1} with {1} open, next to an indiscrete pair on {2,3}.
SpaceRef sier_plus_pair() {
  std::vector<Mask> opens;
  for (Mask a : {0b00, 0b10, 0b11})
    for (Mask b : {0b0000, 0b1100}) opens.push_back(a | b);
  return share(FinSpace(4, opens));
}

}  // namespace

TEST_CASE("D-morphisms of MT-algebras") {
  CHECK(is_D_morphism_MT(identity_mt(fx::sier())).is_D);
  for (const MTMorphism& f : enumerate_mt_morphisms(fx::sier(), fx::sier())) CHECK(is_D_morphism_MT(f).is_D);

  // The point into the indiscrete pair.
  SpaceRef pt = share(FinSpace::discrete(1));
  SpaceRef pair = share(FinSpace::indiscrete(2));
  ContMap incl{pt, pair, {0}};
  Verdict lc = is_locally_closed_map(incl);
  CHECK_FALSE(lc);
  CHECK(lc.witness.find("point 0") != std::string::npos);
  DMorphismReport r = is_D_morphism_MT(powerset_of_map(incl));
  CHECK_FALSE(r.is_D);
  CHECK(r.witnesses == std::vector<int>{0});
  // Yet on opens the map is the identity of the two-element frame, a D-morphism.
  CHECK(is_D_morphism_frame(open_part(powerset_of_map(incl))));
}

TEST_CASE("locally closed maps and D-morphisms agree") {
  const auto spaces = fx::spaces_up_to(3);
  int maps = 0, t0_maps = 0;
  for (const SpaceRef& x : spaces)
    for (const SpaceRef& y : spaces)
      for (const ContMap& f : fx::continuous_maps(x, y)) {
        ++maps;
        const bool lc = static_cast<bool>(is_locally_closed_map(f));
        const MTMorphism pf = powerset_of_map(f);
        CHECK(lc == is_D_morphism_MT(pf).is_D);
        if (is_T0_space(*x) && is_T0_space(*y)) {
          ++t0_maps;
          CHECK(lc == static_cast<bool>(is_D_morphism_frame(open_part(pf))));
          CHECK(cross_check_D(pf).agree());
        }
        if (is_TD_space(*x) && is_TD_space(*y)) CHECK(lc);
      }
  MESSAGE("continuous maps: " << maps << ", between T0 spaces: " << t0_maps);
}

TEST_CASE("cross-check on MT-morphisms between small T0 algebras") {
  CHECK(cross_check_D(identity_mt(fx::sier())).agree());
  CHECK_THROWS_AS(cross_check_D(identity_mt(fx::m4())), Error);
  for (const MTRef& a : fx::algebras_up_to(2))
    for (const MTRef& b : fx::algebras_up_to(2)) {
      if (!is_T0(*a) || !is_T0(*b)) continue;
      for (const MTMorphism& f : enumerate_mt_morphisms(a, b)) CHECK(cross_check_D(f).agree());
    }
}

TEST_CASE("D-morphisms compose") {
  const auto algs = fx::algebras_up_to(2);
  for (const MTRef& a : algs)
    for (const MTRef& b : algs)
      for (const MTMorphism& f : enumerate_mt_morphisms(a, b)) {
        if (!is_D_morphism_MT(f).is_D) continue;
        for (const MTRef& c : algs)
          for (const MTMorphism& g : enumerate_mt_morphisms(b, c))
            if (is_D_morphism_MT(g).is_D) CHECK(is_D_morphism_MT(compose(g, f)).is_D);
      }
}

TEST_CASE("chi") {
  MTMorphism m4 = chi(fx::m4());
  CHECK(m4.target->atoms() == 0);
  CHECK(m4.map == std::vector<Mask>{0, 0, 0, 0});
  MTMorphism s = chi(fx::sier());
  CHECK(*s.target == *fx::sier());
  CHECK(s.map == std::vector<Mask>{0, 1, 2, 3});
  CHECK(chi(fx::two()).map == std::vector<Mask>{0, 1});
  for (const MTRef& m : fx::algebras_up_to(3)) {
    MTMorphism c = chi(m);
    CHECK(is_MT_morphism(c));
    CHECK(is_D_morphism_MT(c).is_D);
    if (c.target->atoms() > 0) CHECK(is_TD(*c.target));
  }
}

TEST_CASE("reflection into spatial TD algebras") {
  for (const MTRef& m : fx::algebras_up_to(3)) {
    MTMorphism c = chi(m);
    Reflection r = reflect(c);
    CHECK(r.unique);
    CHECK(r.hat == identity_mt(c.target));
  }
  // From the indiscrete pair no MT-morphism to one atom is D: f* hits a non-closed atom.
  auto to_two = enumerate_mt_morphisms(fx::m4(), fx::two());
  CHECK(to_two.size() == 2);
  for (const MTMorphism& f : to_two) {
    CHECK_FALSE(is_D_morphism_MT(f).is_D);
    CHECK_THROWS_AS(reflect(f), Error);
  }
  int reflected = 0;
  for (const MTRef& a : fx::algebras_up_to(2))
    for (const MTRef& b : fx::algebras_up_to(2)) {
      if (!is_TD(*b)) continue;
      for (const MTMorphism& f : enumerate_mt_morphisms(a, b)) {
        if (!is_D_morphism_MT(f).is_D) continue;
        Reflection r = reflect(f);
        ++reflected;
        CHECK(r.unique);
        CHECK(compose(r.hat, chi(a)) == f);
      }
    }
  CHECK(reflected > 0);
}

TEST_CASE("TD coreflection") {
  SUBCASE("TD target") {
    SpaceRef s = share(FinSpace::sierpinski());
    for (const ContMap& f : fx::continuous_maps(s, s)) {
      Coreflection c = td_coreflect(f);
      CHECK(c.unique);
      CHECK(c.hat.map == f.map);
      CHECK(*c.hat.target == *s);
    }
  }
  SUBCASE("point into the Sierpinski part") {
    SpaceRef x = sier_plus_pair();
    ContMap f{share(FinSpace::discrete(1)), x, {1}};
    Coreflection c = td_coreflect(f);
    CHECK(c.hat.target->size() == 2);
    CHECK(*c.hat.target == FinSpace::sierpinski());
    CHECK(c.hat.map == std::vector<int>{1});
    CHECK(c.unique);
  }
  SUBCASE("no locally closed map into the indiscrete pair") {
    SpaceRef s = share(FinSpace::sierpinski());
    SpaceRef pair = share(FinSpace::indiscrete(2));
    for (const ContMap& f : fx::continuous_maps(s, pair)) CHECK_THROWS_AS(td_coreflect(f), Error);
  }
  SUBCASE("every qualifying map on at most three points") {
    const auto spaces = fx::spaces_up_to(3);
    for (const SpaceRef& y : spaces) {
      if (!is_TD_space(*y)) continue;
      for (const SpaceRef& x : spaces)
        for (const ContMap& f : fx::continuous_maps(y, x)) {
          if (!is_locally_closed_map(f)) continue;
          Coreflection c = td_coreflect(f);
          CHECK(c.unique);
        }
    }
  }
}

TEST_CASE("inclusion of the TD subspace is chi") {
  for (const SpaceRef& x : fx::spaces_up_to(3)) {
    CHECK(inclusion_matches_chi(x));
    CHECK(is_TD_space(*td_subspace(x).space));
  }
}
