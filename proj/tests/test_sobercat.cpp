#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "mtp/envelope.hpp"
#include "mtp/sobercat.hpp"

using namespace mtp;

namespace {

SpaceRef point() { return share(FinSpace::discrete(1)); }
SpaceRef pair() { return share(FinSpace::indiscrete(2)); }
SpaceRef sierpinski() { return share(fx::sier()->space()); }

bool same_table(const ProxMap& a, const ProxMap& b) { return a.map == b.map; }

}  // namespace

TEST_CASE("lambda is the identity of the sober category") {
  for (const SpaceRef& x : fx::spaces_up_to(2))
    for (const SpaceRef& y : fx::spaces_up_to(2))
      for (const SoberMap& f : enumerate_sober_maps(x, y)) {
        CHECK(sober_compose(f, lambda_map(x)) == f);
        CHECK(sober_compose(lambda_map(y), f) == f);
      }
}

TEST_CASE("composition of sober maps is associative") {
  const auto spaces = fx::spaces_up_to(2);
  for (const SpaceRef& x : spaces)
    for (const SpaceRef& y : spaces)
      for (const SpaceRef& z : spaces)
        for (const SpaceRef& w : spaces) {
          const auto fs = enumerate_sober_maps(x, y);
          const auto gs = enumerate_sober_maps(y, z);
          const auto hs = enumerate_sober_maps(z, w);
          for (const SoberMap& f : fs)
            for (const SoberMap& g : gs)
              for (const SoberMap& h : hs)
                CHECK(sober_compose(h, sober_compose(g, f)) == sober_compose(sober_compose(h, g), f));
        }
}

TEST_CASE("Lambda is a functor") {
  const auto spaces = fx::spaces_up_to(2);
  for (const SpaceRef& x : spaces) CHECK(Lambda(identity_map(x)) == lambda_map(x));
  for (const SpaceRef& x : spaces)
    for (const SpaceRef& y : spaces)
      for (const SpaceRef& z : spaces)
        for (const ContMap& f : fx::continuous_maps(x, y))
          for (const ContMap& g : fx::continuous_maps(y, z))
            CHECK(Lambda(compose(g, f)) == sober_compose(Lambda(g), Lambda(f)));
}

TEST_CASE("sober isomorphisms") {
  for (const SpaceRef& x : fx::spaces_up_to(3)) CHECK(sober_iso(lambda_map(x)));

  // The indiscrete pair and the point have the same soberification.
  const SoberMap collapse = Lambda(ContMap{pair(), point(), {0, 0}});
  REQUIRE(sober_iso(collapse));
  const SoberMap back = *sober_inverse(collapse);
  CHECK(sober_compose(back, collapse) == lambda_map(pair()));
  CHECK(sober_compose(collapse, back) == lambda_map(point()));

  CHECK_FALSE(sober_iso(Lambda(ContMap{sierpinski(), point(), {0, 0}})));

  // Oracle: an isomorphism X ⤳ Y forces sX and sY to be homeomorphic.
  for (const SpaceRef& x : fx::spaces_up_to(3))
    for (const SpaceRef& y : fx::spaces_up_to(2))
      for (const SoberMap& f : enumerate_sober_maps(x, y))
        if (sober_iso(f)) CHECK(find_homeomorphism(*soberify(x).space, *f.target.space).has_value());
}

TEST_CASE("sober maps reject bad tables") {
  const Soberification s = soberify(sierpinski());
  CHECK_THROWS_AS(make_sober_map(point(), s, {2}), Error);
  CHECK_THROWS_AS(make_sober_map(point(), s, {0, 0}), Error);
  // Points of sS ascend by prime: ∅ is the open point's, {1} the closed point's.
  CHECK(s.lambda.map == std::vector<int>{1, 0});
  CHECK_THROWS_AS(make_sober_map(sierpinski(), s, {0, 1}), Error);
  CHECK_NOTHROW(make_sober_map(sierpinski(), s, {1, 0}));
}

TEST_CASE("the lift h_X") {
  for (const SpaceRef& x : fx::spaces_up_to(3)) {
    const LiftH h = lift_h(x);
    CHECK(is_proximity_morphism(h.table));
    CHECK(classify_morphism(h.table).iso);
    CHECK(h.table.target->atoms() == soberify(x).space->size());
  }
  // A sober space is its own soberification up to relabelling; here λ swaps the points.
  const LiftH s = lift_h(sierpinski());
  CHECK(s.table.map == std::vector<Mask>{0, 2, 1, 3});
  // Indiscrete pair: only the empty and full sets are seen.
  const LiftH p = lift_h(pair());
  CHECK(p.table.map == std::vector<Mask>{0, 0, 0, 1});
}

TEST_CASE("the functor P^s") {
  const auto spaces = fx::spaces_up_to(3);
  std::map<const FinSpace*, LiftH> hs;
  for (const SpaceRef& y : spaces) hs.emplace(y.get(), lift_h(y));

  for (const SpaceRef& x : spaces) CHECK(Pp(lambda_map(x), hs.at(x.get())) == identity_prox(share(powerset_MT(*x))));

  int maps = 0;
  for (const SpaceRef& x : spaces)
    for (const SpaceRef& y : spaces)
      for (const ContMap& f : fx::continuous_maps(x, y)) {
        ++maps;
        const ProxMap p = Pp(Lambda(f), hs.at(y.get()));
        CHECK(is_proximity_morphism(p));
        CHECK(same_table(p, gamma(powerset_of_map(f))));
      }
  MESSAGE("continuous maps checked: " << maps);

  const auto small = fx::spaces_up_to(2);
  for (const SpaceRef& x : small)
    for (const SpaceRef& y : small)
      for (const SpaceRef& z : small)
        for (const SoberMap& f : enumerate_sober_maps(x, y))
          for (const SoberMap& g : enumerate_sober_maps(y, z))
            CHECK(same_table(Pp(sober_compose(g, f)), star(Pp(f), Pp(g))));
}

TEST_CASE("the functor at^s") {
  const auto algs = fx::algebras_up_to(2);
  for (const MTRef& m : algs) CHECK(ats(identity_prox(m)) == lambda_map(share(at_space(*m))));
  for (const MTRef& a : algs)
    for (const MTRef& b : algs)
      for (const MTRef& c : algs) {
        const auto fs = enumerate_proximity_morphisms(a, b);
        const auto gs = enumerate_proximity_morphisms(b, c);
        for (const ProxMap& f : fs)
          for (const ProxMap& g : gs) CHECK(ats(star(g, f)) == sober_compose(ats(f), ats(g)));
      }

  // M4 → 2: the indiscrete pair and the point are isomorphic in the sober category.
  const auto m4_two = enumerate_proximity_morphisms(fx::m4(), fx::two());
  REQUIRE_FALSE(m4_two.empty());
  for (const ProxMap& f : m4_two) {
    CHECK(classify_morphism(f).iso);
    CHECK(sober_iso(ats(f)));
  }
  CHECK_THROWS_AS(ats(ProxMap{fx::two(), fx::two(), {1, 1}}), Error);
}

TEST_CASE("unit and counit are isomorphisms") {
  for (const SpaceRef& x : fx::spaces_up_to(3)) CHECK(sober_iso(epsilon_hat(x)));
  for (const MTRef& m : fx::algebras_up_to(3)) {
    const ProxMap e = eta_hat(m);
    CHECK(is_proximity_morphism(e));
    CHECK(classify_morphism(e).iso);
  }
}

TEST_CASE("naturality of the unit and counit") {
  const auto spaces = fx::spaces_up_to(3);
  int sober_maps = 0;
  for (const SpaceRef& x : spaces)
    for (const SpaceRef& y : spaces)
      for (const SoberMap& f : enumerate_sober_maps(x, y)) {
        ++sober_maps;
        CHECK(epsilon_hat_natural(f));
        CHECK(ats_Pp_agrees(f));
      }
  MESSAGE("sober maps checked: " << sober_maps);

  const auto algs = fx::algebras_up_to(2);
  for (const MTRef& a : algs)
    for (const MTRef& b : algs)
      for (const ProxMap& g : enumerate_proximity_morphisms(a, b)) CHECK(eta_hat_natural(g));
}

TEST_CASE("T_D is preserved on both sides") {
  for (const SpaceRef& x : fx::spaces_up_to(3)) {
    const MTRef px = share(powerset_MT(*x));
    CHECK(is_TD_space(*x) == is_TD(*px));
    if (is_TD_space(*x)) {
      CHECK(td_iff_envelope(px).iso);
      CHECK(is_TD_space(*epsilon_hat(x).carrier.target));
    }
  }
  for (const MTRef& m : fx::algebras_up_to(3))
    if (is_TD(*m)) CHECK(is_TD_space(at_space(*m)));
}
