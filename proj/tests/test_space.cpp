#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "mtp/space.hpp"

using namespace mtp;

namespace {

// Oracles straight from the definitions, over all opens.
bool lc_point_brute(const FinSpace& x, int p) {
  const Mask cl = x.closure(bit(p));
  for (Mask u : x.opens())
    if ((u & cl) == bit(p)) return true;
  return false;
}

bool t0_brute(const FinSpace& x) {
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b)
      if (x.closure(bit(a)) == x.closure(bit(b))) return false;
  return true;
}

bool td_brute(const FinSpace& x) {
  for (int p = 0; p < x.size(); ++p)
    if (!x.is_closed(x.closure(bit(p)) & ~bit(p))) return false;
  return true;
}

int distinct_closures(const FinSpace& x) {
  std::set<Mask> cls;
  for (int p = 0; p < x.size(); ++p) cls.insert(x.closure(bit(p)));
  return static_cast<int>(cls.size());
}

}  // namespace

TEST_CASE("separation of points") {
  CHECK(is_TD_space(FinSpace::sierpinski()));
  CHECK_FALSE(is_T0_space(FinSpace::indiscrete(2)));
  CHECK(locally_closed_points(FinSpace::indiscrete(2)) == 0);
  CHECK(locally_closed_points(FinSpace::indiscrete(1)) == 1);
  // Opens form a chain: each point is closed inside its least open.
  const FinSpace chain3(3, {0b000, 0b100, 0b110, 0b111});
  CHECK(locally_closed_points(chain3) == 0b111);
  for (const SpaceRef& x : fx::spaces_up_to(3)) {
    for (int p = 0; p < x->size(); ++p) CHECK(is_locally_closed_point(*x, p) == lc_point_brute(*x, p));
    CHECK(is_T0_space(*x) == t0_brute(*x));
    CHECK(is_TD_space(*x) == td_brute(*x));
    // Finite T0 and T_D coincide.
    CHECK(is_T0_space(*x) == is_TD_space(*x));
  }
}

TEST_CASE("the powerset functor") {
  const auto spaces = fx::spaces_up_to(2);
  for (const SpaceRef& x : spaces) CHECK(powerset_of_map(identity_map(x)) == identity_mt(share(powerset_MT(*x))));
  for (const SpaceRef& x : spaces)
    for (const SpaceRef& y : spaces)
      for (const SpaceRef& z : spaces)
        for (const ContMap& f : fx::continuous_maps(x, y))
          for (const ContMap& g : fx::continuous_maps(y, z))
            CHECK(powerset_of_map(compose(g, f)) == compose(powerset_of_map(f), powerset_of_map(g)));

  // Constant map onto the closed point of Sierpinski space.
  const SpaceRef pair = share(FinSpace::discrete(2));
  const SpaceRef s = share(FinSpace::sierpinski());
  const MTMorphism pf = powerset_of_map(ContMap{pair, s, {0, 0}});
  CHECK(pf.map == std::vector<Mask>{0b00, 0b11, 0b00, 0b11});
  CHECK(is_MT_morphism(pf));

  CHECK_THROWS_AS(powerset_of_map(ContMap{s, pair, {0, 1}}), Error);
}

TEST_CASE("epsilon") {
  for (const SpaceRef& x : fx::spaces_up_to(3)) {
    const ContMap e = epsilon(x);
    CHECK(is_homeomorphism(e));
    for (int p = 0; p < x->size(); ++p) CHECK(e.map[p] == p);
  }
  const auto spaces = fx::spaces_up_to(2);
  for (const SpaceRef& x : spaces)
    for (const SpaceRef& y : spaces)
      for (const ContMap& f : fx::continuous_maps(x, y)) {
        const ContMap lhs = compose(dual_map(powerset_of_map(f)), epsilon(x));
        const ContMap rhs = compose(epsilon(y), f);
        CHECK(lhs.map == rhs.map);
      }
}

TEST_CASE("soberification") {
  for (const SpaceRef& x : fx::spaces_up_to(3)) {
    const Soberification s = soberify(x);
    CHECK(is_continuous(s.lambda));
    CHECK(s.space->size() == distinct_closures(*x));
    CHECK(is_sober(*s.space));
    CHECK(is_homeomorphism(soberify(s.space).lambda));
    // Finite sober spaces are exactly the T0 ones.
    CHECK(is_sober(*x) == t0_brute(*x));
    CHECK(is_homeomorphism(s.lambda) == is_sober(*x));
    for (int p = 0; p < x->size(); ++p) CHECK(s.primes[s.lambda.map[p]] == (x->full() & ~x->closure(bit(p))));
  }
  const Soberification pair = soberify(share(FinSpace::indiscrete(2)));
  CHECK(pair.space->size() == 1);
  CHECK(pair.lambda.map == std::vector<int>{0, 0});
}

TEST_CASE("sober lift is functorial") {
  const auto spaces = fx::spaces_up_to(2);
  for (const SpaceRef& x : spaces) {
    const Soberification sx = soberify(x);
    CHECK(sober_lift(identity_map(x), sx, sx).map == identity_map(sx.space).map);
    for (const SpaceRef& y : spaces) {
      const Soberification sy = soberify(y);
      for (const ContMap& f : fx::continuous_maps(x, y)) {
        const ContMap sf = sober_lift(f, sx, sy);
        CHECK(is_continuous(sf));
        // s f ∘ λ_X = λ_Y ∘ f.
        CHECK(compose(sf, sx.lambda).map == compose(sy.lambda, f).map);
      }
    }
  }
}

TEST_CASE("the T_D subspace") {
  for (const SpaceRef& x : fx::spaces_up_to(3)) {
    const TDSubspace d = td_subspace(x);
    CHECK(is_continuous(d.inclusion));
    CHECK(is_TD_space(*d.space));
    Mask img = 0;
    for (int p : d.inclusion.map) img |= bit(p);
    CHECK(img == locally_closed_points(*x));
    if (is_TD_space(*x)) CHECK(d.space->size() == x->size());
  }
  const TDSubspace pair = td_subspace(share(FinSpace::indiscrete(2)));
  CHECK(pair.space->size() == 0);
}

TEST_CASE("locally closed maps") {
  const SpaceRef pt = share(FinSpace::discrete(1));
  const SpaceRef s = share(FinSpace::sierpinski());
  CHECK(is_locally_closed_map(ContMap{pt, s, {0}}));
  CHECK(is_locally_closed_map(ContMap{pt, s, {1}}));
  CHECK_FALSE(is_locally_closed_map(ContMap{pt, share(FinSpace::indiscrete(2)), {1}}));
  CHECK_THROWS_AS(is_locally_closed_map(ContMap{s, share(FinSpace::discrete(2)), {0, 1}}), Error);
}
