#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "mtp/error.hpp"
#include "mtp/order.hpp"

using namespace mtp;

namespace {

// Oracle: a ⋖ b checked against every c.
int count_covers_brute(const Poset& p) {
  int n = 0;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.less(a, b)) continue;
      bool between = false;
      for (int c = 0; c < p.size(); ++c) between = between || (p.less(a, c) && p.less(c, b));
      n += !between;
    }
  return n;
}

// Oracle: every subset of the carrier tested for down-closure.
std::vector<Mask> downsets_brute(const Poset& p) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << p.size()); ++s) {
    bool closed = true;
    for (int a : members(s))
      for (int b = 0; b < p.size(); ++b) closed = closed && (!p.leq(b, a) || (s & bit(b)));
    if (closed) out.push_back(s);
  }
  return out;
}

Lattice diamond_m3() {
  // 0 < a, b, c < 1
  return Lattice::from_poset(Poset::from_relation(5, [](int x, int y) { return x == y || x == 0 || y == 4; }));
}

}  // namespace

TEST_CASE("covers of small posets") {
  auto c3 = fx::c3();
  auto cv = covers(c3.lattice().poset());
  CHECK(cv == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  auto d4 = fx::d4();
  CHECK(covers(d4.lattice().poset()) == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  Poset b4 = Poset::of_sets(std::vector<Mask>{0, 1, 2, 3});
  CHECK(covers(b4).size() == 4);
  CHECK(count_covers_brute(b4) == 4);
}

TEST_CASE("poset validation rejects broken relations") {
  CHECK_THROWS_AS(Poset::from_matrix({{true, true}, {true, true}}), Error);
  CHECK_THROWS_AS(Poset::from_matrix({{false}}), Error);
  CHECK_THROWS_AS(Poset::from_matrix({{true, true, false}, {false, true, true}, {false, false, true}}), Error);
  CHECK_THROWS_AS(Lattice::from_poset(Poset::antichain(2)), Error);
}

TEST_CASE("join-irreducibles") {
  CHECK(join_irreducibles(fx::c3().lattice()) == std::vector<int>{1, 2});
  CHECK(join_irreducibles(fx::d4().lattice()) == std::vector<int>{1, 2});
  CHECK(join_irreducibles(fx::two_frame().lattice()) == std::vector<int>{1});
  try {
    join_irreducibles(diamond_m3());
    FAIL("expected NotDistributive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDistributive);
  }
}

TEST_CASE("every element of a distributive lattice is the join of irreducibles below it") {
  for (int n = 1; n <= 4; ++n) {
    for (const Poset& p : {Poset::chain(n), Poset::antichain(n)}) {
      DownsetLattice d = downset_lattice(p);
      const Lattice& l = d.lattice;
      auto irr = join_irreducibles(l);
      for (int a = 0; a < l.size(); ++a) {
        int j = l.bottom();
        for (int x : irr)
          if (l.leq(x, a)) j = l.join(j, x);
        CHECK(j == a);
      }
    }
  }
}

TEST_CASE("downset lattices") {
  CHECK(downset_lattice(Poset::chain(1)).lattice.size() == 2);
  CHECK(downset_lattice(Poset::antichain(2)).lattice == fx::d4().lattice());
  CHECK(downset_lattice(Poset::chain(2)).lattice == fx::c3().lattice());
  // N-shaped poset: 0 < 2, 1 < 2, 1 < 3.
  Poset n = Poset::from_relation(4, [](int a, int b) {
    return a == b || (a == 0 && b == 2) || (a == 1 && b == 2) || (a == 1 && b == 3);
  });
  DownsetLattice d = downset_lattice(n);
  auto brute = downsets_brute(n);
  auto got = d.downsets;
  std::sort(got.begin(), got.end());
  CHECK(got == brute);
  CHECK(is_distributive(d.lattice));
}

TEST_CASE("distributive and boolean predicates") {
  CHECK(is_distributive(fx::c3().lattice()));
  CHECK_FALSE(is_boolean(fx::c3().lattice()));
  CHECK(is_boolean(fx::d4().lattice()));
  auto w = distributivity_witness(diamond_m3());
  REQUIRE(w.has_value());
  const Lattice m3 = diamond_m3();
  auto [a, b, c] = *w;
  CHECK(m3.meet(a, m3.join(b, c)) != m3.join(m3.meet(a, b), m3.meet(a, c)));
}

TEST_CASE("MacNeille completion") {
  SUBCASE("a lattice completes to itself") {
    for (const Lattice& l : {fx::c3().lattice(), fx::d4().lattice(), diamond_m3()}) {
      Completion c = macneille_completion(l.poset());
      CHECK(c.lattice.size() == l.size());
      auto iso = find_order_isomorphism(l.poset(), c.lattice.poset());
      CHECK(iso.has_value());
      std::vector<int> e = c.embedding;
      std::sort(e.begin(), e.end());
      CHECK(std::adjacent_find(e.begin(), e.end()) == e.end());
    }
  }
  SUBCASE("2-antichain gives the four-element boolean lattice") {
    Completion c = macneille_completion(Poset::antichain(2));
    CHECK(c.lattice.size() == 4);
    CHECK(find_order_isomorphism(c.lattice.poset(), fx::d4().lattice().poset()).has_value());
    const int b = c.lattice.bottom(), t = c.lattice.top();
    for (int x : c.embedding) CHECK((x != b && x != t));
  }
  SUBCASE("empty poset") {
    CHECK(macneille_completion(Poset::antichain(0)).lattice.size() == 1);
  }
  SUBCASE("embedding preserves and reflects order") {
    Poset n = Poset::from_relation(4, [](int a, int b) {
      return a == b || (a == 0 && b == 2) || (a == 1 && b == 2) || (a == 1 && b == 3);
    });
    Completion c = macneille_completion(n);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(n.leq(a, b) == c.lattice.leq(c.embedding[a], c.embedding[b]));
  }
}

TEST_CASE("dot export lists covers") {
  std::string dot = to_dot(fx::c3().lattice().poset());
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("n1 -> n2") != std::string::npos);
  CHECK(dot.find("n0 -> n2") == std::string::npos);
}
