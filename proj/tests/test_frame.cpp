#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "mtp/frame.hpp"

using namespace mtp;

namespace {

// Oracle: p ≠ 1 and a ∧ b ≤ p forces a ≤ p or b ≤ p.
std::vector<int> primes_by_definition(const Frame& l) {
  std::vector<int> out;
  for (int p = 0; p < l.size(); ++p) {
    bool prime = p != l.top();
    for (int a = 0; a < l.size() && prime; ++a)
      for (int b = 0; b < l.size() && prime; ++b)
        prime = !l.leq(l.meet(a, b), p) || l.leq(a, p) || l.leq(b, p);
    if (prime) out.push_back(p);
  }
  return out;
}

// Oracle: join of all w with w ∧ u ≤ v, by scanning.
int implication_brute(const Frame& l, int u, int v) {
  int best = -1;
  for (int w = 0; w < l.size(); ++w) {
    if (!l.leq(l.meet(w, u), v)) continue;
    if (best < 0 || l.leq(best, w)) best = w;
  }
  return best;
}

std::vector<Frame> small_frames() {
  std::vector<Frame> out{fx::two_frame(), fx::c3(), fx::d4(), fx::chain(5)};
  out.emplace_back(downset_lattice(Poset::from_relation(3, [](int a, int b) { return a == b || (a == 0 && b > 0); })).lattice);
  out.emplace_back(downset_lattice(Poset::from_relation(4, [](int a, int b) {
                     return a == b || (a == 0 && b == 2) || (a == 1 && b == 2) || (a == 1 && b == 3);
                   })).lattice);
  out.emplace_back(downset_lattice(Poset::antichain(3)).lattice);
  return out;
}

}  // namespace

TEST_CASE("heyting implication") {
  Frame c3 = fx::c3();
  CHECK(heyting_implication(c3, 1, 0) == 0);
  Frame d4 = fx::d4();
  CHECK(heyting_implication(d4, 1, 2) == 2);
  for (const Frame& l : small_frames()) {
    for (int u = 0; u < l.size(); ++u) {
      CHECK(heyting_implication(l, u, u) == l.top());
      for (int v = 0; v < l.size(); ++v) {
        const int h = heyting_implication(l, u, v);
        CHECK(h == implication_brute(l, u, v));
        for (int w = 0; w < l.size(); ++w) CHECK(l.leq(w, h) == l.leq(l.meet(w, u), v));
      }
    }
  }
}

TEST_CASE("co-implication is the least w with d ≤ c ∨ w") {
  for (const Frame& l : small_frames()) {
    for (int c = 0; c < l.size(); ++c)
      for (int d = 0; d < l.size(); ++d) {
        const int w = co_implication(l.lattice(), c, d);
        for (int x = 0; x < l.size(); ++x) CHECK(l.leq(w, x) == l.leq(d, l.join(c, x)));
      }
  }
}

TEST_CASE("frame morphism checks") {
  FrameRef c3 = share(fx::c3());
  FrameRef t = share(fx::two_frame());
  CHECK(is_frame_morphism(identity_morphism(c3)));
  CHECK(is_frame_morphism({c3, t, {0, 1, 1}}));
  CHECK(is_frame_morphism({c3, t, {0, 0, 1}}));
  Verdict bad = is_frame_morphism({c3, t, {1, 0, 1}});
  CHECK_FALSE(bad);
  CHECK(bad.witness.find("bottom") != std::string::npos);
  CHECK_FALSE(is_frame_morphism({c3, t, {0, 1, 0}}));
}

TEST_CASE("frame morphism enumeration agrees with brute force") {
  auto frames = small_frames();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      FrameRef l = share(frames[i]), m = share(frames[j]);
      auto got = enumerate_frame_morphisms(l, m);
      // Oracle: every table.
      std::size_t count = 0;
      std::vector<int> tab(l->size(), 0);
      std::function<void(int)> all = [&](int k) {
        if (k == l->size()) {
          count += static_cast<bool>(is_frame_morphism({l, m, tab}));
          return;
        }
        for (int v = 0; v < m->size(); ++v) {
          tab[k] = v;
          all(k + 1);
        }
      };
      all(0);
      CHECK(got.size() == count);
      for (const auto& f : got) CHECK(is_frame_morphism(f));
    }
  }
}

TEST_CASE("primes and points") {
  CHECK(prime_elements(fx::c3()) == std::vector<int>{0, 1});
  CHECK(prime_elements(fx::d4()) == std::vector<int>{1, 2});
  Frame t = fx::two_frame();
  CHECK(prime_elements(t) == std::vector<int>{0});
  CHECK(point_of_prime(t, 0).filter == std::vector<int>{1});
  for (const Frame& l : small_frames()) {
    CHECK(prime_elements(l) == primes_by_definition(l));
    auto filters = completely_prime_filters_by_search(l);
    CHECK(filters.size() == prime_elements(l).size());
    for (const FramePoint& p : filters) {
      const int q = prime_of_point(l, p);
      CHECK(is_prime(l, q));
      CHECK(point_of_prime(l, q) == p);
    }
  }
}

TEST_CASE("pt spaces") {
  Spectrum c3 = pt_space(fx::c3());
  CHECK(c3.space.size() == 2);
  // Homeomorphic to the Sierpiński space: three opens, a chain.
  CHECK(c3.space.opens().size() == 3);
  Spectrum d4 = pt_space(fx::d4());
  CHECK(d4.space == FinSpace::discrete(2));
  CHECK(pt_space(fx::two_frame()).space.size() == 1);
  for (const Frame& l : small_frames()) {
    Spectrum s = pt_space(l);
    for (int a = 0; a < l.size(); ++a)
      for (int b = 0; b < l.size(); ++b) {
        CHECK(s.sigma[l.meet(a, b)] == (s.sigma[a] & s.sigma[b]));
        CHECK(s.sigma[l.join(a, b)] == (s.sigma[a] | s.sigma[b]));
        if (a != b) CHECK(s.sigma[a] != s.sigma[b]);
      }
  }
}

TEST_CASE("slicing filters") {
  for (const Frame& l : {fx::c3(), fx::two_frame(), fx::d4()}) {
    CHECK(slicing_filters(l).size() == prime_elements(l).size());
  }
  for (const Frame& l : small_frames()) {
    SlicingCharacterizations s = slicing_characterizations(l);
    CHECK(s.agree());
    CHECK(ptD_space(l).space == pt_space(l).space);
  }
}

TEST_CASE("frame D-morphisms") {
  FrameRef c3 = share(fx::c3());
  FrameRef t = share(fx::two_frame());
  CHECK(is_D_morphism_frame(identity_morphism(c3)));
  // Oracle: preimages of the lone slicing filter {1} of the 2-frame.
  FrameMorphism up{c3, t, {0, 1, 1}};
  std::vector<int> pre;
  for (int a = 0; a < 3; ++a)
    if (up.map[a] == 1) pre.push_back(a);
  CHECK(pre == std::vector<int>{1, 2});
  CHECK(is_slicing_filter(*c3, pre));
  CHECK(is_D_morphism_frame(up));
  CHECK_THROWS_AS(is_D_morphism_frame({c3, t, {1, 0, 1}}), Error);

  auto frames = small_frames();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        FrameRef a = share(frames[i]), b = share(frames[j]), c = share(frames[k]);
        for (const auto& f : enumerate_frame_morphisms(a, b))
          for (const auto& g : enumerate_frame_morphisms(b, c))
            if (is_D_morphism_frame(f) && is_D_morphism_frame(g)) CHECK(is_D_morphism_frame(compose(g, f)));
      }
}
