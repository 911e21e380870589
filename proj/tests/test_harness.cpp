#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "mtp/harness.hpp"

using namespace mtp;

namespace {

std::set<std::vector<Mask>> opens_of(const std::vector<FinSpace>& xs) {
  std::set<std::vector<Mask>> out;
  for (const FinSpace& x : xs) out.insert(x.opens());
  return out;
}

// A deliberately false claim: every algebra is TD.
std::vector<TheoremCheck> broken_registry() {
  TheoremCheck c;
  c.id = "broken.all-td";
  c.topic = "broken";
  c.statement = "Every algebra is TD.";
  c.generate = [](const RunConfig&, Rng&, const Emit& emit) {
    for (const MTRef& m : gen_mt(2, GenMode::Exhaustive))
      if (!emit({{m}})) return;
  };
  c.verify = [](const Instance& in) {
    return is_TD(*std::get<MTRef>(in.items.at(0))) ? Verdict::pass() : Verdict::fail("not TD");
  };
  return {c};
}

}  // namespace

TEST_CASE("exhaustive topologies match the closure oracle") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) {
    const auto xs = gen_spaces(n, GenMode::Exhaustive);
    CHECK(xs.size() == expected[n]);
    CHECK(opens_of(xs).size() == xs.size());
    if (n >= 1) CHECK(count_topologies_brute(n) == xs.size());
  }
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<Mask>> brute;
    for (const MTRef& m : fx::all_algebras(n)) brute.insert(m->opens());
    CHECK(opens_of(gen_spaces(n, GenMode::Exhaustive)) == brute);
  }
  CHECK(gen_mt(2, GenMode::Exhaustive).size() == 4);
  CHECK_THROWS_AS(gen_spaces(6, GenMode::Exhaustive), Error);
}

TEST_CASE("random topologies are valid and reproducible") {
  Rng a(7), b(7);
  const auto xs = gen_spaces(5, GenMode::Random, &a, 10);
  const auto ys = gen_spaces(5, GenMode::Random, &b, 10);
  REQUIRE(xs.size() == 10);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(xs[i].opens() == ys[i].opens());
  CHECK_THROWS_AS(gen_spaces(3, GenMode::Random), Error);
}

TEST_CASE("posets and frames") {
  CHECK(gen_posets(1).size() == 1);
  CHECK(gen_posets(2).size() == 2);
  CHECK(gen_posets(3).size() == 5);
  const auto one = gen_frames(1, 20);
  REQUIRE(one.size() == 1);
  CHECK(*one[0] == fx::two_frame());
  bool has_c3 = false;
  for (const FrameRef& l : gen_frames(2, 20)) has_c3 = has_c3 || find_order_isomorphism(l->lattice().poset(), fx::c3().lattice().poset());
  CHECK(has_c3);
  CHECK(gen_frames(2, 3).size() == 2);
}

TEST_CASE("registry covers every topic") {
  CHECK(audit_registry(default_registry()).empty());
  std::set<std::string> ids;
  for (const TheoremCheck& c : default_registry()) CHECK(ids.insert(c.id).second);
  auto partial = default_registry();
  partial.erase(partial.begin());
  CHECK(audit_registry(partial) == std::vector<std::string>{default_registry().front().topic});
}

TEST_CASE("a false check fails with a replayable counterexample") {
  const auto reg = broken_registry();
  const Report r = run_checks(reg, RunConfig{});
  CHECK_FALSE(r.ok());
  REQUIRE(r.results.size() == 1);
  const CheckResult& c = r.results[0];
  CHECK_FALSE(c.ok);
  CHECK(c.witness == "not TD");
  CHECK(c.counterexample["check"] == "broken.all-td");
  const MTRef bad = mt_from_json(c.counterexample["instance"]["items"][0]);
  CHECK_FALSE(is_TD(*bad));

  const json reread = json::parse(c.counterexample.dump());
  CHECK_FALSE(replay(reg, reread).ok);
  CHECK(r.to_json()["status"] == "fail");
  CHECK_THROWS_AS(replay(default_registry(), reread), Error);
}

TEST_CASE("run_checks selection and determinism") {
  RunConfig cfg;
  cfg.seed = 5;
  cfg.exhaustive = false;
  cfg.samples = 4;
  const std::vector<std::string> ids{"mt.separation", "prox.derived", "envelope.equivalence"};
  const json a = run_checks(default_registry(), cfg, ids).to_json();
  cfg.jobs = 3;
  const json b = run_checks(default_registry(), cfg, ids).to_json();
  CHECK(a == b);
  CHECK(a["status"] == "pass");
  CHECK(a["checks"].size() == 3);
  // A check's instances do not depend on which other checks run.
  cfg.jobs = 1;
  const json alone = run_checks(default_registry(), cfg, {"prox.derived"}).to_json();
  CHECK(alone["checks"][0] == a["checks"][1]);
  CHECK_THROWS_AS(run_checks(default_registry(), cfg, {"no.such-check"}), Error);
  cfg.jobs = 0;
  CHECK_THROWS_AS(run_checks(default_registry(), cfg), Error);
}

TEST_CASE("JSON round trips") {
  const MTRef s = fx::sier();
  CHECK(mt_from_json(to_json(*s))->opens() == s->opens());
  const SpaceRef x = share(s->space());
  CHECK(space_from_json(to_json(*x))->opens() == x->opens());
  const FrameRef l = share(fx::c3());
  CHECK(*frame_from_json(to_json(*l)) == *l);

  const ProxMap f{fx::m4(), fx::two(), {0, 0, 0, 1}};
  const Object o = object_from_json(to_json(f));
  REQUIRE(std::holds_alternative<ProxMap>(o));
  CHECK(std::get<ProxMap>(o) == f);
  CHECK(kind_of(o) == "prox");

  const ProxMap id = identity_prox(s);
  const json j = to_json(id);
  CHECK(j["objects"].size() == 1);
  CHECK(prox_from_json(j) == id);

  const SoberMap lam = lambda_map(x);
  CHECK(sober_from_json(to_json(lam)) == lam);
  for (const ContMap& g : fx::continuous_maps(x, x)) CHECK(cont_map_from_json(to_json(g)).map == g.map);
  const MTMorphism m = identity_mt(s);
  CHECK(mt_morphism_from_json(to_json(m)) == m);
  const FrameMorphism h = identity_morphism(l);
  CHECK(frame_morphism_from_json(to_json(h)).map == h.map);
}

TEST_CASE("malformed JSON is InvalidInput") {
  auto kind = [](const json& j) {
    try {
      object_from_json(j);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalInconsistency;
  };
  CHECK(kind(json::array()) == ErrorKind::InvalidInput);
  CHECK(kind({{"kind", "nope"}}) == ErrorKind::InvalidInput);
  CHECK(kind({{"kind", "mt"}, {"atoms", 2}}) == ErrorKind::InvalidInput);
  CHECK(kind({{"kind", "mt"}, {"atoms", 2}, {"opens", {{0}, {5}}}}) == ErrorKind::InvalidInput);
  CHECK(kind({{"kind", "space"}, {"points", "two"}, {"opens", json::array()}}) == ErrorKind::InvalidInput);
  json p = to_json(ProxMap{fx::m4(), fx::two(), {0, 0, 0, 1}});
  p["map"].erase(0);
  CHECK(kind(p) == ErrorKind::InvalidInput);
  p = to_json(ProxMap{fx::m4(), fx::two(), {0, 0, 0, 1}});
  p["dst"] = "Z";
  CHECK(kind(p) == ErrorKind::InvalidInput);
}

TEST_CASE("DOT export") {
  const std::string d = dot_of(Object{fx::sier()});
  CHECK(d.find("digraph") != std::string::npos);
  CHECK(d.find("{1}") != std::string::npos);
  CHECK_THROWS_AS(dot_of(Object{ProxMap{fx::m4(), fx::two(), {0, 0, 0, 1}}}), Error);
}
