#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mtp/io.hpp"

namespace mtp {

using Rng = std::mt19937_64;

enum class GenMode { Exhaustive, Random };

/// Topologies on points 0..n-1. Exhaustive mode lists every topology once
/// (through its specialization preorder); random mode closes `samples`
/// random families of subsets. Throws TooLarge past 5 points exhaustively.
std::vector<FinSpace> gen_spaces(int n, GenMode mode, Rng* rng = nullptr, int samples = 0);
/// MT-algebras on n atoms, one per topology from gen_spaces.
std::vector<MTRef> gen_mt(int n, GenMode mode, Rng* rng = nullptr, int samples = 0);
/// Posets on n points up to isomorphism.
std::vector<Poset> gen_posets(int n);
/// Downset lattices of posets on 1..max_poset points, skipping those with
/// more than max_frame elements.
std::vector<FrameRef> gen_frames(int max_poset, int max_frame);

struct RunConfig {
  int max_atoms = 3;   // algebras: exhaustive up to 3, sampled above
  int max_points = 3;  // spaces for map-level checks
  int max_poset = 4;   // frames come from posets of this size or less
  int max_frame = 20;
  std::uint64_t seed = 0;
  bool exhaustive = true;
  int samples = 24;       // random instances per size in random mode
  int frame_pairs = 200;  // sampled (L, L') pairs for frame-morphism checks
  int jobs = 1;

  /// Throws InvalidInput when a bound leaves the global guards.
  void validate() const;
  json to_json() const;
};

struct Instance {
  std::vector<Object> items;
  json params = json::object();
};

/// Returns false to stop the generator early.
using Emit = std::function<bool(const Instance&)>;

struct TheoremCheck {
  std::string id;
  std::string topic;
  std::string statement;
  std::function<void(const RunConfig&, Rng&, const Emit&)> generate;
  std::function<Verdict(const Instance&)> verify;
};

struct CheckResult {
  std::string id;
  std::string topic;
  std::size_t instances = 0;
  bool ok = true;
  std::string witness;
  json counterexample;  // null when ok
};

struct Report {
  RunConfig config;
  std::vector<CheckResult> results;

  bool ok() const;
  json to_json() const;
};

const std::vector<TheoremCheck>& default_registry();
/// Result areas that must each have at least one check.
const std::vector<std::string>& required_topics();
/// Required topics without a check, in order.
std::vector<std::string> audit_registry(const std::vector<TheoremCheck>& registry);

/// Runs the checks whose ids are in `only` (all when empty). Each check gets
/// its own generator seeded from the config seed and its id, so results do
/// not depend on `jobs` or on which other checks run. Throws InvalidInput for
/// an unknown id or a bad config.
Report run_checks(const std::vector<TheoremCheck>& registry, const RunConfig& config,
                  const std::vector<std::string>& only = {});

/// {"check": id, "statement": ..., "witness": ..., "instance": {"items": [...], "params": {...}}}
json counterexample_json(const TheoremCheck& check, const Instance& instance, const Verdict& verdict);
/// Re-runs the check named in a counterexample on its instance.
Verdict replay(const std::vector<TheoremCheck>& registry, const json& counterexample);

/// Independent count of topologies on n points: closes every family of
/// subsets under union and intersection.
std::size_t count_topologies_brute(int n);

}  // namespace mtp
