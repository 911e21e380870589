// mtp: command-line front end. Exit codes: 0 pass, 1 check failure, 2 input error.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mtp/dmorph.hpp"
#include "mtp/envelope.hpp"
#include "mtp/harness.hpp"

using namespace mtp;

namespace {

struct CheckFailed {
  json report;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json verdict_json(const Verdict& v) {
  json j{{"status", v.ok ? "pass" : "fail"}};
  if (!v.ok) j["witness"] = v.witness;
  return j;
}

// Prints the report and signals exit status 1 on failure.
void finish(json report) {
  emit(report);
  if (report.value("status", "pass") != "pass") throw CheckFailed{};
}

template <class T>
T expect(const Object& o, const char* what) {
  if (const T* p = std::get_if<T>(&o)) return *p;
  throw Error(ErrorKind::InvalidInput, std::string("expected ") + what + ", got " + kind_of(o));
}

Object load(const std::string& path) { return object_from_json(read_json_file(path)); }

json mask_list(const std::vector<Mask>& v) {
  json a = json::array();
  for (Mask m : v) a.push_back(mask_to_json(m));
  return a;
}

void cmd_envelope(const std::string& path) {
  const FrameRef l = expect<FrameRef>(load(path), "a frame");
  const FunayamaEnvelope f = funayama(l);
  emit({{"algebra", to_json(*f.mt)},
        {"irreducibles", f.boolean.irreducibles},
        {"embedding", mask_list(f.boolean.embed)},
        {"rho", rho(f).map}});
}

void cmd_spectrum(const std::string& path, bool ptd, bool dot) {
  const FrameRef l = expect<FrameRef>(load(path), "a frame");
  const Spectrum s = ptd ? ptD_space(*l) : pt_space(*l);
  if (dot) {
    std::cout << dot_of(share(s.space));
    return;
  }
  emit({{"space", to_json(s.space)}, {"primes", s.primes}});
}

void cmd_soberify(const std::string& path) {
  const SpaceRef x = expect<SpaceRef>(load(path), "a space");
  const Soberification s = soberify(x);
  emit({{"space", to_json(*s.space)}, {"primes", mask_list(s.primes)}, {"lambda", s.lambda.map}});
}

void cmd_coreflect(const std::string& path) {
  const Object o = load(path);
  if (const SpaceRef* x = std::get_if<SpaceRef>(&o)) {
    const TDSubspace d = td_subspace(*x);
    emit({{"space", to_json(*d.space)}, {"inclusion", d.inclusion.map}});
    return;
  }
  const ContMap f = expect<ContMap>(o, "a space or a continuous map");
  const Coreflection c = td_coreflect(f);
  emit({{"factor", to_json(c.hat)}, {"unique", c.unique}});
}

void cmd_reflect(const std::string& path) {
  const MTMorphism f = expect<MTMorphism>(load(path), "an MT-morphism");
  const Reflection r = reflect(f);
  emit({{"factor", to_json(r.hat)}, {"unique", r.unique}});
}

void cmd_check(const std::string& what, const std::string& path) {
  if (what == "replay") {
    const json cx = read_json_file(path);
    json out = verdict_json(replay(default_registry(), cx));
    out["check"] = cx["check"];
    finish(out);
    return;
  }
  const json j = read_json_file(path);
  if (what == "mt") {
    try {
      const MTRef m = mt_from_json(j);
      json out = verdict_json(kuratowski_check(*m));
      out["T0"] = is_T0(*m);
      out["TD"] = is_TD(*m);
      out["locally_closed"] = mask_list(m->locally_closed());
      finish(out);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidMTAlgebra) throw;
      finish(verdict_json(Verdict::fail(e.what())));
    }
  } else if (what == "prox") {
    const ProxMap f = prox_from_json(j);
    const ProximityReport r = check_proximity(f);
    json out{{"status", r.ok() ? "pass" : "fail"}};
    const char* names[] = {"P1", "P2", "P3", "P4"};
    const Verdict* vs[] = {&r.p1, &r.p2, &r.p3, &r.p4};
    for (int i = 0; i < 4; ++i) out[names[i]] = verdict_json(*vs[i]);
    if (r.ok()) {
      const Classification c = classify_morphism(f);
      out["iso"] = c.iso;
      out["mono"] = c.mono;
      out["epi"] = c.epi;
    }
    finish(out);
  } else if (what == "d-morphism") {
    const Object o = object_from_json(j);
    if (const FrameMorphism* h = std::get_if<FrameMorphism>(&o)) {
      finish(verdict_json(is_D_morphism_frame(*h)));
      return;
    }
    const MTMorphism f = expect<MTMorphism>(o, "an MT-morphism or frame morphism");
    const DMorphismReport r = is_D_morphism_MT(f);
    finish({{"status", r.is_D ? "pass" : "fail"}, {"witnesses", r.witnesses}});
  } else if (what == "frame-morphism") {
    finish(verdict_json(is_frame_morphism(frame_morphism_from_json(j))));
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown check " + what);
  }
}

void cmd_compose(const std::string& f_path, const std::string& g_path, bool sober) {
  const Object f = load(f_path), g = load(g_path);
  if (sober) {
    emit(to_json(sober_compose(expect<SoberMap>(g, "a sober map"), expect<SoberMap>(f, "a sober map"))));
  } else if (std::holds_alternative<ProxMap>(f)) {
    emit(to_json(star(expect<ProxMap>(g, "a proximity map"), std::get<ProxMap>(f))));
  } else if (std::holds_alternative<ContMap>(f)) {
    emit(to_json(compose(expect<ContMap>(g, "a continuous map"), std::get<ContMap>(f))));
  } else if (std::holds_alternative<MTMorphism>(f)) {
    emit(to_json(compose(expect<MTMorphism>(g, "an MT-morphism"), std::get<MTMorphism>(f))));
  } else if (std::holds_alternative<FrameMorphism>(f)) {
    emit(to_json(compose(expect<FrameMorphism>(g, "a frame morphism"), std::get<FrameMorphism>(f))));
  } else {
    throw Error(ErrorKind::InvalidInput, "cannot compose " + kind_of(f));
  }
}

void cmd_dualize(const std::string& path, bool to_space) {
  const Object o = load(path);
  if (to_space) emit(to_json(ats(expect<ProxMap>(o, "a proximity morphism"))));
  else emit(to_json(Pp(expect<SoberMap>(o, "a sober map"))));
}

int run(int argc, char** argv) {
  CLI::App app{"Finite pointfree topology toolkit"};
  app.require_subcommand(1);

  std::string file, file2, what;
  bool flag_pt = false, flag_ptd = false, dot = false, sober = false, to_space = false, to_algebra = false;

  auto* envelope = app.add_subcommand("envelope", "Funayama envelope of a frame");
  envelope->add_option("frame", file, "frame JSON")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Points of a frame as a space");
  spectrum->add_option("frame", file, "frame JSON")->required();
  auto* g = spectrum->add_option_group("which");
  g->add_flag("--pt", flag_pt, "all points");
  g->add_flag("--ptd", flag_ptd, "slicing points only");
  g->require_option(0, 1);
  spectrum->add_flag("--dot", dot, "emit the opens as a Hasse diagram");

  auto* soberify_cmd = app.add_subcommand("soberify", "Soberification of a space");
  soberify_cmd->add_option("space", file, "space JSON")->required();

  auto* coreflect = app.add_subcommand("coreflect", "T_D subspace, or the factor of a map through it");
  coreflect->add_option("input", file, "space or continuous map JSON")->required();

  auto* reflect_cmd = app.add_subcommand("reflect", "Factor a D-morphism through chi");
  reflect_cmd->add_option("morphism", file, "MT-morphism JSON")->required();

  auto* check = app.add_subcommand("check", "Validate an object or replay a counterexample");
  check->add_option("what", what, "mt | prox | d-morphism | frame-morphism | replay")
      ->required()
      ->check(CLI::IsMember({"mt", "prox", "d-morphism", "frame-morphism", "replay"}));
  check->add_option("file", file, "JSON input")->required();

  auto* compose_cmd = app.add_subcommand("compose", "g after f");
  compose_cmd->add_option("f", file, "first morphism")->required();
  compose_cmd->add_option("g", file2, "second morphism")->required();
  compose_cmd->add_flag("--sober", sober, "compose sober maps");

  auto* dualize = app.add_subcommand("dualize", "Move a morphism across the sober duality");
  dualize->add_option("morphism", file, "morphism JSON")->required();
  auto* dg = dualize->add_option_group("direction");
  dg->add_flag("--to-space", to_space, "proximity morphism to sober map");
  dg->add_flag("--to-algebra", to_algebra, "sober map to proximity morphism");
  dg->require_option(1);

  RunConfig cfg;
  std::vector<std::string> only;
  std::string out_path;
  bool list = false, random = false;
  auto* verify = app.add_subcommand("verify", "Run the registered checks");
  verify->add_option("--only", only, "check id (repeatable)");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--max-atoms", cfg.max_atoms, "largest algebra; above 3 atoms instances are sampled");
  verify->add_option("--max-points", cfg.max_points, "largest space for map-level checks");
  verify->add_option("--samples", cfg.samples, "random instances per size");
  verify->add_option("--frame-pairs", cfg.frame_pairs, "sampled frame pairs");
  verify->add_option("--jobs", cfg.jobs, "checks run at once");
  verify->add_flag("--random", random, "sample every size instead of enumerating");
  verify->add_flag("--list", list, "list check ids and statements");
  verify->add_option("--out", out_path, "also write the report here");

  auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram of a frame, algebra or space");
  export_dot->add_option("input", file, "JSON input")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*envelope) cmd_envelope(file);
    else if (*spectrum) cmd_spectrum(file, flag_ptd, dot);
    else if (*soberify_cmd) cmd_soberify(file);
    else if (*coreflect) cmd_coreflect(file);
    else if (*reflect_cmd) cmd_reflect(file);
    else if (*check) cmd_check(what, file);
    else if (*compose_cmd) cmd_compose(file, file2, sober);
    else if (*dualize) cmd_dualize(file, to_space);
    else if (*export_dot) std::cout << dot_of(load(file));
    else if (*verify) {
      if (list) {
        json l = json::array();
        for (const TheoremCheck& c : default_registry()) l.push_back({{"id", c.id}, {"topic", c.topic}, {"statement", c.statement}});
        emit(l);
        return 0;
      }
      cfg.exhaustive = !random;
      if (auto missing = audit_registry(default_registry()); !missing.empty()) {
        emit({{"status", "fail"}, {"missing_topics", missing}});
        return 1;
      }
      const Report r = run_checks(default_registry(), cfg, only);
      const json j = r.to_json();
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + out_path);
        out << j.dump(2) << '\n';
      }
      finish(j);
    }
    (void)flag_pt;
    (void)to_algebra;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << "mtp: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::NotD:
      case ErrorKind::TargetNotTD:
      case ErrorKind::SourceNotTD:
      case ErrorKind::NotLocallyClosedMap:
      case ErrorKind::NotProximityMorphism:
      case ErrorKind::InternalInconsistency:
        return 1;
      default:
        return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
