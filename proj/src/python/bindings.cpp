// Python bindings. Objects cross the boundary as dicts in the CLI's JSON shapes.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mtp/dmorph.hpp"
#include "mtp/envelope.hpp"
#include "mtp/harness.hpp"

namespace py = pybind11;
using namespace mtp;

namespace {

json to_native(const py::handle& o) {
  const std::string s = py::module_::import("json").attr("dumps")(o).cast<std::string>();
  return json::parse(s);
}

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Object load(const py::handle& o) { return object_from_json(to_native(o)); }

template <class T>
T expect(const py::handle& o, const char* what) {
  const Object obj = load(o);
  if (const T* p = std::get_if<T>(&obj)) return *p;
  throw Error(ErrorKind::InvalidInput, std::string("expected ") + what + ", got " + kind_of(obj));
}

json verdict(const Verdict& v) { return v.ok ? json{{"ok", true}} : json{{"ok", false}, {"witness", v.witness}}; }

json masks(const std::vector<Mask>& v) {
  json a = json::array();
  for (Mask m : v) a.push_back(mask_to_json(m));
  return a;
}

py::object compose_any(const py::handle& f_in, const py::handle& g_in) {
  const Object f = load(f_in), g = load(g_in);
  if (f.index() != g.index()) throw Error(ErrorKind::InvalidInput, "cannot compose " + kind_of(f) + " with " + kind_of(g));
  return std::visit(
      [&](const auto& ff) -> py::object {
        using T = std::decay_t<decltype(ff)>;
        const T& gg = std::get<T>(g);
        if constexpr (std::is_same_v<T, ProxMap>) return to_py(to_json(star(gg, ff)));
        else if constexpr (std::is_same_v<T, SoberMap>) return to_py(to_json(sober_compose(gg, ff)));
        else if constexpr (std::is_same_v<T, ContMap> || std::is_same_v<T, MTMorphism> || std::is_same_v<T, FrameMorphism>)
          return to_py(to_json(compose(gg, ff)));
        else throw Error(ErrorKind::InvalidInput, "cannot compose " + kind_of(f));
      },
      f);
}

}  // namespace

PYBIND11_MODULE(mtp, m) {
  m.doc() = "Finite pointfree topology: frames, MT-algebras, proximity morphisms and sober maps.";

  // Messages start with the error kind, e.g. "NotProximityMorphism: ...".
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("kind", [](const py::dict& o) { return kind_of(load(o)); }, "Object kind after validation.");

  m.def(
      "check_mt",
      [](const py::dict& o) {
        const MTRef a = mt_from_json(to_native(o));
        json out = verdict(kuratowski_check(*a));
        out["T0"] = is_T0(*a);
        out["TD"] = is_TD(*a);
        out["deVries"] = is_deVries(*a);
        out["locally_closed"] = masks(a->locally_closed());
        return to_py(out);
      },
      "Validate an MT-algebra and report its separation properties.");

  m.def(
      "check_prox",
      [](const py::dict& o) {
        const ProxMap f = prox_from_json(to_native(o));
        const ProximityReport r = check_proximity(f);
        json out{{"ok", r.ok()}, {"P1", verdict(r.p1)}, {"P2", verdict(r.p2)}, {"P3", verdict(r.p3)}, {"P4", verdict(r.p4)}};
        if (r.ok()) {
          const Classification c = classify_morphism(f);
          out["iso"] = c.iso;
          out["mono"] = c.mono;
          out["epi"] = c.epi;
        }
        return to_py(out);
      },
      "Proximity axioms P1-P4 and, when they hold, the iso/mono/epi flags.");

  m.def("identity", [](const py::dict& o) { return to_py(to_json(identity_prox(expect<MTRef>(o, "an MT-algebra")))); },
        "The identity proximity morphism 1_M.");

  m.def("compose", &compose_any, py::arg("f"), py::arg("g"), "g after f, in the category of the morphisms' kind.");

  m.def(
      "envelope",
      [](const py::dict& o) {
        const FunayamaEnvelope f = funayama(expect<FrameRef>(o, "a frame"));
        return to_py({{"algebra", to_json(*f.mt)}, {"irreducibles", f.boolean.irreducibles}, {"rho", rho(f).map}});
      },
      "Funayama envelope of a frame and the isomorphism onto its opens.");

  m.def(
      "spectrum",
      [](const py::dict& o, bool slicing) {
        const FrameRef l = expect<FrameRef>(o, "a frame");
        const Spectrum s = slicing ? ptD_space(*l) : pt_space(*l);
        return to_py({{"space", to_json(s.space)}, {"primes", s.primes}});
      },
      py::arg("frame"), py::arg("slicing") = false, "Points (or slicing points) of a frame as a space.");

  m.def(
      "soberify",
      [](const py::dict& o) {
        const Soberification s = soberify(expect<SpaceRef>(o, "a space"));
        return to_py({{"space", to_json(*s.space)}, {"primes", masks(s.primes)}, {"lambda", s.lambda.map}});
      },
      "Soberification of a space with the map λ into it.");

  m.def(
      "td_subspace",
      [](const py::dict& o) {
        const TDSubspace d = td_subspace(expect<SpaceRef>(o, "a space"));
        return to_py({{"space", to_json(*d.space)}, {"inclusion", d.inclusion.map}});
      },
      "Subspace of locally closed points and its inclusion.");

  m.def("to_space", [](const py::dict& o) { return to_py(to_json(ats(expect<ProxMap>(o, "a proximity morphism")))); },
        "Sober map dual to a proximity morphism.");
  m.def("to_algebra", [](const py::dict& o) { return to_py(to_json(Pp(expect<SoberMap>(o, "a sober map")))); },
        "Proximity morphism dual to a sober map.");

  m.def(
      "topologies",
      [](int n) {
        json out = json::array();
        for (const FinSpace& x : gen_spaces(n, GenMode::Exhaustive)) out.push_back(to_json(x));
        return to_py(out);
      },
      py::arg("points"), "Every topology on 0..points-1.");

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const TheoremCheck& c : default_registry()) ids.push_back(c.id);
    return ids;
  });

  m.def(
      "verify",
      [](std::uint64_t seed, const std::vector<std::string>& only, int max_atoms, int max_points, bool random,
         int samples, int jobs) {
        RunConfig cfg;
        cfg.seed = seed;
        cfg.max_atoms = max_atoms;
        cfg.max_points = max_points;
        cfg.exhaustive = !random;
        cfg.samples = samples;
        cfg.jobs = jobs;
        Report r;
        {
          py::gil_scoped_release release;
          r = run_checks(default_registry(), cfg, only);
        }
        return to_py(r.to_json());
      },
      py::arg("seed") = 0, py::arg("only") = std::vector<std::string>{}, py::arg("max_atoms") = 3,
      py::arg("max_points") = 3, py::arg("random") = false, py::arg("samples") = 24, py::arg("jobs") = 1,
      "Run the registered checks and return the report.");
}
