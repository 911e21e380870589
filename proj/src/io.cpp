#include "mtp/io.hpp"

#include <fstream>

namespace mtp {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int small_int(const json& j, const char* key, int lo, int hi) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  const long long x = v.get<long long>();
  if (x < lo || x > hi) bad(std::string("\"") + key + "\" out of range");
  return static_cast<int>(x);
}

std::vector<Mask> opens_from(const json& j, int width) {
  const json& arr = field(j, "opens");
  if (!arr.is_array()) bad("\"opens\" must be an array");
  std::vector<Mask> out;
  for (const json& o : arr) out.push_back(mask_from_json(o, width));
  return out;
}

json opens_to_json(const std::vector<Mask>& opens) {
  json arr = json::array();
  for (Mask u : opens) arr.push_back(mask_to_json(u));
  return arr;
}

// {"objects": {...}, "src": id, "dst": id} → the two object descriptions.
std::pair<json, json> ends(const json& j) {
  const json& objs = field(j, "objects");
  auto pick = [&](const char* key) {
    const json& id = field(j, key);
    if (!id.is_string()) bad(std::string("\"") + key + "\" must be an object id");
    if (!objs.is_object() || !objs.contains(id.get<std::string>())) bad("unknown object id " + id.dump());
    return objs.at(id.get<std::string>());
  };
  return {pick("src"), pick("dst")};
}

json morphism(const char* kind, const json& src, const json& dst, json map) {
  json j{{"kind", kind}};
  if (src == dst) {
    j["objects"] = {{"A", src}};
    j["src"] = "A";
    j["dst"] = "A";
  } else {
    j["objects"] = {{"A", src}, {"B", dst}};
    j["src"] = "A";
    j["dst"] = "B";
  }
  j["map"] = std::move(map);
  return j;
}

std::vector<int> int_table(const json& j, std::size_t size, int bound) {
  const json& m = field(j, "map");
  if (!m.is_array() || m.size() != size) bad("\"map\" must list " + std::to_string(size) + " entries");
  std::vector<int> out;
  for (const json& v : m) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= bound) bad("map entry out of range");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<Mask> mask_table(const json& j, std::size_t size, int width) {
  const json& m = field(j, "map");
  if (!m.is_array() || m.size() != size) bad("\"map\" must list " + std::to_string(size) + " entries");
  std::vector<Mask> out;
  for (const json& v : m) out.push_back(mask_from_json(v, width));
  return out;
}

json mask_table_to_json(const std::vector<Mask>& t) {
  json arr = json::array();
  for (Mask a : t) arr.push_back(mask_to_json(a));
  return arr;
}

std::string set_label(Mask a) {
  std::string s = "{";
  bool first = true;
  for (int i : members(a)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::string opens_dot(const std::vector<Mask>& opens, const std::string& name) {
  std::vector<std::string> labels;
  for (Mask u : opens) labels.push_back(set_label(u));
  return to_dot(Poset::of_sets(opens), labels, name);
}

}  // namespace

json to_json(const Poset& p) {
  json leq = json::array();
  for (int a = 0; a < p.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < p.size(); ++b) row.push_back(p.leq(a, b));
    leq.push_back(row);
  }
  return {{"n", p.size()}, {"leq", leq}};
}

Poset poset_from_json(const json& j) {
  return guarded("poset", [&] {
    const int n = small_int(j, "n", 0, 4096);
    const json& leq = field(j, "leq");
    if (!leq.is_array() || leq.size() != static_cast<std::size_t>(n)) bad("\"leq\" must have n rows");
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a) {
      if (!leq[a].is_array() || leq[a].size() != static_cast<std::size_t>(n)) bad("\"leq\" rows must have n entries");
      for (int b = 0; b < n; ++b) {
        const json& v = leq[a][b];
        if (v.is_boolean()) m[a][b] = v.get<bool>();
        else if (v.is_number_integer()) m[a][b] = v.get<int>() != 0;
        else bad("\"leq\" entries must be booleans");
      }
    }
    return Poset::from_matrix(m);
  });
}

json to_json(const Frame& l) {
  json j = to_json(l.lattice().poset());
  j["kind"] = "frame";
  return j;
}

FrameRef frame_from_json(const json& j) { return share(Frame(Lattice::from_poset(poset_from_json(j)))); }

json mask_to_json(Mask a) {
  json arr = json::array();
  for (int i : members(a)) arr.push_back(i);
  return arr;
}

Mask mask_from_json(const json& j, int width) {
  if (!j.is_array()) bad("set must be an array of indices");
  Mask a = 0;
  for (const json& v : j) {
    if (!v.is_number_integer()) bad("set members must be integers");
    const long long i = v.get<long long>();
    if (i < 0 || i >= width) bad("index " + std::to_string(i) + " outside 0.." + std::to_string(width - 1));
    a |= bit(static_cast<int>(i));
  }
  return a;
}

json to_json(const MTAlgebra& m) {
  return {{"kind", "mt"}, {"atoms", m.atoms()}, {"opens", opens_to_json(m.opens())}};
}

MTRef mt_from_json(const json& j) {
  return guarded("mt", [&] {
    const int n = small_int(j, "atoms", 1, 16);
    return share(MTAlgebra(n, opens_from(j, n)));
  });
}

json to_json(const FinSpace& x) {
  return {{"kind", "space"}, {"points", x.size()}, {"opens", opens_to_json(x.opens())}};
}

SpaceRef space_from_json(const json& j) {
  return guarded("space", [&] {
    const int n = small_int(j, "points", 0, 64);
    return share(FinSpace(n, opens_from(j, n)));
  });
}

json to_json(const FrameMorphism& f) {
  return morphism("frame-morphism", to_json(*f.source), to_json(*f.target), f.map);
}

json to_json(const ContMap& f) { return morphism("continuous", to_json(*f.source), to_json(*f.target), f.map); }

json to_json(const MTMorphism& f) {
  return morphism("mt-morphism", to_json(*f.source), to_json(*f.target), mask_table_to_json(f.map));
}

json to_json(const ProxMap& f) {
  return morphism("prox", to_json(*f.source), to_json(*f.target), mask_table_to_json(f.map));
}

json to_json(const SoberMap& f) {
  return morphism("sober", to_json(*f.source), to_json(*f.target.base), f.carrier.map);
}

FrameMorphism frame_morphism_from_json(const json& j) {
  return guarded("frame morphism", [&] {
    auto [s, t] = ends(j);
    FrameRef src = frame_from_json(s), dst = frame_from_json(t);
    return FrameMorphism{src, dst, int_table(j, src->size(), dst->size())};
  });
}

ContMap cont_map_from_json(const json& j) {
  return guarded("continuous map", [&] {
    auto [s, t] = ends(j);
    SpaceRef src = space_from_json(s), dst = space_from_json(t);
    return ContMap{src, dst, int_table(j, src->size(), dst->size())};
  });
}

MTMorphism mt_morphism_from_json(const json& j) {
  return guarded("MT-morphism", [&] {
    auto [s, t] = ends(j);
    MTRef src = mt_from_json(s), dst = mt_from_json(t);
    return MTMorphism{src, dst, mask_table(j, src->size(), dst->atoms())};
  });
}

ProxMap prox_from_json(const json& j) {
  return guarded("proximity map", [&] {
    auto [s, t] = ends(j);
    MTRef src = mt_from_json(s), dst = mt_from_json(t);
    return ProxMap{src, dst, mask_table(j, src->size(), dst->atoms())};
  });
}

SoberMap sober_from_json(const json& j) {
  return guarded("sober map", [&] {
    auto [s, t] = ends(j);
    SpaceRef src = space_from_json(s), dst = space_from_json(t);
    const Soberification sy = soberify(dst);
    return make_sober_map(src, sy, int_table(j, src->size(), sy.space->size()));
  });
}

Object object_from_json(const json& j) {
  if (!j.is_object()) bad("expected a JSON object");
  if (!j.contains("kind")) {
    if (j.contains("n")) return poset_from_json(j);
    bad("missing field \"kind\"");
  }
  const json& k = j.at("kind");
  const std::string kind = k.is_string() ? k.get<std::string>() : "";
  if (kind == "poset") return poset_from_json(j);
  if (kind == "frame") return frame_from_json(j);
  if (kind == "mt") return mt_from_json(j);
  if (kind == "space") return space_from_json(j);
  if (kind == "frame-morphism") return frame_morphism_from_json(j);
  if (kind == "continuous") return cont_map_from_json(j);
  if (kind == "mt-morphism") return mt_morphism_from_json(j);
  if (kind == "prox") return prox_from_json(j);
  if (kind == "sober") return sober_from_json(j);
  bad("unknown kind " + k.dump());
}

json object_to_json(const Object& o) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Poset>) return to_json(v);
        else if constexpr (std::is_same_v<T, FrameRef> || std::is_same_v<T, MTRef> || std::is_same_v<T, SpaceRef>)
          return to_json(*v);
        else return to_json(v);
      },
      o);
}

std::string kind_of(const Object& o) {
  static const char* names[] = {"poset",      "frame",       "mt",   "space", "frame-morphism",
                                "continuous", "mt-morphism", "prox", "sober"};
  return names[o.index()];
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

std::string dot_of(const Object& o) {
  if (auto p = std::get_if<Poset>(&o)) return to_dot(*p);
  if (auto f = std::get_if<FrameRef>(&o)) return to_dot((*f)->lattice().poset(), {}, "frame");
  if (auto m = std::get_if<MTRef>(&o)) return opens_dot((*m)->opens(), "opens");
  if (auto x = std::get_if<SpaceRef>(&o)) return opens_dot((*x)->opens(), "opens");
  bad("DOT export takes a poset, frame, MT-algebra or space");
}

}  // namespace mtp
