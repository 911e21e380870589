#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "mtp/frame.hpp"
#include "mtp/mt.hpp"
#include "mtp/proximity.hpp"
#include "mtp/sobercat.hpp"

namespace mtp {

using json = nlohmann::json;

// Objects:
//   poset   {"n": 3, "leq": [[true, ...], ...]}
//   frame   the poset of a lattice plus "kind": "frame"
//   mt      {"kind": "mt", "atoms": 2, "opens": [[], [1], [0, 1]]}
//   space   {"kind": "space", "points": 2, "opens": [[], [1], [0, 1]]}
// Morphisms carry their objects:
//   {"kind": "prox", "objects": {"M": {...}, "N": {...}}, "src": "M", "dst": "N", "map": [...]}
// kinds prox, mt-morphism (map entries are atom-index arrays, indexed by
// source mask), frame-morphism, continuous (int tables) and sober (entries
// index the points of sY, whose prime opens ascend).
// Every parse error is reported as InvalidInput.

json to_json(const Poset& p);
Poset poset_from_json(const json& j);

json to_json(const Frame& l);
FrameRef frame_from_json(const json& j);

json mask_to_json(Mask a);
Mask mask_from_json(const json& j, int width);

json to_json(const MTAlgebra& m);
MTRef mt_from_json(const json& j);
json to_json(const FinSpace& x);
SpaceRef space_from_json(const json& j);

json to_json(const FrameMorphism& f);
json to_json(const ContMap& f);
json to_json(const MTMorphism& f);
json to_json(const ProxMap& f);
json to_json(const SoberMap& f);

FrameMorphism frame_morphism_from_json(const json& j);
ContMap cont_map_from_json(const json& j);
MTMorphism mt_morphism_from_json(const json& j);
ProxMap prox_from_json(const json& j);
SoberMap sober_from_json(const json& j);

/// Anything above, told apart by "kind" (a bare {"n","leq"} is a poset).
using Object = std::variant<Poset, FrameRef, MTRef, SpaceRef, FrameMorphism, ContMap, MTMorphism, ProxMap, SoberMap>;

Object object_from_json(const json& j);
json object_to_json(const Object& o);
std::string kind_of(const Object& o);

json read_json_file(const std::string& path);

/// Hasse diagram of a frame, or of the opens of an algebra or space.
std::string dot_of(const Object& o);

}  // namespace mtp
