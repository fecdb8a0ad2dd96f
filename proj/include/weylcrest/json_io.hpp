/* JSON forms for the CLI: weights {"fw": [...]}, root systems, hulls,
   verdicts, face descriptors, characters, chains. Indices are 1-based in
   serialized form. */
#pragma once

#include <nlohmann/json.hpp>

#include "weylcrest/chains.hpp"
#include "weylcrest/faces.hpp"

namespace weylcrest {

using json = nlohmann::json;

json weight_to_json(const Vec& v);
Vec weight_from_json(const RootSystem& rs, const json& j);

json subset_to_json(const SubsetJ& J);
json word_to_json(const WeylElement& w);
json rootsystem_to_json(const RootSystem& rs);
json hull_to_json(const RootSystem& rs, const Polyhedron& poly);
json verdict_to_json(const FaceVerdict& v);
json character_to_json(const FormalCharacter& ch);
json weightset_to_json(const WeightSet& ws);
json chain_to_json(const std::vector<Vec>& chain);
json face_list_to_json(const std::vector<FaceDescriptor>& faces);

}  // namespace weylcrest
