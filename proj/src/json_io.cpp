#include "weylcrest/json_io.hpp"

#include <string>

#include "weylcrest/errors.hpp"

namespace weylcrest {

json weight_to_json(const Vec& v) {
    json coords = json::array();
    for (const Rat& c : v) coords.push_back(rat_str(c));
    return json{{"fw", coords}};
}

Vec weight_from_json(const RootSystem& rs, const json& j) {
    if (!j.is_object() || !j.contains("fw") || !j["fw"].is_array())
        throw std::invalid_argument("weight json must be an object with an fw array");
    const json& coords = j["fw"];
    if (static_cast<int>(coords.size()) != rs.rank)
        throw std::invalid_argument("weight has wrong rank");
    Vec v;
    for (const json& c : coords) {
        if (c.is_string())
            v.push_back(parse_rat(c.get<std::string>()));
        else if (c.is_number_integer())
            v.push_back(Rat(c.get<long long>()));
        else
            throw std::invalid_argument("weight coordinates must be strings or integers");
    }
    return v;
}

json subset_to_json(const SubsetJ& J) {
    json a = json::array();
    for (int j : J) a.push_back(j + 1);
    return a;
}

json word_to_json(const WeylElement& w) {
    json a = json::array();
    for (int i : w.word) a.push_back(i + 1);
    return a;
}

json rootsystem_to_json(const RootSystem& rs) {
    json cartan = json::array();
    for (int i = 0; i < rs.rank; ++i) {
        json row = json::array();
        for (int j = 0; j < rs.rank; ++j) row.push_back(rat_str(rs.cartan[i][j]));
        cartan.push_back(row);
    }
    json roots = json::array();
    for (const IVec& r : rs.positive_roots) {
        json row = json::array();
        for (long long c : r) row.push_back(c);
        roots.push_back(row);
    }
    json highest = json::array();
    for (long long c : rs.highest_root) highest.push_back(c);
    return json{{"type", std::string(1, rs.kind) + std::to_string(rs.rank)},
                {"rank", rs.rank},
                {"cartan", cartan},
                {"positive_roots", roots},
                {"highest_root", highest}};
}

json hull_to_json(const RootSystem& rs, const Polyhedron& poly) {
    (void)rs;
    json verts = json::array();
    for (const Vec& v : poly.vertices) verts.push_back(weight_to_json(v));
    json cone = json::array();
    for (const Vec& c : poly.cone_generators) cone.push_back(weight_to_json(c));
    return json{{"vertices", verts},
                {"cone_generators", cone},
                {"family", family_str(poly.provenance.family)},
                {"lambda", weight_to_json(poly.provenance.lambda)},
                {"j_v", subset_to_json(poly.provenance.jv)}};
}

namespace {

json finfn_to_json(const FinFn& f) {
    json terms = json::array();
    for (const auto& [w, c] : f.terms)
        terms.push_back(json{{"weight", weight_to_json(w)}, {"coeff", rat_str(c)}});
    return terms;
}

}  // namespace

json verdict_to_json(const FaceVerdict& v) {
    json out{{"result", v.result}, {"bound", v.bound}};
    if (v.witness)
        out["witness"] =
            json{{"f", finfn_to_json(v.witness->first)}, {"g", finfn_to_json(v.witness->second)}};
    return out;
}

json character_to_json(const FormalCharacter& ch) {
    json rows = json::array();
    for (const auto& [w, m] : ch.mult)
        rows.push_back(json{{"weight", weight_to_json(w)}, {"multiplicity", m}});
    return rows;
}

json weightset_to_json(const WeightSet& ws) {
    json rows = json::array();
    for (const Vec& w : ws.weights) rows.push_back(weight_to_json(w));
    return json{{"depth", ws.depth}, {"exact", ws.exact}, {"weights", rows}};
}

json chain_to_json(const std::vector<Vec>& chain) {
    json rows = json::array();
    for (const Vec& w : chain) rows.push_back(weight_to_json(w));
    return rows;
}

json face_list_to_json(const std::vector<FaceDescriptor>& faces) {
    json rows = json::array();
    for (const FaceDescriptor& f : faces)
        rows.push_back(json{{"w", word_to_json(f.w)}, {"J", subset_to_json(f.J)}});
    return rows;
}

}  // namespace weylcrest
