/* Exact convex geometry of module weight hulls: V-representation, membership
   by rational LP, extremal rays, stabilizer, maximizers, face enumeration. */
#pragma once

#include "weylcrest/hwmodule.hpp"

namespace weylcrest {

struct Polyhedron {
    std::vector<Vec> vertices;         // lex-sorted
    std::vector<Vec> cone_generators;  // lex-sorted recession cone generators
    HWModuleDesc provenance;
};

Polyhedron hull_of_module(const RootSystem& rs, const HWModuleDesc& desc);

// Exact feasibility: mu = convex combination of vertices + nonnegative
// combination of cone generators.
bool contains(const Polyhedron& poly, const Vec& mu);

// Is x a nonnegative combination of dirs?
bool in_cone(const std::vector<Vec>& dirs, const Vec& x);

// Extremal ray directions at a vertex, certified by cone-membership LPs.
std::vector<Vec> extremal_rays_at_vertex(const RootSystem& rs, const Polyhedron& poly,
                                         const Vec& v);

// Returns J(V) after certifying vertex-set stability under s_j (j in J(V))
// and instability witnesses for every index outside.
SubsetJ stabilizer_parabolic(const RootSystem& rs, const HWModuleDesc& desc);

// Argmax of (phi, -) over a finite weight list.
WeightSet maximizer(const RootSystem& rs, const WeightSet& X, const Vec& phi);
// Argmax over the vertex set after checking (phi, c) <= 0 on the cone.
WeightSet maximizer(const RootSystem& rs, const Polyhedron& poly, const Vec& phi);

struct FaceDescriptor {
    WeylElement w;  // minimal-length element of W_{J(V)}
    SubsetJ J;      // interval-top representative
};

// Every nonempty face exactly once as w(wt_J V); the full set appears as
// (identity, I).
std::vector<FaceDescriptor> enumerate_faces(const RootSystem& rs, const HWModuleDesc& desc);

}  // namespace weylcrest
