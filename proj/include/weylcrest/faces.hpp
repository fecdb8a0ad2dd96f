/* Weak-face combinatorics: definition-level bounded checkers for weak
   A-faces, positive weak faces, (R',R)-closed sets; classification against
   the structural slices, equality intervals, rho-maximizer identities. */
#pragma once

#include "weylcrest/polyhedron.hpp"

namespace weylcrest {

struct FaceQuery {
    std::vector<Vec> X;
    std::vector<Vec> Y;  // subset of X
    CoefficientGroup coeff;
    long long bound = 6;  // total-coefficient search bound
};

// A violating pair: f over X, g over Y, equal totals and equal weighted sums,
// with supp(f) not inside Y. Terms are (weight, coefficient).
struct FinFn {
    std::vector<std::pair<Vec, Rat>> terms;
};

struct FaceVerdict {
    bool result = false;
    std::optional<std::pair<FinFn, FinFn>> witness;  // (f, g) when result is false
    long long bound = 0;
};

// Bounded exhaustive search; a true verdict is certified only up to the bound.
FaceVerdict is_weak_face(const FaceQuery& q);

// 0 not in Y, and Y a weak face of X plus the origin.
FaceVerdict is_positive_weak_face(const FaceQuery& q);

// (R',R)-closedness with coefficient values drawn from R (positive rationals)
// and totals restricted to R' minus zero. Complete for R' = {2}, R = {1,2}.
FaceVerdict is_closed(const std::vector<Vec>& X, const std::vector<Vec>& Y,
                      const std::vector<Rat>& Rprime, const std::vector<Rat>& R,
                      long long bound);

struct FaceInterval {
    SubsetJ j_min;
    SubsetJ j_max;
};

// Criterion: equal outside J(V), and the Dynkin components of both inner
// parts meeting supp(lambda) all lie in the common inner part.
bool faces_equal(const RootSystem& rs, const HWModuleDesc& desc, const SubsetJ& J,
                 const SubsetJ& Jprime);

FaceInterval face_interval(const RootSystem& rs, const HWModuleDesc& desc, const SubsetJ& J);

// Canonical J for a face descriptor: the part outside J(V) plus the interval
// top of the inner part.
SubsetJ canonical_face_subset(const RootSystem& rs, const HWModuleDesc& desc,
                              const SubsetJ& J);

// Identify Y as w(wt_J V) with minimal-length w; nullopt when no match.
std::optional<FaceDescriptor> classify_weak_face(const RootSystem& rs,
                                                 const HWModuleDesc& desc,
                                                 const std::vector<Vec>& Y,
                                                 long long depth);

Vec rho_of(const RootSystem& rs, const std::vector<Vec>& S);

// Checks both maximizer identities for the slice wt_J V and invariance of its
// weight sum under W_J; J must lie inside J(V).
bool verify_rho_maximizer(const RootSystem& rs, const HWModuleDesc& desc, const SubsetJ& J);

// Ascent to a vertex inside a pairwise-closed subset of the weights of a
// finite-dimensional simple module; returns w with w(highest weight) in Y.
WeylElement walk_to_vertex(const RootSystem& rs, const std::vector<Vec>& fd_weights,
                           const std::vector<Vec>& Y);

// (Psi+Psi) avoids Phi and (Psi+Phi+) meets Phi only inside Psi.
bool is_abelian_ideal(const RootSystem& rs, const std::vector<IVec>& psi);

}  // namespace weylcrest
