/* Independent brute-force oracles: exhaustive weak-face scans, lattice
   points in hulls, Freudenthal multiplicities, the Weyl dimension formula,
   raw Verma characters. Deliberately reimplemented with different
   algorithms and orderings than the structural modules. */
#pragma once

#include "weylcrest/faces.hpp"

namespace weylcrest {

// All nonempty weak-face subsets of X at the given bound, ordered by
// (size, index mask over lex-sorted X). Requires |X| <= 16.
std::vector<std::vector<Vec>> brute_weak_faces(const std::vector<Vec>& X, long long bound,
                                               const CoefficientGroup& coeff = {});

// lambda - beta over ht(beta) <= depth filtered by exact hull membership.
WeightSet lattice_hull_points(const RootSystem& rs, const HWModuleDesc& desc,
                              long long depth);

long long freudenthal_mult(const RootSystem& rs, const Vec& lambda, const Vec& mu);
long long weyl_dim(const RootSystem& rs, const Vec& lambda);

// Verma multiplicities from a non-memoized enumerator over a reversed root
// order.
FormalCharacter verma_character_raw(const RootSystem& rs, const Vec& lambda,
                                    long long depth);

}  // namespace weylcrest
