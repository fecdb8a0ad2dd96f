/* Highest weight module descriptors and weight-set/character computations:
   integrability sets, finite-dimensional simple weight sets, the three-way
   weight formula, slices wt_J, Kostant partitions, truncated characters. */
#pragma once

#include "weylcrest/weightlat.hpp"

namespace weylcrest {

enum class Family { VERMA, PARABOLIC, SIMPLE, GENERIC };

std::string family_str(Family f);

struct HWModuleDesc {
    Family family = Family::VERMA;
    Vec lambda;
    SubsetJ jv;  // integrability set J(V)
    bool weight_formula_valid = true;
};

// family parameter J: the parabolic J' (PARABOLIC) or the integrability set
// (GENERIC); ignored for VERMA and SIMPLE.
HWModuleDesc describe_module(const RootSystem& rs, const Vec& lambda, Family family,
                             const SubsetJ& J = {});

// Kostant partition count of beta over the positive roots. Thread-safe memo.
long long kostant_partition(const RootSystem& rs, const Vec& beta);

// Exact ambient weight set of the finite-dimensional simple g_J-module with
// highest weight mu; requires mu(h_j) a nonnegative integer for j in J.
WeightSet fd_simple_weights(const RootSystem& rs, const SubsetJ& J, const Vec& mu);

// All three defining formulas evaluated at height <= depth, checked to agree.
WeightSet module_weights(const RootSystem& rs, const HWModuleDesc& desc, long long depth);

// wt V intersected with lambda - Z+ Delta_J; exact for J inside J(V).
WeightSet wt_J(const RootSystem& rs, const HWModuleDesc& desc, const SubsetJ& J,
               long long depth);

FormalCharacter truncated_character(const RootSystem& rs, const HWModuleDesc& desc,
                                    long long depth);

// Whether the linkage set {w.lambda : w in W, w.lambda <= lambda} equals
// {w.lambda : w in W_{J_lambda}} as sets.
bool check_wcf_hypothesis(const RootSystem& rs, const Vec& lambda);

struct CounterexampleRecord {
    Vec mu_star;
    long long partition_count = 0;
    bool in_hull = false;
};

// mu* = s_i s_j . lambda for commuting reflections i, j with integral
// dominant coordinates; certifies the failure of the naive weight formula.
CounterexampleRecord counterexample_witness(const RootSystem& rs, const Vec& lambda,
                                            int i, int j);

// F(V) = Phi+ together with Phi-_{J(V)}, as root coordinates.
std::vector<IVec> fernando_parabolic(const RootSystem& rs, const HWModuleDesc& desc);

}  // namespace weylcrest
