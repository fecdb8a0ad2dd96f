/* Weight arithmetic over the fundamental-weight lattice: the invariant form,
   partial order, supports, integrality sets, projections, dot action. */
#pragma once

#include <map>
#include <optional>

#include "weylcrest/rootsys.hpp"

namespace weylcrest {

// Finite weight list, lexicographically sorted, possibly a height-truncated
// slice of an infinite set. exact means the list is the complete set.
struct WeightSet {
    std::vector<Vec> weights;
    long long depth = 0;
    bool exact = false;

    bool contains(const Vec& v) const;
};

WeightSet make_weight_set(std::vector<Vec> ws, long long depth, bool exact);

struct FormalCharacter {
    std::map<Vec, long long> mult;
    long long depth = 0;
};

enum class CoeffTag { INT, SCALED, RAT, REALS };

struct CoefficientGroup {
    CoeffTag tag = CoeffTag::INT;
    Rat scale = 1;  // the a in aZ, SCALED only

    bool member(const Rat& x) const;
    bool positive_member(const Rat& x) const { return member(x) && x > 0; }
};

Rat eval_h(const RootSystem& rs, const Vec& lambda, int i);
Rat pairing(const RootSystem& rs, const Vec& lambda, const Vec& mu);

// {i : lambda(h_i) is a nonnegative integer}.
SubsetJ j_lambda(const RootSystem& rs, const Vec& lambda);
// {i : (lambda, alpha_i) != 0}.
SubsetJ support(const RootSystem& rs, const Vec& lambda);
bool is_simply_regular(const RootSystem& rs, const Vec& lambda);

// pi_J: zero the fundamental coordinates outside J.
Vec project(const RootSystem& rs, const SubsetJ& J, const Vec& lambda);
// varpi_J(lambda + mu) = pi_J(lambda) + mu for mu in the rational span of Delta_J.
Vec varpi(const RootSystem& rs, const SubsetJ& J, const Vec& lambda, const Vec& mu_offset);

// mu <= lambda: lambda - mu has nonnegative integer simple-root coordinates.
bool leq(const RootSystem& rs, const Vec& mu, const Vec& lambda);
Rat height(const RootSystem& rs, const Vec& beta);

// rho_J = sum of fundamental weights over J; rho = rho_I.
Vec rho_weight(const RootSystem& rs);
Vec rho_J_weight(const RootSystem& rs, const SubsetJ& J);

Vec dot_action(const RootSystem& rs, const WeylElement& w, const Vec& lambda);

// Apply simple reflections s_j, j in J, lex-first negative coordinate, until
// J-dominant; returns the dominant weight and the element v with v(lambda)
// dominant.
std::pair<Vec, WeylElement> dominantize(const RootSystem& rs, const SubsetJ& J,
                                        const Vec& lambda);

// beta in Z+ Delta_J, returned as integer root coordinates; nullopt otherwise.
std::optional<IVec> nonneg_root_coords(const RootSystem& rs, const SubsetJ& J,
                                       const Vec& beta);

// All nonnegative integer vectors of length rank, supported on S, with
// coordinate sum <= max_height, in a fixed deterministic order.
std::vector<IVec> bounded_combinations(int rank, const SubsetJ& S,
                                       long long max_height);

}  // namespace weylcrest
