/* Saturated chains between comparable weights and root chains. */
#pragma once

#include "weylcrest/hwmodule.hpp"

namespace weylcrest {

struct ChainResult {
    bool covered = false;  // a guaranteeing hypothesis holds
    std::string hypothesis;
    // Descending list mu' = c_0 > c_1 > ... > c_N = mu, consecutive
    // differences simple roots; nullopt when the search found none.
    std::optional<std::vector<Vec>> chain;
};

ChainResult find_chain(const RootSystem& rs, const HWModuleDesc& desc, const Vec& mu,
                       const Vec& mu_prime, long long depth);

// Ascending chain of positive roots from a simple root mu up to mu_prime,
// every partial sum a positive root.
std::optional<std::vector<IVec>> root_chain(const RootSystem& rs, const IVec& mu,
                                            const IVec& mu_prime);

}  // namespace weylcrest
