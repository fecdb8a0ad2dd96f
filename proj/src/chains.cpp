#include "weylcrest/chains.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "weylcrest/errors.hpp"
#include "weylcrest/polyhedron.hpp"

namespace weylcrest {

namespace {

bool unit_vector(const Vec& r) {
    int ones = 0;
    for (const Rat& c : r) {
        if (c == 1)
            ++ones;
        else if (c != 0)
            return false;
    }
    return ones == 1;
}

}  // namespace

ChainResult find_chain(const RootSystem& rs, const HWModuleDesc& desc, const Vec& mu,
                       const Vec& mu_prime, long long depth) {
    const Vec& lam = desc.lambda;
    if (!leq(rs, mu, mu_prime) || !leq(rs, mu_prime, lam))
        throw domain_error("find_chain: requires mu <= mu' <= lambda");
    if (height(rs, vec_sub(lam, mu)) > depth)
        throw domain_error("find_chain: mu lies beyond the requested depth");
    Polyhedron hull = hull_of_module(rs, desc);
    auto in_wt = [&](const Vec& nu) {
        return leq(rs, nu, lam) && contains(hull, nu);
    };
    if (!in_wt(mu) || !in_wt(mu_prime))
        throw domain_error("find_chain: endpoints must be module weights");

    // Hypotheses under which a saturated chain is guaranteed.
    ChainResult res;
    if (mu == mu_prime || mu_prime == lam) {
        res.covered = true;
        res.hypothesis = "endpoint";
    } else if (unit_vector(rs.fw_to_root(vec_sub(mu_prime, mu)))) {
        res.covered = true;
        res.hypothesis = "simple-root step";
    } else if (nonneg_root_coords(rs, desc.jv, vec_sub(mu_prime, mu))) {
        res.covered = true;
        res.hypothesis = "difference integrable";
    } else {
        SubsetJ jl = j_lambda(rs, lam);
        int extra = 0;
        for (int i : jl)
            if (!desc.jv.count(i)) ++extra;
        if (extra <= 1) {
            res.covered = true;
            res.hypothesis = "at most one integral direction outside J(V)";
        } else if (desc.family == Family::VERMA || desc.family == Family::PARABOLIC) {
            res.covered = true;
            res.hypothesis = "parabolic family";
        } else {
            res.covered = false;
            res.hypothesis = "none";
        }
    }

    // Depth-first descent from mu' to mu by simple-root steps inside wt V.
    std::set<Vec> dead;
    std::vector<Vec> chain{mu_prime};
    auto dfs = [&](auto&& self, const Vec& nu) -> bool {
        if (nu == mu) return true;
        Vec gap = rs.fw_to_root(vec_sub(nu, mu));
        for (int i = 0; i < rs.rank; ++i) {
            if (gap[i] <= 0) continue;
            Vec nxt = vec_sub(nu, rs.simple_root_fw(i));
            if (dead.count(nxt) || !in_wt(nxt)) continue;
            chain.push_back(nxt);
            if (self(self, nxt)) return true;
            chain.pop_back();
            dead.insert(nxt);
        }
        return false;
    };
    if (dfs(dfs, mu_prime)) {
        res.chain = chain;
    } else {
        if (res.covered)
            throw internal_error("guaranteed saturated chain not found");
        res.chain = std::nullopt;
    }
    return res;
}

std::optional<std::vector<IVec>> root_chain(const RootSystem& rs, const IVec& mu,
                                            const IVec& mu_prime) {
    std::set<IVec> pos(rs.positive_roots.begin(), rs.positive_roots.end());
    if (!pos.count(mu) || !pos.count(mu_prime))
        throw domain_error("root_chain: endpoints must be positive roots");
    long long hmu = 0;
    for (long long c : mu) hmu += c;
    if (hmu != 1) throw domain_error("root_chain: lower endpoint must be a simple root");
    for (size_t k = 0; k < mu.size(); ++k)
        if (mu[k] > mu_prime[k]) throw domain_error("root_chain: endpoints are incomparable");

    // Descend from mu' toward mu through positive roots by simple-root steps.
    std::set<IVec> dead;
    std::vector<IVec> down{mu_prime};
    auto dfs = [&](auto&& self, const IVec& nu) -> bool {
        if (nu == mu) return true;
        for (int i = 0; i < rs.rank; ++i) {
            if (nu[i] <= mu[i]) continue;
            IVec nxt = nu;
            nxt[i] -= 1;
            bool above = true;
            for (int k = 0; k < rs.rank; ++k)
                if (nxt[k] < mu[k]) above = false;
            if (!above || dead.count(nxt) || !pos.count(nxt)) continue;
            down.push_back(nxt);
            if (self(self, nxt)) return true;
            down.pop_back();
            dead.insert(nxt);
        }
        return false;
    };
    if (!dfs(dfs, mu_prime)) return std::nullopt;
    std::reverse(down.begin(), down.end());
    return down;
}

}  // namespace weylcrest
