#include "weylcrest/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "weylcrest/errors.hpp"

namespace weylcrest {

WeightSet lattice_hull_points(const RootSystem& rs, const HWModuleDesc& desc,
                              long long depth) {
    if (depth < 0) throw domain_error("lattice_hull_points: negative depth");
    Polyhedron hull = hull_of_module(rs, desc);
    std::vector<Vec> found;
    for (const IVec& b : bounded_combinations(rs.rank, rs.full_index_set(), depth)) {
        Vec x = desc.lambda;
        for (int i = 0; i < rs.rank; ++i) {
            if (b[i] == 0) continue;
            for (int k = 0; k < rs.rank; ++k) x[k] -= Rat(b[i]) * rs.cartan[k][i];
        }
        if (contains(hull, x)) found.push_back(x);
    }
    return make_weight_set(std::move(found), depth, false);
}

long long freudenthal_mult(const RootSystem& rs, const Vec& lambda, const Vec& mu) {
    if (static_cast<int>(lambda.size()) != rs.rank ||
        static_cast<int>(mu.size()) != rs.rank)
        throw domain_error("freudenthal_mult: rank mismatch");
    for (int i = 0; i < rs.rank; ++i)
        if (!is_integer(lambda[i]) || lambda[i] < 0)
            throw domain_error("freudenthal_mult: lambda must be dominant integral");
    Vec rho = rho_weight(rs);
    Rat top_norm = pairing(rs, vec_add(lambda, rho), vec_add(lambda, rho));
    SubsetJ I = rs.full_index_set();
    using Key = std::tuple<char, int, Vec, Vec>;
    static std::map<Key, long long> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto rec = [&](auto&& self, const Vec& nu_in) -> long long {
        Vec nu = dominantize(rs, I, nu_in).first;
        if (!leq(rs, nu, lambda)) return 0;
        if (nu == lambda) return 1;
        Key key{rs.kind, rs.rank, lambda, nu};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Rat numer = 0;
        long long steps = to_ll(height(rs, vec_sub(lambda, nu)));
        for (const IVec& r : rs.positive_roots) {
            Vec alpha = rs.root_to_fw(r);
            for (long long k = 1; k <= steps; ++k) {
                Vec up = nu;
                for (int c = 0; c < rs.rank; ++c) up[c] += Rat(k) * alpha[c];
                long long m = self(self, up);
                if (m != 0) numer += Rat(m) * pairing(rs, up, alpha);
            }
        }
        Rat denom = top_norm - pairing(rs, vec_add(nu, rho), vec_add(nu, rho));
        if (denom == 0) throw internal_error("vanishing Freudenthal denominator");
        Rat m = 2 * numer / denom;
        if (!is_integer(m) || m < 0)
            throw internal_error("non-integral Freudenthal multiplicity");
        long long out = to_ll(m);
        memo[key] = out;
        return out;
    };
    return rec(rec, mu);
}

long long weyl_dim(const RootSystem& rs, const Vec& lambda) {
    for (int i = 0; i < rs.rank; ++i)
        if (!is_integer(lambda[i]) || lambda[i] < 0)
            throw domain_error("weyl_dim: lambda must be dominant integral");
    Vec rho = rho_weight(rs);
    Vec lr = vec_add(lambda, rho);
    Rat dim = 1;
    for (const IVec& r : rs.positive_roots) {
        Vec alpha = rs.root_to_fw(r);
        dim *= pairing(rs, lr, alpha) / pairing(rs, rho, alpha);
    }
    if (!is_integer(dim) || dim < 1) throw internal_error("non-integral Weyl dimension");
    return to_ll(dim);
}

FormalCharacter verma_character_raw(const RootSystem& rs, const Vec& lambda,
                                    long long depth) {
    if (depth < 0) throw domain_error("verma_character_raw: negative depth");
    // Count every multiset of positive roots of height <= depth once, walking
    // the roots in descending (height, lex) order without memoization.
    std::vector<IVec> roots(rs.positive_roots.rbegin(), rs.positive_roots.rend());
    std::map<IVec, long long> counts;
    IVec cur(rs.rank, 0);
    auto rec = [&](auto&& self, size_t idx, long long budget) -> void {
        ++counts[cur];
        for (size_t k = idx; k < roots.size(); ++k) {
            long long h = 0;
            for (long long c : roots[k]) h += c;
            if (h > budget) continue;
            for (int i = 0; i < rs.rank; ++i) cur[i] += roots[k][i];
            self(self, k, budget - h);
            for (int i = 0; i < rs.rank; ++i) cur[i] -= roots[k][i];
        }
    };
    rec(rec, 0, depth);
    FormalCharacter ch;
    ch.depth = depth;
    for (const auto& [beta, m] : counts) {
        Vec mu = lambda;
        for (int i = 0; i < rs.rank; ++i) {
            if (beta[i] == 0) continue;
            for (int k = 0; k < rs.rank; ++k) mu[k] -= Rat(beta[i]) * rs.cartan[k][i];
        }
        ch.mult[mu] = m;
    }
    return ch;
}

}  // namespace weylcrest
