#include "weylcrest/weightlat.hpp"

#include <algorithm>

#include "weylcrest/errors.hpp"

namespace weylcrest {

bool WeightSet::contains(const Vec& v) const {
    return std::binary_search(weights.begin(), weights.end(), v);
}

WeightSet make_weight_set(std::vector<Vec> ws, long long depth, bool exact) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    WeightSet s;
    s.weights = std::move(ws);
    s.depth = depth;
    s.exact = exact;
    return s;
}

bool CoefficientGroup::member(const Rat& x) const {
    switch (tag) {
        case CoeffTag::INT:
            return is_integer(x);
        case CoeffTag::SCALED:
            return is_integer(x / scale);
        case CoeffTag::RAT:
        case CoeffTag::REALS:
            return true;
    }
    return false;
}

Rat eval_h(const RootSystem& rs, const Vec& lambda, int i) {
    if (static_cast<int>(lambda.size()) != rs.rank || i < 0 || i >= rs.rank)
        throw domain_error("eval_h: rank mismatch");
    return lambda[i];
}

Rat pairing(const RootSystem& rs, const Vec& lambda, const Vec& mu) {
    if (lambda.size() != mu.size() || static_cast<int>(lambda.size()) != rs.rank)
        throw domain_error("pairing: rank mismatch");
    // (lambda, mu) = sum_j d_j c^lambda_j r^mu_j with r^mu the root coordinates.
    Vec r = rs.fw_to_root(mu);
    Rat acc = 0;
    for (int j = 0; j < rs.rank; ++j) acc += rs.d[j] * lambda[j] * r[j];
    return acc;
}

SubsetJ j_lambda(const RootSystem& rs, const Vec& lambda) {
    SubsetJ J;
    for (int i = 0; i < rs.rank; ++i)
        if (is_integer(lambda[i]) && lambda[i] >= 0) J.insert(i);
    return J;
}

SubsetJ support(const RootSystem& rs, const Vec& lambda) {
    // (lambda, alpha_i) = d_i lambda(h_i), so support is the nonzero coordinates.
    SubsetJ s;
    for (int i = 0; i < rs.rank; ++i)
        if (lambda[i] != 0) s.insert(i);
    return s;
}

bool is_simply_regular(const RootSystem& rs, const Vec& lambda) {
    return static_cast<int>(support(rs, lambda).size()) == rs.rank;
}

Vec project(const RootSystem& rs, const SubsetJ& J, const Vec& lambda) {
    Vec p(rs.rank, 0);
    for (int j : J) p[j] = lambda[j];
    return p;
}

Vec varpi(const RootSystem& rs, const SubsetJ& J, const Vec& lambda, const Vec& mu_offset) {
    Vec r = rs.fw_to_root(mu_offset);
    for (int i = 0; i < rs.rank; ++i)
        if (r[i] != 0 && !J.count(i))
            throw domain_error("varpi: offset not in the rational span of Delta_J");
    return vec_add(project(rs, J, lambda), mu_offset);
}

bool leq(const RootSystem& rs, const Vec& mu, const Vec& lambda) {
    Vec r = rs.fw_to_root(vec_sub(lambda, mu));
    for (const Rat& c : r)
        if (!is_integer(c) || c < 0) return false;
    return true;
}

Rat height(const RootSystem& rs, const Vec& beta) {
    Vec r = rs.fw_to_root(beta);
    Rat h = 0;
    for (const Rat& c : r) h += c;
    return h;
}

Vec rho_weight(const RootSystem& rs) { return Vec(rs.rank, 1); }

Vec rho_J_weight(const RootSystem& rs, const SubsetJ& J) {
    Vec v(rs.rank, 0);
    for (int j : J) v[j] = 1;
    return v;
}

Vec dot_action(const RootSystem& rs, const WeylElement& w, const Vec& lambda) {
    Vec rho = rho_weight(rs);
    return vec_sub(apply(rs, w, vec_add(lambda, rho)), rho);
}

std::pair<Vec, WeylElement> dominantize(const RootSystem& rs, const SubsetJ& J,
                                        const Vec& lambda) {
    Vec v = lambda;
    std::vector<int> letters;
    bool moved = true;
    long long steps = 0;
    while (moved) {
        moved = false;
        for (int j : J) {
            if (v[j] < 0) {
                v = reflect(rs, j, v);
                letters.push_back(j);
                moved = true;
                break;
            }
        }
        if (++steps > kOrbitCap) throw domain_error("orbit size exceeds cap");
    }
    WeylElement w;
    w.word.assign(letters.rbegin(), letters.rend());
    return {v, normalize(rs, w)};
}

std::vector<IVec> bounded_combinations(int rank, const SubsetJ& S,
                                       long long max_height) {
    std::vector<int> idx(S.begin(), S.end());
    std::vector<IVec> out;
    IVec cur(rank, 0);
    // Depth-first over the indices of S, spending at most max_height in total.
    auto rec = [&](auto&& self, size_t k, long long budget) -> void {
        if (k == idx.size()) {
            out.push_back(cur);
            return;
        }
        for (long long c = 0; c <= budget; ++c) {
            cur[idx[k]] = c;
            self(self, k + 1, budget - c);
        }
        cur[idx[k]] = 0;
    };
    rec(rec, 0, max_height);
    return out;
}

std::optional<IVec> nonneg_root_coords(const RootSystem& rs, const SubsetJ& J,
                                       const Vec& beta) {
    Vec r = rs.fw_to_root(beta);
    IVec out(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i) {
        if (r[i] == 0) continue;
        if (!J.count(i) || !is_integer(r[i]) || r[i] < 0) return std::nullopt;
        out[i] = to_ll(r[i]);
    }
    return out;
}

}  // namespace weylcrest
