#include "weylcrest/hwmodule.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <set>
#include <string>
#include <tuple>

#include "weylcrest/errors.hpp"
#include "weylcrest/polyhedron.hpp"

namespace weylcrest {

namespace {

bool supported_on(const IVec& r, const SubsetJ& J) {
    for (size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0 && !J.count(static_cast<int>(k))) return false;
    return true;
}

long long ivec_height(const IVec& v) {
    long long h = 0;
    for (long long c : v) h += c;
    return h;
}

Vec lattice_point(const RootSystem& rs, const Vec& base, const IVec& b) {
    // base - sum_i b_i alpha_i in fundamental-weight coordinates
    Vec x = base;
    for (int i = 0; i < rs.rank; ++i) {
        if (b[i] == 0) continue;
        for (int k = 0; k < rs.rank; ++k) x[k] -= Rat(b[i]) * rs.cartan[k][i];
    }
    return x;
}

}  // namespace

std::string family_str(Family f) {
    switch (f) {
        case Family::VERMA: return "verma";
        case Family::PARABOLIC: return "parabolic";
        case Family::SIMPLE: return "simple";
        case Family::GENERIC: return "generic";
    }
    return "?";
}

HWModuleDesc describe_module(const RootSystem& rs, const Vec& lambda, Family family,
                             const SubsetJ& J) {
    if (static_cast<int>(lambda.size()) != rs.rank)
        throw domain_error("describe_module: rank mismatch");
    for (int j : J)
        if (j < 0 || j >= rs.rank) throw domain_error("describe_module: index out of range");
    SubsetJ jl = j_lambda(rs, lambda);
    HWModuleDesc d;
    d.family = family;
    d.lambda = lambda;
    switch (family) {
        case Family::VERMA:
            d.jv.clear();
            d.weight_formula_valid = true;
            break;
        case Family::PARABOLIC:
        case Family::GENERIC:
            for (int j : J)
                if (!jl.count(j))
                    throw domain_error(
                        "integrability requires lambda(h_j) a nonnegative integer for each "
                        "j in J; index " +
                        std::to_string(j + 1) + " fails");
            d.jv = J;
            if (family == Family::PARABOLIC) {
                d.weight_formula_valid = true;
            } else {
                int extra = 0;
                for (int i : jl)
                    if (!J.count(i)) ++extra;
                d.weight_formula_valid = extra <= 1;
            }
            break;
        case Family::SIMPLE:
            d.jv = jl;
            d.weight_formula_valid = true;
            break;
    }
    return d;
}

long long kostant_partition(const RootSystem& rs, const Vec& beta) {
    Vec r = rs.fw_to_root(beta);
    IVec b(rs.rank, 0);
    for (int i = 0; i < rs.rank; ++i) {
        if (!is_integer(r[i]))
            throw domain_error("kostant_partition: weight not in the root lattice");
        b[i] = to_ll(r[i]);
    }
    for (long long c : b)
        if (c < 0) return 0;
    // N(cur, k): partitions of cur using positive roots of index >= k, the roots
    // listed in ascending (height, lex) order.
    using Key = std::tuple<char, int, IVec, size_t>;
    static std::map<Key, long long> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto rec = [&](auto&& self, const IVec& cur, size_t k) -> long long {
        if (std::all_of(cur.begin(), cur.end(), [](long long c) { return c == 0; })) return 1;
        if (k == rs.positive_roots.size()) return 0;
        Key key{rs.kind, rs.rank, cur, k};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long long total = self(self, cur, k + 1);
        const IVec& rt = rs.positive_roots[k];
        IVec nxt(rs.rank, 0);
        bool ok = true;
        for (int i = 0; i < rs.rank; ++i) {
            nxt[i] = cur[i] - rt[i];
            if (nxt[i] < 0) ok = false;
        }
        if (ok) total += self(self, nxt, k);
        memo[key] = total;
        return total;
    };
    return rec(rec, b, 0);
}

WeightSet fd_simple_weights(const RootSystem& rs, const SubsetJ& J, const Vec& mu) {
    if (static_cast<int>(mu.size()) != rs.rank)
        throw domain_error("fd_simple_weights: rank mismatch");
    for (int j : J) {
        if (j < 0 || j >= rs.rank) throw domain_error("fd_simple_weights: index out of range");
        if (!is_integer(mu[j]) || mu[j] < 0)
            throw domain_error(
                "finite-dimensional weights require mu(h_j) a nonnegative integer for each "
                "j in J; index " +
                std::to_string(j + 1) + " fails");
    }
    if (J.empty()) return make_weight_set({mu}, 0, true);
    WeylElement w0 = longest_element(rs, J);
    Vec low = apply(rs, w0, mu);
    long long H = to_ll(height(rs, vec_sub(mu, low)));
    std::vector<Vec> found;
    for (const IVec& b : bounded_combinations(rs.rank, J, H)) {
        Vec nu = lattice_point(rs, mu, b);
        // nu is a weight iff its J-dominant conjugate lies below mu over Delta_J.
        Vec nup = dominantize(rs, J, nu).first;
        Vec diff = rs.fw_to_root(vec_sub(mu, nup));
        bool ok = true;
        for (int i = 0; i < rs.rank; ++i) {
            if (diff[i] == 0) continue;
            if (!J.count(i) || diff[i] < 0) {
                ok = false;
                break;
            }
        }
        if (ok) found.push_back(nu);
    }
    return make_weight_set(std::move(found), H, true);
}

WeightSet module_weights(const RootSystem& rs, const HWModuleDesc& desc, long long depth) {
    if (!desc.weight_formula_valid)
        throw domain_error(
            "weight formula requires at most one integrable direction outside J(V)");
    if (depth < 0) throw domain_error("module_weights: negative depth");
    const Vec& lam = desc.lambda;
    SubsetJ I = rs.full_index_set();

    // Formula (a): hull membership filter over the truncated cone lambda - Z+ Delta.
    Polyhedron hull = hull_of_module(rs, desc);
    std::vector<Vec> wa;
    for (const IVec& b : bounded_combinations(rs.rank, I, depth)) {
        Vec x = lattice_point(rs, lam, b);
        if (contains(hull, x)) wa.push_back(x);
    }
    WeightSet A = make_weight_set(std::move(wa), depth, false);

    // Formula (b): finite-dimensional top minus sums of roots outside the parabolic.
    WeightSet top = fd_simple_weights(rs, desc.jv, lam);
    std::vector<long long> top_ht;
    top_ht.reserve(top.weights.size());
    for (const Vec& nu : top.weights) top_ht.push_back(to_ll(height(rs, vec_sub(lam, nu))));
    std::vector<IVec> outside;
    for (const IVec& r : rs.positive_roots)
        if (!supported_on(r, desc.jv)) outside.push_back(r);
    std::set<IVec> sums;
    std::queue<IVec> work;
    sums.insert(IVec(rs.rank, 0));
    work.push(IVec(rs.rank, 0));
    while (!work.empty()) {
        IVec s = work.front();
        work.pop();
        for (const IVec& r : outside) {
            IVec t(rs.rank, 0);
            for (int i = 0; i < rs.rank; ++i) t[i] = s[i] + r[i];
            if (ivec_height(t) > depth) continue;
            if (sums.insert(t).second) work.push(t);
        }
    }
    std::vector<Vec> wb;
    for (const IVec& s : sums) {
        long long hs = ivec_height(s);
        Vec off = rs.root_to_fw(s);
        for (size_t k = 0; k < top.weights.size(); ++k) {
            if (top_ht[k] + hs > depth) continue;
            wb.push_back(vec_sub(top.weights[k], off));
        }
    }
    WeightSet B = make_weight_set(std::move(wb), depth, false);

    // Formula (c): disjoint finite-dimensional slices over Z+ Delta_{I \ J(V)}.
    SubsetJ outsideJ;
    for (int i = 0; i < rs.rank; ++i)
        if (!desc.jv.count(i)) outsideJ.insert(i);
    std::vector<Vec> wc;
    size_t slice_total = 0;
    for (const IVec& m : bounded_combinations(rs.rank, outsideJ, depth)) {
        long long base = ivec_height(m);
        Vec mu = lattice_point(rs, lam, m);
        WeightSet slice = fd_simple_weights(rs, desc.jv, mu);
        for (const Vec& nu : slice.weights) {
            if (base + to_ll(height(rs, vec_sub(mu, nu))) > depth) continue;
            wc.push_back(nu);
            ++slice_total;
        }
    }
    WeightSet C = make_weight_set(std::move(wc), depth, false);
    if (C.weights.size() != slice_total)
        throw internal_error("module weight slices are not disjoint");

    if (A.weights != B.weights || B.weights != C.weights)
        throw internal_error("weight formulas disagree");

    bool exact = false;
    if (static_cast<int>(desc.jv.size()) == rs.rank) {
        WeylElement w0 = longest_element(rs, desc.jv);
        exact = height(rs, vec_sub(lam, apply(rs, w0, lam))) <= depth;
    }
    A.exact = exact;
    return A;
}

WeightSet wt_J(const RootSystem& rs, const HWModuleDesc& desc, const SubsetJ& J,
               long long depth) {
    for (int j : J)
        if (j < 0 || j >= rs.rank) throw domain_error("wt_J: index out of range");
    bool inside = std::all_of(J.begin(), J.end(), [&](int j) { return desc.jv.count(j); });
    if (inside) return fd_simple_weights(rs, J, desc.lambda);
    WeightSet full = module_weights(rs, desc, depth);
    std::vector<Vec> keep;
    for (const Vec& mu : full.weights)
        if (nonneg_root_coords(rs, J, vec_sub(desc.lambda, mu))) keep.push_back(mu);
    return make_weight_set(std::move(keep), depth, full.exact);
}

FormalCharacter truncated_character(const RootSystem& rs, const HWModuleDesc& desc,
                                    long long depth) {
    if (depth < 0) throw domain_error("truncated_character: negative depth");
    FormalCharacter ch;
    ch.depth = depth;
    const Vec& lam = desc.lambda;
    SubsetJ I = rs.full_index_set();
    if (desc.family == Family::GENERIC)
        throw domain_error("character formula requires a verma, parabolic, or simple family");
    if (desc.family == Family::VERMA) {
        for (const IVec& b : bounded_combinations(rs.rank, I, depth)) {
            Vec mu = lattice_point(rs, lam, b);
            ch.mult[mu] = kostant_partition(rs, vec_sub(lam, mu));
        }
        return ch;
    }
    if (desc.family == Family::SIMPLE && !check_wcf_hypothesis(rs, lam))
        throw domain_error(
            "character formula requires the dot orbit below lambda to be reached by "
            "reflections integral on lambda");
    Vec rho = rho_weight(rs);
    Vec lr = vec_add(lam, rho);
    // lambda + rho is strictly dominant on J(V), so the orbit is free and each
    // point carries a well-defined length parity.
    auto orbit = weyl_orbit_with_words(rs, desc.jv, lr);
    for (const IVec& b : bounded_combinations(rs.rank, I, depth)) {
        Vec mu = lattice_point(rs, lam, b);
        long long m = 0;
        for (const auto& [eta, w] : orbit) {
            long long p = kostant_partition(rs, vec_sub(vec_sub(eta, rho), mu));
            m += (w.length() % 2 == 0) ? p : -p;
        }
        if (m < 0) throw internal_error("negative character coefficient");
        if (m > 0) ch.mult[mu] = m;
    }
    auto it = ch.mult.find(lam);
    if (it == ch.mult.end() || it->second != 1)
        throw internal_error("highest weight multiplicity is not one");
    return ch;
}

bool check_wcf_hypothesis(const RootSystem& rs, const Vec& lambda) {
    Vec rho = rho_weight(rs);
    Vec lr = vec_add(lambda, rho);
    std::set<Vec> linkage;
    for (const Vec& eta : weyl_orbit(rs, rs.full_index_set(), lr)) {
        Vec mu = vec_sub(eta, rho);
        if (leq(rs, mu, lambda)) linkage.insert(mu);
    }
    std::set<Vec> integral;
    for (const Vec& eta : weyl_orbit(rs, j_lambda(rs, lambda), lr))
        integral.insert(vec_sub(eta, rho));
    return linkage == integral;
}

CounterexampleRecord counterexample_witness(const RootSystem& rs, const Vec& lambda,
                                            int i, int j) {
    if (i < 0 || j < 0 || i >= rs.rank || j >= rs.rank || i == j)
        throw domain_error("counterexample_witness: need two distinct valid indices");
    if (rs.cartan[i][j] != 0)
        throw domain_error("counterexample_witness: the two simple reflections must commute");
    for (int k : {i, j})
        if (!is_integer(lambda[k]) || lambda[k] < 0)
            throw domain_error(
                "counterexample_witness: lambda(h_k) must be a nonnegative integer at "
                "index " +
                std::to_string(k + 1));
    IVec b(rs.rank, 0);
    b[i] = to_ll(lambda[i]) + 1;
    b[j] = to_ll(lambda[j]) + 1;
    Vec mu = lattice_point(rs, lambda, b);
    WeylElement w;
    w.word = {i, j};
    if (dot_action(rs, w, lambda) != mu)
        throw internal_error("dot action mismatch in counterexample witness");
    CounterexampleRecord rec;
    rec.mu_star = mu;
    rec.partition_count = kostant_partition(rs, vec_sub(lambda, mu));
    if (rec.partition_count != 1)
        throw internal_error("expected a unique partition for the commuting pair");
    HWModuleDesc verma = describe_module(rs, lambda, Family::VERMA);
    rec.in_hull = contains(hull_of_module(rs, verma), mu);
    return rec;
}

std::vector<IVec> fernando_parabolic(const RootSystem& rs, const HWModuleDesc& desc) {
    std::vector<IVec> out = rs.positive_roots;
    for (const IVec& r : rs.positive_roots) {
        if (!supported_on(r, desc.jv)) continue;
        IVec neg(rs.rank, 0);
        for (int k = 0; k < rs.rank; ++k) neg[k] = -r[k];
        out.push_back(neg);
    }
    return out;
}

}  // namespace weylcrest
