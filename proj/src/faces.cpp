#include "weylcrest/faces.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "weylcrest/errors.hpp"
#include "weylcrest/oracle.hpp"

namespace weylcrest {

namespace {

long long floor_ll(const Rat& r) { return -ceil_ll(-r); }

bool root_supported_on(const IVec& r, const SubsetJ& J) {
    for (size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0 && !J.count(static_cast<int>(k))) return false;
    return true;
}

// Precomputed multiset groups over a lex-sorted ambient set: for every total
// 1..neff and weighted sum, the distinct support masks with one representative
// index multiset each. Shared by the single query and the exhaustive scan.
struct WeakFaceScanner {
    std::vector<Vec> X;
    Rat scale = 1;  // witness coefficient multiplier
    struct Group {
        std::vector<uint64_t> masks;
        std::vector<std::vector<int>> reps;
    };
    std::vector<Group> groups;

    WeakFaceScanner(std::vector<Vec> ambient, const Rat& coeff_scale, long long neff)
        : X(std::move(ambient)), scale(coeff_scale) {
        std::map<std::pair<long long, Vec>, std::map<uint64_t, std::vector<int>>> built;
        std::vector<int> idx;
        Vec sum(X.empty() ? 0 : X[0].size(), 0);
        auto rec = [&](auto&& self, size_t start, long long remaining) -> void {
            if (!idx.empty()) {
                uint64_t mask = 0;
                for (int k : idx) mask |= (uint64_t{1} << k);
                auto& slot = built[{static_cast<long long>(idx.size()), sum}];
                slot.try_emplace(mask, idx);
            }
            if (remaining == 0) return;
            for (size_t k = start; k < X.size(); ++k) {
                idx.push_back(static_cast<int>(k));
                Vec prev = sum;
                sum = vec_add(sum, X[k]);
                self(self, k, remaining - 1);
                sum = std::move(prev);
                idx.pop_back();
            }
        };
        if (neff > 0) rec(rec, 0, neff);
        for (auto& [key, masks] : built) {
            (void)key;
            if (masks.size() < 2) continue;  // a lone mask can never violate
            Group g;
            for (auto& [m, rep] : masks) {
                g.masks.push_back(m);
                g.reps.push_back(rep);
            }
            groups.push_back(std::move(g));
        }
    }

    FinFn build_fn(const std::vector<int>& rep) const {
        FinFn f;
        std::map<int, long long> counts;
        for (int k : rep) ++counts[k];
        for (const auto& [k, c] : counts) f.terms.emplace_back(X[k], Rat(c) * scale);
        return f;
    }

    // nullopt when ymask passes; otherwise an (f, g) violation pair.
    std::optional<std::pair<FinFn, FinFn>> violation(uint64_t ymask) const {
        for (const Group& g : groups) {
            int in = -1, out = -1;
            for (size_t k = 0; k < g.masks.size(); ++k) {
                if ((g.masks[k] & ~ymask) == 0) {
                    if (in < 0) in = static_cast<int>(k);
                } else if (out < 0) {
                    out = static_cast<int>(k);
                }
                if (in >= 0 && out >= 0)
                    return std::make_pair(build_fn(g.reps[out]), build_fn(g.reps[in]));
            }
        }
        return std::nullopt;
    }
};

struct PreparedQuery {
    std::vector<Vec> X;  // lex-sorted, deduplicated
    uint64_t ymask = 0;
};

PreparedQuery prepare(const std::vector<Vec>& Xin, const std::vector<Vec>& Yin) {
    if (Xin.empty()) throw domain_error("weak face query: empty ambient set");
    PreparedQuery p;
    p.X = Xin;
    std::sort(p.X.begin(), p.X.end());
    p.X.erase(std::unique(p.X.begin(), p.X.end()), p.X.end());
    if (p.X.size() > 64) throw domain_error("weak face query: ambient set exceeds 64 points");
    for (const Vec& x : p.X)
        if (x.size() != p.X[0].size()) throw domain_error("weak face query: mixed dimensions");
    for (const Vec& y : Yin) {
        auto it = std::lower_bound(p.X.begin(), p.X.end(), y);
        if (it == p.X.end() || *it != y)
            throw domain_error("weak face query: Y must be a subset of X");
        p.ymask |= uint64_t{1} << (it - p.X.begin());
    }
    return p;
}

// Effective integer total bound and witness scale for a coefficient group.
std::pair<long long, Rat> effective_bound(const CoefficientGroup& coeff, long long bound) {
    switch (coeff.tag) {
        case CoeffTag::INT:
            return {bound, Rat(1)};
        case CoeffTag::SCALED:
            if (coeff.scale <= 0)
                throw domain_error("weak face query: coefficient scale must be positive");
            return {floor_ll(Rat(bound) / coeff.scale), coeff.scale};
        case CoeffTag::RAT:
        case CoeffTag::REALS:
            // Rational witnesses rescale to integer ones; the search is the
            // integer search at the same bound.
            return {bound, Rat(1)};
    }
    return {bound, Rat(1)};
}

}  // namespace

FaceVerdict is_weak_face(const FaceQuery& q) {
    PreparedQuery p = prepare(q.X, q.Y);
    auto [neff, scale] = effective_bound(q.coeff, q.bound);
    FaceVerdict v;
    v.bound = q.bound;
    v.result = true;
    if (neff < 1) return v;
    WeakFaceScanner scanner(p.X, scale, neff);
    if (auto w = scanner.violation(p.ymask)) {
        v.result = false;
        v.witness = std::move(*w);
    }
    return v;
}

FaceVerdict is_positive_weak_face(const FaceQuery& q) {
    PreparedQuery p = prepare(q.X, q.Y);
    size_t dim = p.X[0].size();
    Vec zero(dim, 0);
    for (const Vec& y : q.Y)
        if (y == zero) {
            FaceVerdict v;
            v.bound = q.bound;
            v.result = false;
            return v;
        }
    FaceQuery aug = q;
    aug.X = p.X;
    aug.X.push_back(zero);
    return is_weak_face(aug);
}

FaceVerdict is_closed(const std::vector<Vec>& Xin, const std::vector<Vec>& Yin,
                      const std::vector<Rat>& Rprime, const std::vector<Rat>& R,
                      long long bound) {
    PreparedQuery p = prepare(Xin, Yin);
    if (R.empty()) throw domain_error("closedness query: empty coefficient set");
    for (const Rat& r : R)
        if (r <= 0) throw domain_error("closedness query: coefficient values must be positive");
    std::vector<Rat> vals = R;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::set<Rat> totals;
    for (const Rat& t : Rprime)
        if (t > 0 && t <= bound) totals.insert(t);
    FaceVerdict v;
    v.bound = bound;
    v.result = true;
    if (totals.empty()) return v;
    Rat max_total = *totals.rbegin();
    // groups keyed by (total, weighted sum); one representative per mask
    std::map<std::pair<Rat, Vec>, std::map<uint64_t, std::vector<std::pair<int, Rat>>>> groups;
    std::vector<std::pair<int, Rat>> cur;
    Vec sum(p.X[0].size(), 0);
    auto rec = [&](auto&& self, size_t i, Rat total) -> void {
        if (i == p.X.size()) {
            if (total > 0 && totals.count(total)) {
                uint64_t mask = 0;
                for (const auto& [k, c] : cur) {
                    (void)c;
                    mask |= uint64_t{1} << k;
                }
                groups[{total, sum}].try_emplace(mask, cur);
            }
            return;
        }
        self(self, i + 1, total);
        for (const Rat& r : vals) {
            if (total + r > max_total) break;
            cur.emplace_back(static_cast<int>(i), r);
            Vec prev = sum;
            sum = vec_add(sum, vec_scale(r, p.X[i]));
            self(self, i + 1, total + r);
            sum = std::move(prev);
            cur.pop_back();
        }
    };
    rec(rec, 0, Rat(0));
    for (const auto& [key, masks] : groups) {
        (void)key;
        const std::vector<std::pair<int, Rat>>* in = nullptr;
        const std::vector<std::pair<int, Rat>>* out = nullptr;
        for (const auto& [m, asg] : masks) {
            if ((m & ~p.ymask) == 0) {
                if (!in) in = &asg;
            } else if (!out) {
                out = &asg;
            }
            if (in && out) break;
        }
        if (in && out) {
            auto build = [&](const std::vector<std::pair<int, Rat>>& asg) {
                FinFn f;
                for (const auto& [k, c] : asg) f.terms.emplace_back(p.X[k], c);
                return f;
            };
            v.result = false;
            v.witness = std::make_pair(build(*out), build(*in));
            return v;
        }
    }
    return v;
}

bool faces_equal(const RootSystem& rs, const HWModuleDesc& desc, const SubsetJ& J,
                 const SubsetJ& Jprime) {
    for (int j : J)
        if (j < 0 || j >= rs.rank) throw domain_error("faces_equal: index out of range");
    for (int j : Jprime)
        if (j < 0 || j >= rs.rank) throw domain_error("faces_equal: index out of range");
    SubsetJ a_out, b_out, a_in, b_in;
    for (int j : J) (desc.jv.count(j) ? a_in : a_out).insert(j);
    for (int j : Jprime) (desc.jv.count(j) ? b_in : b_out).insert(j);
    if (a_out != b_out) return false;
    SubsetJ ca = dynkin_components(rs, a_in, desc.lambda);
    SubsetJ cb = dynkin_components(rs, b_in, desc.lambda);
    for (int i : ca)
        if (!b_in.count(i)) return false;
    for (int i : cb)
        if (!a_in.count(i)) return false;
    return true;
}

FaceInterval face_interval(const RootSystem& rs, const HWModuleDesc& desc, const SubsetJ& J) {
    SubsetJ in_part, out_part;
    for (int j : J) {
        if (j < 0 || j >= rs.rank) throw domain_error("face_interval: index out of range");
        (desc.jv.count(j) ? in_part : out_part).insert(j);
    }
    FaceInterval iv;
    iv.j_min = out_part;
    for (int i : dynkin_components(rs, in_part, desc.lambda)) iv.j_min.insert(i);
    SubsetJ cur = J;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (!desc.jv.count(i) || cur.count(i)) continue;
            SubsetJ cand = cur;
            cand.insert(i);
            if (faces_equal(rs, desc, cur, cand)) {
                cur = std::move(cand);
                grew = true;
                break;
            }
        }
    }
    iv.j_max = cur;
    return iv;
}

SubsetJ canonical_face_subset(const RootSystem& rs, const HWModuleDesc& desc,
                              const SubsetJ& J) {
    return face_interval(rs, desc, J).j_max;
}

std::optional<FaceDescriptor> classify_weak_face(const RootSystem& rs,
                                                 const HWModuleDesc& desc,
                                                 const std::vector<Vec>& Yin,
                                                 long long depth) {
    if (Yin.empty()) throw domain_error("classify_weak_face: empty candidate set");
    std::vector<Vec> Y = Yin;
    std::sort(Y.begin(), Y.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    WeightSet X = module_weights(rs, desc, depth);
    for (const Vec& y : Y)
        if (!X.contains(y))
            throw domain_error("classify_weak_face: candidate leaves the truncated weight set");
    const Vec& lam = desc.lambda;
    auto slice_match = [&](const std::vector<Vec>& cand) -> std::optional<SubsetJ> {
        if (!std::binary_search(cand.begin(), cand.end(), lam)) return std::nullopt;
        SubsetJ J;
        for (int i = 0; i < rs.rank; ++i) {
            Vec down = vec_sub(lam, rs.simple_root_fw(i));
            if (std::binary_search(cand.begin(), cand.end(), down)) J.insert(i);
        }
        WeightSet S = wt_J(rs, desc, J, depth);
        if (S.weights == cand) return J;
        return std::nullopt;
    };
    for (const WeylElement& w : enumerate_weyl_group(rs, desc.jv)) {
        if (!std::binary_search(Y.begin(), Y.end(), apply(rs, w, lam))) continue;
        WeylElement wi = w.inverse();
        std::vector<Vec> back;
        back.reserve(Y.size());
        for (const Vec& y : Y) back.push_back(apply(rs, wi, y));
        std::sort(back.begin(), back.end());
        if (auto J = slice_match(back)) {
            FaceDescriptor fd;
            fd.w = normalize(rs, w);
            fd.J = canonical_face_subset(rs, desc, *J);
            return fd;
        }
    }
    return std::nullopt;
}

Vec rho_of(const RootSystem& rs, const std::vector<Vec>& S) {
    if (S.empty()) throw domain_error("rho_of: empty set");
    Vec acc(rs.rank, 0);
    for (const Vec& s : S) acc = vec_add(acc, s);
    return acc;
}

bool verify_rho_maximizer(const RootSystem& rs, const HWModuleDesc& desc, const SubsetJ& J) {
    for (int j : J)
        if (!desc.jv.count(j))
            throw domain_error("verify_rho_maximizer: J must lie inside J(V)");
    WeightSet S = wt_J(rs, desc, J, 0);
    long long H = 0;
    for (const Vec& mu : S.weights)
        H = std::max(H, to_ll(height(rs, vec_sub(desc.lambda, mu))));
    WeightSet X = module_weights(rs, desc, H);
    SubsetJ comp;
    for (int i = 0; i < rs.rank; ++i)
        if (!J.count(i)) comp.insert(i);
    if (maximizer(rs, X, rho_J_weight(rs, comp)).weights != S.weights) return false;
    WeightSet top = wt_J(rs, desc, desc.jv, 0);
    Vec rho_s = rho_of(rs, S.weights);
    if (maximizer(rs, top, project(rs, desc.jv, rho_s)).weights != S.weights) return false;
    for (int j : J)
        if (reflect(rs, j, rho_s) != rho_s) return false;
    return true;
}

WeylElement walk_to_vertex(const RootSystem& rs, const std::vector<Vec>& fd_weights,
                           const std::vector<Vec>& Yin) {
    if (fd_weights.empty()) throw domain_error("walk_to_vertex: empty weight set");
    std::vector<Vec> X = fd_weights;
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    for (const Vec& x : X)
        if (static_cast<int>(x.size()) != rs.rank)
            throw domain_error("walk_to_vertex: rank mismatch");
    std::set<Vec> xs(X.begin(), X.end());
    for (int i = 0; i < rs.rank; ++i)
        for (const Vec& x : X)
            if (!xs.count(reflect(rs, i, x)))
                throw domain_error("walk_to_vertex: weight set is not reflection stable");
    std::vector<Vec> tops;
    for (const Vec& mu : X) {
        bool top = true;
        for (const Vec& nu : X)
            if (!leq(rs, nu, mu)) {
                top = false;
                break;
            }
        if (top) tops.push_back(mu);
    }
    if (tops.size() != 1)
        throw domain_error("walk_to_vertex: weights lack a unique highest weight");
    Vec lam = tops[0];
    std::vector<Vec> Y = Yin;
    std::sort(Y.begin(), Y.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    if (Y.empty()) throw domain_error("walk_to_vertex: empty target subset");
    for (const Vec& y : Y)
        if (!xs.count(y)) throw domain_error("walk_to_vertex: target is not a subset");
    FaceVerdict cl = is_closed(X, Y, {Rat(2)}, {Rat(1), Rat(2)}, 2);
    if (!cl.result)
        throw domain_error("walk_to_vertex: target subset is not pairwise closed");
    SubsetJ I = rs.full_index_set();
    auto [mu, u] = dominantize(rs, I, Y[0]);
    std::set<Vec> cur;
    for (const Vec& y : Y) cur.insert(apply(rs, u, y));
    long long guard = 0;
    while (mu != lam) {
        int pick = -1;
        for (int i = 0; i < rs.rank; ++i) {
            if (xs.count(vec_add(mu, rs.simple_root_fw(i)))) {
                pick = i;
                break;
            }
        }
        if (pick < 0) throw internal_error("ascent stalled below the highest weight");
        Vec up = vec_add(mu, rs.simple_root_fw(pick));
        if (!xs.count(vec_sub(mu, rs.simple_root_fw(pick))))
            throw internal_error("weight string is broken in the ambient set");
        if (!cur.count(mu)) throw internal_error("walk lost its subset");
        // closedness: up + (mu - alpha) = mu + mu forces up into the subset
        if (!cur.count(up))
            throw internal_error("closed subset fails to absorb the string partner");
        auto [mu2, v] = dominantize(rs, I, up);
        u = compose(rs, v, u);
        std::set<Vec> nxt;
        for (const Vec& c : cur) nxt.insert(apply(rs, v, c));
        cur = std::move(nxt);
        mu = mu2;
        if (++guard > kOrbitCap) throw internal_error("ascent exceeded the step cap");
    }
    WeylElement w = normalize(rs, u.inverse());
    Vec landed = apply(rs, w, lam);
    if (!std::binary_search(Y.begin(), Y.end(), landed))
        throw internal_error("walk did not land in the target");
    return w;
}

bool is_abelian_ideal(const RootSystem& rs, const std::vector<IVec>& psi) {
    std::set<IVec> pos(rs.positive_roots.begin(), rs.positive_roots.end());
    std::set<IVec> ps;
    for (const IVec& r : psi) {
        if (!pos.count(r)) throw domain_error("is_abelian_ideal: not a set of positive roots");
        ps.insert(r);
    }
    std::set<IVec> phi = pos;
    for (const IVec& r : pos) {
        IVec neg(r.size(), 0);
        for (size_t k = 0; k < r.size(); ++k) neg[k] = -r[k];
        phi.insert(neg);
    }
    auto add = [](const IVec& a, const IVec& b) {
        IVec s(a.size(), 0);
        for (size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
        return s;
    };
    for (const IVec& a : ps)
        for (const IVec& b : ps)
            if (phi.count(add(a, b))) return false;
    for (const IVec& a : ps)
        for (const IVec& r : pos) {
            IVec s = add(a, r);
            if (phi.count(s) && !ps.count(s)) return false;
        }
    return true;
}

std::vector<FaceDescriptor> enumerate_faces(const RootSystem& rs, const HWModuleDesc& desc) {
    if (!desc.weight_formula_valid ||
        (desc.family == Family::GENERIC && !is_simply_regular(rs, desc.lambda)))
        throw domain_error(
            "face enumeration requires a verma, parabolic, or simple family, or a "
            "simply regular highest weight");
    Polyhedron P = hull_of_module(rs, desc);
    std::set<std::pair<std::vector<bool>, std::vector<bool>>> seen;
    std::vector<FaceDescriptor> out;
    for (const WeylElement& w : enumerate_weyl_group(rs, desc.jv)) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << rs.rank); ++mask) {
            SubsetJ J, Jin;
            for (int i = 0; i < rs.rank; ++i)
                if (mask & (uint64_t{1} << i)) {
                    J.insert(i);
                    if (desc.jv.count(i)) Jin.insert(i);
                }
            Polyhedron F;
            F.provenance = desc;
            for (const Vec& v : weyl_orbit(rs, Jin, desc.lambda))
                F.vertices.push_back(apply(rs, w, v));
            std::sort(F.vertices.begin(), F.vertices.end());
            for (const IVec& r : rs.positive_roots) {
                if (!root_supported_on(r, J) || root_supported_on(r, Jin)) continue;
                F.cone_generators.push_back(
                    apply(rs, w, vec_scale(Rat(-1), rs.root_to_fw(r))));
            }
            std::sort(F.cone_generators.begin(), F.cone_generators.end());
            std::vector<bool> vsig, csig;
            vsig.reserve(P.vertices.size());
            for (const Vec& v : P.vertices) vsig.push_back(contains(F, v));
            csig.reserve(P.cone_generators.size());
            for (const Vec& c : P.cone_generators)
                csig.push_back(in_cone(F.cone_generators, c));
            if (seen.emplace(std::move(vsig), std::move(csig)).second) {
                FaceDescriptor fd;
                fd.w = w;
                fd.J = canonical_face_subset(rs, desc, J);
                out.push_back(std::move(fd));
            }
        }
    }
    return out;
}

std::vector<std::vector<Vec>> brute_weak_faces(const std::vector<Vec>& Xin, long long bound,
                                               const CoefficientGroup& coeff) {
    PreparedQuery p = prepare(Xin, {});
    if (p.X.size() > 16)
        throw domain_error("brute_weak_faces: ambient set exceeds 16 points");
    auto [neff, scale] = effective_bound(coeff, bound);
    size_t n = p.X.size();
    std::vector<uint64_t> passing;
    if (neff < 1) {
        for (uint64_t m = 1; m < (uint64_t{1} << n); ++m) passing.push_back(m);
    } else {
        WeakFaceScanner scanner(p.X, scale, neff);
        for (uint64_t m = 1; m < (uint64_t{1} << n); ++m)
            if (!scanner.violation(m)) passing.push_back(m);
    }
    std::sort(passing.begin(), passing.end(), [](uint64_t a, uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::vector<Vec>> out;
    out.reserve(passing.size());
    for (uint64_t m : passing) {
        std::vector<Vec> Y;
        for (size_t k = 0; k < n; ++k)
            if (m & (uint64_t{1} << k)) Y.push_back(p.X[k]);
        out.push_back(std::move(Y));
    }
    return out;
}

}  // namespace weylcrest
