#include "weylcrest/polyhedron.hpp"

#include <algorithm>
#include <string>

#include "weylcrest/errors.hpp"

namespace weylcrest {

namespace {

// Phase-one simplex with Bland's rule, exact rational arithmetic.
// Decides feasibility of { y >= 0 : sum_j y_j cols[j] = rhs }.
bool lp_feasible(const std::vector<Vec>& cols, const Vec& rhs_in) {
    size_t m = rhs_in.size(), n = cols.size();
    if (n == 0)
        return std::all_of(rhs_in.begin(), rhs_in.end(),
                           [](const Rat& c) { return c == 0; });
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(n + m, 0));
    Vec rhs = rhs_in;
    for (size_t i = 0; i < m; ++i) {
        bool flip = rhs[i] < 0;
        if (flip) rhs[i] = -rhs[i];
        for (size_t j = 0; j < n; ++j) T[i][j] = flip ? Rat(-cols[j][i]) : cols[j][i];
        T[i][n + i] = 1;
    }
    // Minimize the artificial total. With the artificials basic, the reduced
    // coefficient of a real column is its column sum.
    std::vector<Rat> obj(n + m, 0);
    Rat objval = 0;
    for (size_t i = 0; i < m; ++i) {
        objval += rhs[i];
        for (size_t j = 0; j < n; ++j) obj[j] += T[i][j];
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;
    while (true) {
        size_t enter = n + m;
        for (size_t j = 0; j < n + m; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;
        size_t leave = m;
        Rat best = 0;
        for (size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = rhs[i] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw internal_error("unbounded phase-one column");
        Rat piv = T[leave][enter];
        for (auto& c : T[leave]) c /= piv;
        rhs[leave] /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (size_t j = 0; j < n + m; ++j) T[i][j] -= f * T[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (size_t j = 0; j < n + m; ++j) obj[j] -= f * T[leave][j];
            objval -= f * rhs[leave];
        }
        basis[leave] = enter;
    }
    return objval == 0;
}

bool is_positive_multiple(const Vec& d, const Vec& r) {
    size_t k = 0;
    while (k < r.size() && r[k] == 0) ++k;
    if (k == r.size()) return false;
    if (r[k] == 0 || d[k] == 0) return false;
    Rat t = d[k] / r[k];
    if (t <= 0) return false;
    for (size_t i = 0; i < r.size(); ++i)
        if (d[i] != t * r[i]) return false;
    return true;
}

bool root_supported_on(const IVec& r, const SubsetJ& J) {
    for (size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0 && !J.count(static_cast<int>(k))) return false;
    return true;
}

}  // namespace

Polyhedron hull_of_module(const RootSystem& rs, const HWModuleDesc& desc) {
    if (!desc.weight_formula_valid)
        throw domain_error(
            "hull description requires at most one integrable direction outside J(V)");
    Polyhedron p;
    p.vertices = weyl_orbit(rs, desc.jv, desc.lambda);
    std::sort(p.vertices.begin(), p.vertices.end());
    for (const IVec& r : rs.positive_roots) {
        if (root_supported_on(r, desc.jv)) continue;
        p.cone_generators.push_back(vec_scale(Rat(-1), rs.root_to_fw(r)));
    }
    std::sort(p.cone_generators.begin(), p.cone_generators.end());
    p.provenance = desc;
    return p;
}

bool contains(const Polyhedron& poly, const Vec& mu) {
    if (poly.vertices.empty()) throw domain_error("contains: polyhedron has no vertices");
    size_t dim = poly.vertices[0].size();
    if (mu.size() != dim) throw domain_error("contains: rank mismatch");
    std::vector<Vec> cols;
    cols.reserve(poly.vertices.size() + poly.cone_generators.size());
    for (const Vec& v : poly.vertices) {
        Vec c = v;
        c.push_back(1);
        cols.push_back(std::move(c));
    }
    for (const Vec& g : poly.cone_generators) {
        Vec c = g;
        c.push_back(0);
        cols.push_back(std::move(c));
    }
    Vec rhs = mu;
    rhs.push_back(1);
    return lp_feasible(cols, rhs);
}

bool in_cone(const std::vector<Vec>& dirs, const Vec& x) {
    return lp_feasible(dirs, x);
}

std::vector<Vec> extremal_rays_at_vertex(const RootSystem& rs, const Polyhedron& poly,
                                         const Vec& v) {
    if (!std::binary_search(poly.vertices.begin(), poly.vertices.end(), v))
        throw domain_error("extremal_rays_at_vertex: not a vertex of the hull");
    const HWModuleDesc& desc = poly.provenance;
    for (int j : desc.jv)
        if (desc.lambda[j] == 0)
            throw domain_error(
                "extremal ray description requires lambda(h_j) nonzero for each j in "
                "J(V); index " +
                std::to_string(j + 1) + " fails");
    if (poly.cone_generators.empty()) return {};
    auto orbit = weyl_orbit_with_words(rs, desc.jv, desc.lambda);
    const WeylElement* w = nullptr;
    for (const auto& [pt, el] : orbit)
        if (pt == v) {
            w = &el;
            break;
        }
    if (!w) throw internal_error("vertex missing from the defining orbit");
    std::vector<Vec> rays;
    for (int i = 0; i < rs.rank; ++i) {
        if (desc.jv.count(i)) continue;
        rays.push_back(apply(rs, *w, vec_scale(Rat(-1), rs.simple_root_fw(i))));
    }
    std::sort(rays.begin(), rays.end());
    // Certify: a ray is extremal iff it cannot be generated by the remaining
    // local directions at v.
    std::vector<Vec> local;
    for (const Vec& u : poly.vertices)
        if (u != v) local.push_back(vec_sub(u, v));
    for (const Vec& g : poly.cone_generators) local.push_back(g);
    for (const Vec& r : rays) {
        std::vector<Vec> others;
        for (const Vec& d : local)
            if (!is_positive_multiple(d, r)) others.push_back(d);
        if (in_cone(others, r)) throw internal_error("extremal ray certification failed");
    }
    return rays;
}

SubsetJ stabilizer_parabolic(const RootSystem& rs, const HWModuleDesc& desc) {
    Polyhedron poly = hull_of_module(rs, desc);
    for (int j : desc.jv) {
        std::vector<Vec> mapped;
        mapped.reserve(poly.vertices.size());
        for (const Vec& v : poly.vertices) mapped.push_back(reflect(rs, j, v));
        std::sort(mapped.begin(), mapped.end());
        if (mapped != poly.vertices)
            throw internal_error("vertex set is not stable under an integrable reflection");
    }
    for (int i = 0; i < rs.rank; ++i) {
        if (desc.jv.count(i)) continue;
        // mu = lambda - n alpha_i is a weight, while s_i(mu) escapes the
        // lowering cone because n exceeds lambda(h_i).
        long long n = std::max<long long>(0, ceil_ll(desc.lambda[i])) + 1;
        Vec mu = desc.lambda;
        for (int k = 0; k < rs.rank; ++k) mu[k] -= Rat(n) * rs.cartan[k][i];
        if (!contains(poly, mu)) throw internal_error("stabilizer witness escaped the hull");
        Rat c = desc.lambda[i] - n;
        if (is_integer(c) && c >= 0)
            throw internal_error("stabilizer witness failed to exit the weight cone");
    }
    return desc.jv;
}

WeightSet maximizer(const RootSystem& rs, const WeightSet& X, const Vec& phi) {
    if (X.weights.empty()) throw domain_error("maximizer: empty weight set");
    Rat best = 0;
    bool have = false;
    std::vector<Rat> vals;
    vals.reserve(X.weights.size());
    for (const Vec& mu : X.weights) {
        Rat v = pairing(rs, phi, mu);
        vals.push_back(v);
        if (!have || v > best) {
            best = v;
            have = true;
        }
    }
    std::vector<Vec> arg;
    for (size_t k = 0; k < X.weights.size(); ++k)
        if (vals[k] == best) arg.push_back(X.weights[k]);
    return make_weight_set(std::move(arg), X.depth, X.exact);
}

WeightSet maximizer(const RootSystem& rs, const Polyhedron& poly, const Vec& phi) {
    for (const Vec& c : poly.cone_generators)
        if (pairing(rs, phi, c) > 0)
            throw domain_error(
                "maximizer: functional is unbounded along a recession direction");
    WeightSet verts = make_weight_set(poly.vertices, 0, true);
    return maximizer(rs, verts, phi);
}

}  // namespace weylcrest
