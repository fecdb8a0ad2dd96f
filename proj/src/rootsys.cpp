#include "weylcrest/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "weylcrest/errors.hpp"

namespace weylcrest {

namespace {

std::vector<std::vector<long long>> cartan_matrix(char kind, int rank) {
    int n = rank;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, long long aij, long long aji) {
        a[i][j] = aij;  // alpha_j(h_i)
        a[j][i] = aji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) link(i, i + 1, -1, -1);
    };
    switch (kind) {
        case 'A':
            chain(0, n - 1);
            break;
        case 'B':  // alpha_n short
            chain(0, n - 2);
            link(n - 2, n - 1, -1, -2);
            break;
        case 'C':  // alpha_n long
            chain(0, n - 2);
            link(n - 2, n - 1, -2, -1);
            break;
        case 'D':
            chain(0, n - 3);
            link(n - 3, n - 2, -1, -1);
            link(n - 3, n - 1, -1, -1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-..., node 2 attached to node 4.
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            chain(2, n - 1);
            break;
        case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            link(0, 1, -3, -1);
            break;
        default:
            throw domain_error("unknown type kind");
    }
    return a;
}

std::vector<Rat> root_lengths(char kind, int rank) {
    std::vector<Rat> d(rank, 1);
    switch (kind) {
        case 'B':
            d[rank - 1] = Rat(1, 2);
            break;
        case 'C':
            for (int i = 0; i < rank - 1; ++i) d[i] = Rat(1, 2);
            break;
        case 'F':
            d[2] = Rat(1, 2);
            d[3] = Rat(1, 2);
            break;
        case 'G':
            d[0] = Rat(1, 3);
            break;
        default:
            break;
    }
    return d;
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<long long>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw internal_error("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        Rat p = m[col][col];
        for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

long long positive_root_count(char kind, int rank) {
    switch (kind) {
        case 'A':
            return static_cast<long long>(rank) * (rank + 1) / 2;
        case 'B':
        case 'C':
            return static_cast<long long>(rank) * rank;
        case 'D':
            return static_cast<long long>(rank) * (rank - 1);
        case 'E':
            return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        case 'F':
            return 24;
        case 'G':
            return 6;
        default:
            return -1;
    }
}

// Reflection in simple-root coordinates: s_i(r) = r - (A r)_i e_i.
IVec reflect_root(const std::vector<std::vector<long long>>& a, int i, const IVec& r) {
    long long pair = 0;
    for (size_t j = 0; j < r.size(); ++j) pair += a[i][j] * r[j];
    IVec s = r;
    s[i] -= pair;
    return s;
}

std::vector<IVec> all_positive_roots(const std::vector<std::vector<long long>>& a) {
    int n = static_cast<int>(a.size());
    std::set<IVec> seen;
    std::deque<IVec> queue;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IVec r = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            IVec s = reflect_root(a, i, r);
            if (seen.insert(s).second) queue.push_back(s);
        }
    }
    std::vector<IVec> pos;
    for (const auto& r : seen) {
        bool nonneg = true;
        for (long long c : r) nonneg = nonneg && c >= 0;
        if (nonneg) pos.push_back(r);
    }
    auto ht = [](const IVec& r) {
        long long h = 0;
        for (long long c : r) h += c;
        return h;
    };
    std::sort(pos.begin(), pos.end(), [&](const IVec& x, const IVec& y) {
        if (ht(x) != ht(y)) return ht(x) < ht(y);
        return x < y;
    });
    return pos;
}

}  // namespace

Vec RootSystem::root_to_fw(const IVec& r) const {
    Vec c(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c[i] += Rat(cartan[i][j]) * r[j];
    return c;
}

Vec RootSystem::simple_root_fw(int i) const {
    Vec c(rank);
    for (int k = 0; k < rank; ++k) c[k] = cartan[k][i];
    return c;
}

Vec RootSystem::fw_to_root(const Vec& c) const {
    Vec r(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) r[i] += cartan_inv[i][j] * c[j];
    return r;
}

RootSystem build_root_system(char kind, int rank) {
    bool ok = false;
    switch (kind) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 3; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: ok = false;
    }
    if (!ok)
        throw domain_error("invalid finite type: " + std::string(1, kind) +
                           std::to_string(rank));
    RootSystem rs;
    rs.kind = kind;
    rs.rank = rank;
    rs.cartan = cartan_matrix(kind, rank);
    rs.d = root_lengths(kind, rank);
    rs.cartan_inv = invert(rs.cartan);
    rs.positive_roots = all_positive_roots(rs.cartan);
    if (static_cast<long long>(rs.positive_roots.size()) != positive_root_count(kind, rank))
        throw internal_error("positive root count mismatch");
    rs.highest_root = rs.positive_roots.back();
    for (const auto& r : rs.positive_roots)
        for (int i = 0; i < rank; ++i)
            if (rs.highest_root[i] < r[i]) throw internal_error("highest root not maximal");
    return rs;
}

RootSystem build_root_system(const std::string& type) {
    if (type.size() < 2) throw domain_error("invalid type string: " + type);
    char kind = type[0];
    int rank = 0;
    try {
        size_t used = 0;
        rank = std::stoi(type.substr(1), &used);
        if (used + 1 != type.size()) throw std::invalid_argument(type);
    } catch (const std::exception&) {
        throw domain_error("invalid type string: " + type);
    }
    return build_root_system(kind, rank);
}

Vec reflect(const RootSystem& rs, int i, const Vec& c) {
    Vec s = c;
    const Rat& ci = c[i];
    if (ci == 0) return s;
    for (int k = 0; k < rs.rank; ++k) s[k] -= ci * rs.cartan[k][i];
    return s;
}

IVec reflect_root_coords(const RootSystem& rs, int i, const IVec& r) {
    long long pair = 0;
    for (int j = 0; j < rs.rank; ++j) pair += rs.cartan[i][j] * r[j];
    IVec s = r;
    s[i] -= pair;
    return s;
}

Vec apply(const RootSystem& rs, const WeylElement& w, const Vec& c) {
    Vec v = c;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = reflect(rs, *it, v);
    return v;
}

namespace {

bool root_is_negative(const IVec& r) {
    for (long long c : r)
        if (c > 0) return false;
    return true;
}

}  // namespace

WeylElement normalize(const RootSystem& rs, const WeylElement& w) {
    std::vector<int> word = w.word;
    bool changed = true;
    while (changed) {
        changed = false;
        // b: position whose letter the prefix sends negative (leftmost test).
        for (size_t b = 1; b < word.size() && !changed; ++b) {
            IVec beta(rs.rank, 0);
            beta[word[b]] = 1;
            // prefix s_{word[0]} ... s_{word[b-1]} applied to alpha_{word[b]}
            IVec img = beta;
            for (size_t k = b; k-- > 0;) img = reflect_root_coords(rs, word[k], img);
            if (!root_is_negative(img)) continue;
            // find a < b with s_{a+1} ... s_{b-1} (alpha_b) = alpha_a
            IVec cur = beta;
            for (size_t a = b; a-- > 0;) {
                IVec unit(rs.rank, 0);
                unit[word[a]] = 1;
                if (cur == unit) {
                    word.erase(word.begin() + b);
                    word.erase(word.begin() + a);
                    changed = true;
                    break;
                }
                cur = reflect_root_coords(rs, word[a], cur);
            }
            if (!changed) throw internal_error("deletion condition failed");
        }
    }
    WeylElement r;
    r.word = word;
    return r;
}

WeylElement compose(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
    WeylElement w;
    w.word = u.word;
    w.word.insert(w.word.end(), v.word.begin(), v.word.end());
    return normalize(rs, w);
}

bool weyl_equal(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
    Vec rho(rs.rank, 1);
    return apply(rs, u, rho) == apply(rs, v, rho);
}

std::vector<Vec> weyl_orbit(const RootSystem& rs, const SubsetJ& J, const Vec& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank)
        throw domain_error("weight rank mismatch");
    std::set<Vec> seen{lambda};
    std::deque<Vec> queue{lambda};
    while (!queue.empty()) {
        Vec v = queue.front();
        queue.pop_front();
        for (int j : J) {
            Vec s = reflect(rs, j, v);
            if (seen.insert(s).second) {
                if (static_cast<long long>(seen.size()) > kOrbitCap)
                    throw domain_error("orbit size exceeds cap");
                queue.push_back(s);
            }
        }
    }
    return std::vector<Vec>(seen.begin(), seen.end());
}

std::vector<std::pair<Vec, WeylElement>> weyl_orbit_with_words(const RootSystem& rs,
                                                               const SubsetJ& J,
                                                               const Vec& lambda) {
    std::map<Vec, WeylElement> found;
    WeylElement id;
    found.emplace(lambda, id);
    std::deque<Vec> queue{lambda};
    while (!queue.empty()) {
        Vec v = queue.front();
        queue.pop_front();
        WeylElement w = found.at(v);
        for (int j : J) {
            Vec s = reflect(rs, j, v);
            if (found.count(s)) continue;
            if (static_cast<long long>(found.size()) >= kOrbitCap)
                throw domain_error("orbit size exceeds cap");
            // s = s_j(w(lambda)), so the word is j followed by w's word.
            WeylElement nw;
            nw.word.push_back(j);
            nw.word.insert(nw.word.end(), w.word.begin(), w.word.end());
            found.emplace(s, nw);
            queue.push_back(s);
        }
    }
    return std::vector<std::pair<Vec, WeylElement>>(found.begin(), found.end());
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, const SubsetJ& J) {
    // BFS on the orbit of a J-regular point, recording discovery order.
    Vec rho(rs.rank, 1);
    std::set<Vec> seen{rho};
    std::deque<std::pair<Vec, WeylElement>> queue;
    WeylElement id;
    queue.emplace_back(rho, id);
    std::vector<WeylElement> out{id};
    while (!queue.empty()) {
        auto [v, w] = queue.front();
        queue.pop_front();
        for (int j : J) {
            Vec s = reflect(rs, j, v);
            if (!seen.insert(s).second) continue;
            if (static_cast<long long>(seen.size()) > kOrbitCap)
                throw domain_error("orbit size exceeds cap");
            WeylElement nw;
            nw.word.push_back(j);
            nw.word.insert(nw.word.end(), w.word.begin(), w.word.end());
            out.push_back(nw);
            queue.emplace_back(s, nw);
        }
    }
    return out;
}

WeylElement longest_element(const RootSystem& rs, const SubsetJ& J) {
    Vec mu(rs.rank, 0);
    for (int j : J) mu[j] = 1;
    std::vector<int> letters;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j : J) {
            if (mu[j] > 0) {
                mu = reflect(rs, j, mu);
                letters.push_back(j);
                moved = true;
                break;
            }
        }
    }
    WeylElement w;
    w.word.assign(letters.rbegin(), letters.rend());
    long long expected = 0;
    for (const auto& r : rs.positive_roots) {
        bool in_span = true;
        for (int i = 0; i < rs.rank; ++i)
            if (r[i] != 0 && !J.count(i)) in_span = false;
        if (in_span) ++expected;
    }
    if (static_cast<long long>(w.word.size()) != expected)
        throw internal_error("longest element length mismatch");
    return w;
}

SubsetJ dynkin_components(const RootSystem& rs, const SubsetJ& J, const Vec& lambda) {
    // supp(lambda) = {i : lambda(h_i) != 0}.
    SubsetJ supp;
    for (int i = 0; i < rs.rank; ++i)
        if (lambda[i] != 0) supp.insert(i);
    SubsetJ out;
    std::set<int> visited;
    for (int start : J) {
        if (visited.count(start)) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        visited.insert(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int u : J)
                if (!visited.count(u) && rs.cartan[v][u] != 0) {
                    visited.insert(u);
                    queue.push_back(u);
                }
        }
        bool meets = false;
        for (int v : comp) meets = meets || supp.count(v);
        if (meets) out.insert(comp.begin(), comp.end());
    }
    return out;
}

std::string subset_str(const SubsetJ& J) {
    std::string s = "{";
    bool first = true;
    for (int j : J) {
        if (!first) s += ',';
        s += std::to_string(j + 1);
        first = false;
    }
    return s + "}";
}

}  // namespace weylcrest
