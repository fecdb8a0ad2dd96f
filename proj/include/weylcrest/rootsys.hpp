/* Finite-type root systems: Cartan data, invariant form, positive roots,
   Weyl group elements as reduced words, orbits, Dynkin components.
   Simple roots follow Bourbaki numbering; indices are 0-based in the API
   and 1-based only in serialized output. */
#pragma once

#include <set>
#include <string>
#include <vector>

#include "weylcrest/rational.hpp"

namespace weylcrest {

using SubsetJ = std::set<int>;

constexpr long long kOrbitCap = 1000000;

struct RootSystem {
    char kind;  // 'A'..'G'
    int rank;
    // cartan[i][j] = alpha_j(h_i); column j holds the fw coordinates of alpha_j.
    std::vector<std::vector<long long>> cartan;
    // d[i] = (alpha_i, alpha_i)/2, long roots normalized to d = 1.
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> cartan_inv;
    // Positive roots as integer simple-root coordinates, sorted by (height, lex).
    std::vector<IVec> positive_roots;
    IVec highest_root;

    SubsetJ full_index_set() const {
        SubsetJ s;
        for (int i = 0; i < rank; ++i) s.insert(i);
        return s;
    }

    // fw coordinates of sum_i r_i alpha_i.
    Vec root_to_fw(const IVec& r) const;
    Vec simple_root_fw(int i) const;
    // Simple-root coordinates of an arbitrary weight (rational).
    Vec fw_to_root(const Vec& c) const;
};

RootSystem build_root_system(char kind, int rank);
RootSystem build_root_system(const std::string& type);  // e.g. "A2", "G2"

struct WeylElement {
    std::vector<int> word;  // [i1,...,ik] = s_{i1} o ... o s_{ik}; rightmost acts first

    size_t length() const { return word.size(); }
    int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
    bool is_identity() const { return word.empty(); }
    WeylElement inverse() const {
        WeylElement w;
        w.word.assign(word.rbegin(), word.rend());
        return w;
    }
};

// Simple reflection on fw coordinates: s_i(c)[k] = c[k] - c[i]*cartan[k][i].
Vec reflect(const RootSystem& rs, int i, const Vec& c);
// Same reflection on integer simple-root coordinates.
IVec reflect_root_coords(const RootSystem& rs, int i, const IVec& r);
Vec apply(const RootSystem& rs, const WeylElement& w, const Vec& c);

// Reduce a word via the deletion condition; result is a reduced word for the
// same element. Composition normalizes.
WeylElement normalize(const RootSystem& rs, const WeylElement& w);
WeylElement compose(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
bool weyl_equal(const RootSystem& rs, const WeylElement& u, const WeylElement& v);

// W_J(lambda) by breadth-first closure, returned sorted lexicographically.
std::vector<Vec> weyl_orbit(const RootSystem& rs, const SubsetJ& J, const Vec& lambda);

// Orbit of lambda together with a minimal-length word sending lambda to each
// element (BFS by length, generators in ascending index). Pairs sorted by weight.
std::vector<std::pair<Vec, WeylElement>> weyl_orbit_with_words(const RootSystem& rs,
                                                               const SubsetJ& J,
                                                               const Vec& lambda);

// All elements of W_J in BFS order (length, then discovery order with
// ascending generator index).
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, const SubsetJ& J);

WeylElement longest_element(const RootSystem& rs, const SubsetJ& J);

// C(lambda, J): union of connected components of the Dynkin subdiagram on J
// meeting supp(lambda).
SubsetJ dynkin_components(const RootSystem& rs, const SubsetJ& J, const Vec& lambda);

std::string subset_str(const SubsetJ& J);  // 1-based, e.g. "{1,3}"

}  // namespace weylcrest
