#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "weylcrest/errors.hpp"
#include "weylcrest/weightlat.hpp"

namespace weylcrest {
namespace {

Vec V(std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("invariant form") {
    RootSystem a2 = build_root_system("A2");
    Vec a1 = a2.simple_root_fw(0), al2 = a2.simple_root_fw(1);
    CHECK_EQ(pairing(a2, a1, a1), Rat(2));
    CHECK_EQ(pairing(a2, a1, al2), Rat(-1));
    CHECK_EQ(pairing(a2, al2, a1), Rat(-1));
    // (omega_i, alpha_j) = delta_ij d_j.
    CHECK_EQ(pairing(a2, V({1, 0}), a1), Rat(1));
    CHECK_EQ(pairing(a2, V({1, 0}), al2), Rat(0));

    RootSystem b2 = build_root_system("B2");
    Vec s = b2.simple_root_fw(1);  // short root
    CHECK_EQ(pairing(b2, s, s), Rat(1));
    CHECK_EQ(pairing(b2, b2.simple_root_fw(0), b2.simple_root_fw(0)), Rat(2));

    RootSystem g2 = build_root_system("G2");
    CHECK_EQ(pairing(g2, g2.simple_root_fw(0), g2.simple_root_fw(0)), Rat(2, 3));
    CHECK_EQ(pairing(g2, g2.simple_root_fw(1), g2.simple_root_fw(1)), Rat(2));
    CHECK_EQ(pairing(g2, g2.simple_root_fw(0), g2.simple_root_fw(1)), Rat(-1));

    // The form is Weyl-invariant.
    RootSystem rs = build_root_system("B2");
    Vec x = {Rat(1, 2), Rat(3)};
    Vec y = {Rat(-2), Rat(5, 3)};
    for (const auto& w : enumerate_weyl_group(rs, rs.full_index_set()))
        CHECK_EQ(pairing(rs, apply(rs, w, x), apply(rs, w, y)), pairing(rs, x, y));
}

TEST_CASE("coroot evaluation and integrality set") {
    RootSystem a3 = build_root_system("A3");
    Vec lam = {Rat(1, 2), Rat(-3), Rat(2)};
    CHECK_EQ(eval_h(a3, lam, 0), Rat(1, 2));
    CHECK_EQ(eval_h(a3, lam, 2), Rat(2));
    CHECK_EQ(j_lambda(a3, lam), SubsetJ{2});
    CHECK_EQ(j_lambda(a3, V({0, 1, 2})), (SubsetJ{0, 1, 2}));
    CHECK_EQ(support(a3, lam), (SubsetJ{0, 1, 2}));
    CHECK_EQ(support(a3, V({1, 0, 0})), SubsetJ{0});
    CHECK(is_simply_regular(a3, lam));
    CHECK_FALSE(is_simply_regular(a3, V({1, 0, 1})));
}

TEST_CASE("partial order and height") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});
    CHECK(leq(a2, V({0, 0}), theta));  // theta - 0 = alpha_1 + alpha_2
    CHECK(leq(a2, theta, theta));
    CHECK_FALSE(leq(a2, theta, V({0, 0})));
    CHECK_FALSE(leq(a2, V({1, 0}), theta));  // difference not in the root lattice
    CHECK_EQ(height(a2, theta), Rat(2));
    CHECK_EQ(height(a2, vec_sub(theta, V({-1, -1}))), Rat(4));
}

TEST_CASE("rho and projections") {
    RootSystem a3 = build_root_system("A3");
    CHECK_EQ(rho_weight(a3), V({1, 1, 1}));
    CHECK_EQ(rho_J_weight(a3, SubsetJ{0, 2}), V({1, 0, 1}));
    CHECK_EQ(project(a3, SubsetJ{1}, V({5, 7, -2})), V({0, 7, 0}));

    // varpi_J fixes the Delta_J-span and projects the transverse part.
    RootSystem a2 = build_root_system("A2");
    Vec lam = {Rat(1, 2), Rat(4)};
    Vec off = a2.simple_root_fw(0);
    CHECK_EQ(varpi(a2, SubsetJ{0}, lam, off),
             vec_add(project(a2, SubsetJ{0}, lam), off));
}

TEST_CASE("dot action") {
    RootSystem a1 = build_root_system("A1");
    WeylElement s1{{0}};
    CHECK_EQ(dot_action(a1, s1, V({0})), V({-2}));
    CHECK_EQ(dot_action(a1, s1, V({-1})), V({-1}));  // the dot-fixed point

    RootSystem a2 = build_root_system("A2");
    WeylElement w{{0, 1}};
    // w.(w'.x) splits as the composite dot action.
    Vec x = {Rat(2), Rat(-1, 3)};
    CHECK_EQ(dot_action(a2, compose(a2, s1, w), x), dot_action(a2, s1, dot_action(a2, w, x)));
}

TEST_CASE("dominantize") {
    RootSystem a2 = build_root_system("A2");
    auto [dom, v] = dominantize(a2, a2.full_index_set(), V({-1, -1}));
    CHECK_EQ(dom, V({1, 1}));
    CHECK_EQ(apply(a2, v, V({-1, -1})), dom);

    // J-dominant only on the requested indices.
    auto [dj, vj] = dominantize(a2, SubsetJ{0}, V({-2, 1}));
    CHECK(eval_h(a2, dj, 0) >= 0);
    CHECK_EQ(apply(a2, vj, V({-2, 1})), dj);
    auto [d0, v0] = dominantize(a2, SubsetJ{}, V({-2, 1}));
    CHECK_EQ(d0, V({-2, 1}));
    CHECK(v0.is_identity());
}

TEST_CASE("nonnegative root coordinates") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});
    auto r = nonneg_root_coords(a2, a2.full_index_set(), theta);
    REQUIRE(r.has_value());
    CHECK_EQ(*r, IVec{1, 1});
    CHECK_FALSE(nonneg_root_coords(a2, SubsetJ{0}, theta).has_value());
    CHECK_FALSE(nonneg_root_coords(a2, a2.full_index_set(), V({1, 0})).has_value());
    CHECK_FALSE(
        nonneg_root_coords(a2, a2.full_index_set(), vec_scale(Rat(-1), theta)).has_value());
    auto z = nonneg_root_coords(a2, SubsetJ{}, V({0, 0}));
    REQUIRE(z.has_value());
    CHECK_EQ(*z, IVec{0, 0});
}

TEST_CASE("bounded combinations") {
    SubsetJ both{0, 1};
    auto all = bounded_combinations(2, both, 3);
    CHECK_EQ(all.size(), 10);  // C(5,2) lattice points in the simplex
    for (const auto& b : all) CHECK_LE(b[0] + b[1], 3);
    auto single = bounded_combinations(3, SubsetJ{1}, 4);
    CHECK_EQ(single.size(), 5);
    for (const auto& b : single) {
        CHECK_EQ(b[0], 0);
        CHECK_EQ(b[2], 0);
    }
    CHECK_EQ(bounded_combinations(2, SubsetJ{}, 7).size(), 1);
}

TEST_CASE("weight sets") {
    RootSystem a2 = build_root_system("A2");
    std::vector<Vec> ws = {V({1, 1}), V({0, 0}), V({1, 1})};
    WeightSet s = make_weight_set(ws, 4, true);
    CHECK_EQ(s.weights.size(), 2);  // deduplicated
    CHECK(std::is_sorted(s.weights.begin(), s.weights.end()));
    CHECK(s.contains(V({1, 1})));
    CHECK_FALSE(s.contains(V({2, 2})));
    CHECK(s.exact);
    CHECK_EQ(s.depth, 4);
}

TEST_CASE("coefficient groups") {
    CoefficientGroup zi;  // integers
    CHECK(zi.member(Rat(3)));
    CHECK(zi.member(Rat(-2)));
    CHECK_FALSE(zi.member(Rat(3, 2)));
    CHECK(zi.positive_member(Rat(1)));
    CHECK_FALSE(zi.positive_member(Rat(-1)));

    CoefficientGroup sc{CoeffTag::SCALED, Rat(3)};
    CHECK(sc.member(Rat(6)));
    CHECK_FALSE(sc.member(Rat(4)));
    CHECK_FALSE(sc.member(Rat(1)));

    CoefficientGroup q{CoeffTag::RAT, Rat(1)};
    CHECK(q.member(Rat(22, 7)));
}

}  // namespace weylcrest
