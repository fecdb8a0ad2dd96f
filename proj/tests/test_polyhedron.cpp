#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "weylcrest/errors.hpp"
#include "weylcrest/polyhedron.hpp"

namespace weylcrest {
namespace {

Vec V(std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("cone membership") {
    RootSystem a2 = build_root_system("A2");
    std::vector<Vec> dirs = {a2.simple_root_fw(0), a2.simple_root_fw(1)};
    CHECK(in_cone(dirs, V({1, 1})));  // alpha_1 + alpha_2
    CHECK(in_cone(dirs, V({0, 0})));
    CHECK(in_cone(dirs, vec_scale(Rat(1, 3), a2.simple_root_fw(0))));
    CHECK_FALSE(in_cone(dirs, vec_sub(a2.simple_root_fw(0), a2.simple_root_fw(1))));
    CHECK(in_cone(dirs, V({1, 0})));  // omega_1 = (2 alpha_1 + alpha_2)/3
    CHECK_FALSE(in_cone(dirs, V({-1, 0})));
    CHECK_FALSE(in_cone({}, V({1, 0})));
    CHECK(in_cone({}, V({0, 0})));
}

TEST_CASE("hull of a Verma module") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});
    auto desc = describe_module(a2, theta, Family::VERMA);
    Polyhedron poly = hull_of_module(a2, desc);
    CHECK_EQ(poly.vertices, std::vector<Vec>{theta});
    CHECK_EQ(poly.cone_generators.size(), 3);

    CHECK(contains(poly, theta));
    CHECK(contains(poly, V({0, 0})));
    CHECK(contains(poly, vec_sub(theta, vec_scale(Rat(1, 2), a2.simple_root_fw(0)))));
    CHECK(contains(poly, V({-5, -5})));
    CHECK_FALSE(contains(poly, vec_add(theta, a2.simple_root_fw(0))));
    CHECK_FALSE(contains(poly, V({2, 1})));
}

TEST_CASE("hull of a simple module is the Weyl polytope") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});
    auto desc = describe_module(a2, theta, Family::SIMPLE);
    Polyhedron poly = hull_of_module(a2, desc);
    CHECK_EQ(poly.vertices.size(), 6);
    CHECK(poly.cone_generators.empty());
    CHECK(contains(poly, V({0, 0})));
    CHECK(contains(poly, vec_scale(Rat(2, 3), theta)));
    CHECK(contains(poly, theta));
    CHECK_FALSE(contains(poly, vec_scale(Rat(3, 2), theta)));
    CHECK_FALSE(contains(poly, V({2, 0})));
}

TEST_CASE("hull of a parabolic module mixes vertices and rays") {
    RootSystem a2 = build_root_system("A2");
    Vec rho = V({1, 1});
    auto desc = describe_module(a2, rho, Family::PARABOLIC, SubsetJ{0});
    Polyhedron poly = hull_of_module(a2, desc);
    CHECK_EQ(poly.vertices.size(), 2);  // rho and its alpha_1-reflection
    CHECK_EQ(poly.cone_generators.size(), 2);
    CHECK(contains(poly, reflect(a2, 0, rho)));
    CHECK(contains(poly, V({-3, -3})));
    CHECK_FALSE(contains(poly, vec_add(rho, a2.simple_root_fw(1))));

    // The generic family needs nearly full integrability for a hull.
    auto bad = describe_module(a2, rho, Family::GENERIC, SubsetJ{});
    CHECK_THROWS_AS(hull_of_module(a2, bad), domain_error);
}

TEST_CASE("extremal rays at a vertex") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});

    SUBCASE("verma vertex sprouts the negative simple directions") {
        auto desc = describe_module(a2, theta, Family::VERMA);
        Polyhedron poly = hull_of_module(a2, desc);
        auto rays = extremal_rays_at_vertex(a2, poly, theta);
        std::vector<Vec> expect = {vec_scale(Rat(-1), a2.simple_root_fw(0)),
                                   vec_scale(Rat(-1), a2.simple_root_fw(1))};
        std::sort(expect.begin(), expect.end());
        CHECK_EQ(rays, expect);
        CHECK_THROWS_AS(extremal_rays_at_vertex(a2, poly, V({0, 0})), domain_error);
    }
    SUBCASE("polytope vertex has no recession rays") {
        auto desc = describe_module(a2, theta, Family::SIMPLE);
        Polyhedron poly = hull_of_module(a2, desc);
        CHECK(extremal_rays_at_vertex(a2, poly, theta).empty());
    }
    SUBCASE("parabolic vertices carry Weyl-translated rays") {
        Vec rho = V({1, 1});
        auto desc = describe_module(a2, rho, Family::PARABOLIC, SubsetJ{0});
        Polyhedron poly = hull_of_module(a2, desc);
        auto rays_top = extremal_rays_at_vertex(a2, poly, rho);
        REQUIRE_EQ(rays_top.size(), 1);
        CHECK_EQ(rays_top[0], vec_scale(Rat(-1), a2.simple_root_fw(1)));
        auto rays_side = extremal_rays_at_vertex(a2, poly, reflect(a2, 0, rho));
        REQUIRE_EQ(rays_side.size(), 1);
        CHECK_EQ(rays_side[0], vec_scale(Rat(-1), reflect(a2, 0, a2.simple_root_fw(1))));
    }
    SUBCASE("zero coordinate inside the integrable set is rejected") {
        auto desc = describe_module(a2, V({1, 0}), Family::SIMPLE);
        Polyhedron poly = hull_of_module(a2, desc);
        CHECK_THROWS_AS(extremal_rays_at_vertex(a2, poly, V({1, 0})), domain_error);
    }
}

TEST_CASE("stabilizer parabolic recovers the integrability set") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});
    CHECK_EQ(stabilizer_parabolic(a2, describe_module(a2, theta, Family::VERMA)),
             SubsetJ{});
    CHECK_EQ(stabilizer_parabolic(a2, describe_module(a2, theta, Family::SIMPLE)),
             (SubsetJ{0, 1}));
    CHECK_EQ(
        stabilizer_parabolic(a2, describe_module(a2, theta, Family::PARABOLIC, SubsetJ{1})),
        SubsetJ{1});

    RootSystem b2 = build_root_system("B2");
    Vec lam = {Rat(2), Rat(-1, 3)};
    CHECK_EQ(stabilizer_parabolic(b2, describe_module(b2, lam, Family::SIMPLE)),
             SubsetJ{0});
}

TEST_CASE("maximizers over finite weight sets") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});
    auto desc = describe_module(a2, theta, Family::SIMPLE);
    WeightSet adj = module_weights(a2, desc, 4);

    // rho picks out the highest weight alone.
    WeightSet top = maximizer(a2, adj, rho_weight(a2));
    CHECK_EQ(top.weights, std::vector<Vec>{theta});

    // omega_1 is blind to the alpha_2 direction: an edge survives.
    WeightSet edge = maximizer(a2, adj, V({1, 0}));
    REQUIRE_EQ(edge.weights.size(), 2);
    CHECK(edge.contains(theta));
    CHECK(edge.contains(vec_sub(theta, a2.simple_root_fw(1))));

    // The zero functional keeps everything.
    CHECK_EQ(maximizer(a2, adj, V({0, 0})).weights.size(), 7);

    WeightSet empty_in;
    CHECK_THROWS_AS(maximizer(a2, empty_in, theta), domain_error);
}

TEST_CASE("maximizers over hulls watch the recession cone") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});
    auto desc = describe_module(a2, theta, Family::VERMA);
    Polyhedron poly = hull_of_module(a2, desc);

    WeightSet top = maximizer(a2, poly, rho_weight(a2));
    CHECK_EQ(top.weights, std::vector<Vec>{theta});
    CHECK(top.exact);

    // Unbounded directions are rejected, not silently clipped.
    CHECK_THROWS_AS(maximizer(a2, poly, vec_scale(Rat(-1), rho_weight(a2))),
                    domain_error);
}

TEST_CASE("face enumeration counts") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});

    auto adj = describe_module(a2, theta, Family::SIMPLE);
    CHECK_EQ(enumerate_faces(a2, adj).size(), 13);  // 6 vertices, 6 edges, full

    auto verma = describe_module(a2, theta, Family::VERMA);
    auto vf = enumerate_faces(a2, verma);
    CHECK_EQ(vf.size(), 4);  // vertex, two edge rays, full

    RootSystem a1 = build_root_system("A1");
    auto small = describe_module(a1, V({2}), Family::SIMPLE);
    CHECK_EQ(enumerate_faces(a1, small).size(), 3);  // two vertices and the segment

    // Faces come back with canonical interval-top J and identity for the full set.
    bool saw_full = false;
    for (const auto& f : enumerate_faces(a2, adj)) {
        if (f.J == a2.full_index_set()) {
            CHECK(f.w.is_identity());
            saw_full = true;
        }
    }
    CHECK(saw_full);
}

}  // namespace weylcrest
