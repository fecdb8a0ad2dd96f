#include <doctest.h>

#include <stdexcept>

#include "weylcrest/errors.hpp"
#include "weylcrest/chains.hpp"

namespace weylcrest {
namespace {

Vec V(std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.push_back(Rat(x));
    return v;
}

// Consecutive differences must be simple roots, strictly descending.
void check_chain_shape(const RootSystem& rs, const std::vector<Vec>& chain,
                       const Vec& mu_prime, const Vec& mu) {
    REQUIRE_FALSE(chain.empty());
    CHECK_EQ(chain.front(), mu_prime);
    CHECK_EQ(chain.back(), mu);
    for (size_t k = 1; k < chain.size(); ++k) {
        Vec diff = vec_sub(chain[k - 1], chain[k]);
        bool simple = false;
        for (int i = 0; i < rs.rank; ++i)
            if (diff == rs.simple_root_fw(i)) simple = true;
        CHECK(simple);
    }
}

}  // namespace

TEST_CASE("saturated chains in a Verma module") {
    RootSystem a2 = build_root_system("A2");
    Vec lam = {Rat(1, 2), Rat(-1)};
    auto desc = describe_module(a2, lam, Family::VERMA);

    Vec bottom = vec_sub(lam, vec_add(a2.simple_root_fw(0), a2.simple_root_fw(1)));
    ChainResult r = find_chain(a2, desc, bottom, lam, 6);
    CHECK(r.covered);
    REQUIRE(r.chain.has_value());
    check_chain_shape(a2, *r.chain, lam, bottom);
    CHECK_EQ(r.chain->size(), 3);

    // Equal endpoints: the singleton chain.
    ChainResult same = find_chain(a2, desc, lam, lam, 6);
    CHECK(same.covered);
    REQUIRE(same.chain.has_value());
    CHECK_EQ(same.chain->size(), 1);
}

TEST_CASE("saturated chains across the adjoint module") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});
    auto desc = describe_module(a2, theta, Family::SIMPLE);

    Vec bottom = vec_scale(Rat(-1), theta);
    ChainResult r = find_chain(a2, desc, bottom, theta, 6);
    CHECK(r.covered);
    CHECK_EQ(r.hypothesis, "endpoint");
    REQUIRE(r.chain.has_value());
    check_chain_shape(a2, *r.chain, theta, bottom);
    CHECK_EQ(r.chain->size(), 5);
    // The deterministic search prefers the lexicographically first step.
    CHECK_EQ((*r.chain)[1], V({-1, 2}));
    CHECK_EQ((*r.chain)[2], V({0, 0}));
    CHECK_EQ((*r.chain)[3], V({-2, 1}));

    // Interior pair: covered through the integrable-difference hypothesis.
    ChainResult mid = find_chain(a2, desc, bottom, V({0, 0}), 6);
    CHECK(mid.covered);
    REQUIRE(mid.chain.has_value());
    check_chain_shape(a2, *mid.chain, V({0, 0}), bottom);

    // One-step pair strictly below the top: a simple-root difference.
    ChainResult step = find_chain(a2, desc, V({0, 0}), V({-1, 2}), 6);
    CHECK(step.covered);
    CHECK_EQ(step.hypothesis, "simple-root step");
    REQUIRE(step.chain.has_value());
    CHECK_EQ(step.chain->size(), 2);
}

TEST_CASE("chain hypotheses in mixed families") {
    RootSystem a2 = build_root_system("A2");
    Vec theta = V({1, 1});

    // Parabolic modules are always covered.
    auto para = describe_module(a2, theta, Family::PARABOLIC, SubsetJ{0});
    Vec mu = vec_sub(theta, vec_add(a2.simple_root_fw(0), a2.simple_root_fw(1)));
    ChainResult r = find_chain(a2, para, mu, theta, 6);
    CHECK(r.covered);
    REQUIRE(r.chain.has_value());

    // Generic with one unintegrated integral direction.
    auto gen = describe_module(a2, theta, Family::GENERIC, SubsetJ{0});
    ChainResult g = find_chain(a2, gen, mu, vec_sub(theta, a2.simple_root_fw(1)), 6);
    CHECK(g.covered);
    REQUIRE(g.chain.has_value());

    CHECK_THROWS_AS(find_chain(a2, para, theta, vec_add(theta, theta), 6),
                    domain_error);
    CHECK_THROWS_AS(find_chain(a2, para, V({0, 1}), theta, 6), domain_error);
    CHECK_THROWS_AS(find_chain(a2, para, mu, theta, 1), domain_error);
}

TEST_CASE("root chains") {
    RootSystem a2 = build_root_system("A2");
    auto c = root_chain(a2, IVec{1, 0}, IVec{1, 1});
    REQUIRE(c.has_value());
    CHECK_EQ(*c, (std::vector<IVec>{{1, 0}, {1, 1}}));

    auto trivial = root_chain(a2, IVec{0, 1}, IVec{0, 1});
    REQUIRE(trivial.has_value());
    CHECK_EQ(trivial->size(), 1);

    RootSystem g2 = build_root_system("G2");
    auto g = root_chain(g2, IVec{1, 0}, IVec{3, 2});
    REQUIRE(g.has_value());
    CHECK_EQ(*g, (std::vector<IVec>{{1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}));

    // Every partial sum along the way is itself a positive root.
    RootSystem f4 = build_root_system("F4");
    IVec sim{0, 1, 0, 0};
    auto f = root_chain(f4, sim, f4.highest_root);
    REQUIRE(f.has_value());
    for (const auto& step : *f) {
        bool found = false;
        for (const auto& r : f4.positive_roots)
            if (r == step) found = true;
        CHECK(found);
    }

    CHECK_THROWS_AS(root_chain(a2, IVec{1, 0}, IVec{0, 1}), domain_error);
    CHECK_THROWS_AS(root_chain(a2, IVec{1, 1}, IVec{1, 1}), domain_error);
    CHECK_THROWS_AS(root_chain(a2, IVec{1, 0}, IVec{2, 1}), domain_error);
}

}  // namespace weylcrest
