#include "doctest.h"

#include "shapovalov/rootsys.hpp"

#include <set>

using namespace shapovalov;

namespace {

// Positive roots as the orbit of the simple roots under simple reflections.
std::set<Root> reflection_orbit(const RootSystem& rs) {
    const int n = rs.rank();
    std::set<Root> seen;
    std::vector<Root> todo;
    for (int i = 0; i < n; ++i) {
        seen.insert(rs.simple_root(i));
        todo.push_back(rs.simple_root(i));
    }
    while (!todo.empty()) {
        Root r = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            Root a = rs.simple_root(i);
            Rational pair = 2 * rs.inner(r, a) / rs.inner(a, a);
            Root s = r - static_cast<int>(pair.get_num().get_si()) * a;
            if (seen.insert(s).second) todo.push_back(s);
        }
    }
    std::set<Root> pos;
    for (const auto& r : seen)
        if (r.is_nonnegative()) pos.insert(r);
    return pos;
}

}  // namespace

TEST_CASE("positive roots of rank two") {
    auto a2 = RootSystem::parse("A2");
    REQUIRE(a2.num_positive() == 3);
    CHECK(a2.root(0) == Root({1, 0}));
    CHECK(a2.root(1) == Root({0, 1}));
    CHECK(a2.root(2) == Root({1, 1}));

    auto g2 = RootSystem::parse("g2");
    std::vector<Root> expected{Root({1, 0}), Root({0, 1}), Root({1, 1}), Root({1, 2}), Root({1, 3}), Root({2, 3})};
    CHECK(g2.positive_roots() == expected);
    CHECK(g2.inner(g2.simple_root(0), g2.simple_root(0)) == 6);
    CHECK(g2.inner(g2.simple_root(1), g2.simple_root(1)) == 2);
}

TEST_CASE("root counts match the classical values and the reflection orbit") {
    struct Case { const char* type; std::size_t count; };
    for (auto [type, count] : {Case{"A1", 1}, Case{"A4", 10}, Case{"B2", 4}, Case{"B3", 9}, Case{"C3", 9}, Case{"C4", 16},
                               Case{"D4", 12}, Case{"D5", 20}, Case{"G2", 6}, Case{"F4", 24}, Case{"E6", 36},
                               Case{"E7", 63}, Case{"E8", 120}}) {
        CAPTURE(type);
        auto rs = RootSystem::parse(type);
        CHECK(rs.num_positive() == count);
        auto orbit = reflection_orbit(rs);
        CHECK(std::set<Root>(rs.positive_roots().begin(), rs.positive_roots().end()) == orbit);
        for (const auto& b : rs.positive_roots()) CHECK(rs.coroot_pairing(rs.to_weight(b), b) == 2);
        for (int i = 0; i < rs.rank(); ++i) {
            CHECK(rs.coroot_pairing(rs.rho(), rs.simple_root(i)) == 1);
            for (int j = 0; j < rs.rank(); ++j)
                CHECK(rs.coroot_pairing(rs.fundamental_weight(i), rs.simple_root(j)) == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("short roots have squared length two") {
    for (const char* type : {"B3", "C3", "F4", "G2", "E6"}) {
        auto rs = RootSystem::parse(type);
        Rational shortest = 100;
        for (const auto& b : rs.positive_roots()) shortest = std::min(shortest, rs.inner(b, b));
        CHECK(shortest == 2);
    }
}

TEST_CASE("inner products and pairings") {
    auto a2 = RootSystem::parse("A2");
    CHECK(a2.inner(a2.simple_root(0), a2.simple_root(1)) == -1);
    CHECK(a2.coroot_pairing(a2.fundamental_weight(0), a2.simple_root(0)) == 1);
    // ρ is the half sum of positive roots.
    Weight two_rho = Weight::zero(2);
    for (const auto& b : a2.positive_roots()) two_rho += a2.to_weight(b);
    CHECK(two_rho == Rational(2) * a2.rho());
    // Round trip between coordinate systems.
    auto f4 = RootSystem::parse("F4");
    for (const auto& b : f4.positive_roots()) {
        auto back = f4.to_simple_coords(f4.to_weight(b));
        for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == b[i]);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(f4.inner(f4.fundamental_weight(i), f4.simple_root(j)) ==
                  (i == j ? f4.datum().symmetrizer[static_cast<std::size_t>(i)] : Rational(0)));
    // (ω_i, ω_j) is symmetric.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(f4.inner(f4.fundamental_weight(i), f4.fundamental_weight(j)) ==
                  f4.inner(f4.fundamental_weight(j), f4.fundamental_weight(i)));
}

TEST_CASE("support and multiplicity") {
    auto a3 = RootSystem::parse("A3");
    CHECK(a3.support(Root({1, 1, 0})) == std::vector<int>{0, 1});
    CHECK(a3.support(Root({0, 1, 0})) == std::vector<int>{1});
    CHECK_THROWS_AS(a3.support(Root({1, 0, 1})), std::invalid_argument);
    auto g2 = RootSystem::parse("G2");
    CHECK(g2.support(Root({2, 3})) == std::vector<int>{0, 1});
    CHECK(g2.multiplicity(1, Root({1, 3})) == 3);
    auto b3 = RootSystem::parse("B3");
    CHECK(b3.highest_root() == Root({1, 2, 2}));
    CHECK(b3.multiplicity(1, b3.highest_root()) == 2);
}

TEST_CASE("dominance order") {
    CHECK(dominance_geq(Root({1, 1}), Root({1, 0})));
    CHECK_FALSE(dominance_geq(Root({1, 0}), Root({0, 1})));
    CHECK_FALSE(dominance_geq(Root({0, 1}), Root({1, 0})));
    CHECK(dominance_geq(Root({1, 2}), Root({0, 1})));
    auto b3 = RootSystem::parse("B3");
    const auto& roots = b3.positive_roots();
    for (const auto& x : roots)
        for (const auto& y : roots) {
            if (dominance_geq(x, y) && dominance_geq(y, x)) CHECK(x == y);
            for (const auto& z : roots)
                if (dominance_geq(x, y) && dominance_geq(y, z)) CHECK(dominance_geq(x, z));
        }
    CHECK(dominance_geq(b3, b3.to_weight(b3.highest_root()), b3.to_weight(Root({0, 1, 0}))));
    CHECK(dominance_geq(b3, b3.fundamental_weight(0), Weight::zero(3)));
    CHECK_FALSE(dominance_geq(b3, b3.fundamental_weight(2), Weight::zero(3)));
}

TEST_CASE("invalid types are rejected") {
    CHECK_THROWS_AS(RootSystem::parse("Z9"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::parse("D3"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::parse("G"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::parse("A0"), std::invalid_argument);
}
