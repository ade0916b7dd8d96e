#include "doctest.h"

#include "shapovalov/hasse.hpp"
#include "shapovalov/irrep.hpp"

#include <set>
#include <tuple>

using namespace shapovalov;

namespace {

std::size_t idx(const RootSystem& rs, std::vector<int> c) { return *rs.index_of(Root(std::move(c))); }

bool has_edge(const HasseDiagram& d, const RootSystem& rs, std::vector<int> from, std::vector<int> to, int label) {
    const std::size_t s = d.node_of_root(idx(rs, from));
    for (const auto& e : d.edges)
        if (e.source == s && e.label == label && !d.nodes[e.target].cartan && d.nodes[e.target].root == idx(rs, to))
            return true;
    return false;
}

// Route graph between the weights ω_α − β and ω_α of the fundamental module,
// keyed by μ = ω_α − weight (μ = 0 for the highest weight).
std::set<std::tuple<Root, Root, int>> module_routes(const RootSystem& rs, const Root& beta, int alpha) {
    std::vector<int> hw(static_cast<std::size_t>(rs.rank()), 0);
    hw[static_cast<std::size_t>(alpha)] = 1;
    IrreducibleModule v = build_irreducible(rs, hw);
    auto weight_of = [&](const Root& mu) {
        Weight w = rs.fundamental_weight(alpha) - rs.to_weight(mu);
        std::vector<int> out;
        for (const auto& c : w.coords) out.push_back(static_cast<int>(c.get_num().get_si()));
        return out;
    };
    std::set<Root> present;
    for (const auto& g : rs.positive_roots())
        if (dominance_geq(beta, g) && v.basis_of_weight.count(weight_of(g))) {
            CHECK(v.basis_of_weight.at(weight_of(g)).size() == 1);
            present.insert(g);
        }
    present.insert(Root::zero(rs.rank()));
    std::set<std::tuple<Root, Root, int>> edges;
    for (const auto& mu : present)
        for (int i = 0; i < rs.rank(); ++i) {
            Root lower = mu - rs.simple_root(i);
            if (!present.count(lower)) continue;
            const auto& src = v.basis_of_weight.at(weight_of(mu));
            const auto& dst = v.basis_of_weight.at(weight_of(lower));
            bool nonzero = false;
            for (auto c : src)
                for (auto r : dst) nonzero = nonzero || v.e[static_cast<std::size_t>(i)].at(r, c) != 0;
            if (nonzero) edges.emplace(mu, lower, i);
        }
    // Keep only edges on routes from β to 0.
    std::set<Root> down{beta}, up{Root::zero(rs.rank())};
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [a, b, i] : edges) {
            if (down.count(a) && down.insert(b).second) changed = true;
            if (up.count(b) && up.insert(a).second) changed = true;
        }
    }
    std::set<std::tuple<Root, Root, int>> out;
    for (const auto& e : edges)
        if (down.count(std::get<0>(e)) && up.count(std::get<0>(e)) && down.count(std::get<1>(e)) && up.count(std::get<1>(e)))
            out.insert(e);
    return out;
}

std::set<std::tuple<Root, Root, int>> diagram_routes(const HasseDiagram& d, const RootSystem& rs) {
    std::set<std::tuple<Root, Root, int>> out;
    auto mu = [&](std::size_t node) { return d.nodes[node].cartan ? Root::zero(rs.rank()) : rs.root(d.nodes[node].root); };
    for (const auto& e : d.edges) out.emplace(mu(e.source), mu(e.target), e.label);
    return out;
}

}  // namespace

TEST_CASE("diagram sizes") {
    struct Case { const char* type; std::size_t nodes, edges; };
    for (auto [type, nodes, edges] : {Case{"A1", 2, 1}, Case{"A2", 5, 4}, Case{"G2", 8, 7}}) {
        auto t = StructureTable::build(RootSystem::parse(type));
        auto d = build_hasse_bminus(t);
        CHECK(d.nodes.size() == nodes);
        CHECK(d.edges.size() == edges);
    }
}

TEST_CASE("G2 arrows follow the raising operators") {
    auto t = StructureTable::build(RootSystem::parse("G2"));
    const auto& rs = t.root_system();
    auto d = build_hasse_bminus(t);
    CHECK(has_edge(d, rs, {2, 3}, {1, 3}, 0));
    CHECK(has_edge(d, rs, {1, 3}, {1, 2}, 1));
    CHECK(has_edge(d, rs, {1, 2}, {1, 1}, 1));
    CHECK(has_edge(d, rs, {1, 1}, {0, 1}, 0));
    CHECK(has_edge(d, rs, {1, 1}, {1, 0}, 1));
    CHECK_FALSE(has_edge(d, rs, {1, 1}, {0, 1}, 1));
    for (const auto& e : d.edges) CHECK(e.coefficient != 0);
    CHECK(d.node_label(rs, d.node_of_cartan(1)) == "h^v_α2");
    CHECK(to_dot(d, rs).find("->") != std::string::npos);
}

TEST_CASE("rectification removes nothing classically") {
    for (const char* type : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
        CAPTURE(type);
        auto d = build_hasse_bminus(StructureTable::build(RootSystem::parse(type)));
        CHECK(d.removed_arrows == 0);
    }
}

TEST_CASE("descent chains") {
    auto a2 = RootSystem::parse("A2");
    auto c = descent_chains(a2, Root({1, 1}), 0);
    REQUIRE(c.size() == 2);
    CHECK(c[0].gammas == std::vector<std::size_t>{idx(a2, {1, 1})});
    CHECK(c[1].gammas == std::vector<std::size_t>{idx(a2, {1, 1}), idx(a2, {1, 0})});

    auto a3 = RootSystem::parse("A3");
    auto c3 = descent_chains(a3, Root({1, 1, 1}), 1);
    const std::size_t b = idx(a3, {1, 1, 1}), x = idx(a3, {1, 1, 0}), y = idx(a3, {0, 1, 1}), s = idx(a3, {0, 1, 0});
    // β − α2 = α1 + α3 is not a root, so [β, α2] is not a chain.
    std::vector<DescentChain> expected{{{b}}, {{b, x}}, {{b, y}}, {{b, x, s}}, {{b, y, s}}};
    CHECK(c3 == expected);

    CHECK(descent_chains(a2, Root({1, 0}), 0).size() == 1);
    CHECK(descent_chains(a2, Root({1, 0}), 1).empty());

    // Brute force: every sequence of positive roots below β.
    for (const char* type : {"B3", "C3", "D4", "G2"}) {
        auto rs = RootSystem::parse(type);
        for (const auto& beta : rs.positive_roots())
            for (int alpha : rs.support(beta)) {
                std::set<std::vector<std::size_t>> brute;
                std::vector<std::size_t> cur{*rs.index_of(beta)};
                auto rec = [&](auto&& self) -> void {
                    brute.insert(cur);
                    for (std::size_t g = 0; g < rs.num_positive(); ++g) {
                        const Root nu = rs.root(cur.back()) - rs.root(g);
                        if (!rs.is_positive_root(nu) || rs.root(g)[static_cast<std::size_t>(alpha)] < 1) continue;
                        cur.push_back(g);
                        self(self);
                        cur.pop_back();
                    }
                };
                rec(rec);
                auto chains = descent_chains(rs, beta, alpha);
                std::set<std::vector<std::size_t>> got;
                for (const auto& ch : chains) got.insert(ch.gammas);
                CHECK(got.size() == chains.size());
                CHECK(got == brute);
            }
    }

    // Every chain term has total weight β.
    auto g2 = RootSystem::parse("G2");
    for (const auto& beta : g2.positive_roots())
        for (int alpha : g2.support(beta))
            for (const auto& ch : descent_chains(g2, beta, alpha)) {
                Root total = g2.root(ch.gammas.back());
                for (std::size_t i = 1; i < ch.gammas.size(); ++i) {
                    Root nu = g2.root(ch.gammas[i - 1]) - g2.root(ch.gammas[i]);
                    CHECK(g2.is_positive_root(nu));
                    total += nu;
                }
                CHECK(total == beta);
                CHECK(ch.gammas.front() == *g2.index_of(beta));
            }
}

TEST_CASE("route sub-diagram matches the fundamental module") {
    struct Case { const char* type; std::vector<int> beta; int alpha; };
    for (const auto& [type, beta, alpha] : {Case{"A2", {1, 1}, 0}, Case{"A2", {1, 1}, 1}, Case{"A3", {1, 1, 1}, 1},
                                            Case{"A3", {1, 1, 1}, 0}, Case{"G2", {1, 3}, 1}, Case{"G2", {2, 3}, 1},
                                            Case{"B3", {1, 2, 2}, 0}, Case{"C3", {2, 2, 1}, 2}}) {
        CAPTURE(type);
        CAPTURE(alpha);
        auto t = StructureTable::build(RootSystem::parse(type));
        const auto& rs = t.root_system();
        auto sub = route_subdiagram(build_hasse_bminus(t), rs, Root(beta), alpha);
        CHECK(diagram_routes(sub, rs) == module_routes(rs, Root(beta), alpha));
        CHECK_FALSE(sub.edges.empty());
    }
}
