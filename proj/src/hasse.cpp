#include "shapovalov/hasse.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace shapovalov {

std::size_t HasseDiagram::node_of_root(std::size_t root) const {
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (!nodes[k].cartan && nodes[k].root == root) return k;
    throw std::out_of_range("root is not a node of the diagram");
}

std::size_t HasseDiagram::node_of_cartan(int simple) const {
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k].cartan && nodes[k].simple == simple) return k;
    throw std::out_of_range("Cartan element is not a node of the diagram");
}

std::string HasseDiagram::node_label(const RootSystem& rs, std::size_t node, bool ascii) const {
    const HasseNode& n = nodes[node];
    const std::string alpha = ascii ? "a" : "α";
    if (n.cartan) return "h^v_" + alpha + std::to_string(n.simple + 1);
    return "f_" + root_label(rs.root(n.root), ascii);
}

HasseDiagram build_hasse_bminus(const StructureTable& table) {
    const RootSystem& rs = table.root_system();
    HasseDiagram d;
    for (int i = 0; i < rs.rank(); ++i) d.nodes.push_back(HasseNode{true, i, 0});
    for (std::size_t g = 0; g < rs.num_positive(); ++g) d.nodes.push_back(HasseNode{false, -1, g});

    for (std::size_t g = 0; g < rs.num_positive(); ++g) {
        const std::size_t source = d.node_of_root(g);
        for (int i = 0; i < rs.rank(); ++i) {
            const std::size_t a = rs.simple_index(i);
            if (a == g) {
                // [e_α, f_α] = h_α = (α, α)/2 · h^∨_α
                d.edges.push_back({source, d.node_of_cartan(i), i, rs.inner(rs.simple_root(i), rs.simple_root(i)) / 2});
            } else if (auto lower = rs.difference_index(g, a)) {
                const Rational c = table.C(a, g);
                if (c == 0) {
                    ++d.removed_arrows;
                    continue;
                }
                d.edges.push_back({source, d.node_of_root(*lower), i, c});
            }
        }
    }
    return d;
}

HasseDiagram route_subdiagram(const HasseDiagram& diagram, const RootSystem& rs, const Root& beta, int alpha) {
    const std::size_t top = diagram.node_of_root(*rs.index_of(beta));
    const std::size_t bottom = diagram.node_of_cartan(alpha);
    const std::size_t n = diagram.nodes.size();
    std::vector<bool> down(n, false), up(n, false);
    down[top] = true;
    up[bottom] = true;
    // Edges go from higher to lower roots, so a pass in PBW order settles reachability.
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : diagram.edges) {
            if (down[e.source] && !down[e.target]) down[e.target] = changed = true;
            if (up[e.target] && !up[e.source]) up[e.source] = changed = true;
        }
    }
    HasseDiagram sub;
    std::vector<std::size_t> remap(n, n);
    for (std::size_t k = 0; k < n; ++k)
        if (down[k] && up[k]) {
            remap[k] = sub.nodes.size();
            sub.nodes.push_back(diagram.nodes[k]);
        }
    for (const auto& e : diagram.edges)
        if (remap[e.source] < n && remap[e.target] < n)
            sub.edges.push_back({remap[e.source], remap[e.target], e.label, e.coefficient});
    return sub;
}

std::vector<DescentChain> descent_chains(const RootSystem& rs, const Root& beta, int alpha) {
    std::vector<DescentChain> out;
    auto top = rs.index_of(beta);
    if (!top || beta[static_cast<std::size_t>(alpha)] <= 0) return out;

    std::vector<std::size_t> cur{*top};
    std::function<void(std::size_t)> walk = [&](std::size_t g) {
        out.push_back(DescentChain{cur});
        for (std::size_t next = 0; next < rs.num_positive(); ++next) {
            if (rs.root(next)[static_cast<std::size_t>(alpha)] <= 0) continue;
            if (!rs.difference_index(g, next)) continue;
            cur.push_back(next);
            walk(next);
            cur.pop_back();
        }
    };
    walk(*top);

    auto key = [&](const DescentChain& c) {
        std::vector<std::pair<int, std::size_t>> k;
        for (std::size_t g : c.gammas) k.emplace_back(-rs.root(g).height(), g);
        return k;
    };
    std::stable_sort(out.begin(), out.end(), [&](const DescentChain& a, const DescentChain& b) {
        if (a.gammas.size() != b.gammas.size()) return a.gammas.size() < b.gammas.size();
        return key(a) < key(b);
    });
    return out;
}

std::string to_dot(const HasseDiagram& diagram, const RootSystem& rs) {
    std::string s = "digraph \"H(b-) " + rs.name() + "\" {\n  rankdir=RL;\n";
    for (std::size_t k = 0; k < diagram.nodes.size(); ++k)
        s += "  n" + std::to_string(k) + " [label=\"" + diagram.node_label(rs, k) + "\"];\n";
    for (const auto& e : diagram.edges)
        s += "  n" + std::to_string(e.source) + " -> n" + std::to_string(e.target) + " [label=\"e_α" +
             std::to_string(e.label + 1) + "\"];\n";
    return s + "}\n";
}

}  // namespace shapovalov
