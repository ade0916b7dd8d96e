#pragma once

#include "shapovalov/structconst.hpp"

#include <string>
#include <vector>

namespace shapovalov {

/// Node of H(b_-): either h^∨_α for a simple α or f_μ for a positive root μ.
struct HasseNode {
    bool cartan = false;
    int simple = -1;        // set when cartan
    std::size_t root = 0;   // set otherwise
};

/// Arrow target ← source carrying the simple root whose raising operator
/// realizes it.
struct HasseEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    int label = 0;
    Rational coefficient;   // [e_label, f_source] = coefficient · target
};

struct HasseDiagram {
    std::vector<HasseNode> nodes;
    std::vector<HasseEdge> edges;
    /// Root-difference arrows dropped because their constant vanished.
    std::size_t removed_arrows = 0;

    std::size_t node_of_root(std::size_t root) const;
    std::size_t node_of_cartan(int simple) const;
    std::string node_label(const RootSystem& rs, std::size_t node, bool ascii = false) const;
};

/// Nodes are h^∨_α (in simple-root order) followed by f_μ in PBW order.
HasseDiagram build_hasse_bminus(const StructureTable& table);

/// Sub-diagram of the routes from f_β down to h^∨_α.
HasseDiagram route_subdiagram(const HasseDiagram& diagram, const RootSystem& rs, const Root& beta, int alpha);

/// β = γ_0 ≻ γ_1 ≻ ... ≻ γ_k, stored as root indices.
struct DescentChain {
    std::vector<std::size_t> gammas;

    std::size_t length() const { return gammas.size() - 1; }
    friend bool operator==(const DescentChain&, const DescentChain&) = default;
};

/// All chains with γ_{i−1} − γ_i ∈ R^+ and γ_i ⪰ α, ordered by length and
/// then by the sequence of (−height, root index). Empty when α is not in the
/// support of β.
std::vector<DescentChain> descent_chains(const RootSystem& rs, const Root& beta, int alpha);

std::string to_dot(const HasseDiagram& diagram, const RootSystem& rs);

}  // namespace shapovalov
