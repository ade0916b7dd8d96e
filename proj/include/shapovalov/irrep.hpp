#pragma once

#include "shapovalov/linalg.hpp"
#include "shapovalov/rootsys.hpp"

#include <map>
#include <vector>

namespace shapovalov {

/// Finite-dimensional irreducible module L(Λ) built from Cartan data alone.
///
/// Weight spaces are generated depth by depth from the highest vector. A
/// vector of weight μ ≠ Λ is identified with the tuple (e_j v)_j, which is
/// injective on an irreducible module, so bases and the action of the
/// Chevalley generators e_i, f_i (with [e_i, f_i] = h_i^∨) are found by exact
/// elimination without ever writing down the Lie algebra.
struct IrreducibleModule {
    std::vector<int> highest;                   // Λ, fundamental coordinates
    std::vector<std::vector<int>> weight_of;    // per basis vector
    std::map<std::vector<int>, std::vector<std::size_t>> basis_of_weight;
    std::vector<SparseMatrix> e;                // one per simple root
    std::vector<SparseMatrix> f;

    std::size_t dim() const { return weight_of.size(); }
};

/// Λ must be dominant integral. Throws std::invalid_argument otherwise.
IrreducibleModule build_irreducible(const RootSystem& rs, const std::vector<int>& highest);

}  // namespace shapovalov
