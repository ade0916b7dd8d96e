#include "shapovalov/irrep.hpp"

#include <set>
#include <stdexcept>

namespace shapovalov {

IrreducibleModule build_irreducible(const RootSystem& rs, const std::vector<int>& highest) {
    const auto n = static_cast<std::size_t>(rs.rank());
    if (highest.size() != n) throw std::invalid_argument("highest weight has wrong rank");
    for (int c : highest)
        if (c < 0) throw std::invalid_argument("highest weight is not dominant");

    const auto& a = rs.datum().matrix;
    auto shifted = [&](std::vector<int> w, std::size_t i, int sign) {
        for (std::size_t j = 0; j < n; ++j) w[j] += sign * a[j][i];
        return w;
    };

    IrreducibleModule mod;
    mod.highest = highest;
    std::vector<std::vector<SparseVec>> e_img(n), f_img(n);
    auto new_vector = [&](const std::vector<int>& w) {
        std::size_t g = mod.weight_of.size();
        mod.weight_of.push_back(w);
        mod.basis_of_weight[w].push_back(g);
        for (std::size_t i = 0; i < n; ++i) {
            e_img[i].emplace_back();
            f_img[i].emplace_back();
        }
        return g;
    };

    new_vector(highest);
    std::vector<std::vector<int>> frontier{highest};
    while (!frontier.empty()) {
        std::set<std::vector<int>> candidates;
        for (const auto& nu : frontier)
            for (std::size_t i = 0; i < n; ++i) candidates.insert(shifted(nu, i, -1));

        std::vector<std::vector<int>> next;
        for (const auto& mu : candidates) {
            EchelonBasis basis;
            std::vector<std::size_t> accepted;
            for (std::size_t i = 0; i < n; ++i) {
                auto above = mod.basis_of_weight.find(shifted(mu, i, +1));
                if (above == mod.basis_of_weight.end()) continue;
                const std::vector<std::size_t> sources = above->second;
                for (std::size_t u : sources) {
                    // e_j f_i u = f_i e_j u + δ_ij <wt u, α_i^∨> u
                    SparseVec sig;
                    for (std::size_t j = 0; j < n; ++j)
                        for (const auto& [x, c] : e_img[j][u]) axpy(sig, c, f_img[i][x]);
                    axpy(sig, Rational(mod.weight_of[u][i]), SparseVec{{u, Rational(1)}});

                    if (auto coords = basis.insert(sig)) {
                        SparseVec image;
                        for (const auto& [k, c] : *coords) image.emplace(accepted[k], c);
                        f_img[i][u] = std::move(image);
                    } else {
                        std::size_t g = new_vector(mu);
                        accepted.push_back(g);
                        f_img[i][u] = SparseVec{{g, Rational(1)}};
                        for (const auto& [x, c] : sig) {
                            const auto& wx = mod.weight_of[x];
                            for (std::size_t j = 0; j < n; ++j)
                                if (wx == shifted(mu, j, +1)) {
                                    e_img[j][g].emplace(x, c);
                                    break;
                                }
                        }
                    }
                }
            }
            if (!accepted.empty()) next.push_back(mu);
        }
        frontier = std::move(next);
    }

    const std::size_t dim = mod.dim();
    for (std::size_t i = 0; i < n; ++i) {
        SparseMatrix e(dim, dim), f(dim, dim);
        for (std::size_t c = 0; c < dim; ++c) {
            for (const auto& [r, v] : e_img[i][c]) e.add(r, c, v);
            for (const auto& [r, v] : f_img[i][c]) f.add(r, c, v);
        }
        mod.e.push_back(std::move(e));
        mod.f.push_back(std::move(f));
    }
    return mod;
}

}  // namespace shapovalov
