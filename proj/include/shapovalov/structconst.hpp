#pragma once

#include "shapovalov/linalg.hpp"
#include "shapovalov/rootsys.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shapovalov {

/// Sparse element of g over the Cartan–Weyl basis, sorted by basis index.
using LieVec = std::vector<std::pair<std::size_t, Rational>>;

/// Cartan–Weyl basis of g with all brackets tabulated.
///
/// Basis order: e_γ for the positive roots in PBW order, then f_γ in the same
/// order, then h_{α_1}, ..., h_{α_r}. Normalization is [e_γ, f_γ] = h_γ where
/// μ(h_γ) = (μ, γ). Root vectors are iterated brackets of simple ones with
/// e_ξ = [e_{α_i}, e_{ξ-α_i}]/(p+1) for the smallest admissible i, so the
/// extraspecial structure constants are positive.
class StructureTable {
public:
    /// Builds the table from the adjoint module of `rs`. Throws std::logic_error
    /// if a bracket fails to decompose over the basis.
    static StructureTable build(const RootSystem& rs);

    const RootSystem& root_system() const { return rs_; }
    std::size_t dim() const { return brackets_.size(); }
    std::size_t num_roots() const { return rs_.num_positive(); }
    std::size_t e_index(std::size_t root) const { return root; }
    std::size_t f_index(std::size_t root) const { return num_roots() + root; }
    std::size_t h_index(int i) const { return 2 * num_roots() + static_cast<std::size_t>(i); }
    std::string basis_label(std::size_t b) const;

    const LieVec& bracket(std::size_t a, std::size_t b) const { return brackets_[a][b]; }
    LieVec bracket(const LieVec& x, const LieVec& y) const;

    /// [f_μ, f_ν] = N f_{μ+ν}; zero when μ+ν is not a root.
    Rational N(std::size_t mu, std::size_t nu) const;
    /// [e_ν, f_γ] = C f_{γ-ν}; zero when γ-ν is not a positive root.
    Rational C(std::size_t nu, std::size_t gamma) const;
    /// [e_ν, f_γ] = D e_{ν-γ}; zero when ν-γ is not a positive root.
    Rational D(std::size_t nu, std::size_t gamma) const;
    /// [e_μ, e_ν] = M e_{μ+ν}.
    Rational Ne(std::size_t mu, std::size_t nu) const;

    /// κ_γ with ω(f_γ) = κ_γ e_γ for the anti-involution ω fixing h and
    /// exchanging e_α and f_α for simple α.
    const Rational& omega_factor(std::size_t gamma) const { return omega_[gamma]; }

    /// Invariant form on basis elements: (e_γ, f_γ) = 1, (h_μ, h_ν) = (μ, ν).
    Rational form(std::size_t a, std::size_t b) const;

    /// Copy with [a, b] multiplied by `factor` (and [b, a] kept antisymmetric).
    /// Negative-control helper for verify_structure.
    StructureTable with_bracket_scaled(std::size_t a, std::size_t b, const Rational& factor) const;

    /// Matrices of e_γ (index < N), f_γ and h_i in the adjoint module the table
    /// was read from.
    const std::vector<SparseMatrix>& adjoint_matrices() const { return matrices_; }

private:
    explicit StructureTable(RootSystem rs) : rs_(std::move(rs)) {}
    Rational coefficient(std::size_t a, std::size_t b, std::size_t target) const;

    RootSystem rs_;
    std::vector<std::vector<LieVec>> brackets_;
    std::vector<Rational> omega_;
    std::vector<SparseMatrix> matrices_;
};

struct StructureReport {
    bool ok = true;
    std::size_t triples_checked = 0;
    std::vector<std::string> failures;  // located triples, at most a few dozen kept
};

/// Antisymmetry, Jacobi identity and ad-invariance of the form over all basis
/// triples, using only the tabulated brackets.
StructureReport verify_structure(const StructureTable& table);

/// Recomputes [e_ν, f_γ], [e_ν, e_γ] and [f_ν, f_γ] as commutators of the
/// adjoint-module matrices and compares with N, C, D, Ne and the h_γ rule.
StructureReport verify_against_adjoint(const StructureTable& table);

/// (γ, ω_α): the eigenvalue of h_γ on the highest vector of weight ω_α. When
/// (β, α) satisfies ℓ_{α,β}(α,α) = (β,β) this equals (β,β)/2 · ℓ_{α,γ}/ℓ_{α,β},
/// which is asserted (std::logic_error on mismatch).
Rational diagonal_constant(const RootSystem& rs, const Root& gamma, int alpha, const Root& beta);

}  // namespace shapovalov
