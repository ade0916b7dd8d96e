#pragma once

#include "shapovalov/hasse.hpp"
#include "shapovalov/uea.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace shapovalov {

/// β together with a simple α ∈ supp(β) such that ℓ_{α,β}(α,α) = (β,β).
struct AdmissiblePair {
    Root beta;
    int alpha = 0;
    Weight nu_b;  // ω_α
    Weight nu_a;  // ω_α − β
    /// (α,α) = (β,β) and ℓ_{α,β} = 1: θ_{β,m} is the plain power θ_β^m.
    bool plain_power = false;
};

class InadmissibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple roots α (0-based) admissible for β, in simple-root order.
std::vector<int> admissible_alphas(const RootSystem& rs, const Root& beta);

/// Throws InadmissibleError if α is not admissible for β (or β is not a
/// positive root). With no α given, the first admissible one is used.
AdmissiblePair make_admissible_pair(const RootSystem& rs, const Root& beta, std::optional<int> alpha = std::nullopt);

/// Denominator factor λ ↦ η_μ(λ + shift · ν_a).
struct EtaFactor {
    Root mu;
    int shift = 0;
    AffineForm form;
};

struct ShapovalovElement {
    SymbolicElement element;
    AdmissiblePair pair;
    int m = 1;
    std::vector<EtaFactor> ledger;
};

/// One summand of θ_β before normal ordering: word · coefficient, where the
/// word is f_{γ_k} f_{ν_k} ··· f_{ν_1} (root indices, left to right).
struct RouteTerm {
    DescentChain chain;
    std::vector<std::size_t> word;
    CartanRational coefficient;
};

/// Summands of the route sum, one per descent chain with nonzero constant.
std::vector<RouteTerm> route_terms(const StructureTable& table, const AdmissiblePair& pair);

/// θ_β by the route sum over descent chains, normal ordered in alg's PBW order.
ShapovalovElement theta_one(NegativeAlgebra& alg, const AdmissiblePair& pair);

/// (τ_{ω_α}^{m−1} θ_β) ··· (τ_{ω_α} θ_β) θ_β with symbolic λ.
ShapovalovElement theta_universal(NegativeAlgebra& alg, const AdmissiblePair& pair, int m);
ShapovalovElement theta_universal(NegativeAlgebra& alg, const ShapovalovElement& theta_beta, int m);

/// θ_β(λ_{m−1}) ··· θ_β(λ_0) with λ_k = λ + k ν_a, multiplied at numeric λ.
std::variant<NumericElement, Pole> theta_numeric(NegativeAlgebra& alg, const ShapovalovElement& theta_beta, int m,
                                                 const Weight& lambda);

/// θ_β(λ − (m−1)β) ··· θ_β(λ − β) θ_β(λ).
std::variant<NumericElement, Pole> theta_plain_power(NegativeAlgebra& alg, const ShapovalovElement& theta_beta, int m,
                                                     const Weight& lambda);

/// The coefficient of f_β^m.
CartanRational leading_coefficient(const NegativeAlgebra& alg, const ShapovalovElement& theta);

/// Factors η_μ(λ + k ν_a), k < m, for every η_μ in the ledger of θ_β.
std::vector<EtaFactor> shifted_ledger(const RootSystem& rs, const ShapovalovElement& theta_beta, int m);

/// Points λ with 2(λ + ρ, β) = m(β, β).
bool on_kac_kazhdan(const RootSystem& rs, const Root& beta, int m, const Weight& lambda);

class SamplingError : public std::runtime_error {
public:
    SamplingError(const std::string& what, AffineForm blocking)
        : std::runtime_error(what), blocking_factor(std::move(blocking)) {}
    AffineForm blocking_factor;
};

struct Sample {
    Weight lambda;
    int attempts = 1;
};

/// Draws λ ∈ H_{β,m}: coordinates other than the first in supp(β) are random
/// rationals p/q with |p| ≤ 100, 1 ≤ q ≤ 100, the remaining one is solved for.
/// Redrawn (up to `max_attempts` times) while some form in `avoid` vanishes.
/// Deterministic in (type, β, m, seed, index).
Sample sample_kac_kazhdan(const RootSystem& rs, const Root& beta, int m, std::uint64_t seed, std::uint64_t index,
                          const std::vector<AffineForm>& avoid, int max_attempts = 1000);

/// A random λ (no hyperplane constraint), same generator.
Weight sample_generic(const RootSystem& rs, std::uint64_t seed, std::uint64_t index);

struct ExtremalReport {
    bool extremal = false;
    bool nonzero = false;
    /// Number of nonzero terms in e_α θ v_λ for each simple α.
    std::vector<std::size_t> residual_terms;
};

/// e_α v = 0 for every simple α, and v ≠ 0.
ExtremalReport verify_extremal(NegativeAlgebra& alg, const NumericElement& v, const Weight& lambda);

}  // namespace shapovalov
