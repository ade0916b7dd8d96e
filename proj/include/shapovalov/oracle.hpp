#pragma once

#include "shapovalov/uea.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shapovalov {

/// Number of ways to write μ as a sum of positive roots, by dynamic
/// programming over the roots (does not enumerate PBW monomials).
std::uint64_t kostant_count(const RootSystem& rs, const Root& mu);

/// Multisets of positive roots (as sorted root-index lists) summing to μ,
/// by direct recursion on the largest part.
std::vector<std::vector<std::size_t>> kostant_partitions(const RootSystem& rs, const Root& mu);

struct WeightSpaceBasis {
    Root mu;
    std::vector<PbwMonomial> monomials;
    std::size_t dimension() const { return monomials.size(); }
};

/// PBW basis of V_λ[λ − μ].
WeightSpaceBasis weight_space_basis(NegativeAlgebra& alg, const Root& mu);

/// Extremal vectors of V_λ of weight λ − μ: the common kernel of e_α for all
/// simple α on the weight space. Results are cached per (λ, μ).
class SingularVectorOracle {
public:
    explicit SingularVectorOracle(NegativeAlgebra& alg) : alg_(alg) {}
    const std::vector<NumericElement>& solve(const Weight& lambda, const Root& mu);

private:
    NegativeAlgebra& alg_;
    std::map<std::pair<Weight, Root>, std::vector<NumericElement>> cache_;
};

std::vector<NumericElement> singular_vector_solve(NegativeAlgebra& alg, const Weight& lambda, const Root& mu);

class DegenerateComparison : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// c ≠ 0 with u = c v, if it exists. Throws DegenerateComparison when both are zero.
std::optional<Rational> proportional(const NumericElement& u, const NumericElement& v);

/// True if v is a linear combination of the given vectors.
bool in_span(const NumericElement& v, const std::vector<NumericElement>& span);

struct GramMatrix {
    WeightSpaceBasis basis;
    std::vector<std::vector<CartanPolynomial>> entries;
};

struct NumericGramMatrix {
    WeightSpaceBasis basis;
    DenseMatrix entries;
};

GramMatrix gram(NegativeAlgebra& alg, const Root& mu);
NumericGramMatrix gram(NegativeAlgebra& alg, const Root& mu, const Weight& lambda);

/// Division-free determinant (Berkowitz).
CartanPolynomial determinant(const std::vector<std::vector<CartanPolynomial>>& m, int rank);

/// det = constant · Π factor^exponent · remainder, factors monic affine forms.
struct FactoredDeterminant {
    Rational constant;
    std::vector<std::pair<AffineForm, int>> factors;
    CartanPolynomial remainder;
};

/// Splits off the factors 2(λ + ρ, β) − m(β, β) (made monic) for all positive
/// β and m ≥ 1 with mβ ⪯ μ.
FactoredDeterminant factor_gram_determinant(const RootSystem& rs, const Root& mu, const CartanPolynomial& det);

}  // namespace shapovalov
