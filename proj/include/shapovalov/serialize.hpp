#pragma once

#include "shapovalov/oracle.hpp"
#include "shapovalov/shapovalov.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace shapovalov {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "shapovalov/1";

Json to_json(const Root& r);
Json to_json(const Weight& w);
Json to_json(const AffineForm& f);
/// List of {exponents, coefficient}.
Json to_json(const CartanPolynomial& p);
/// {num, den} with den a list of {form, power}.
Json to_json(const CartanRational& q);

/// {terms: [{monomial: [[root, exponent], …], coeff}]}
Json to_json(const NegativeAlgebra& alg, const NumericElement& v);
Json to_json(const NegativeAlgebra& alg, const SymbolicElement& v);

/// θ with metadata; λ = nullopt means universal (symbolic) coefficients,
/// otherwise `evaluated` holds θ v_λ.
Json theta_to_json(const NegativeAlgebra& alg, const ShapovalovElement& theta, const std::optional<Weight>& lambda,
                   const NumericElement* evaluated);

Json structure_table_to_json(const StructureTable& table);
Json hasse_to_json(const RootSystem& rs, const HasseDiagram& d);
Json chains_to_json(const RootSystem& rs, const std::vector<DescentChain>& chains);
Json gram_to_json(const NegativeAlgebra& alg, const NumericGramMatrix& g);
Json gram_to_json(const NegativeAlgebra& alg, const GramMatrix& g);

std::string latex_root(const Root& r);
std::string latex_monomial(const NegativeAlgebra& alg, const PbwMonomial& m);
/// Denominators are written as η products when they match the ledger.
std::string to_latex(const NegativeAlgebra& alg, const ShapovalovElement& theta);
std::string to_latex(const NegativeAlgebra& alg, const NumericElement& v);

}  // namespace shapovalov
