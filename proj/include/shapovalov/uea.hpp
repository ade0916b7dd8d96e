#pragma once

#include "shapovalov/coeffield.hpp"
#include "shapovalov/structconst.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace shapovalov {

/// Exponents of f_γ indexed by PBW position (not by root index).
using PbwMonomial = std::vector<std::uint8_t>;

inline bool coef_is_zero(const Rational& c) { return c == 0; }
inline bool coef_is_zero(const CartanRational& c) { return c.is_zero(); }
inline bool coef_is_zero(const CartanPolynomial& c) { return c.is_zero(); }

/// Element of U(g_-) ⊗ (coefficients), written Σ m · φ with the coefficient
/// standing to the right of the PBW monomial. No zero coefficient is stored.
template <class Coef>
struct NegElement {
    std::map<PbwMonomial, Coef> terms;

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    void add(const PbwMonomial& m, const Coef& c) {
        if (coef_is_zero(c)) return;
        auto [it, inserted] = terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (coef_is_zero(it->second)) terms.erase(it);
        }
    }
    NegElement& operator+=(const NegElement& o) {
        for (const auto& [m, c] : o.terms) add(m, c);
        return *this;
    }
    friend bool operator==(const NegElement&, const NegElement&) = default;
};

using NumericElement = NegElement<Rational>;
using SymbolicElement = NegElement<CartanRational>;

/// (monomial, scalar) pairs of a normal-ordered element of U(g_-).
using Terms = std::vector<std::pair<PbwMonomial, Rational>>;
/// (monomial, affine function of λ) pairs: the result of e_γ acting on m v_λ.
using AffineTerms = std::vector<std::pair<PbwMonomial, AffineForm>>;

/// Total order on positive roots used for PBW monomials.
class PbwOrder {
public:
    /// Order of rootsys: by height, then by decreasing coefficient vector.
    static PbwOrder standard(const RootSystem& rs);
    /// Roots with larger α-multiplicity first, otherwise standard.
    static PbwOrder alpha_adapted(const RootSystem& rs, int alpha);

    std::size_t size() const { return root_at_.size(); }
    std::size_t root_at(std::size_t pos) const { return root_at_[pos]; }
    std::size_t position_of(std::size_t root) const { return position_of_[root]; }
    const std::vector<std::size_t>& roots() const { return root_at_; }
    friend bool operator==(const PbwOrder&, const PbwOrder&) = default;

private:
    explicit PbwOrder(std::vector<std::size_t> root_at);
    std::vector<std::size_t> root_at_;
    std::vector<std::size_t> position_of_;
};

/// PBW arithmetic in U(g_-), the action of raising root vectors on Verma
/// modules and the contravariant form. Memoizes intermediate results, so an
/// instance must not be shared between threads.
class NegativeAlgebra {
public:
    NegativeAlgebra(const StructureTable& table, PbwOrder order);
    explicit NegativeAlgebra(const StructureTable& table)
        : NegativeAlgebra(table, PbwOrder::standard(table.root_system())) {}

    const StructureTable& table() const { return table_; }
    const RootSystem& root_system() const { return table_.root_system(); }
    const PbwOrder& order() const { return order_; }

    PbwMonomial unit() const { return PbwMonomial(order_.size(), 0); }
    PbwMonomial generator(std::size_t root) const;
    /// Sum of the roots in m; the weight of m is its negative.
    Root root_sum(const PbwMonomial& m) const;
    std::size_t degree(const PbwMonomial& m) const;
    /// Factors of m as root indices, in PBW order.
    std::vector<std::size_t> factors(const PbwMonomial& m) const;
    /// "f_{a1+a2}^2 f_{a2}" style label.
    std::string label(const PbwMonomial& m, bool ascii = false) const;

    /// f_root · m, normal ordered.
    const Terms& left_multiply(std::size_t root, const PbwMonomial& m);
    /// ma · mb, normal ordered.
    const Terms& product(const PbwMonomial& ma, const PbwMonomial& mb);
    /// Product of f_γ over the word (root indices, left to right), normal ordered.
    NumericElement normal_order(const std::vector<std::size_t>& word);
    /// a · b with the right-coefficient rule φ f_γ = f_γ τ_{−γ} φ.
    template <class Coef>
    NegElement<Coef> multiply(const NegElement<Coef>& a, const NegElement<Coef>& b);

    /// e_root · m v_λ as a combination with affine coefficients in λ.
    const AffineTerms& raise(std::size_t root, const PbwMonomial& m);
    /// e_root · v at a numeric highest weight.
    NumericElement act_e(std::size_t root, const NumericElement& v, const Weight& lambda);
    /// e_root · v with symbolic λ.
    SymbolicElement act_e(std::size_t root, const SymbolicElement& v);

    /// (x v_λ, y v_λ) for monomials, as a polynomial in λ.
    const CartanPolynomial& form(const PbwMonomial& x, const PbwMonomial& y);
    Rational form(const NumericElement& x, const NumericElement& y, const Weight& lambda);
    CartanRational form(const SymbolicElement& x, const SymbolicElement& y);

    /// All monomials of the given root sum (a basis of the weight space λ − μ
    /// of V_λ), in lexicographic order.
    std::vector<PbwMonomial> monomials_of_weight(const Root& mu);

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<std::size_t, PbwMonomial>& k) const;
    };
    struct PairHash {
        std::size_t operator()(const std::pair<PbwMonomial, PbwMonomial>& k) const;
    };
    const StructureTable& table_;
    PbwOrder order_;
    std::unordered_map<std::pair<std::size_t, PbwMonomial>, Terms, KeyHash> left_cache_;
    std::unordered_map<std::pair<std::size_t, PbwMonomial>, AffineTerms, KeyHash> raise_cache_;
    std::unordered_map<std::pair<PbwMonomial, PbwMonomial>, Terms, PairHash> product_cache_;
    std::unordered_map<std::pair<PbwMonomial, PbwMonomial>, CartanPolynomial, PairHash> form_cache_;
    std::map<Root, std::vector<PbwMonomial>> weight_cache_;
};

inline Rational shifted_coef(const Rational& c, const Weight&) { return c; }
inline CartanRational shifted_coef(const CartanRational& c, const Weight& nu) { return c.shifted(nu); }

template <class Coef>
NegElement<Coef> NegativeAlgebra::multiply(const NegElement<Coef>& a, const NegElement<Coef>& b) {
    NegElement<Coef> out;
    const RootSystem& rs = root_system();
    std::map<Root, std::vector<Coef>> shifted_a;
    for (const auto& [mb, cb] : b.terms) {
        const Root sum = root_sum(mb);
        auto it = shifted_a.find(sum);
        if (it == shifted_a.end()) {
            std::vector<Coef> cs;
            const Weight shift = rs.to_weight(-sum);
            for (const auto& [ma, ca] : a.terms) cs.push_back(shifted_coef(ca, shift));
            it = shifted_a.emplace(sum, std::move(cs)).first;
        }
        std::size_t k = 0;
        for (const auto& [ma, ca] : a.terms) {
            const Coef coef = it->second[k++] * cb;
            for (const auto& [m, c] : product(ma, mb)) out.add(m, coef * c);
        }
    }
    return out;
}

/// θ v_λ at numeric λ, or the vanishing denominator factor.
std::variant<NumericElement, Pole> evaluate(const SymbolicElement& v, const Weight& lambda);

/// Lifts a numeric element to constant symbolic coefficients.
SymbolicElement to_symbolic(const NumericElement& v, int rank);

}  // namespace shapovalov
