#pragma once

#include "shapovalov/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shapovalov {

/// Element of the root lattice, written in the basis of simple roots.
struct Root {
    std::vector<int> coeffs;

    Root() = default;
    explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}
    static Root zero(int rank) { return Root(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
    static Root simple(int rank, int i);

    std::size_t size() const { return coeffs.size(); }
    int operator[](std::size_t i) const { return coeffs[i]; }
    int height() const;
    bool is_zero() const;
    /// All coefficients nonnegative (an element of the positive semigroup).
    bool is_nonnegative() const;

    Root& operator+=(const Root& o);
    Root& operator-=(const Root& o);
    friend Root operator+(Root a, const Root& b) { return a += b; }
    friend Root operator-(Root a, const Root& b) { return a -= b; }
    friend Root operator*(int k, Root a);
    friend Root operator-(Root a);

    auto operator<=>(const Root&) const = default;
};

/// Element of h^* in fundamental-weight coordinates, λ_i = (λ, α_i^∨).
struct Weight {
    std::vector<Rational> coords;

    Weight() = default;
    explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<Rational>(static_cast<std::size_t>(rank))); }

    std::size_t size() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& k, Weight a);
    friend Weight operator-(Weight a);

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator<(const Weight& a, const Weight& b);
};

std::string to_string(const Root& r);
std::string to_string(const Weight& w);
/// "α1+2α2" style label, with ASCII "a" instead of α when `ascii` is set.
std::string root_label(const Root& r, bool ascii = false);

struct CartanDatum {
    char series = 'A';
    int rank = 0;
    /// a_ij = 2(α_i, α_j)/(α_i, α_i); Bourbaki numbering.
    std::vector<std::vector<int>> matrix;
    /// d_i = (α_i, α_i)/2, so d_i a_ij is symmetric. Short roots have d_i = 1.
    std::vector<Rational> symmetrizer;
};

/// Throws std::invalid_argument for pairs that are not a simple type
/// (A1.., B2.., C2.., D4.., E6-8, F4, G2).
CartanDatum make_cartan_datum(char series, int rank);

/// Parses "A2", "g2", "E8" ... (case-insensitive).
CartanDatum parse_cartan_type(std::string_view type);

class RootSystem {
public:
    explicit RootSystem(CartanDatum datum);

    static RootSystem build(char series, int rank) { return RootSystem(make_cartan_datum(series, rank)); }
    static RootSystem parse(std::string_view type) { return RootSystem(parse_cartan_type(type)); }

    const CartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank; }
    std::string name() const;

    /// Positive roots ordered by height, then by decreasing coefficient
    /// vector (so α1 precedes α2). This order is the PBW order.
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }
    const Root& root(std::size_t index) const { return positive_[index]; }
    std::optional<std::size_t> index_of(const Root& r) const;
    bool is_positive_root(const Root& r) const { return index_of(r).has_value(); }
    /// Index of the i-th simple root in positive_roots().
    std::size_t simple_index(int i) const { return simple_index_[static_cast<std::size_t>(i)]; }
    Root simple_root(int i) const { return Root::simple(rank(), i); }
    const Root& highest_root() const { return positive_.back(); }

    /// Precomputed index of root(a) + root(b), if that is a positive root.
    std::optional<std::size_t> sum_index(std::size_t a, std::size_t b) const;
    /// Precomputed index of root(a) - root(b), if that is a positive root.
    std::optional<std::size_t> difference_index(std::size_t a, std::size_t b) const;

    Rational inner(const Root& a, const Root& b) const;
    Rational inner(const Weight& a, const Root& b) const;
    Rational inner(const Weight& a, const Weight& b) const;
    /// (λ, β^∨) = 2(λ, β)/(β, β).
    Rational coroot_pairing(const Weight& w, const Root& beta) const;

    Weight to_weight(const Root& r) const;
    /// Coordinates of a weight over the simple roots (rational in general).
    std::vector<Rational> to_simple_coords(const Weight& w) const;

    Weight rho() const;
    Weight fundamental_weight(int i) const;

    /// Simple roots entering β with positive coefficient. Throws if β is not a positive root.
    std::vector<int> support(const Root& beta) const;
    /// Coefficient of α_i in β.
    int multiplicity(int i, const Root& beta) const { return beta[static_cast<std::size_t>(i)]; }

private:
    CartanDatum datum_;
    std::vector<Root> positive_;
    std::map<Root, std::size_t> index_;
    std::vector<std::size_t> simple_index_;
    std::vector<std::vector<long>> sum_;   // -1 when not a root
    std::vector<std::vector<long>> diff_;  // -1 when not a root
    std::vector<std::vector<Rational>> inverse_cartan_;
};

/// μ ⪰ ν, i.e. μ - ν is a nonnegative integer combination of simple roots.
bool dominance_geq(const Root& mu, const Root& nu);
bool dominance_geq(const RootSystem& rs, const Weight& mu, const Weight& nu);

}  // namespace shapovalov
