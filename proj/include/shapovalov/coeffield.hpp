#pragma once

#include "shapovalov/rootsys.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shapovalov {

/// Affine function λ ↦ Σ coef_i λ_i + constant on h^*, in fundamental
/// coordinates of λ.
struct AffineForm {
    std::vector<Rational> coef;
    Rational constant;

    static AffineForm constant_form(int rank, const Rational& c);
    /// λ ↦ (μ, λ + ρ) − (μ, μ)/2.
    static AffineForm eta(const RootSystem& rs, const Root& mu);
    /// λ ↦ (μ, λ).
    static AffineForm pairing(const RootSystem& rs, const Root& mu);

    bool is_constant() const;
    Rational operator()(const Weight& lambda) const;
    /// λ ↦ f(λ + ν).
    AffineForm shifted(const Weight& nu) const;
    /// Rescaled so that the first nonzero coefficient is 1; returns the factor
    /// removed (the original is `factor` times the result).
    AffineForm monic(Rational* factor = nullptr) const;

    AffineForm& operator+=(const AffineForm& o);
    AffineForm& operator+=(const Rational& c) { constant += c; return *this; }
    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    friend AffineForm operator*(const Rational& k, AffineForm a);

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
    friend bool operator<(const AffineForm& a, const AffineForm& b);
};

std::string to_string(const AffineForm& f);

/// Multivariate polynomial in λ_1..λ_r over Q. Exponents are packed eight bits
/// per variable, so rank ≤ 8 and degree per variable ≤ 255.
class CartanPolynomial {
public:
    using Key = std::uint64_t;

    CartanPolynomial() = default;
    CartanPolynomial(int rank, const Rational& c);
    static CartanPolynomial from_affine(const AffineForm& f);
    static CartanPolynomial variable(int rank, int i);

    int rank() const { return rank_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int degree() const;
    static int exponent(Key k, int i) { return static_cast<int>((k >> (8 * i)) & 0xff); }

    CartanPolynomial& operator+=(const CartanPolynomial& o);
    CartanPolynomial& operator-=(const CartanPolynomial& o);
    CartanPolynomial& operator*=(const Rational& c);
    friend CartanPolynomial operator+(CartanPolynomial a, const CartanPolynomial& b) { return a += b; }
    friend CartanPolynomial operator-(CartanPolynomial a, const CartanPolynomial& b) { return a -= b; }
    friend CartanPolynomial operator*(const CartanPolynomial& a, const CartanPolynomial& b);
    friend CartanPolynomial operator*(CartanPolynomial a, const Rational& c) { return a *= c; }
    CartanPolynomial operator-() const { return *this * Rational(-1); }
    friend bool operator==(const CartanPolynomial& a, const CartanPolynomial& b) { return a.terms_ == b.terms_; }

    Rational operator()(const Weight& lambda) const;
    /// p(λ + ν).
    CartanPolynomial shifted(const Weight& nu) const;
    /// Exact quotient by a non-constant affine form, if it divides.
    std::optional<CartanPolynomial> divide(const AffineForm& f) const;

private:
    void add_term(Key k, const Rational& c);

    int rank_ = 0;
    std::map<Key, Rational> terms_;
};

std::string to_string(const CartanPolynomial& p);

/// Evaluation hit a vanishing denominator factor.
struct Pole {
    AffineForm factor;
};

/// Rational function of λ whose denominator is a product of affine forms,
/// kept factored as monic forms with multiplicities. Numerator and
/// denominator share no factor.
class CartanRational {
public:
    CartanRational() = default;
    CartanRational(int rank, const Rational& c) : num_(rank, c) {}
    explicit CartanRational(CartanPolynomial p) : num_(std::move(p)) {}
    static CartanRational from_affine(const AffineForm& f) { return CartanRational(CartanPolynomial::from_affine(f)); }
    /// 1 / f.
    static CartanRational inverse(const AffineForm& f);

    int rank() const { return num_.rank(); }
    const CartanPolynomial& numerator() const { return num_; }
    const std::map<AffineForm, int>& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    CartanRational& operator+=(const CartanRational& o);
    CartanRational& operator-=(const CartanRational& o);
    CartanRational& operator*=(const CartanRational& o);
    CartanRational& operator*=(const Rational& c);
    friend CartanRational operator+(CartanRational a, const CartanRational& b) { return a += b; }
    friend CartanRational operator-(CartanRational a, const CartanRational& b) { return a -= b; }
    friend CartanRational operator*(CartanRational a, const CartanRational& b) { return a *= b; }
    friend CartanRational operator*(CartanRational a, const Rational& c) { return a *= c; }
    CartanRational operator-() const { return *this * Rational(-1); }
    /// Divides by a non-constant affine form.
    CartanRational divided_by(const AffineForm& f) const;
    friend bool operator==(const CartanRational& a, const CartanRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::variant<Rational, Pole> evaluate(const Weight& lambda) const;
    /// φ ↦ φ(· + ν).
    CartanRational shifted(const Weight& nu) const;

private:
    void reduce();

    CartanPolynomial num_;
    std::map<AffineForm, int> den_;
};

std::string to_string(const CartanRational& q);

}  // namespace shapovalov
