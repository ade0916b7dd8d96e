#include "doctest.h"

#include "shapovalov/coeffield.hpp"

#include <random>

using namespace shapovalov;

namespace {

Weight random_weight(std::mt19937_64& rng, int rank) {
    Weight w = Weight::zero(rank);
    for (auto& c : w.coords) {
        Rational q(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
        q.canonicalize();
        c = q;
    }
    return w;
}

Rational value(const CartanRational& q, const Weight& w) { return std::get<Rational>(q.evaluate(w)); }

}  // namespace

TEST_CASE("eta values") {
    auto a2 = RootSystem::parse("A2");
    CHECK(AffineForm::eta(a2, Root({1, 0}))(Weight::zero(2)) == 0);
    auto g2 = RootSystem::parse("G2");
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Weight l = random_weight(rng, 2);
        for (const auto& b : g2.positive_roots()) {
            for (int m = 1; m <= 3; ++m) {
                // η_{mβ}(λ) = m((β, λ+ρ) − (m/2)(β, β))
                Rational lhs = AffineForm::eta(g2, m * b)(l);
                Rational rhs = m * (g2.inner(l + g2.rho(), b) - Rational(m, 2) * g2.inner(b, b));
                CHECK(lhs == rhs);
            }
            for (const auto& c : g2.positive_roots())
                CHECK(AffineForm::eta(g2, b + c)(l) ==
                      AffineForm::eta(g2, b)(l) + AffineForm::eta(g2, c)(l) - g2.inner(b, c));
        }
    }
    // η_β vanishes exactly on the hyperplane 2(λ+ρ, β) = (β, β).
    Weight l = Weight(std::vector<Rational>{Rational(0), Rational(-1)});
    CHECK(AffineForm::eta(a2, Root({1, 1}))(l) == 0);
}

TEST_CASE("shift of affine forms") {
    auto b3 = RootSystem::parse("B3");
    std::mt19937_64 rng(5);
    for (const auto& mu : b3.positive_roots()) {
        Weight nu = random_weight(rng, 3);
        Weight l = random_weight(rng, 3);
        AffineForm e = AffineForm::eta(b3, mu);
        CHECK(e.shifted(nu)(l) == e(l) + b3.inner(nu, mu));
        CHECK(e.shifted(Weight::zero(3)) == e);
    }
}

TEST_CASE("polynomial ring operations") {
    std::mt19937_64 rng(11);
    auto random_poly = [&](int rank) {
        CartanPolynomial p(rank, 0);
        for (int t = 0; t < 4; ++t) {
            Rational c(static_cast<long>(rng() % 11) - 5, 2);
            c.canonicalize();
            CartanPolynomial mono(rank, c);
            for (int i = 0; i < rank; ++i)
                for (unsigned e = static_cast<unsigned>(rng() % 3); e > 0; --e) mono = mono * CartanPolynomial::variable(rank, i);
            p += mono;
        }
        return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(3), b = random_poly(3), c = random_poly(3);
        Weight l = random_weight(rng, 3), nu = random_weight(rng, 3);
        CHECK((a * b)(l) == a(l) * b(l));
        CHECK((a + b)(l) == a(l) + b(l));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a.shifted(nu)(l) == a(l + nu));
        CHECK((a * b).shifted(nu) == a.shifted(nu) * b.shifted(nu));
        CHECK(a.shifted(nu).shifted(-nu) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division by affine forms") {
    auto a2 = RootSystem::parse("A2");
    AffineForm f = AffineForm::eta(a2, Root({1, 1}));
    AffineForm g = AffineForm::pairing(a2, Root({0, 1}));
    g.constant = 3;
    CartanPolynomial p = CartanPolynomial::from_affine(f) * CartanPolynomial::from_affine(g) * CartanPolynomial::from_affine(g);
    auto q = p.divide(g);
    REQUIRE(q);
    CHECK(*q == CartanPolynomial::from_affine(f) * CartanPolynomial::from_affine(g));
    CHECK_FALSE(CartanPolynomial::from_affine(f).divide(g));
    CHECK(CartanPolynomial::from_affine(Rational(3) * f).divide(f) == CartanPolynomial(2, 3));
}

TEST_CASE("rational functions") {
    auto a2 = RootSystem::parse("A2");
    AffineForm e1 = AffineForm::eta(a2, Root({1, 0}));
    AffineForm e2 = AffineForm::eta(a2, Root({0, 1}));
    CartanRational x = CartanRational::inverse(e1);
    CartanRational y = CartanRational::inverse(e2);
    CartanRational s = x + y;
    CHECK(s.denominator().size() == 2);
    // (1/e1 + 1/e2) · e1 e2 = e1 + e2
    CartanRational back = s * CartanRational::from_affine(e1) * CartanRational::from_affine(e2);
    CHECK(back.is_polynomial());
    CHECK(back == CartanRational::from_affine(e1 + e2));
    // 1/e1 − 1/e1 = 0
    CHECK((x - x).is_zero());
    CHECK((x - x).denominator().empty());
    // (2 e1)/(e1) reduces to 2
    CartanRational two = CartanRational::from_affine(Rational(2) * e1).divided_by(e1);
    CHECK(two == CartanRational(2, 2));

    Weight pole(std::vector<Rational>{Rational(0), Rational(5)});
    auto v = x.evaluate(pole);
    REQUIRE(std::holds_alternative<Pole>(v));
    CHECK(std::get<Pole>(v).factor == e1);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Weight l = random_weight(rng, 2), nu = random_weight(rng, 2);
        if (e1(l) == 0 || e2(l) == 0 || e1(l + nu) == 0 || e2(l + nu) == 0) continue;
        CHECK(value(s, l) == 1 / e1(l) + 1 / e2(l));
        CHECK(value(s.shifted(nu), l) == value(s, l + nu));
        CHECK(s.shifted(nu).shifted(-nu) == s);
        CHECK((s * s).shifted(nu) == s.shifted(nu) * s.shifted(nu));
    }
    CHECK(CartanRational(2, 7).shifted(Weight(std::vector<Rational>{Rational(1), Rational(2)})) == CartanRational(2, 7));
}
