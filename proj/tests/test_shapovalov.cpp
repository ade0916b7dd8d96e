#include "doctest.h"

#include "shapovalov/oracle.hpp"
#include "shapovalov/shapovalov.hpp"

#include <set>

using namespace shapovalov;

namespace {

const char* kSweepTypes[] = {"A2", "A3", "B2", "B3", "C3", "D4", "G2"};

std::vector<AffineForm> avoid_forms(const RootSystem& rs, const ShapovalovElement& th, int m) {
    std::vector<AffineForm> out;
    for (const auto& f : shifted_ledger(rs, th, m)) out.push_back(f.form);
    if (th.pair.plain_power)
        for (int k = 1; k < m; ++k)
            for (const auto& f : th.ledger) out.push_back(f.form.shifted(-(Rational(k) * rs.to_weight(th.pair.beta))));
    return out;
}

NumericElement numeric(const std::variant<NumericElement, Pole>& v) {
    REQUIRE(std::holds_alternative<NumericElement>(v));
    return std::get<NumericElement>(v);
}

bool same_up_to_scalar(const NumericElement& a, const NumericElement& b) {
    return !a.is_zero() && proportional(a, b).has_value();
}

}  // namespace

TEST_CASE("admissible simple roots") {
    auto g2 = RootSystem::parse("G2");
    CHECK(admissible_alphas(g2, Root{{1, 2}}).empty());
    CHECK(admissible_alphas(g2, Root{{2, 3}}) == std::vector<int>{1});
    CHECK(admissible_alphas(g2, Root{{1, 3}}) == std::vector<int>{0, 1});

    auto c3 = RootSystem::parse("C3");
    const auto c3_long = admissible_alphas(c3, Root{{2, 2, 1}});
    CHECK(std::find(c3_long.begin(), c3_long.end(), 2) != c3_long.end());

    auto f4 = RootSystem::parse("F4");
    CHECK(admissible_alphas(f4, Root{{1, 2, 3, 2}}).empty());

    auto e8 = RootSystem::parse("E8");
    CHECK(admissible_alphas(e8, e8.highest_root()).empty());

    for (int i = 0; i < 3; ++i) CHECK(admissible_alphas(c3, c3.simple_root(i)) == std::vector<int>{i});
    CHECK(admissible_alphas(g2, Root{{1, 1}}).size() == 1);
}

TEST_CASE("admissible pair data and errors") {
    auto g2 = RootSystem::parse("G2");
    CHECK_THROWS_AS(make_admissible_pair(g2, Root{{1, 2}}), InadmissibleError);
    CHECK_THROWS_AS(make_admissible_pair(g2, Root{{2, 3}}, 0), InadmissibleError);
    CHECK_THROWS_AS(make_admissible_pair(g2, Root{{2, 2}}), InadmissibleError);

    auto p = make_admissible_pair(g2, Root{{2, 3}});
    CHECK(p.alpha == 1);
    CHECK(g2.coroot_pairing(p.nu_b, p.beta) == 1);
    CHECK(p.nu_a == p.nu_b - g2.to_weight(p.beta));
    CHECK_FALSE(p.plain_power);

    auto a2 = RootSystem::parse("A2");
    CHECK(make_admissible_pair(a2, Root{{1, 1}}, 0).plain_power);

    auto b2 = RootSystem::parse("B2");
    CHECK(make_admissible_pair(b2, Root{{1, 2}}, 0).plain_power);
    CHECK_FALSE(make_admissible_pair(b2, Root{{1, 2}}, 1).plain_power);

    auto c3 = RootSystem::parse("C3");
    CHECK(make_admissible_pair(c3, Root{{2, 2, 1}}, 2).plain_power);
    CHECK_FALSE(make_admissible_pair(c3, Root{{2, 2, 1}}, 0).plain_power);
}

TEST_CASE("theta for A2, beta = a1 + a2") {
    auto t = StructureTable::build(RootSystem::parse("A2"));
    const auto& rs = t.root_system();
    NegativeAlgebra alg(t);
    const Root beta{{1, 1}};
    auto th = theta_one(alg, make_admissible_pair(rs, beta, 0));
    REQUIRE(th.element.size() == 2);

    const std::size_t a1 = *rs.index_of(Root{{1, 0}}), a2 = *rs.index_of(Root{{0, 1}});
    const auto cross = alg.normal_order({a1, a2});
    REQUIRE(cross.size() == 1);
    const PbwMonomial& m12 = cross.terms.begin()->first;

    CHECK(leading_coefficient(alg, th) == CartanRational(2, 1));
    // c / η_{α2} with |c| = 1, η_{α2}(λ) = (λ, α2)
    const auto& c = th.element.terms.at(m12);
    for (const Weight& l : {Weight({Rational(3), Rational(5)}), Weight({Rational(-1, 2), Rational(7, 3)})}) {
        auto v = c.evaluate(l);
        REQUIRE(std::holds_alternative<Rational>(v));
        const Rational times_eta = std::get<Rational>(v) * rs.inner(l, Root{{0, 1}});
        CHECK(abs(times_eta) == 1);
    }
    REQUIRE(th.ledger.size() == 1);
    CHECK(th.ledger[0].mu == Root{{0, 1}});

    // λ = −ω2 lies on H_{β,1}
    const Weight lambda = -rs.fundamental_weight(1);
    CHECK(on_kac_kazhdan(rs, beta, 1, lambda));
    CHECK(2 * rs.inner(lambda + rs.rho(), beta) == rs.inner(beta, beta));
    auto v = numeric(evaluate(th.element, lambda));
    CHECK(verify_extremal(alg, v, lambda).extremal);
}

TEST_CASE("theta for a simple root and the sl2 identity") {
    auto t = StructureTable::build(RootSystem::parse("A1"));
    const auto& rs = t.root_system();
    NegativeAlgebra alg(t);
    auto th = theta_one(alg, make_admissible_pair(rs, Root{{1}}));
    REQUIRE(th.element.size() == 1);
    CHECK(th.ledger.empty());
    for (int m = 1; m <= 4; ++m) {
        const Weight lambda({Rational(m - 1)});
        CHECK(on_kac_kazhdan(rs, Root{{1}}, m, lambda));
        auto v = numeric(theta_numeric(alg, th, m, lambda));
        REQUIRE(v.size() == 1);
        CHECK(alg.degree(v.terms.begin()->first) == static_cast<std::size_t>(m));
        CHECK(verify_extremal(alg, v, lambda).extremal);
        CHECK_FALSE(verify_extremal(alg, v, Weight({Rational(m)})).extremal);
    }

    auto g2 = StructureTable::build(RootSystem::parse("G2"));
    NegativeAlgebra galg(g2);
    for (int i = 0; i < 2; ++i) {
        const Root a = g2.root_system().simple_root(i);
        auto s = theta_one(galg, make_admissible_pair(g2.root_system(), a));
        REQUIRE(s.element.size() == 1);
        CHECK(s.element.terms.begin()->second == CartanRational(2, g2.root_system().inner(a, a) / 2));
    }
}

TEST_CASE("route sum: leading single-letter term and ledger") {
    for (const char* type : kSweepTypes) {
        CAPTURE(type);
        auto t = StructureTable::build(RootSystem::parse(type));
        const auto& rs = t.root_system();
        for (const Root& beta : rs.positive_roots()) {
            if (beta.height() < 2) continue;
            for (int a : admissible_alphas(rs, beta)) {
                CAPTURE(to_string(beta));
                CAPTURE(a);
                const auto pair = make_admissible_pair(rs, beta, a);
                const auto terms = route_terms(t, pair);
                REQUIRE(!terms.empty());
                const auto& lead = terms.front();
                CHECK(lead.word == std::vector<std::size_t>{*rs.index_of(beta)});
                CHECK(lead.coefficient == CartanRational(rs.rank(), rs.inner(beta, beta) / 2));
                CHECK(std::count_if(terms.begin(), terms.end(), [](const RouteTerm& r) { return r.word.size() == 1; }) == 1);

                NegativeAlgebra alg(t);
                const auto th = theta_one(alg, pair);
                std::set<AffineForm> allowed;
                for (const auto& f : th.ledger) {
                    CHECK_FALSE(f.mu.is_zero());
                    const Root gamma = beta - f.mu;
                    CHECK(rs.is_positive_root(gamma));
                    CHECK(dominance_geq(gamma, rs.simple_root(a)));
                    allowed.insert(f.form.monic());
                }
                for (const auto& [m, c] : th.element.terms) {
                    CHECK(alg.root_sum(m) == beta);
                    for (const auto& [f, e] : c.denominator()) CHECK(allowed.count(f) == 1);
                }
            }
        }
    }
}

TEST_CASE("leading coefficient in the alpha-adapted order") {
    // ℓ_{α,β} = 1: normal ordering never produces f_β, the coefficient stays C_{β,β}.
    for (const char* type : kSweepTypes) {
        CAPTURE(type);
        auto t = StructureTable::build(RootSystem::parse(type));
        const auto& rs = t.root_system();
        for (const Root& beta : rs.positive_roots()) {
            if (beta.height() < 2) continue;
            for (int a : admissible_alphas(rs, beta)) {
                if (rs.multiplicity(a, beta) != 1) continue;
                CAPTURE(to_string(beta));
                NegativeAlgebra alg(t, PbwOrder::alpha_adapted(rs, a));
                const auto th = theta_one(alg, make_admissible_pair(rs, beta, a));
                CHECK(leading_coefficient(alg, th) == CartanRational(rs.rank(), rs.inner(beta, beta) / 2));
            }
        }
    }
    // ℓ = 2: the words f_{α1+α2} f_{α2} and f_{α2} f_{α1+α2} both occur, so no order avoids a correction
    auto b2 = StructureTable::build(RootSystem::parse("B2"));
    NegativeAlgebra alg(b2, PbwOrder::alpha_adapted(b2.root_system(), 1));
    const auto th = theta_one(alg, make_admissible_pair(b2.root_system(), Root{{1, 2}}, 1));
    CHECK_FALSE(leading_coefficient(alg, th).is_polynomial());
}

TEST_CASE("sampling on Kac-Kazhdan hyperplanes") {
    for (const char* type : {"A2", "B3", "G2", "C3"}) {
        auto rs = RootSystem::parse(type);
        for (const Root& beta : rs.positive_roots()) {
            for (int m = 1; m <= 3; ++m) {
                const auto s = sample_kac_kazhdan(rs, beta, m, 42, 0, {});
                CHECK(on_kac_kazhdan(rs, beta, m, s.lambda));
                CHECK(s.attempts == 1);
                CHECK(sample_kac_kazhdan(rs, beta, m, 42, 0, {}).lambda == s.lambda);
                CHECK_FALSE(sample_kac_kazhdan(rs, beta, m, 43, 0, {}).lambda == s.lambda);
                CHECK_FALSE(sample_kac_kazhdan(rs, beta, m, 42, 1, {}).lambda == s.lambda);
                for (int a : admissible_alphas(rs, beta)) {
                    const auto p = make_admissible_pair(rs, beta, a);
                    // η_β(λ + (m−1)ν_a) = 0
                    CHECK(AffineForm::eta(rs, beta)(s.lambda + Rational(m - 1) * p.nu_a) == 0);
                }
            }
        }
    }
}

TEST_CASE("sampling reports the blocking factor") {
    auto rs = RootSystem::parse("A2");
    const Root beta{{1, 1}};
    const auto p = make_admissible_pair(rs, beta, 0);
    const AffineForm blocked = AffineForm::eta(rs, beta).shifted(Rational(1) * p.nu_a);
    try {
        sample_kac_kazhdan(rs, beta, 2, 1, 0, {blocked}, 50);
        FAIL("expected SamplingError");
    } catch (const SamplingError& e) {
        CHECK(e.blocking_factor == blocked);
    }
    CHECK_NOTHROW(sample_kac_kazhdan(rs, beta, 2, 1, 0, {AffineForm::eta(rs, Root{{0, 1}})}));
}

TEST_CASE("generic weights are not extremal points") {
    for (const char* type : {"A2", "B2", "G2"}) {
        CAPTURE(type);
        auto t = StructureTable::build(RootSystem::parse(type));
        const auto& rs = t.root_system();
        NegativeAlgebra alg(t);
        for (const Root& beta : rs.positive_roots()) {
            if (beta.height() < 2) continue;
            for (int a : admissible_alphas(rs, beta)) {
                const auto th = theta_one(alg, make_admissible_pair(rs, beta, a));
                for (std::uint64_t k = 0; k < 3; ++k) {
                    const Weight l = sample_generic(rs, 5, k);
                    REQUIRE_FALSE(on_kac_kazhdan(rs, beta, 1, l));
                    auto v = evaluate(th.element, l);
                    if (!std::holds_alternative<NumericElement>(v)) continue;
                    const auto rep = verify_extremal(alg, std::get<NumericElement>(v), l);
                    CHECK_FALSE(rep.extremal);
                }
                // each residual coefficient carries the factor η_β
                const AffineForm eta_beta = AffineForm::eta(rs, beta);
                for (int i = 0; i < rs.rank(); ++i)
                    for (const auto& [m, c] : alg.act_e(rs.simple_index(i), th.element).terms)
                        CHECK(c.numerator().divide(eta_beta).has_value());
            }
        }
    }
}

TEST_CASE("numeric, universal and plain-power products agree") {
    for (const char* type : {"A2", "B2", "G2", "A3"}) {
        CAPTURE(type);
        auto t = StructureTable::build(RootSystem::parse(type));
        const auto& rs = t.root_system();
        NegativeAlgebra alg(t);
        for (const Root& beta : rs.positive_roots()) {
            if (beta.height() < 2) continue;
            for (int a : admissible_alphas(rs, beta)) {
                CAPTURE(to_string(beta));
                const auto th = theta_one(alg, make_admissible_pair(rs, beta, a));
                CHECK(theta_universal(alg, th, 1).element == th.element);
                for (int m = 1; m <= 3; ++m) {
                    const auto u = theta_universal(alg, th, m);
                    for (const auto& [mono, c] : u.element.terms) CHECK(alg.root_sum(mono) == m * beta);
                    for (std::uint64_t s = 0; s < 2; ++s) {
                        const Weight l = sample_kac_kazhdan(rs, beta, m, 3, s, avoid_forms(rs, th, m)).lambda;
                        const auto v = numeric(theta_numeric(alg, th, m, l));
                        CHECK(verify_extremal(alg, v, l).extremal);
                        CHECK(same_up_to_scalar(numeric(evaluate(u.element, l)), v));
                        if (m == 1) CHECK(v == numeric(evaluate(th.element, l)));
                        if (th.pair.plain_power)
                            CHECK(same_up_to_scalar(numeric(theta_plain_power(alg, th, m, l)), v));
                    }
                }
            }
        }
    }
}

TEST_CASE("plain power: theta squared in the Borel completion") {
    auto t = StructureTable::build(RootSystem::parse("A2"));
    const auto& rs = t.root_system();
    NegativeAlgebra alg(t);
    const Root beta{{1, 1}};
    const auto th = theta_one(alg, make_admissible_pair(rs, beta, 0));
    const auto square = alg.multiply(th.element, th.element);
    const auto u = theta_universal(alg, th, 2);
    for (std::uint64_t s = 0; s < 4; ++s) {
        const Weight l = sample_kac_kazhdan(rs, beta, 2, 9, s, avoid_forms(rs, th, 2)).lambda;
        CHECK(same_up_to_scalar(numeric(evaluate(square, l)), numeric(evaluate(u.element, l))));
    }
}

TEST_CASE("support of theta is stable over samples") {
    for (const char* type : {"B3", "C3", "G2"}) {
        auto t = StructureTable::build(RootSystem::parse(type));
        const auto& rs = t.root_system();
        NegativeAlgebra alg(t);
        const Root beta = rs.highest_root();
        for (int a : admissible_alphas(rs, beta)) {
            const auto th = theta_one(alg, make_admissible_pair(rs, beta, a));
            std::set<PbwMonomial> symbolic;
            for (const auto& [m, c] : th.element.terms) symbolic.insert(m);
            for (std::uint64_t s = 0; s < 5; ++s) {
                const Weight l = sample_kac_kazhdan(rs, beta, 1, 11, s, avoid_forms(rs, th, 1)).lambda;
                std::set<PbwMonomial> support;
                for (const auto& [m, c] : numeric(evaluate(th.element, l)).terms) support.insert(m);
                CHECK(support == symbolic);
            }
        }
    }
}

TEST_CASE("different admissible alphas give proportional vectors") {
    auto t = StructureTable::build(RootSystem::parse("C3"));
    const auto& rs = t.root_system();
    NegativeAlgebra alg(t);
    const Root beta{{2, 2, 1}};
    const auto alphas = admissible_alphas(rs, beta);
    REQUIRE(alphas.size() == 3);
    std::vector<ShapovalovElement> thetas;
    std::vector<AffineForm> avoid;
    for (int a : alphas) {
        thetas.push_back(theta_one(alg, make_admissible_pair(rs, beta, a)));
        for (const auto& f : avoid_forms(rs, thetas.back(), 2)) avoid.push_back(f);
    }
    for (std::uint64_t s = 0; s < 3; ++s) {
        const Weight l = sample_kac_kazhdan(rs, beta, 2, 17, s, avoid).lambda;
        const auto v0 = numeric(theta_numeric(alg, thetas[0], 2, l));
        for (std::size_t k = 1; k < thetas.size(); ++k)
            CHECK(same_up_to_scalar(numeric(theta_numeric(alg, thetas[k], 2, l)), v0));
    }
}
