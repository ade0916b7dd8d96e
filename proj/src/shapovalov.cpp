#include "shapovalov/shapovalov.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace shapovalov {

std::vector<int> admissible_alphas(const RootSystem& rs, const Root& beta) {
    std::vector<int> out;
    if (!rs.is_positive_root(beta)) return out;
    const Rational bb = rs.inner(beta, beta);
    for (int a : rs.support(beta)) {
        const Root s = rs.simple_root(a);
        if (rs.multiplicity(a, beta) * rs.inner(s, s) == bb) out.push_back(a);
    }
    return out;
}

AdmissiblePair make_admissible_pair(const RootSystem& rs, const Root& beta, std::optional<int> alpha) {
    if (!rs.is_positive_root(beta)) throw InadmissibleError(to_string(beta) + " is not a positive root of " + rs.name());
    const auto options = admissible_alphas(rs, beta);
    if (options.empty())
        throw InadmissibleError(root_label(beta) + " in " + rs.name() +
                                " has no admissible representation: no simple α in its support satisfies "
                                "ℓ(α,β)(α,α) = (β,β)");
    const int a = alpha.value_or(options.front());
    if (std::find(options.begin(), options.end(), a) == options.end())
        throw InadmissibleError("α" + std::to_string(a + 1) + " is not admissible for " + root_label(beta) + " in " +
                                rs.name());
    AdmissiblePair p;
    p.beta = beta;
    p.alpha = a;
    p.nu_b = rs.fundamental_weight(a);
    p.nu_a = p.nu_b - rs.to_weight(beta);
    const Root s = rs.simple_root(a);
    p.plain_power = rs.inner(s, s) == rs.inner(beta, beta) && rs.multiplicity(a, beta) == 1;
    return p;
}

std::vector<RouteTerm> route_terms(const StructureTable& table, const AdmissiblePair& pair) {
    const RootSystem& rs = table.root_system();
    std::vector<RouteTerm> out;
    for (auto& chain : descent_chains(rs, pair.beta, pair.alpha)) {
        const auto& g = chain.gammas;
        const std::size_t k = chain.length();
        Rational coef = diagonal_constant(rs, rs.root(g.back()), pair.alpha, pair.beta);
        if (k % 2 == 1) coef = -coef;
        std::vector<std::size_t> word{g.back()};
        for (std::size_t i = k; i >= 1; --i) {
            const std::size_t nu = *rs.difference_index(g[i - 1], g[i]);
            coef *= table.C(nu, g[i - 1]);
            word.push_back(nu);
        }
        if (coef == 0) continue;
        CartanRational c(rs.rank(), coef);
        for (std::size_t i = 1; i <= k; ++i) c = c.divided_by(AffineForm::eta(rs, pair.beta - rs.root(g[i])));
        out.push_back({std::move(chain), std::move(word), std::move(c)});
    }
    return out;
}

ShapovalovElement theta_one(NegativeAlgebra& alg, const AdmissiblePair& pair) {
    const RootSystem& rs = alg.root_system();
    ShapovalovElement out;
    out.pair = pair;
    out.m = 1;
    std::set<Root> mus;
    for (const auto& term : route_terms(alg.table(), pair)) {
        for (std::size_t i = 1; i < term.chain.gammas.size(); ++i) mus.insert(pair.beta - rs.root(term.chain.gammas[i]));
        for (const auto& [m, v] : alg.normal_order(term.word).terms) out.element.add(m, term.coefficient * v);
    }
    for (const auto& mu : mus) out.ledger.push_back({mu, 0, AffineForm::eta(rs, mu)});
    return out;
}

std::vector<EtaFactor> shifted_ledger(const RootSystem&, const ShapovalovElement& theta_beta, int m) {
    std::vector<EtaFactor> out;
    for (int k = 0; k < m; ++k)
        for (const auto& f : theta_beta.ledger)
            out.push_back({f.mu, k, f.form.shifted(Rational(k) * theta_beta.pair.nu_a)});
    return out;
}

ShapovalovElement theta_universal(NegativeAlgebra& alg, const ShapovalovElement& theta_beta, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    ShapovalovElement out;
    out.pair = theta_beta.pair;
    out.m = m;
    out.element = theta_beta.element;
    for (int k = 1; k < m; ++k) {
        const Weight shift = Rational(k) * theta_beta.pair.nu_b;
        SymbolicElement factor;
        for (const auto& [mono, c] : theta_beta.element.terms) factor.add(mono, c.shifted(shift));
        out.element = alg.multiply(factor, out.element);
    }
    out.ledger = shifted_ledger(alg.root_system(), theta_beta, m);
    return out;
}

ShapovalovElement theta_universal(NegativeAlgebra& alg, const AdmissiblePair& pair, int m) {
    return theta_universal(alg, theta_one(alg, pair), m);
}

namespace {

template <class ShiftFn>
std::variant<NumericElement, Pole> ordered_product(NegativeAlgebra& alg, const ShapovalovElement& theta_beta, int m,
                                                   ShiftFn weight_of_factor) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    NumericElement result;
    for (int k = 0; k < m; ++k) {
        auto factor = evaluate(theta_beta.element, weight_of_factor(k));
        if (auto* pole = std::get_if<Pole>(&factor)) return *pole;
        result = k == 0 ? std::get<NumericElement>(factor) : alg.multiply(std::get<NumericElement>(factor), result);
    }
    return result;
}

}  // namespace

std::variant<NumericElement, Pole> theta_numeric(NegativeAlgebra& alg, const ShapovalovElement& theta_beta, int m,
                                                 const Weight& lambda) {
    return ordered_product(alg, theta_beta, m, [&](int k) { return lambda + Rational(k) * theta_beta.pair.nu_a; });
}

std::variant<NumericElement, Pole> theta_plain_power(NegativeAlgebra& alg, const ShapovalovElement& theta_beta, int m,
                                                     const Weight& lambda) {
    const Weight beta = alg.root_system().to_weight(theta_beta.pair.beta);
    return ordered_product(alg, theta_beta, m, [&](int k) { return lambda - Rational(k) * beta; });
}

CartanRational leading_coefficient(const NegativeAlgebra& alg, const ShapovalovElement& theta) {
    PbwMonomial lead = alg.unit();
    lead[alg.order().position_of(*alg.root_system().index_of(theta.pair.beta))] = static_cast<std::uint8_t>(theta.m);
    auto it = theta.element.terms.find(lead);
    return it == theta.element.terms.end() ? CartanRational(alg.root_system().rank(), 0) : it->second;
}

bool on_kac_kazhdan(const RootSystem& rs, const Root& beta, int m, const Weight& lambda) {
    return 2 * rs.inner(lambda + rs.rho(), beta) == m * rs.inner(beta, beta);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 make_generator(const RootSystem& rs, const std::vector<int>& tag, std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    auto mix = [&](std::uint64_t v) {
        std::uint64_t x = state ^ v;
        state = splitmix64(x);
    };
    for (char c : rs.name()) mix(static_cast<unsigned char>(c));
    for (int c : tag) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(c)));
    mix(index);
    return std::mt19937_64(splitmix64(state));
}

Rational draw(std::mt19937_64& gen) {
    const long num = static_cast<long>(gen() % 201) - 100;
    const long den = static_cast<long>(gen() % 100) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Sample sample_kac_kazhdan(const RootSystem& rs, const Root& beta, int m, std::uint64_t seed, std::uint64_t index,
                          const std::vector<AffineForm>& avoid, int max_attempts) {
    if (!beta.is_nonnegative() || beta.is_zero()) throw std::invalid_argument("β must be a nonzero element of Γ_+");
    std::vector<int> tag = beta.coeffs;
    tag.push_back(m);
    auto gen = make_generator(rs, tag, seed, index);
    const auto r = static_cast<std::size_t>(rs.rank());
    std::size_t solved = 0;
    while (beta[solved] == 0) ++solved;
    const auto& d = rs.datum().symmetrizer;

    AffineForm blocking;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        Weight l = Weight::zero(rs.rank());
        for (std::size_t i = 0; i < r; ++i)
            if (i != solved) l[i] = draw(gen);
        // Σ β_i d_i (λ_i + 1) = m (β, β)/2
        Rational rest = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (i != solved) rest += beta[i] * d[i] * (l[i] + 1);
        l[solved] = (m * rs.inner(beta, beta) / 2 - rest) / (beta[solved] * d[solved]) - 1;

        bool clear = true;
        for (const auto& f : avoid)
            if (f(l) == 0) {
                blocking = f;
                clear = false;
                break;
            }
        if (clear) return {l, attempt};
    }
    throw SamplingError("no generic point of H_{" + root_label(beta) + "," + std::to_string(m) + "} after " +
                            std::to_string(max_attempts) + " draws; blocked by " + to_string(blocking) + " = 0",
                        blocking);
}

Weight sample_generic(const RootSystem& rs, std::uint64_t seed, std::uint64_t index) {
    auto gen = make_generator(rs, {-1}, seed, index);
    Weight l = Weight::zero(rs.rank());
    for (auto& c : l.coords) c = draw(gen);
    return l;
}

ExtremalReport verify_extremal(NegativeAlgebra& alg, const NumericElement& v, const Weight& lambda) {
    ExtremalReport rep;
    rep.nonzero = !v.is_zero();
    rep.extremal = rep.nonzero;
    const RootSystem& rs = alg.root_system();
    for (int i = 0; i < rs.rank(); ++i) {
        const std::size_t n = alg.act_e(rs.simple_index(i), v, lambda).size();
        rep.residual_terms.push_back(n);
        if (n != 0) rep.extremal = false;
    }
    return rep;
}

}  // namespace shapovalov
