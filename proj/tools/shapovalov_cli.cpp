#include "shapovalov/oracle.hpp"
#include "shapovalov/serialize.hpp"
#include "shapovalov/shapovalov.hpp"
#include "shapovalov/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <thread>

using namespace shapovalov;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInadmissible = 2, kVerifyFailed = 3, kSamplingExhausted = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

Root parse_root(const RootSystem& rs, const std::string& text) {
    Root r;
    for (const auto& part : split(text, ',')) {
        try {
            r.coeffs.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw UsageError("malformed root coefficient '" + part + "'");
        }
    }
    if (static_cast<int>(r.size()) != rs.rank())
        throw UsageError("expected " + std::to_string(rs.rank()) + " coefficients, got '" + text + "'");
    return r;
}

Weight parse_weight(const RootSystem& rs, const std::string& text) {
    Weight w;
    for (const auto& part : split(text, ',')) {
        try {
            w.coords.push_back(parse_rational(part));
        } catch (const std::exception&) {
            throw UsageError("malformed rational '" + part + "'");
        }
    }
    if (static_cast<int>(w.size()) != rs.rank())
        throw UsageError("expected " + std::to_string(rs.rank()) + " weight coordinates, got '" + text + "'");
    return w;
}

RootSystem parse_type(const std::string& type) {
    try {
        return RootSystem::parse(type);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::optional<int> parse_alpha(const RootSystem& rs, int alpha) {
    if (alpha == 0) return std::nullopt;
    if (alpha < 1 || alpha > rs.rank()) throw UsageError("--alpha must be between 1 and " + std::to_string(rs.rank()));
    return alpha - 1;
}

std::string exceptional_note(const RootSystem& rs, const Root& beta) {
    if (rs.is_positive_root(beta) && admissible_alphas(rs, beta).empty())
        return "\n" + root_label(beta) + " is one of the three roots that have no admissible representations "
               "(G2: α1+2α2, F4: α1+2α2+3α3+2α4, E8: the maximal root)";
    return "";
}

// --------------------------------------------------------------------------

int cmd_roots(const std::string& type, const std::string& format) {
    const RootSystem rs = parse_type(type);
    if (format == "json") {
        Json roots = Json::array();
        for (const auto& r : rs.positive_roots())
            roots.push_back({{"root", to_json(r)}, {"label", root_label(r, true)}, {"height", r.height()},
                             {"norm", to_string(rs.inner(r, r))}});
        Json fund = Json::array();
        for (int i = 0; i < rs.rank(); ++i) {
            Json c = Json::array();
            for (const auto& q : rs.to_simple_coords(rs.fundamental_weight(i))) c.push_back(to_string(q));
            fund.push_back(c);
        }
        Json rho = Json::array();
        for (const auto& q : rs.to_simple_coords(rs.rho())) rho.push_back(to_string(q));
        Json out = {{"schema", kSchema}, {"type", rs.name()}, {"rank", rs.rank()},
                    {"cartan_matrix", rs.datum().matrix}, {"positive_roots", roots},
                    {"rho", rho}, {"fundamental_weights", fund}};
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "type " << rs.name() << ", rank " << rs.rank() << ", " << rs.num_positive() << " positive roots\n";
    for (std::size_t i = 0; i < rs.num_positive(); ++i) {
        const Root& r = rs.root(i);
        std::cout << "  " << to_string(r) << "  " << root_label(r) << "  height " << r.height() << "  (β,β) = "
                  << to_string(rs.inner(r, r)) << "\n";
    }
    auto simple_coords = [&](const Weight& w) {
        std::string s = "[";
        for (const auto& q : rs.to_simple_coords(w)) s += (s.size() > 1 ? ", " : "") + to_string(q);
        return s + "]";
    };
    std::cout << "rho = " << simple_coords(rs.rho()) << " (simple-root coordinates)\n";
    for (int i = 0; i < rs.rank(); ++i)
        std::cout << "omega" << i + 1 << " = " << simple_coords(rs.fundamental_weight(i)) << "\n";
    return kOk;
}

struct ThetaOptions {
    std::string type;
    std::string beta;
    int m = 1;
    int alpha = 0;
    std::string lambda = "universal";
    std::string format = "json";
    std::string order = "standard";
    bool verify = false;
};

int cmd_theta(const ThetaOptions& opt) {
    const RootSystem rs0 = parse_type(opt.type);
    const Root beta = parse_root(rs0, opt.beta);
    if (opt.m < 1) throw UsageError("--m must be positive");
    const auto alpha = parse_alpha(rs0, opt.alpha);
    const StructureTable table = StructureTable::build(rs0);
    const RootSystem& rs = table.root_system();

    AdmissiblePair pair;
    try {
        pair = make_admissible_pair(rs, beta, alpha);
    } catch (const InadmissibleError& e) {
        std::cerr << "error: " << e.what() << exceptional_note(rs, beta) << "\n";
        return kInadmissible;
    }
    PbwOrder order = PbwOrder::standard(rs);
    if (opt.order == "adapted") order = PbwOrder::alpha_adapted(rs, pair.alpha);
    else if (opt.order != "standard") throw UsageError("--order must be standard or adapted");
    NegativeAlgebra alg(table, order);

    const ShapovalovElement theta1 = theta_one(alg, pair);
    std::vector<AffineForm> avoid;
    for (const auto& f : shifted_ledger(rs, theta1, opt.m)) avoid.push_back(f.form);
    if (pair.plain_power)
        for (int k = 1; k < opt.m; ++k)
            for (const auto& f : theta1.ledger) avoid.push_back(f.form.shifted(-(Rational(k) * rs.to_weight(beta))));

    std::optional<Weight> lambda;
    if (opt.lambda.rfind("sample:", 0) == 0) {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(opt.lambda.substr(7));
        } catch (const std::exception&) {
            throw UsageError("malformed seed in '" + opt.lambda + "'");
        }
        try {
            lambda = sample_kac_kazhdan(rs, beta, opt.m, seed, 0, avoid).lambda;
        } catch (const SamplingError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kSamplingExhausted;
        }
    } else if (opt.lambda != "universal") {
        lambda = parse_weight(rs, opt.lambda);
    }

    const ShapovalovElement theta = opt.m == 1 ? theta1 : theta_universal(alg, theta1, opt.m);
    std::optional<NumericElement> value;
    if (lambda) {
        auto v = theta_numeric(alg, theta1, opt.m, *lambda);
        if (auto* pole = std::get_if<Pole>(&v)) {
            std::cerr << "error: λ = " << to_string(*lambda) << " is a pole: " << to_string(pole->factor) << " = 0\n";
            return kSamplingExhausted;
        }
        value = std::get<NumericElement>(v);
    }

    if (opt.format == "json") {
        std::cout << theta_to_json(alg, theta, lambda, value ? &*value : nullptr).dump(2) << "\n";
    } else if (opt.format == "latex") {
        std::cout << to_latex(alg, theta) << "\n";
        if (value) std::cout << to_latex(alg, *value) << "\n";
    } else {
        throw UsageError("--format must be json or latex");
    }

    if (!opt.verify) return kOk;

    // verification needs a point of H_{β,m}
    Weight point;
    if (lambda) {
        point = *lambda;
    } else {
        try {
            point = sample_kac_kazhdan(rs, beta, opt.m, 1, 0, avoid).lambda;
        } catch (const SamplingError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kSamplingExhausted;
        }
    }
    auto numeric = theta_numeric(alg, theta1, opt.m, point);
    if (std::holds_alternative<Pole>(numeric)) {
        std::cerr << "verify: pole at " << to_string(point) << "\n";
        return kSamplingExhausted;
    }
    const auto& v = std::get<NumericElement>(numeric);
    bool ok = true;
    auto report = [&](const std::string& what, bool pass) {
        std::cerr << "verify: " << what << ": " << (pass ? "pass" : "FAIL") << "\n";
        ok = ok && pass;
    };
    report("λ on the Kac-Kazhdan hyperplane", on_kac_kazhdan(rs, beta, opt.m, point));
    report("extremal", verify_extremal(alg, v, point).extremal);
    const auto kernel = singular_vector_solve(alg, point, opt.m * beta);
    report("oracle kernel (dim " + std::to_string(kernel.size()) + ") contains θ v_λ",
           !v.is_zero() && !kernel.empty() &&
               (kernel.size() == 1 ? proportional(v, kernel.front()).has_value() : in_span(v, kernel)));
    if (opt.m > 1) {
        auto u = evaluate(theta.element, point);
        report("universal mode agrees", std::holds_alternative<NumericElement>(u) && !v.is_zero() &&
                                            proportional(std::get<NumericElement>(u), v).has_value());
        if (pair.plain_power) {
            auto pp = theta_plain_power(alg, theta1, opt.m, point);
            report("plain power agrees", std::holds_alternative<NumericElement>(pp) && !v.is_zero() &&
                                             proportional(std::get<NumericElement>(pp), v).has_value());
        }
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_sweep(const std::string& types, int m_max, int samples, std::uint64_t seed, unsigned jobs, bool no_universal,
              bool no_oracle) {
    SweepConfig cfg;
    cfg.types = split(types, ',');
    for (const auto& t : cfg.types) parse_type(t);
    if (cfg.types.empty()) throw UsageError("--types is empty");
    cfg.m_max = m_max;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    cfg.universal = !no_universal;
    cfg.oracle = !no_oracle;
    const SweepReport report = run_sweep(cfg);
    std::cout << to_json(report).dump(2) << "\n";
    if (report.all_passed()) return kOk;
    return report.count("fail") > 0 ? kVerifyFailed : kSamplingExhausted;
}

int cmd_table(const std::string& type) {
    const StructureTable table = StructureTable::build(parse_type(type));
    std::cout << structure_table_to_json(table).dump(2) << "\n";
    const auto rep = verify_structure(table);
    if (!rep.ok) {
        for (const auto& f : rep.failures) std::cerr << "structure: " << f << "\n";
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_hasse(const std::string& type, const std::string& format, const std::string& beta_text, int alpha) {
    const StructureTable table = StructureTable::build(parse_type(type));
    const RootSystem& rs = table.root_system();
    HasseDiagram d = build_hasse_bminus(table);
    if (!beta_text.empty()) {
        const Root beta = parse_root(rs, beta_text);
        if (!rs.is_positive_root(beta)) throw UsageError(to_string(beta) + " is not a positive root");
        const auto a = parse_alpha(rs, alpha);
        if (!a) throw UsageError("--alpha is required with --beta");
        d = route_subdiagram(d, rs, beta, *a);
    }
    if (format == "dot")
        std::cout << to_dot(d, rs);
    else if (format == "json")
        std::cout << hasse_to_json(rs, d).dump(2) << "\n";
    else
        throw UsageError("--format must be dot or json");
    return kOk;
}

int cmd_chains(const std::string& type, const std::string& beta_text, int alpha) {
    const RootSystem rs = parse_type(type);
    const Root beta = parse_root(rs, beta_text);
    if (!rs.is_positive_root(beta)) throw UsageError(to_string(beta) + " is not a positive root");
    const auto a = parse_alpha(rs, alpha);
    if (!a) throw UsageError("--alpha is required");
    const auto chains = descent_chains(rs, beta, *a);
    if (chains.empty()) std::cerr << "warning: α" << *a + 1 << " is not in the support of " << root_label(beta) << "\n";
    std::cout << Json{{"schema", kSchema}, {"type", rs.name()}, {"beta", to_json(beta)}, {"alpha", *a + 1},
                      {"chains", chains_to_json(rs, chains)}}
                     .dump(2)
              << "\n";
    return kOk;
}

int cmd_gram(const std::string& type, const std::string& mu_text, const std::string& lambda_text) {
    const StructureTable table = StructureTable::build(parse_type(type));
    const RootSystem& rs = table.root_system();
    const Root mu = parse_root(rs, mu_text);
    if (!mu.is_nonnegative()) throw UsageError("μ must be a nonnegative combination of simple roots");
    NegativeAlgebra alg(table);
    Json out = {{"schema", kSchema}, {"type", rs.name()}};
    if (lambda_text == "symbolic") {
        if (mu.height() > 4) throw UsageError("symbolic Gram determinants are limited to height(μ) ≤ 4");
        const GramMatrix g = gram(alg, mu);
        const CartanPolynomial det = determinant(g.entries, rs.rank());
        const auto fd = factor_gram_determinant(rs, mu, det);
        Json factors = Json::array();
        for (const auto& [f, e] : fd.factors) factors.push_back({{"form", to_string(f)}, {"power", e}});
        out["lambda"] = "symbolic";
        out["gram"] = gram_to_json(alg, g);
        out["determinant"] = to_string(det);
        out["factored"] = {{"constant", to_string(fd.constant)}, {"factors", factors},
                           {"remainder", to_string(fd.remainder)}};
    } else {
        const Weight lambda = parse_weight(rs, lambda_text);
        const NumericGramMatrix g = gram(alg, mu, lambda);
        out["lambda"] = to_json(lambda);
        out["gram"] = gram_to_json(alg, g);
        out["determinant"] = to_string(determinant(g.entries));
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shapovalov elements of simple Lie algebras: construction and verification"};
    app.require_subcommand(1);

    std::string type, format;
    auto* roots = app.add_subcommand("roots", "List positive roots, ρ and fundamental weights");
    roots->add_option("type", type, "Cartan type, e.g. G2")->required();
    roots->add_option("--format", format, "text or json")->default_val("text");

    ThetaOptions th;
    auto* theta = app.add_subcommand("theta", "Compute θ_{β,m}");
    theta->add_option("--type", th.type, "Cartan type")->required();
    theta->add_option("--beta", th.beta, "β as simple-root coefficients, e.g. 1,1")->required();
    theta->add_option("--m", th.m, "Multiplicity m ≥ 1")->default_val(1);
    theta->add_option("--alpha", th.alpha, "Simple root index (1-based); default: first admissible");
    theta->add_option("--lambda", th.lambda, "universal | sample:SEED | comma-separated rationals (fundamental coordinates)")
        ->default_val("universal");
    theta->add_option("--format", th.format, "json or latex")->default_val("json");
    theta->add_option("--order", th.order, "PBW order: standard or adapted")->default_val("standard");
    theta->add_flag("--verify", th.verify, "Check extremality and agreement with the oracle");

    std::string types = "A2,A3,B2,B3,C3,D4,G2";
    int m_max = 3, samples = 5;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    bool no_universal = false, no_oracle = false;
    auto* sweep = app.add_subcommand("sweep", "Verify every admissible (β, α, m) at sampled λ");
    sweep->add_option("--types", types, "Comma-separated Cartan types")->capture_default_str();
    sweep->add_option("--m-max", m_max, "Largest m")->capture_default_str()->check(CLI::Range(1, 8));
    sweep->add_option("--samples", samples, "λ samples per case")->capture_default_str()->check(CLI::Range(1, 1000));
    sweep->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    sweep->add_option("--jobs", jobs, "Worker threads (0: all cores)")->capture_default_str();
    sweep->add_flag("--no-universal", no_universal, "Skip the universal-mode comparison");
    sweep->add_flag("--no-oracle", no_oracle, "Skip the singular-vector oracle");

    std::string table_type;
    auto* table = app.add_subcommand("table", "Dump structure constants as JSON");
    table->add_option("type", table_type, "Cartan type")->required();

    std::string hasse_type, hasse_format = "dot", hasse_beta;
    int hasse_alpha = 0;
    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of b_-");
    hasse->add_option("type", hasse_type, "Cartan type")->required();
    hasse->add_option("--format", hasse_format, "dot or json")->capture_default_str();
    hasse->add_option("--beta", hasse_beta, "Restrict to routes from f_β");
    hasse->add_option("--alpha", hasse_alpha, "... down to h_α (1-based)");

    std::string chains_type, chains_beta;
    int chains_alpha = 0;
    auto* chains = app.add_subcommand("chains", "Descent chains of (β, α)");
    chains->add_option("--type", chains_type, "Cartan type")->required();
    chains->add_option("--beta", chains_beta, "β as simple-root coefficients")->required();
    chains->add_option("--alpha", chains_alpha, "Simple root index (1-based)")->required();

    std::string gram_type, gram_mu, gram_lambda = "symbolic";
    auto* gramc = app.add_subcommand("gram", "Gram matrix of the contravariant form on V_λ[λ − μ]");
    gramc->add_option("--type", gram_type, "Cartan type")->required();
    gramc->add_option("--mu", gram_mu, "μ as simple-root coefficients")->required();
    gramc->add_option("--lambda", gram_lambda, "symbolic or comma-separated rationals")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*roots) return cmd_roots(type, format);
        if (*theta) return cmd_theta(th);
        if (*sweep) return cmd_sweep(types, m_max, samples, seed, jobs, no_universal, no_oracle);
        if (*table) return cmd_table(table_type);
        if (*hasse) return cmd_hasse(hasse_type, hasse_format, hasse_beta, hasse_alpha);
        if (*chains) return cmd_chains(chains_type, chains_beta, chains_alpha);
        if (*gramc) return cmd_gram(gram_type, gram_mu, gram_lambda);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InadmissibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInadmissible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
