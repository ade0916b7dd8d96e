#include "shapovalov/serialize.hpp"

#include <map>
#include <sstream>

namespace shapovalov {

Json to_json(const Root& r) { return Json(r.coeffs); }

Json to_json(const Weight& w) {
    Json out = Json::array();
    for (const auto& c : w.coords) out.push_back(to_string(c));
    return out;
}

Json to_json(const AffineForm& f) {
    Json coef = Json::array();
    for (const auto& c : f.coef) coef.push_back(to_string(c));
    return {{"coefficients", coef}, {"constant", to_string(f.constant)}};
}

Json to_json(const CartanPolynomial& p) {
    Json out = Json::array();
    for (const auto& [k, c] : p.terms()) {
        Json exps = Json::array();
        for (int i = 0; i < p.rank(); ++i) exps.push_back(CartanPolynomial::exponent(k, i));
        out.push_back({{"exponents", exps}, {"coefficient", to_string(c)}});
    }
    return out;
}

Json to_json(const CartanRational& q) {
    Json den = Json::array();
    for (const auto& [f, e] : q.denominator()) den.push_back({{"form", to_json(f)}, {"power", e}});
    return {{"num", to_json(q.numerator())}, {"den", den}};
}

namespace {

Json coeff_json(const Rational& c) {
    return {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}
Json coeff_json(const CartanRational& c) { return to_json(c); }

Json monomial_json(const NegativeAlgebra& alg, const PbwMonomial& m) {
    Json out = Json::array();
    for (std::size_t pos = 0; pos < m.size(); ++pos)
        if (m[pos] != 0) out.push_back({to_json(alg.root_system().root(alg.order().root_at(pos))), m[pos]});
    return out;
}

template <class Coef>
Json element_json(const NegativeAlgebra& alg, const NegElement<Coef>& v) {
    Json terms = Json::array();
    for (const auto& [m, c] : v.terms) terms.push_back({{"monomial", monomial_json(alg, m)}, {"coeff", coeff_json(c)}});
    return {{"terms", terms}};
}

}  // namespace

Json to_json(const NegativeAlgebra& alg, const NumericElement& v) { return element_json(alg, v); }
Json to_json(const NegativeAlgebra& alg, const SymbolicElement& v) { return element_json(alg, v); }

Json theta_to_json(const NegativeAlgebra& alg, const ShapovalovElement& theta, const std::optional<Weight>& lambda,
                   const NumericElement* evaluated) {
    const RootSystem& rs = alg.root_system();
    Json out;
    out["schema"] = kSchema;
    out["type"] = rs.name();
    out["beta"] = to_json(theta.pair.beta);
    out["m"] = theta.m;
    out["alpha"] = theta.pair.alpha + 1;
    out["plain_power"] = theta.pair.plain_power;
    out["lambda"] = lambda ? to_json(*lambda) : Json("universal");
    Json ledger = Json::array();
    for (const auto& f : theta.ledger)
        ledger.push_back({{"mu", to_json(f.mu)}, {"shift", f.shift}, {"form", to_json(f.form)}});
    out["denominators"] = ledger;
    out["element"] = lambda && evaluated ? to_json(alg, *evaluated) : to_json(alg, theta.element);
    return out;
}

Json structure_table_to_json(const StructureTable& table) {
    const RootSystem& rs = table.root_system();
    Json c = Json::array(), n = Json::array();
    for (std::size_t nu = 0; nu < rs.num_positive(); ++nu)
        for (std::size_t g = 0; g < rs.num_positive(); ++g) {
            if (rs.difference_index(g, nu))
                c.push_back({{"nu", to_json(rs.root(nu))}, {"gamma", to_json(rs.root(g))}, {"value", to_string(table.C(nu, g))}});
            if (rs.sum_index(nu, g))
                n.push_back({{"mu", to_json(rs.root(nu))}, {"nu", to_json(rs.root(g))}, {"value", to_string(table.N(nu, g))}});
        }
    return {{"schema", kSchema}, {"type", rs.name()}, {"C", c}, {"N", n}};
}

Json hasse_to_json(const RootSystem& rs, const HasseDiagram& d) {
    Json nodes = Json::array(), edges = Json::array();
    for (std::size_t i = 0; i < d.nodes.size(); ++i) nodes.push_back(d.node_label(rs, i, true));
    for (const auto& e : d.edges)
        edges.push_back({{"source", d.node_label(rs, e.source, true)},
                         {"target", d.node_label(rs, e.target, true)},
                         {"label", "e_a" + std::to_string(e.label + 1)},
                         {"coefficient", to_string(e.coefficient)}});
    return {{"schema", kSchema}, {"type", rs.name()}, {"nodes", nodes}, {"edges", edges}, {"removed_arrows", d.removed_arrows}};
}

Json chains_to_json(const RootSystem& rs, const std::vector<DescentChain>& chains) {
    Json out = Json::array();
    for (const auto& ch : chains) {
        Json g = Json::array();
        for (auto i : ch.gammas) g.push_back(to_json(rs.root(i)));
        out.push_back(g);
    }
    return out;
}

Json gram_to_json(const NegativeAlgebra& alg, const NumericGramMatrix& g) {
    Json basis = Json::array(), rows = Json::array();
    for (const auto& m : g.basis.monomials) basis.push_back(monomial_json(alg, m));
    for (const auto& r : g.entries) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_string(x));
        rows.push_back(row);
    }
    return {{"mu", to_json(g.basis.mu)}, {"basis", basis}, {"matrix", rows}};
}

Json gram_to_json(const NegativeAlgebra& alg, const GramMatrix& g) {
    Json basis = Json::array(), rows = Json::array();
    for (const auto& m : g.basis.monomials) basis.push_back(monomial_json(alg, m));
    for (const auto& r : g.entries) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_json(x));
        rows.push_back(row);
    }
    return {{"mu", to_json(g.basis.mu)}, {"basis", basis}, {"matrix", rows}};
}

// ---------------------------------------------------------------------------

std::string latex_root(const Root& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const int c = r[i];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        if (std::abs(c) != 1) s += std::to_string(std::abs(c));
        s += "\\alpha_{" + std::to_string(i + 1) + "}";
    }
    return s.empty() ? "0" : s;
}

std::string latex_monomial(const NegativeAlgebra& alg, const PbwMonomial& m) {
    std::string s;
    for (std::size_t pos = 0; pos < m.size(); ++pos) {
        if (m[pos] == 0) continue;
        if (!s.empty()) s += " ";
        s += "f_{" + latex_root(alg.root_system().root(alg.order().root_at(pos))) + "}";
        if (m[pos] > 1) s += "^{" + std::to_string(m[pos]) + "}";
    }
    return s.empty() ? "1" : s;
}

namespace {

std::string latex_rational(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    std::string sign = q < 0 ? "-" : "";
    Integer num = abs(q.get_num());
    return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_polynomial(const CartanPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string mono;
        for (int i = 0; i < p.rank(); ++i) {
            const int e = CartanPolynomial::exponent(it->first, i);
            if (e == 0) continue;
            mono += "\\lambda_{" + std::to_string(i + 1) + "}";
            if (e > 1) mono += "^{" + std::to_string(e) + "}";
        }
        Rational c = it->second;
        const bool negative = c < 0;
        if (negative) c = -c;
        std::string term = mono.empty() ? latex_rational(c) : (c == 1 ? mono : latex_rational(c) + mono);
        if (s.empty())
            s = negative ? "-" + term : term;
        else
            s += (negative ? " - " : " + ") + term;
    }
    return s;
}

std::string latex_affine(const AffineForm& f) {
    CartanPolynomial p = CartanPolynomial::from_affine(f);
    return "(" + latex_polynomial(p) + ")";
}

struct EtaLabel {
    std::string text;
    Rational scale;  // ledger form = scale · monic form
};

std::string eta_text(const EtaFactor& f) {
    std::string s = "\\eta_{" + latex_root(f.mu) + "}";
    if (f.shift == 1) s += "(\\lambda+\\nu_a)";
    else if (f.shift > 1) s += "(\\lambda+" + std::to_string(f.shift) + "\\nu_a)";
    return s;
}

std::string latex_coefficient(const CartanRational& q, const std::map<AffineForm, EtaLabel>& labels) {
    Rational scale = 1;
    std::string den;
    for (const auto& [f, e] : q.denominator()) {
        auto it = labels.find(f);
        std::string factor = it != labels.end() ? it->second.text : latex_affine(f);
        if (it != labels.end())
            for (int k = 0; k < e; ++k) scale *= it->second.scale;
        if (e > 1) factor = (it != labels.end() ? "{" + factor + "}" : factor) + "^{" + std::to_string(e) + "}";
        den += (den.empty() ? "" : " ") + factor;
    }
    const std::string num = latex_polynomial(q.numerator() * scale);
    if (den.empty()) return num;
    return "\\frac{" + num + "}{" + den + "}";
}

}  // namespace

std::string to_latex(const NegativeAlgebra& alg, const ShapovalovElement& theta) {
    std::map<AffineForm, EtaLabel> labels;
    for (const auto& f : theta.ledger) {
        Rational k;
        AffineForm g = f.form.monic(&k);
        labels.try_emplace(g, EtaLabel{eta_text(f), k});
    }
    std::string s = "\\theta_{" + latex_root(theta.pair.beta) + "," + std::to_string(theta.m) + "} = ";
    bool first = true;
    for (const auto& [m, c] : theta.element.terms) {
        if (!first) s += " + ";
        first = false;
        const std::string coef = latex_coefficient(c, labels);
        s += latex_monomial(alg, m) + (coef == "1" ? "" : " \\cdot " + coef);
    }
    if (first) s += "0";
    return s;
}

std::string to_latex(const NegativeAlgebra& alg, const NumericElement& v) {
    std::string s;
    for (const auto& [m, c] : v.terms) {
        Rational a = c;
        const bool negative = a < 0;
        if (negative) a = -a;
        const std::string term = (a == 1 ? "" : latex_rational(a) + " ") + latex_monomial(alg, m);
        if (s.empty())
            s = negative ? "-" + term : term;
        else
            s += (negative ? " - " : " + ") + term;
    }
    return (s.empty() ? "0" : s) + " v_{\\lambda}";
}

}  // namespace shapovalov
