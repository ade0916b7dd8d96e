#include "shapovalov/uea.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace shapovalov {

PbwOrder::PbwOrder(std::vector<std::size_t> root_at) : root_at_(std::move(root_at)), position_of_(root_at_.size()) {
    for (std::size_t p = 0; p < root_at_.size(); ++p) position_of_[root_at_[p]] = p;
}

PbwOrder PbwOrder::standard(const RootSystem& rs) {
    std::vector<std::size_t> v(rs.num_positive());
    std::iota(v.begin(), v.end(), 0);
    return PbwOrder(std::move(v));
}

PbwOrder PbwOrder::alpha_adapted(const RootSystem& rs, int alpha) {
    std::vector<std::size_t> v(rs.num_positive());
    std::iota(v.begin(), v.end(), 0);
    std::stable_sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) {
        return rs.multiplicity(alpha, rs.root(a)) > rs.multiplicity(alpha, rs.root(b));
    });
    return PbwOrder(std::move(v));
}

namespace {

std::size_t hash_bytes(const PbwMonomial& m, std::size_t seed) {
    std::string_view bytes(reinterpret_cast<const char*>(m.data()), m.size());
    return std::hash<std::string_view>{}(bytes) ^ (seed * 0x9e3779b97f4a7c15ULL);
}

std::size_t first_position(const PbwMonomial& m) {
    std::size_t p = 0;
    while (p < m.size() && m[p] == 0) ++p;
    return p;
}

void accumulate(std::map<PbwMonomial, Rational>& acc, const PbwMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

Terms to_terms(std::map<PbwMonomial, Rational>&& acc) {
    Terms out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) out.emplace_back(m, std::move(c));
    return out;
}

}  // namespace

std::size_t NegativeAlgebra::KeyHash::operator()(const std::pair<std::size_t, PbwMonomial>& k) const {
    return hash_bytes(k.second, k.first + 1);
}

std::size_t NegativeAlgebra::PairHash::operator()(const std::pair<PbwMonomial, PbwMonomial>& k) const {
    return hash_bytes(k.first, 1) ^ (hash_bytes(k.second, 2) << 1);
}

NegativeAlgebra::NegativeAlgebra(const StructureTable& table, PbwOrder order) : table_(table), order_(std::move(order)) {
    if (order_.size() != table.num_roots()) throw std::invalid_argument("PBW order does not match the root system");
}

PbwMonomial NegativeAlgebra::generator(std::size_t root) const {
    PbwMonomial m = unit();
    m[order_.position_of(root)] = 1;
    return m;
}

Root NegativeAlgebra::root_sum(const PbwMonomial& m) const {
    const RootSystem& rs = root_system();
    Root s = Root::zero(rs.rank());
    for (std::size_t p = 0; p < m.size(); ++p)
        if (m[p]) s += static_cast<int>(m[p]) * rs.root(order_.root_at(p));
    return s;
}

std::size_t NegativeAlgebra::degree(const PbwMonomial& m) const {
    return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

std::vector<std::size_t> NegativeAlgebra::factors(const PbwMonomial& m) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < m.size(); ++p)
        for (int k = 0; k < m[p]; ++k) out.push_back(order_.root_at(p));
    return out;
}

std::string NegativeAlgebra::label(const PbwMonomial& m, bool ascii) const {
    std::string s;
    for (std::size_t p = 0; p < m.size(); ++p) {
        if (!m[p]) continue;
        if (!s.empty()) s += " ";
        s += "f_{" + root_label(root_system().root(order_.root_at(p)), ascii) + "}";
        if (m[p] > 1) s += "^" + std::to_string(m[p]);
    }
    return s.empty() ? "1" : s;
}

const Terms& NegativeAlgebra::left_multiply(std::size_t root, const PbwMonomial& m) {
    auto key = std::make_pair(root, m);
    if (auto it = left_cache_.find(key); it != left_cache_.end()) return it->second;

    const std::size_t p = order_.position_of(root);
    const std::size_t q = first_position(m);
    std::map<PbwMonomial, Rational> acc;
    if (q == m.size() || p <= q) {
        PbwMonomial r = m;
        if (r[p] == 255) throw std::overflow_error("PBW exponent overflow");
        ++r[p];
        acc.emplace(std::move(r), 1);
    } else {
        // f_r f_k R = f_k (f_r R) + [f_r, f_k] R
        const std::size_t k = order_.root_at(q);
        PbwMonomial rest = m;
        --rest[q];
        const Terms inner = left_multiply(root, rest);
        for (const auto& [m1, c1] : inner)
            for (const auto& [m2, c2] : left_multiply(k, m1)) accumulate(acc, m2, c1 * c2);
        if (auto s = root_system().sum_index(root, k)) {
            const Rational n = table_.N(root, k);
            const Terms shifted = left_multiply(*s, rest);
            for (const auto& [m1, c1] : shifted) accumulate(acc, m1, n * c1);
        }
    }
    return left_cache_.emplace(std::move(key), to_terms(std::move(acc))).first->second;
}

const Terms& NegativeAlgebra::product(const PbwMonomial& ma, const PbwMonomial& mb) {
    auto key = std::make_pair(ma, mb);
    if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
    Terms cur{{mb, Rational(1)}};
    const auto fa = factors(ma);
    for (auto it = fa.rbegin(); it != fa.rend(); ++it) {
        std::map<PbwMonomial, Rational> next;
        for (const auto& [m, c] : cur)
            for (const auto& [m2, c2] : left_multiply(*it, m)) accumulate(next, m2, c * c2);
        cur = to_terms(std::move(next));
    }
    return product_cache_.emplace(std::move(key), std::move(cur)).first->second;
}

NumericElement NegativeAlgebra::normal_order(const std::vector<std::size_t>& word) {
    std::map<PbwMonomial, Rational> cur{{unit(), Rational(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::map<PbwMonomial, Rational> next;
        for (const auto& [m, c] : cur)
            for (const auto& [m2, c2] : left_multiply(*it, m)) accumulate(next, m2, c * c2);
        cur = std::move(next);
    }
    NumericElement out;
    out.terms = std::move(cur);
    return out;
}

const AffineTerms& NegativeAlgebra::raise(std::size_t root, const PbwMonomial& m) {
    auto key = std::make_pair(root, m);
    if (auto it = raise_cache_.find(key); it != raise_cache_.end()) return it->second;

    const RootSystem& rs = root_system();
    std::map<PbwMonomial, AffineForm> acc;
    auto add = [&](const PbwMonomial& mono, const AffineForm& f) {
        if (f.is_constant() && f.constant == 0) return;
        auto [it, inserted] = acc.try_emplace(mono, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_constant() && it->second.constant == 0) acc.erase(it);
        }
    };
    const std::size_t q = first_position(m);
    if (q < m.size()) {
        // e_ν f_r R v = f_r (e_ν R v) + [e_ν, f_r] R v
        const std::size_t r = order_.root_at(q);
        PbwMonomial rest = m;
        --rest[q];
        const AffineTerms inner = raise(root, rest);
        for (const auto& [m1, a1] : inner)
            for (const auto& [m2, c2] : left_multiply(r, m1)) add(m2, c2 * a1);
        if (root == r) {
            // h_r acts on the weight λ − (root sum of R) by (·, r).
            AffineForm h = AffineForm::pairing(rs, rs.root(r));
            h.constant = -rs.inner(root_sum(rest), rs.root(r));
            add(rest, h);
        } else if (auto d = rs.difference_index(r, root)) {
            const Rational c = table_.C(root, r);
            const Terms lowered = left_multiply(*d, rest);
            for (const auto& [m1, c1] : lowered) add(m1, AffineForm::constant_form(rs.rank(), c * c1));
        } else if (auto d2 = rs.difference_index(root, r)) {
            const Rational c = table_.D(root, r);
            const AffineTerms inner2 = raise(*d2, rest);
            for (const auto& [m1, a1] : inner2) add(m1, c * a1);
        }
    }
    AffineTerms out;
    out.reserve(acc.size());
    for (auto& [mono, f] : acc) out.emplace_back(mono, std::move(f));
    return raise_cache_.emplace(std::move(key), std::move(out)).first->second;
}

NumericElement NegativeAlgebra::act_e(std::size_t root, const NumericElement& v, const Weight& lambda) {
    NumericElement out;
    for (const auto& [m, c] : v.terms)
        for (const auto& [m2, a] : raise(root, m)) out.add(m2, c * a(lambda));
    return out;
}

SymbolicElement NegativeAlgebra::act_e(std::size_t root, const SymbolicElement& v) {
    SymbolicElement out;
    for (const auto& [m, c] : v.terms)
        for (const auto& [m2, a] : raise(root, m)) out.add(m2, c * CartanRational::from_affine(a));
    return out;
}

const CartanPolynomial& NegativeAlgebra::form(const PbwMonomial& x, const PbwMonomial& y) {
    auto key = std::make_pair(x, y);
    if (auto it = form_cache_.find(key); it != form_cache_.end()) return it->second;

    const int r = root_system().rank();
    CartanPolynomial value(r, 0);
    const std::size_t q = first_position(x);
    if (q == x.size()) {
        if (first_position(y) == y.size()) value = CartanPolynomial(r, 1);
    } else if (root_sum(x) == root_sum(y)) {
        // (f_γ X v, Y v) = κ_γ (X v, e_γ Y v)
        const std::size_t g = order_.root_at(q);
        PbwMonomial rest = x;
        --rest[q];
        const AffineTerms raised = raise(g, y);
        for (const auto& [m, a] : raised) {
            const CartanPolynomial sub = form(rest, m);
            if (!sub.is_zero()) value += CartanPolynomial::from_affine(a) * sub;
        }
        value *= table_.omega_factor(g);
    }
    return form_cache_.emplace(std::move(key), std::move(value)).first->second;
}

Rational NegativeAlgebra::form(const NumericElement& x, const NumericElement& y, const Weight& lambda) {
    Rational s = 0;
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) {
            const CartanPolynomial& p = form(mx, my);
            if (!p.is_zero()) s += cx * cy * p(lambda);
        }
    return s;
}

CartanRational NegativeAlgebra::form(const SymbolicElement& x, const SymbolicElement& y) {
    CartanRational s(root_system().rank(), 0);
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) {
            const CartanPolynomial& p = form(mx, my);
            if (!p.is_zero()) s += cx * cy * CartanRational(p);
        }
    return s;
}

std::vector<PbwMonomial> NegativeAlgebra::monomials_of_weight(const Root& mu) {
    if (auto it = weight_cache_.find(mu); it != weight_cache_.end()) return it->second;
    const RootSystem& rs = root_system();
    std::vector<PbwMonomial> out;
    PbwMonomial cur = unit();
    auto rec = [&](auto&& self, std::size_t p, Root remaining) -> void {
        if (remaining.is_zero()) {
            out.push_back(cur);
            return;
        }
        if (p == cur.size()) return;
        const Root& g = rs.root(order_.root_at(p));
        self(self, p + 1, remaining);
        Root r = remaining;
        while (true) {
            r -= g;
            if (!r.is_nonnegative()) break;
            ++cur[p];
            self(self, p + 1, r);
        }
        cur[p] = 0;
    };
    if (mu.is_nonnegative()) rec(rec, 0, mu);
    std::sort(out.begin(), out.end());
    weight_cache_.emplace(mu, out);
    return out;
}

std::variant<NumericElement, Pole> evaluate(const SymbolicElement& v, const Weight& lambda) {
    NumericElement out;
    for (const auto& [m, c] : v.terms) {
        auto value = c.evaluate(lambda);
        if (auto* pole = std::get_if<Pole>(&value)) return *pole;
        out.add(m, std::get<Rational>(value));
    }
    return out;
}

SymbolicElement to_symbolic(const NumericElement& v, int rank) {
    SymbolicElement out;
    for (const auto& [m, c] : v.terms) out.add(m, CartanRational(rank, c));
    return out;
}

}  // namespace shapovalov
