#include "shapovalov/coeffield.hpp"

#include <algorithm>
#include <stdexcept>

namespace shapovalov {

AffineForm AffineForm::constant_form(int rank, const Rational& c) {
    return AffineForm{std::vector<Rational>(static_cast<std::size_t>(rank)), c};
}

AffineForm AffineForm::pairing(const RootSystem& rs, const Root& mu) {
    AffineForm f = constant_form(rs.rank(), 0);
    for (std::size_t i = 0; i < f.coef.size(); ++i) f.coef[i] = rs.datum().symmetrizer[i] * mu[i];
    return f;
}

AffineForm AffineForm::eta(const RootSystem& rs, const Root& mu) {
    AffineForm f = pairing(rs, mu);
    f.constant = rs.inner(rs.rho(), mu) - rs.inner(mu, mu) / 2;
    return f;
}

bool AffineForm::is_constant() const {
    return std::all_of(coef.begin(), coef.end(), [](const Rational& c) { return c == 0; });
}

Rational AffineForm::operator()(const Weight& lambda) const {
    Rational s = constant;
    for (std::size_t i = 0; i < coef.size(); ++i)
        if (coef[i] != 0) s += coef[i] * lambda[i];
    return s;
}

AffineForm AffineForm::shifted(const Weight& nu) const {
    AffineForm f = *this;
    f.constant = (*this)(nu);
    return f;
}

AffineForm AffineForm::monic(Rational* factor) const {
    auto lead = std::find_if(coef.begin(), coef.end(), [](const Rational& c) { return c != 0; });
    Rational k = lead == coef.end() ? Rational(1) : *lead;
    if (factor) *factor = k;
    if (k == 1) return *this;
    return Rational(1 / k) * *this;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
    if (coef.size() < o.coef.size()) coef.resize(o.coef.size());
    for (std::size_t i = 0; i < o.coef.size(); ++i) coef[i] += o.coef[i];
    constant += o.constant;
    return *this;
}

AffineForm operator*(const Rational& k, AffineForm a) {
    for (auto& c : a.coef) c *= k;
    a.constant *= k;
    return a;
}

bool operator<(const AffineForm& a, const AffineForm& b) {
    for (std::size_t i = 0; i < a.coef.size() && i < b.coef.size(); ++i)
        if (int c = cmp(a.coef[i], b.coef[i]); c != 0) return c < 0;
    if (a.coef.size() != b.coef.size()) return a.coef.size() < b.coef.size();
    return a.constant < b.constant;
}

namespace {

std::string signed_term(const Rational& c, const std::string& var, bool first) {
    std::string s;
    Rational a = c;
    if (a < 0) {
        s += first ? "-" : " - ";
        a = -a;
    } else if (!first) {
        s += " + ";
    }
    if (var.empty()) return s + to_string(a);
    if (a != 1) s += to_string(a) + "*";
    return s + var;
}

std::string var_name(int i) { return "l" + std::to_string(i + 1); }

}  // namespace

std::string to_string(const AffineForm& f) {
    std::string s;
    for (std::size_t i = 0; i < f.coef.size(); ++i)
        if (f.coef[i] != 0) s += signed_term(f.coef[i], var_name(static_cast<int>(i)), s.empty());
    if (f.constant != 0 || s.empty()) s += signed_term(f.constant, "", s.empty());
    return s;
}

// ---------------------------------------------------------------------------

CartanPolynomial::CartanPolynomial(int rank, const Rational& c) : rank_(rank) {
    if (rank > 8) throw std::invalid_argument("CartanPolynomial supports rank at most 8");
    add_term(0, c);
}

CartanPolynomial CartanPolynomial::variable(int rank, int i) {
    CartanPolynomial p(rank, 0);
    p.add_term(Key{1} << (8 * i), 1);
    return p;
}

CartanPolynomial CartanPolynomial::from_affine(const AffineForm& f) {
    const int r = static_cast<int>(f.coef.size());
    CartanPolynomial p(r, f.constant);
    for (int i = 0; i < r; ++i) p.add_term(Key{1} << (8 * i), f.coef[static_cast<std::size_t>(i)]);
    return p;
}

void CartanPolynomial::add_term(Key k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool CartanPolynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational CartanPolynomial::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Rational(0) : it->second;
}

int CartanPolynomial::degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) {
        int s = 0;
        for (int i = 0; i < rank_; ++i) s += exponent(k, i);
        d = std::max(d, s);
    }
    return d;
}

CartanPolynomial& CartanPolynomial::operator+=(const CartanPolynomial& o) {
    rank_ = std::max(rank_, o.rank_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

CartanPolynomial& CartanPolynomial::operator-=(const CartanPolynomial& o) {
    rank_ = std::max(rank_, o.rank_);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

CartanPolynomial& CartanPolynomial::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    else
        for (auto& [k, v] : terms_) v *= c;
    return *this;
}

CartanPolynomial operator*(const CartanPolynomial& a, const CartanPolynomial& b) {
    CartanPolynomial out(std::max(a.rank_, b.rank_), 0);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    return out;
}

Rational CartanPolynomial::operator()(const Weight& lambda) const {
    Rational s = 0;
    std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(rank_));
    auto power = [&](int i, int e) -> const Rational& {
        auto& pw = powers[static_cast<std::size_t>(i)];
        if (pw.empty()) pw.push_back(1);
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * lambda[static_cast<std::size_t>(i)]);
        return pw[static_cast<std::size_t>(e)];
    };
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < rank_; ++i)
            if (int e = exponent(k, i)) t *= power(i, e);
        s += t;
    }
    return s;
}

CartanPolynomial CartanPolynomial::shifted(const Weight& nu) const {
    CartanPolynomial p = *this;
    for (int i = 0; i < rank_; ++i) {
        const Rational& c = nu[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        CartanPolynomial next(rank_, 0);
        for (const auto& [k, v] : p.terms_) {
            const int e = exponent(k, i);
            const Key base = k & ~(Key{0xff} << (8 * i));
            // (λ_i + c)^e = Σ binom(e, j) c^(e-j) λ_i^j
            Integer binom = 1;
            std::vector<Rational> cp(static_cast<std::size_t>(e) + 1);
            cp[0] = 1;
            for (int j = 1; j <= e; ++j) cp[static_cast<std::size_t>(j)] = cp[static_cast<std::size_t>(j) - 1] * c;
            for (int j = 0; j <= e; ++j) {
                next.add_term(base | (Key(static_cast<unsigned>(j)) << (8 * i)), v * binom * cp[static_cast<std::size_t>(e - j)]);
                binom = binom * (e - j) / (j + 1);
            }
        }
        p = std::move(next);
    }
    return p;
}

std::optional<CartanPolynomial> CartanPolynomial::divide(const AffineForm& f) const {
    Rational lead;
    AffineForm g = f.monic(&lead);
    auto first = std::find_if(g.coef.begin(), g.coef.end(), [](const Rational& c) { return c != 0; });
    if (first == g.coef.end()) throw std::invalid_argument("division by a constant affine form");
    const int j = static_cast<int>(first - g.coef.begin());
    const Key mask = Key{0xff} << (8 * j);

    // this = Σ_k p_k λ_j^k, divisor λ_j − r with r free of λ_j.
    int deg = 0;
    for (const auto& [k, c] : terms_) deg = std::max(deg, exponent(k, j));
    std::vector<CartanPolynomial> p(static_cast<std::size_t>(deg) + 1, CartanPolynomial(rank_, 0));
    for (const auto& [k, c] : terms_) p[static_cast<std::size_t>(exponent(k, j))].add_term(k & ~mask, c);
    AffineForm rf = g;
    rf.coef[static_cast<std::size_t>(j)] = 0;
    CartanPolynomial r = -from_affine(rf);
    r.rank_ = rank_;

    CartanPolynomial q(rank_, 0);
    CartanPolynomial carry(rank_, 0);
    for (int k = deg; k >= 1; --k) {
        carry = p[static_cast<std::size_t>(k)] + r * carry;
        for (const auto& [key, c] : carry.terms_) q.add_term(key | (Key(static_cast<unsigned>(k - 1)) << (8 * j)), c);
    }
    CartanPolynomial rem = p[0] + r * carry;
    if (!rem.is_zero()) return std::nullopt;
    return q * (1 / lead);
}

std::string to_string(const CartanPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string mono;
        for (int i = 0; i < p.rank(); ++i) {
            int e = CartanPolynomial::exponent(it->first, i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        s += signed_term(it->second, mono, s.empty());
    }
    return s;
}

// ---------------------------------------------------------------------------

CartanRational CartanRational::inverse(const AffineForm& f) {
    Rational lead;
    AffineForm g = f.monic(&lead);
    if (g.is_constant()) throw std::invalid_argument("inverse of a constant affine form");
    CartanRational q(static_cast<int>(f.coef.size()), 1 / lead);
    q.den_[g] = 1;
    return q;
}

namespace {

CartanPolynomial power_product(const std::map<AffineForm, int>& factors, int rank) {
    CartanPolynomial p(rank, 1);
    for (const auto& [f, e] : factors)
        for (int k = 0; k < e; ++k) p = p * CartanPolynomial::from_affine(f);
    return p;
}

}  // namespace

CartanRational& CartanRational::operator+=(const CartanRational& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_.clear();
        else reduce();
        return *this;
    }
    std::map<AffineForm, int> lcm = den_, mine, theirs;
    for (const auto& [f, e] : o.den_) lcm[f] = std::max(lcm[f], e);
    for (const auto& [f, e] : lcm) {
        auto a = den_.find(f);
        auto b = o.den_.find(f);
        int ea = a == den_.end() ? 0 : a->second;
        int eb = b == o.den_.end() ? 0 : b->second;
        if (e > ea) mine[f] = e - ea;
        if (e > eb) theirs[f] = e - eb;
    }
    const int r = std::max(rank(), o.rank());
    num_ = num_ * power_product(mine, r) + o.num_ * power_product(theirs, r);
    den_ = std::move(lcm);
    if (num_.is_zero()) den_.clear();
    else reduce();
    return *this;
}

CartanRational& CartanRational::operator-=(const CartanRational& o) { return *this += -o; }

CartanRational& CartanRational::operator*=(const CartanRational& o) {
    num_ = num_ * o.num_;
    if (num_.is_zero()) {
        den_.clear();
        return *this;
    }
    for (const auto& [f, e] : o.den_) den_[f] += e;
    reduce();
    return *this;
}

CartanRational& CartanRational::operator*=(const Rational& c) {
    num_ *= c;
    if (num_.is_zero()) den_.clear();
    return *this;
}

CartanRational CartanRational::divided_by(const AffineForm& f) const {
    return *this * inverse(f);
}

void CartanRational::reduce() {
    if (num_.is_constant()) return;
    for (auto it = den_.begin(); it != den_.end();) {
        // Cheap screen: the numerator must vanish at a generic point of f = 0.
        const AffineForm& f = it->first;
        const auto r = f.coef.size();
        Weight probe = Weight::zero(static_cast<int>(r));
        std::size_t j = 0;
        while (f.coef[j] == 0) ++j;
        for (std::size_t i = 0; i < r; ++i)
            if (i != j) probe[i] = Rational(static_cast<long>(7 + 13 * i), static_cast<long>(3 + 2 * i));
        probe[j] = 0;
        probe[j] = -f(probe) / f.coef[j];
        while (it->second > 0 && num_(probe) == 0) {
            auto q = num_.divide(f);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

std::variant<Rational, Pole> CartanRational::evaluate(const Weight& lambda) const {
    Rational d = 1;
    for (const auto& [f, e] : den_) {
        Rational v = f(lambda);
        if (v == 0) return Pole{f};
        for (int k = 0; k < e; ++k) d *= v;
    }
    return num_(lambda) / d;
}

CartanRational CartanRational::shifted(const Weight& nu) const {
    CartanRational out(num_.shifted(nu));
    for (const auto& [f, e] : den_) {
        Rational lead;
        AffineForm g = f.shifted(nu).monic(&lead);
        out.den_[g] += e;
        for (int k = 0; k < e; ++k) out.num_ *= 1 / lead;
    }
    out.reduce();
    return out;
}

std::string to_string(const CartanRational& q) {
    std::string s = to_string(q.numerator());
    if (q.is_polynomial()) return s;
    if (q.numerator().terms().size() > 1) s = "(" + s + ")";
    std::string d;
    for (const auto& [f, e] : q.denominator()) {
        if (!d.empty()) d += "*";
        d += "(" + to_string(f) + ")";
        if (e > 1) d += "^" + std::to_string(e);
    }
    return s + "/" + (q.denominator().size() > 1 || q.denominator().begin()->second > 1 ? "(" + d + ")" : d);
}

}  // namespace shapovalov
