#include "shapovalov/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

namespace shapovalov {

Root Root::simple(int rank, int i) {
    Root r = zero(rank);
    r.coeffs[static_cast<std::size_t>(i)] = 1;
    return r;
}

int Root::height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
}

bool Root::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Root::is_nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

Root& Root::operator+=(const Root& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

Root& Root::operator-=(const Root& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

Root operator*(int k, Root a) {
    for (int& c : a.coeffs) c *= k;
    return a;
}

Root operator-(Root a) { return -1 * std::move(a); }

Weight& Weight::operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

Weight operator*(const Rational& k, Weight a) {
    for (auto& c : a.coords) c *= k;
    return a;
}

Weight operator-(Weight a) { return Rational(-1) * std::move(a); }

bool operator<(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end(),
                                        [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

std::string to_string(const Root& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[i]);
    }
    return s + "]";
}

std::string to_string(const Weight& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += to_string(w[i]);
    }
    return s + "]";
}

std::string root_label(const Root& r, bool ascii) {
    std::string s;
    const std::string alpha = ascii ? "a" : "α";
    for (std::size_t i = 0; i < r.size(); ++i) {
        int c = r[i];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        int a = c < 0 ? -c : c;
        if (a != 1) s += std::to_string(a);
        s += alpha + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

namespace {

void link(CartanDatum& d, int i, int j, int aij, int aji) {
    d.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
    d.matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

bool valid_type(char s, int n) {
    switch (s) {
        case 'A': return n >= 1;
        case 'B': return n >= 2;
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
    }
}

}  // namespace

CartanDatum make_cartan_datum(char series, int rank) {
    series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
    if (!valid_type(series, rank))
        throw std::invalid_argument("not a simple Lie type: " + std::string(1, series) + std::to_string(rank));
    CartanDatum d;
    d.series = series;
    d.rank = rank;
    const auto n = static_cast<std::size_t>(rank);
    d.matrix.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) d.matrix[i][i] = 2;
    d.symmetrizer.assign(n, Rational(1));

    switch (series) {
        case 'A':
            for (int i = 0; i + 1 < rank; ++i) link(d, i, i + 1, -1, -1);
            break;
        case 'B':  // α_n short
            for (int i = 0; i + 1 < rank; ++i) link(d, i, i + 1, -1, -1);
            link(d, rank - 2, rank - 1, -1, -2);
            for (int i = 0; i + 1 < rank; ++i) d.symmetrizer[static_cast<std::size_t>(i)] = 2;
            break;
        case 'C':  // α_n long
            for (int i = 0; i + 1 < rank; ++i) link(d, i, i + 1, -1, -1);
            link(d, rank - 2, rank - 1, -2, -1);
            d.symmetrizer[n - 1] = 2;
            break;
        case 'D':
            for (int i = 0; i + 2 < rank; ++i) link(d, i, i + 1, -1, -1);
            link(d, rank - 3, rank - 1, -1, -1);
            break;
        case 'E':
            link(d, 0, 2, -1, -1);
            link(d, 1, 3, -1, -1);
            for (int i = 2; i + 1 < rank; ++i) link(d, i, i + 1, -1, -1);
            break;
        case 'F':  // α1, α2 long; α3, α4 short
            link(d, 0, 1, -1, -1);
            link(d, 1, 2, -1, -2);
            link(d, 2, 3, -1, -1);
            d.symmetrizer = {Rational(2), Rational(2), Rational(1), Rational(1)};
            break;
        case 'G':  // α1 long
            link(d, 0, 1, -1, -3);
            d.symmetrizer = {Rational(3), Rational(1)};
            break;
    }
    return d;
}

CartanDatum parse_cartan_type(std::string_view type) {
    if (type.size() < 2) throw std::invalid_argument("malformed type string '" + std::string(type) + "'");
    int rank = 0;
    const char* first = type.data() + 1;
    const char* last = type.data() + type.size();
    auto [ptr, ec] = std::from_chars(first, last, rank);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("malformed type string '" + std::string(type) + "'");
    return make_cartan_datum(type[0], rank);
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
    const int n = datum_.rank;
    const auto& a = datum_.matrix;

    // Closure by root strings: β + α_i is a root iff q > 0, where p is the
    // length of the α_i-string below β and q = p - <β, α_i^∨>.
    std::set<Root> roots;
    std::vector<Root> layer;
    for (int i = 0; i < n; ++i) {
        roots.insert(Root::simple(n, i));
        layer.push_back(Root::simple(n, i));
    }
    while (!layer.empty()) {
        std::vector<Root> next;
        for (const Root& b : layer) {
            for (int i = 0; i < n; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                int p = 0;
                for (Root c = b;;) {
                    c.coeffs[iu] -= 1;
                    if (!roots.count(c)) break;
                    ++p;
                }
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += b[static_cast<std::size_t>(j)] * a[iu][static_cast<std::size_t>(j)];
                if (p - pairing > 0) {
                    Root c = b;
                    c.coeffs[iu] += 1;
                    if (roots.insert(c).second) next.push_back(c);
                }
            }
        }
        layer = std::move(next);
    }

    positive_.assign(roots.begin(), roots.end());
    std::sort(positive_.begin(), positive_.end(), [](const Root& x, const Root& y) {
        if (x.height() != y.height()) return x.height() < y.height();
        return x.coeffs > y.coeffs;
    });
    for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;
    for (int i = 0; i < n; ++i) simple_index_.push_back(index_.at(Root::simple(n, i)));

    const std::size_t np = positive_.size();
    sum_.assign(np, std::vector<long>(np, -1));
    diff_.assign(np, std::vector<long>(np, -1));
    for (std::size_t x = 0; x < np; ++x)
        for (std::size_t y = 0; y < np; ++y) {
            if (auto it = index_.find(positive_[x] + positive_[y]); it != index_.end())
                sum_[x][y] = static_cast<long>(it->second);
            if (auto it = index_.find(positive_[x] - positive_[y]); it != index_.end())
                diff_[x][y] = static_cast<long>(it->second);
        }

    // Inverse Cartan matrix: column j holds ω_j in simple-root coordinates.
    const auto nu = static_cast<std::size_t>(n);
    std::vector<std::vector<Rational>> m(nu, std::vector<Rational>(2 * nu));
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t j = 0; j < nu; ++j) m[i][j] = a[i][j];
        m[i][nu + i] = 1;
    }
    for (std::size_t c = 0; c < nu; ++c) {
        std::size_t piv = c;
        while (m[piv][c] == 0) ++piv;
        std::swap(m[piv], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (std::size_t r = 0; r < nu; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < 2 * nu; ++k) m[r][k] -= f * m[c][k];
        }
    }
    inverse_cartan_.assign(nu, std::vector<Rational>(nu));
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < nu; ++j) inverse_cartan_[i][j] = m[i][nu + j];
}

std::string RootSystem::name() const { return std::string(1, datum_.series) + std::to_string(datum_.rank); }

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
    if (auto it = index_.find(r); it != index_.end()) return it->second;
    return std::nullopt;
}

std::optional<std::size_t> RootSystem::sum_index(std::size_t a, std::size_t b) const {
    long v = sum_[a][b];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
}

std::optional<std::size_t> RootSystem::difference_index(std::size_t a, std::size_t b) const {
    long v = diff_[a][b];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
}

Rational RootSystem::inner(const Root& x, const Root& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        long row = 0;
        for (std::size_t j = 0; j < y.size(); ++j) row += static_cast<long>(datum_.matrix[i][j]) * y[j];
        s += datum_.symmetrizer[i] * x[i] * row;
    }
    return s;
}

Rational RootSystem::inner(const Weight& w, const Root& r) const {
    Rational s = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) s += datum_.symmetrizer[i] * r[i] * w[i];
    return s;
}

Rational RootSystem::inner(const Weight& x, const Weight& y) const {
    auto xs = to_simple_coords(x);
    Rational s = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) s += xs[k] * datum_.symmetrizer[k] * y[k];
    return s;
}

Rational RootSystem::coroot_pairing(const Weight& w, const Root& beta) const {
    return 2 * inner(w, beta) / inner(beta, beta);
}

Weight RootSystem::to_weight(const Root& r) const {
    const auto n = static_cast<std::size_t>(rank());
    Weight w = Weight::zero(rank());
    for (std::size_t i = 0; i < n; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += static_cast<long>(datum_.matrix[i][j]) * r[j];
        w[i] = s;
    }
    return w;
}

std::vector<Rational> RootSystem::to_simple_coords(const Weight& w) const {
    const auto n = static_cast<std::size_t>(rank());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += inverse_cartan_[i][j] * w[j];
    return out;
}

Weight RootSystem::rho() const {
    return Weight(std::vector<Rational>(static_cast<std::size_t>(rank()), Rational(1)));
}

Weight RootSystem::fundamental_weight(int i) const {
    Weight w = Weight::zero(rank());
    w[static_cast<std::size_t>(i)] = 1;
    return w;
}

std::vector<int> RootSystem::support(const Root& beta) const {
    if (!is_positive_root(beta)) throw std::invalid_argument("not a positive root: " + to_string(beta));
    std::vector<int> s;
    for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

bool dominance_geq(const Root& mu, const Root& nu) { return (mu - nu).is_nonnegative(); }

bool dominance_geq(const RootSystem& rs, const Weight& mu, const Weight& nu) {
    for (const auto& c : rs.to_simple_coords(mu - nu))
        if (!is_integer(c) || c < 0) return false;
    return true;
}

}  // namespace shapovalov
