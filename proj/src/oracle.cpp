#include "shapovalov/oracle.hpp"

#include "shapovalov/linalg.hpp"

#include <algorithm>

namespace shapovalov {

std::uint64_t kostant_count(const RootSystem& rs, const Root& mu) {
    if (!mu.is_nonnegative()) return 0;
    const std::size_t r = mu.size();
    // mixed-radix index over the box 0 ≤ v ≤ μ
    std::vector<std::size_t> stride(r);
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        stride[i] = total;
        total *= static_cast<std::size_t>(mu[i] + 1);
    }
    std::vector<std::uint64_t> ways(total, 0);
    ways[0] = 1;
    for (const Root& root : rs.positive_roots()) {
        bool fits = true;
        std::size_t offset = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (root[i] > mu[i]) fits = false;
            offset += static_cast<std::size_t>(root[i]) * stride[i];
        }
        if (!fits) continue;
        for (std::size_t idx = 0; idx < total; ++idx) {
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i)
                ok = static_cast<int>(idx / stride[i] % static_cast<std::size_t>(mu[i] + 1)) >= root[i];
            if (ok) ways[idx] += ways[idx - offset];
        }
    }
    return ways[total - 1];
}

namespace {

void partitions_rec(const RootSystem& rs, const Root& rest, std::size_t max_index, std::vector<std::size_t>& current,
                    std::vector<std::vector<std::size_t>>& out) {
    if (rest.is_zero()) {
        out.push_back(current);
        return;
    }
    for (std::size_t k = max_index + 1; k-- > 0;) {
        const Root next = rest - rs.root(k);
        if (!next.is_nonnegative()) continue;
        current.push_back(k);
        partitions_rec(rs, next, k, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> kostant_partitions(const RootSystem& rs, const Root& mu) {
    std::vector<std::vector<std::size_t>> out;
    if (!mu.is_nonnegative() || rs.num_positive() == 0) return out;
    std::vector<std::size_t> current;
    partitions_rec(rs, mu, rs.num_positive() - 1, current, out);
    return out;
}

WeightSpaceBasis weight_space_basis(NegativeAlgebra& alg, const Root& mu) {
    return {mu, alg.monomials_of_weight(mu)};
}

std::vector<NumericElement> singular_vector_solve(NegativeAlgebra& alg, const Weight& lambda, const Root& mu) {
    const RootSystem& rs = alg.root_system();
    const auto basis = alg.monomials_of_weight(mu);
    std::map<std::pair<int, PbwMonomial>, std::size_t> row_of;
    std::vector<SparseVec> rows;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (int i = 0; i < rs.rank(); ++i) {
            for (const auto& [m, f] : alg.raise(rs.simple_index(i), basis[j])) {
                const Rational v = f(lambda);
                if (v == 0) continue;
                auto [it, inserted] = row_of.try_emplace({i, m}, rows.size());
                if (inserted) rows.emplace_back();
                rows[it->second][j] += v;
            }
        }
    }
    for (auto& row : rows)
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);

    std::vector<NumericElement> out;
    for (const auto& x : nullspace(std::move(rows), basis.size())) {
        NumericElement v;
        for (std::size_t j = 0; j < x.size(); ++j) v.add(basis[j], x[j]);
        out.push_back(std::move(v));
    }
    return out;
}

const std::vector<NumericElement>& SingularVectorOracle::solve(const Weight& lambda, const Root& mu) {
    auto key = std::make_pair(lambda, mu);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), singular_vector_solve(alg_, lambda, mu)).first;
    return it->second;
}

std::optional<Rational> proportional(const NumericElement& u, const NumericElement& v) {
    if (u.is_zero() && v.is_zero()) throw DegenerateComparison("both vectors are zero");
    if (u.size() != v.size()) return std::nullopt;
    Rational c = 0;
    for (const auto& [m, a] : u.terms) {
        auto it = v.terms.find(m);
        if (it == v.terms.end()) return std::nullopt;
        const Rational q = a / it->second;
        if (c == 0)
            c = q;
        else if (q != c)
            return std::nullopt;
    }
    return c;
}

bool in_span(const NumericElement& v, const std::vector<NumericElement>& span) {
    std::map<PbwMonomial, std::size_t> index;
    auto to_sparse = [&](const NumericElement& e) {
        SparseVec s;
        for (const auto& [m, c] : e.terms) s.emplace(index.try_emplace(m, index.size()).first->second, c);
        return s;
    };
    EchelonBasis eb;
    for (const auto& s : span) eb.insert(to_sparse(s));
    return eb.insert(to_sparse(v)).has_value();
}

GramMatrix gram(NegativeAlgebra& alg, const Root& mu) {
    GramMatrix g{weight_space_basis(alg, mu), {}};
    const auto& b = g.basis.monomials;
    g.entries.assign(b.size(), std::vector<CartanPolynomial>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) g.entries[i][j] = alg.form(b[i], b[j]);
    return g;
}

NumericGramMatrix gram(NegativeAlgebra& alg, const Root& mu, const Weight& lambda) {
    NumericGramMatrix g{weight_space_basis(alg, mu), {}};
    const auto& b = g.basis.monomials;
    g.entries.assign(b.size(), std::vector<Rational>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) g.entries[i][j] = alg.form(b[i], b[j])(lambda);
    return g;
}

CartanPolynomial determinant(const std::vector<std::vector<CartanPolynomial>>& a, int rank) {
    const std::size_t n = a.size();
    const CartanPolynomial zero(rank, 0);
    // characteristic polynomial coefficients of the leading r×r block
    std::vector<CartanPolynomial> p{CartanPolynomial(rank, 1)};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<CartanPolynomial> c{CartanPolynomial(rank, 1), -a[r][r]};
        // y = M^k S, starting with S = column r above the diagonal
        std::vector<CartanPolynomial> y(r);
        for (std::size_t i = 0; i < r; ++i) y[i] = a[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            CartanPolynomial rs = zero;
            for (std::size_t i = 0; i < r; ++i) rs += a[r][i] * y[i];
            c.push_back(-rs);
            std::vector<CartanPolynomial> next(r, zero);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += a[i][j] * y[j];
            y = std::move(next);
        }
        std::vector<CartanPolynomial> q(r + 2, zero);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < p.size() && j <= i; ++j) q[i] += c[i - j] * p[j];
        p = std::move(q);
    }
    return n % 2 == 0 ? p[n] : -p[n];
}

FactoredDeterminant factor_gram_determinant(const RootSystem& rs, const Root& mu, const CartanPolynomial& det) {
    FactoredDeterminant out;
    out.constant = 1;
    CartanPolynomial rest = det;
    if (!rest.is_zero()) {
        for (const Root& beta : rs.positive_roots()) {
            for (int m = 1; (mu - m * beta).is_nonnegative(); ++m) {
                const AffineForm f = AffineForm::eta(rs, m * beta).monic();
                int e = 0;
                while (auto q = rest.divide(f)) {
                    rest = std::move(*q);
                    ++e;
                }
                if (e > 0) out.factors.emplace_back(f, e);
            }
        }
    }
    if (rest.is_constant()) {
        out.constant = rest.constant_term();
        rest = CartanPolynomial(rs.rank(), 1);
    }
    out.remainder = std::move(rest);
    return out;
}

}  // namespace shapovalov
