#include "shapovalov/structconst.hpp"

#include "shapovalov/irrep.hpp"

#include <stdexcept>

namespace shapovalov {

namespace {

void add_to(LieVec& v, std::size_t k, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(v.begin(), v.end(), k, [](const auto& p, std::size_t key) { return p.first < key; });
    if (it != v.end() && it->first == k) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    } else {
        v.insert(it, {k, c});
    }
}

}  // namespace

StructureTable StructureTable::build(const RootSystem& rs) {
    StructureTable t(rs);
    const int r = rs.rank();
    const auto ru = static_cast<std::size_t>(r);
    const std::size_t np = rs.num_positive();

    std::vector<int> theta = [&] {
        Weight w = rs.to_weight(rs.highest_root());
        std::vector<int> out;
        for (const auto& c : w.coords) out.push_back(static_cast<int>(c.get_num().get_si()));
        return out;
    }();
    IrreducibleModule adj = build_irreducible(rs, theta);
    if (adj.dim() != 2 * np + ru)
        throw std::logic_error("adjoint module of " + rs.name() + " has dimension " + std::to_string(adj.dim()));

    std::vector<SparseMatrix> E(np), F(np);
    for (int i = 0; i < r; ++i) {
        std::size_t k = rs.simple_index(i);
        E[k] = adj.e[static_cast<std::size_t>(i)];
        F[k] = adj.f[static_cast<std::size_t>(i)].scaled(rs.datum().symmetrizer[static_cast<std::size_t>(i)]);
    }
    std::vector<SparseMatrix> H(ru);
    for (std::size_t i = 0; i < ru; ++i) H[i] = commutator(E[rs.simple_index(static_cast<int>(i))], F[rs.simple_index(static_cast<int>(i))]);
    auto h_of = [&](const Root& g) {
        SparseMatrix m(adj.dim(), adj.dim());
        for (std::size_t i = 0; i < ru; ++i)
            if (g[i] != 0) m = m + H[i].scaled(Rational(g[i]));
        return m;
    };

    // Extraspecial index: smallest simple root that can be split off.
    std::vector<int> split(np, -1);
    for (std::size_t k = 0; k < np; ++k) {
        const Root& xi = rs.root(k);
        if (xi.height() == 1) continue;
        int i = 0;
        while (!rs.is_positive_root(xi - rs.simple_root(i))) ++i;
        split[k] = i;
        const Root rest = xi - rs.simple_root(i);
        const std::size_t a = rs.simple_index(i), b = *rs.index_of(rest);
        int p = 0;
        for (Root c = rest - rs.simple_root(i); rs.is_positive_root(c); c -= rs.simple_root(i)) ++p;
        E[k] = commutator(E[a], E[b]).scaled(Rational(1, p + 1));
        SparseMatrix f_raw = commutator(F[a], F[b]);
        auto s = commutator(E[k], f_raw).ratio_to(h_of(xi));
        if (!s || *s == 0) throw std::logic_error("cannot normalize root vector " + root_label(xi));
        F[k] = f_raw.scaled(1 / *s);
    }

    t.matrices_.reserve(2 * np + ru);
    for (auto& m : E) t.matrices_.push_back(m);
    for (auto& m : F) t.matrices_.push_back(m);
    for (auto& m : H) t.matrices_.push_back(m);

    // Weight of each basis element, as a root-lattice vector.
    const std::size_t dim = t.matrices_.size();
    std::vector<Root> weight(dim, Root::zero(r));
    for (std::size_t k = 0; k < np; ++k) {
        weight[k] = rs.root(k);
        weight[np + k] = -rs.root(k);
    }

    // Zero-weight decomposition uses the diagonal entries at the simple-root
    // weight vectors: entry of h_{α_i} there is (α_k, α_i).
    std::vector<std::size_t> probe(ru);
    for (std::size_t k = 0; k < ru; ++k) {
        std::vector<int> wk;
        for (std::size_t j = 0; j < ru; ++j) wk.push_back(rs.datum().matrix[j][k]);
        probe[k] = adj.basis_of_weight.at(wk).front();
    }
    DenseMatrix gram(ru, std::vector<Rational>(ru));
    for (std::size_t k = 0; k < ru; ++k)
        for (std::size_t i = 0; i < ru; ++i) gram[k][i] = rs.inner(rs.simple_root(static_cast<int>(k)), rs.simple_root(static_cast<int>(i)));

    auto decompose_zero_weight = [&](const SparseMatrix& m, std::size_t a, std::size_t b) {
        // Solve gram · c = diag(m) at probes by Cramer-free elimination.
        DenseMatrix aug = gram;
        for (std::size_t k = 0; k < ru; ++k) aug[k].push_back(m.at(probe[k], probe[k]));
        for (std::size_t c = 0; c < ru; ++c) {
            std::size_t piv = c;
            while (aug[piv][c] == 0) ++piv;
            std::swap(aug[piv], aug[c]);
            Rational inv = 1 / aug[c][c];
            for (auto& x : aug[c]) x *= inv;
            for (std::size_t rr = 0; rr < ru; ++rr) {
                if (rr == c || aug[rr][c] == 0) continue;
                Rational f = aug[rr][c];
                for (std::size_t k = 0; k <= ru; ++k) aug[rr][k] -= f * aug[c][k];
            }
        }
        LieVec out;
        SparseMatrix check(adj.dim(), adj.dim());
        for (std::size_t i = 0; i < ru; ++i) {
            const Rational& ci = aug[i][ru];
            if (ci == 0) continue;
            out.push_back({2 * np + i, ci});
            check = check + H[i].scaled(ci);
        }
        if (!(check == m))
            throw std::logic_error("bracket [" + t.basis_label(a) + ", " + t.basis_label(b) + "] is not in h");
        return out;
    };

    t.brackets_.assign(dim, std::vector<LieVec>(dim));
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            SparseMatrix m = commutator(t.matrices_[a], t.matrices_[b]);
            LieVec v;
            if (!m.is_zero()) {
                Root w = weight[a] + weight[b];
                if (w.is_zero()) {
                    v = decompose_zero_weight(m, a, b);
                } else {
                    const bool positive = w.is_nonnegative();
                    auto idx = rs.index_of(positive ? w : -w);
                    if (!idx)
                        throw std::logic_error("nonzero bracket of weight " + to_string(w) + " for [" + t.basis_label(a) +
                                               ", " + t.basis_label(b) + "]");
                    std::size_t target = positive ? *idx : np + *idx;
                    auto s = m.ratio_to(t.matrices_[target]);
                    if (!s)
                        throw std::logic_error("bracket [" + t.basis_label(a) + ", " + t.basis_label(b) +
                                               "] is not proportional to " + t.basis_label(target));
                    v.push_back({target, *s});
                }
            }
            LieVec neg = v;
            for (auto& [k, c] : neg) c = -c;
            t.brackets_[a][b] = std::move(v);
            t.brackets_[b][a] = std::move(neg);
        }

    t.omega_.assign(np, Rational(1));
    for (std::size_t k = 0; k < np; ++k) {
        if (split[k] < 0) continue;
        const std::size_t a = rs.simple_index(split[k]);
        const std::size_t b = *rs.index_of(rs.root(k) - rs.simple_root(split[k]));
        // f_ξ = [f_a, f_b]/N  ⇒  ω(f_ξ) = κ_b κ_a [e_b, e_a]/N.
        t.omega_[k] = t.omega_[b] * t.omega_[a] * t.Ne(b, a) / t.N(a, b);
    }
    return t;
}

std::string StructureTable::basis_label(std::size_t b) const {
    const std::size_t np = num_roots();
    if (b < np) return "e_" + root_label(rs_.root(b), true);
    if (b < 2 * np) return "f_" + root_label(rs_.root(b - np), true);
    return "h_a" + std::to_string(b - 2 * np + 1);
}

LieVec StructureTable::bracket(const LieVec& x, const LieVec& y) const {
    LieVec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            for (const auto& [k, ck] : brackets_[a][b]) add_to(out, k, ca * cb * ck);
    return out;
}

Rational StructureTable::coefficient(std::size_t a, std::size_t b, std::size_t target) const {
    for (const auto& [k, c] : brackets_[a][b])
        if (k == target) return c;
    return 0;
}

Rational StructureTable::N(std::size_t mu, std::size_t nu) const {
    auto s = rs_.sum_index(mu, nu);
    if (!s) return 0;
    return coefficient(f_index(mu), f_index(nu), f_index(*s));
}

Rational StructureTable::Ne(std::size_t mu, std::size_t nu) const {
    auto s = rs_.sum_index(mu, nu);
    if (!s) return 0;
    return coefficient(e_index(mu), e_index(nu), e_index(*s));
}

Rational StructureTable::C(std::size_t nu, std::size_t gamma) const {
    auto d = rs_.difference_index(gamma, nu);
    if (!d) return 0;
    return coefficient(e_index(nu), f_index(gamma), f_index(*d));
}

Rational StructureTable::D(std::size_t nu, std::size_t gamma) const {
    auto d = rs_.difference_index(nu, gamma);
    if (!d) return 0;
    return coefficient(e_index(nu), f_index(gamma), e_index(*d));
}

Rational StructureTable::form(std::size_t a, std::size_t b) const {
    const std::size_t np = num_roots();
    if (a > b) std::swap(a, b);
    if (a < np) return b == a + np ? Rational(1) : Rational(0);
    if (a < 2 * np) return 0;
    if (b < 2 * np) return 0;
    return rs_.inner(rs_.simple_root(static_cast<int>(a - 2 * np)), rs_.simple_root(static_cast<int>(b - 2 * np)));
}

StructureTable StructureTable::with_bracket_scaled(std::size_t a, std::size_t b, const Rational& factor) const {
    StructureTable t = *this;
    for (auto& [k, c] : t.brackets_[a][b]) c *= factor;
    for (auto& [k, c] : t.brackets_[b][a]) c *= factor;
    return t;
}

StructureReport verify_structure(const StructureTable& t) {
    StructureReport rep;
    const std::size_t dim = t.dim();
    auto fail = [&](std::string msg) {
        rep.ok = false;
        if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
    };
    auto lie = [](std::size_t a) { return LieVec{{a, Rational(1)}}; };

    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            LieVec sum = t.bracket(a, b);
            for (const auto& [k, c] : t.bracket(b, a)) add_to(sum, k, c);
            if (!sum.empty()) fail("antisymmetry fails for (" + t.basis_label(a) + ", " + t.basis_label(b) + ")");
        }

    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = x + 1; y < dim; ++y)
            for (std::size_t z = y + 1; z < dim; ++z) {
                ++rep.triples_checked;
                LieVec sum = t.bracket(lie(x), t.bracket(y, z));
                for (const auto& [k, c] : t.bracket(lie(y), t.bracket(z, x))) add_to(sum, k, c);
                for (const auto& [k, c] : t.bracket(lie(z), t.bracket(x, y))) add_to(sum, k, c);
                if (!sum.empty())
                    fail("Jacobi fails for (" + t.basis_label(x) + ", " + t.basis_label(y) + ", " + t.basis_label(z) + ")");
            }

    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            for (std::size_t z = y; z < dim; ++z) {
                Rational s = 0;
                for (const auto& [k, c] : t.bracket(x, y)) s += c * t.form(k, z);
                for (const auto& [k, c] : t.bracket(x, z)) s += c * t.form(y, k);
                if (s != 0)
                    fail("invariance fails for (" + t.basis_label(x) + ", " + t.basis_label(y) + ", " + t.basis_label(z) + ")");
            }
    return rep;
}

Rational diagonal_constant(const RootSystem& rs, const Root& gamma, int alpha, const Root& beta) {
    const Rational value = rs.inner(rs.fundamental_weight(alpha), gamma);
    const Root a = rs.simple_root(alpha);
    const int l_beta = rs.multiplicity(alpha, beta);
    if (l_beta > 0 && l_beta * rs.inner(a, a) == rs.inner(beta, beta)) {
        Rational expected = rs.inner(beta, beta) / 2 * rs.multiplicity(alpha, gamma) / l_beta;
        if (expected != value)
            throw std::logic_error("diagonal constant mismatch for " + root_label(gamma) + ": " + to_string(value) +
                                   " vs " + to_string(expected));
    }
    return value;
}

}  // namespace shapovalov

namespace shapovalov {

StructureReport verify_against_adjoint(const StructureTable& t) {
    StructureReport rep;
    const RootSystem& rs = t.root_system();
    const auto& mats = t.adjoint_matrices();
    const std::size_t dim = t.dim();
    const std::size_t n = rs.num_positive();
    auto fail = [&](std::string msg) {
        rep.ok = false;
        if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
    };
    auto combination = [&](const LieVec& v) {
        SparseMatrix out(dim, dim);
        for (const auto& [k, c] : v) out = out + mats[k].scaled(c);
        return out;
    };

    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            ++rep.triples_checked;
            if (!(commutator(mats[a], mats[b]) == combination(t.bracket(a, b))))
                fail("[" + t.basis_label(a) + ", " + t.basis_label(b) + "] differs from the adjoint commutator");
        }

    // named constants against the bracket table
    for (std::size_t nu = 0; nu < n; ++nu)
        for (std::size_t g = 0; g < n; ++g) {
            const LieVec& ef = t.bracket(t.e_index(nu), t.f_index(g));
            if (auto d = rs.difference_index(g, nu)) {
                if (!(ef.size() == 1 && ef[0].first == t.f_index(*d) && ef[0].second == t.C(nu, g)))
                    fail("C(" + t.basis_label(t.e_index(nu)) + ", " + t.basis_label(t.f_index(g)) + ") mismatch");
            } else if (auto d2 = rs.difference_index(nu, g)) {
                if (!(ef.size() == 1 && ef[0].first == t.e_index(*d2) && ef[0].second == t.D(nu, g)))
                    fail("D(" + t.basis_label(t.e_index(nu)) + ", " + t.basis_label(t.f_index(g)) + ") mismatch");
            } else if (nu == g) {
                // h_γ acts on e_δ by (δ, γ), on f_δ by −(δ, γ), and commutes with the Cartan part
                const SparseMatrix h = combination(ef);
                for (std::size_t k = 0; k < dim; ++k) {
                    Rational w = 0;
                    if (k < n) w = rs.inner(rs.root(k), rs.root(g));
                    else if (k < 2 * n) w = -rs.inner(rs.root(k - n), rs.root(g));
                    if (!(commutator(h, mats[k]) == mats[k].scaled(w)))
                        fail("[e_γ, f_γ] is not h_γ for " + t.basis_label(t.e_index(g)));
                }
            } else if (!ef.empty()) {
                fail("[" + t.basis_label(t.e_index(nu)) + ", " + t.basis_label(t.f_index(g)) + "] should vanish");
            }
            if (auto s = rs.sum_index(nu, g)) {
                const LieVec& ff = t.bracket(t.f_index(nu), t.f_index(g));
                if (!(ff.size() == 1 && ff[0].first == t.f_index(*s) && ff[0].second == t.N(nu, g)))
                    fail("N(" + t.basis_label(t.f_index(nu)) + ", " + t.basis_label(t.f_index(g)) + ") mismatch");
                const LieVec& ee = t.bracket(t.e_index(nu), t.e_index(g));
                if (!(ee.size() == 1 && ee[0].first == t.e_index(*s) && ee[0].second == t.Ne(nu, g)))
                    fail("Ne(" + t.basis_label(t.e_index(nu)) + ", " + t.basis_label(t.e_index(g)) + ") mismatch");
            }
        }
    return rep;
}

}  // namespace shapovalov
