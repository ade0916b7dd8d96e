#include "shapovalov/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace shapovalov {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
    if (a == 0) return;
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second == 0) y.erase(it);
        }
    }
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
    SparseVec out;
    if (a == 0) return out;
    for (const auto& [k, v] : x) out.emplace_hint(out.end(), k, a * v);
    return out;
}

bool is_zero(const SparseVec& v) { return v.empty(); }

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Rational(0) : it->second;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = rows_[r].try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) rows_[r].erase(it);
    }
}

bool SparseMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const SparseVec& r) { return r.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows()) throw std::invalid_argument("matrix shape mismatch");
    SparseMatrix out(rows(), o.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (const auto& [k, a] : rows_[r]) axpy(out.rows_[r], a, o.rows_[k]);
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    SparseMatrix out = *this;
    for (std::size_t r = 0; r < rows(); ++r) axpy(out.rows_[r], Rational(1), o.rows_[r]);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    SparseMatrix out = *this;
    for (std::size_t r = 0; r < rows(); ++r) axpy(out.rows_[r], Rational(-1), o.rows_[r]);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& a) const {
    SparseMatrix out(rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r) out.rows_[r] = shapovalov::scaled(rows_[r], a);
    return out;
}

std::optional<Rational> SparseMatrix::ratio_to(const SparseMatrix& other) const {
    std::optional<Rational> s;
    for (std::size_t r = 0; r < other.rows() && !s; ++r)
        if (!other.rows_[r].empty()) {
            const auto& [c, v] = *other.rows_[r].begin();
            s = at(r, c) / v;
        }
    if (!s) throw std::invalid_argument("ratio_to: zero reference matrix");
    if (*this == other.scaled(*s)) return s;
    return std::nullopt;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

std::optional<SparseVec> EchelonBasis::insert(const SparseVec& v) {
    SparseVec residual = v;
    SparseVec combination;
    while (!residual.empty()) {
        auto lead = residual.begin();
        auto piv = pivots_.find(lead->first);
        if (piv == pivots_.end()) break;
        Rational f = lead->second;
        axpy(residual, -f, piv->second.vec);
        axpy(combination, f, piv->second.combination);
    }
    if (residual.empty()) return combination;

    // New independent vector: residual = v - combination, and v is accepted as index `accepted_`.
    Row row;
    Rational inv = 1 / residual.begin()->second;
    row.vec = scaled(residual, inv);
    row.combination = scaled(combination, -inv);
    row.combination[accepted_] = inv;
    pivots_.emplace(residual.begin()->first, std::move(row));
    ++accepted_;
    return std::nullopt;
}

namespace {

// Forward elimination to row echelon form; pivots keyed by leading column with
// leading entry 1. Sparsest rows are processed first to limit fill-in.
std::map<std::size_t, SparseVec> echelon(std::vector<SparseVec> rows) {
    std::sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
    std::map<std::size_t, SparseVec> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto piv = pivots.find(lead->first);
            if (piv == pivots.end()) {
                Rational inv = 1 / lead->second;
                for (auto& [k, v] : row) v *= inv;
                pivots.emplace(lead->first, std::move(row));
                break;
            }
            Rational f = lead->second;
            axpy(row, -f, piv->second);
        }
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(std::vector<SparseVec> rows, std::size_t ncols) {
    auto pivots = echelon(std::move(rows));
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (pivots.count(free)) continue;
        std::vector<Rational> x(ncols);
        x[free] = 1;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const auto& [col, row] = *it;
            if (col > free) continue;
            Rational s = 0;
            for (const auto& [k, v] : row)
                if (k != col) s += v * x[k];
            x[col] = -s;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(std::vector<SparseVec> rows) { return echelon(std::move(rows)).size(); }

Rational determinant(DenseMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace shapovalov
