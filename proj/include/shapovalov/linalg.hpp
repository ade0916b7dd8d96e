#pragma once

#include "shapovalov/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace shapovalov {

/// Sparse vector over Q; absent keys are zero, stored values are never zero.
using SparseVec = std::map<std::size_t, Rational>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a x
SparseVec scaled(const SparseVec& x, const Rational& a);
bool is_zero(const SparseVec& v);

/// Row-major sparse square or rectangular matrix over Q.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseVec& row(std::size_t r) const { return rows_[r]; }
    Rational at(std::size_t r, std::size_t c) const;
    void add(std::size_t r, std::size_t c, const Rational& v);
    bool is_zero() const;
    std::size_t nonzeros() const;

    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& a) const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

    /// The scalar s with *this == s * other, if one exists. `other` must be nonzero.
    std::optional<Rational> ratio_to(const SparseMatrix& other) const;

private:
    std::size_t cols_ = 0;
    std::vector<SparseVec> rows_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Row echelon basis that tracks every stored row as a combination of the
/// inserted independent vectors. Used to pick bases and express vectors in them.
class EchelonBasis {
public:
    /// Reduces v. If independent of the current span, appends it and returns
    /// nullopt; otherwise returns its coordinates over the accepted vectors.
    std::optional<SparseVec> insert(const SparseVec& v);
    std::size_t size() const { return accepted_; }

private:
    struct Row {
        SparseVec vec;          // leading entry normalized to 1
        SparseVec combination;  // over accepted vectors
    };
    std::map<std::size_t, Row> pivots_;
    std::size_t accepted_ = 0;
};

/// Exact kernel of the matrix whose rows are given, with `ncols` columns.
/// Returns a basis of {x : row·x = 0 for every row}.
std::vector<std::vector<Rational>> nullspace(std::vector<SparseVec> rows, std::size_t ncols);

std::size_t rank(std::vector<SparseVec> rows);

using DenseMatrix = std::vector<std::vector<Rational>>;
Rational determinant(DenseMatrix m);

}  // namespace shapovalov
