// Integer linear algebra over arbitrary-precision integers: Hermite normal
// form with its unimodular transform, integer kernel lattice bases, and rank.

#pragma once

#include <utility>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

/// Dense row-major integer matrix.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMat: entry count != rows*cols");
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Rows are the given vectors.
    static IntMat from_rows(const std::vector<IntVec>& rows);
    /// Columns are the given vectors.
    static IntMat from_cols(const std::vector<IntVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    IntMat transpose() const;

    IntVec mul(const IntVec& x) const;   // M * x
    IntMat mul(const IntMat& other) const;

    bool operator==(const IntMat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

struct HermiteResult {
    IntMat H;  // row-style Hermite normal form
    IntMat U;  // unimodular, H = U * M
};

/// Row-style Hermite normal form: H = U*M with U unimodular, pivots
/// positive, entries above each pivot reduced into [0, pivot), zero rows
/// at the bottom.
HermiteResult hermite_normal_form(const IntMat& M);

/// Determinant by exact cofactor-free Bareiss elimination.
Int determinant(const IntMat& M);

/// Rank over the rationals.
std::size_t rank(const IntMat& M);

/// A lattice basis of { a in Z^cols : M*a = 0 }.
std::vector<IntVec> kernel_lattice_basis(const IntMat& M);

/// True iff the rows of M generate the full lattice Z^cols, i.e. the
/// Hermite normal form of M is the identity on top of zero rows.
bool spans_standard_lattice(const IntMat& M);

}  // namespace toric
