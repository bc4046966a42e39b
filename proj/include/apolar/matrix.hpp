#pragma once

#include <cstddef>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

/// Dense matrix of exact rationals, row-major. Immutable in spirit: the
/// linear-algebra routines below take matrices by const reference and
/// return fresh values.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const Rational& c) const;

    /// New matrix formed from the given columns, in the given order.
    ExactMatrix select_columns(const std::vector<std::size_t>& idx) const;

    RationalVector column(std::size_t j) const;

    /// Stacks this matrix on top of o (column counts must match).
    ExactMatrix vstack(const ExactMatrix& o) const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> d_;
};

/// Exact rank over Q via fraction-free (Bareiss) elimination on the
/// denominator-cleared matrix. Empty matrices have rank 0.
std::size_t rank(const ExactMatrix& m);

/// Indices of the pivot columns of the elimination above: the
/// lexicographically first maximal independent subset of columns.
std::vector<std::size_t> pivot_columns(const ExactMatrix& m);

/// The pivot columns of m, as a matrix. Deterministic.
ExactMatrix column_space_basis(const ExactMatrix& m);

/// Solves basis * c = target where the columns of basis are linearly
/// independent. Throws DependentBasisError if they are not, NotInSpanError
/// if target is outside the column space.
RationalVector solve_in_span(const ExactMatrix& basis, const RationalVector& target);

/// Multi-right-hand-side variant: returns C with basis * C = targets.
/// One elimination serves every column of targets.
ExactMatrix solve_in_span_multi(const ExactMatrix& basis, const ExactMatrix& targets);

}  // namespace apolar
