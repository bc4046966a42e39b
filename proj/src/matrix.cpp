#include "apolar/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "apolar/errors.hpp"

namespace apolar {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: dimension mismatch in product");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) * c;
    return r;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    ExactMatrix r(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
    return r;
}

RationalVector ExactMatrix::column(std::size_t j) const {
    RationalVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: vstack column mismatch");
    ExactMatrix r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
}

namespace {

// Clears denominators row by row (row scaling preserves rank and pivot
// columns) so Bareiss elimination runs on integers throughout.
std::vector<std::vector<Int>> to_integer_rows(const ExactMatrix& m) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int d = m(i, j).den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            a[i][j] = q.num() * (l / q.den());
        }
    }
    return a;
}

// Fraction-free elimination. Pivot rule: scan columns left to right and
// take the first row with a nonzero entry. Returns the pivot column
// indices, which determine the rank.
std::vector<std::size_t> bareiss_pivots(std::vector<std::vector<Int>> a) {
    std::vector<std::size_t> pivots;
    if (a.empty() || a[0].empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        const Int& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = piv * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return pivot_columns(m).size(); }

std::vector<std::size_t> pivot_columns(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    return bareiss_pivots(to_integer_rows(m));
}

ExactMatrix column_space_basis(const ExactMatrix& m) {
    return m.select_columns(pivot_columns(m));
}

ExactMatrix solve_in_span_multi(const ExactMatrix& basis, const ExactMatrix& targets) {
    if (basis.rows() != targets.rows())
        throw std::invalid_argument("solve_in_span: row count mismatch");
    const std::size_t rows = basis.rows(), nb = basis.cols(), nt = targets.cols();

    // Augmented rational elimination [basis | targets].
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(nb + nt));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < nb; ++j) a[i][j] = basis(i, j);
        for (std::size_t j = 0; j < nt; ++j) a[i][nb + j] = targets(i, j);
    }

    std::vector<std::size_t> pivot_row_of(nb);
    std::size_t r = 0;
    for (std::size_t c = 0; c < nb; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) throw DependentBasisError("solve_in_span: basis columns are dependent");
        if (p != r) std::swap(a[p], a[r]);
        const Rational piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Rational f = a[i][c] / piv;
            a[i][c] = 0;
            for (std::size_t j = c + 1; j < nb + nt; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_row_of[c] = r;
        ++r;
    }

    // Rows beyond the pivots must have vanished in every target column.
    for (std::size_t i = r; i < rows; ++i)
        for (std::size_t j = 0; j < nt; ++j)
            if (!a[i][nb + j].is_zero())
                throw NotInSpanError("solve_in_span: target is outside the column space");

    ExactMatrix coeffs(nb, nt);
    for (std::size_t j = 0; j < nt; ++j) {
        for (std::size_t cb = nb; cb-- > 0;) {
            std::size_t pr = pivot_row_of[cb];
            Rational v = a[pr][nb + j];
            for (std::size_t c2 = cb + 1; c2 < nb; ++c2) v -= a[pr][c2] * coeffs(c2, j);
            coeffs(cb, j) = v / a[pr][cb];
        }
    }
    return coeffs;
}

RationalVector solve_in_span(const ExactMatrix& basis, const RationalVector& target) {
    ExactMatrix t(target.size(), 1);
    for (std::size_t i = 0; i < target.size(); ++i) t(i, 0) = target[i];
    ExactMatrix c = solve_in_span_multi(basis, t);
    return c.column(0);
}

}  // namespace apolar
