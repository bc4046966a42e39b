#pragma once

#include <map>
#include <string>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

/// Exponent vector of a monomial x_1^{b_1} ... x_n^{b_n}.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);

/// Graded lexicographic order: lower total degree first, then
/// lexicographically smaller exponent vector first (x_1 weighs most).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of the given degree in n variables, in descending
/// graded-lex order (x_1^k first). This order fixes the rows and columns
/// of every matrix in the project.
std::vector<Monomial> monomials_of_degree(int n, int degree);

/// Sparse multivariate polynomial over exact rationals.
class Poly {
public:
    Poly() : n_(0) {}
    explicit Poly(int n) : n_(n) {}

    static Poly variable(int n, int index);  // x_{index+1}
    static Poly linear_form(const RationalVector& coeffs);
    static Poly monomial(Monomial m, const Rational& coeff = Rational(1));

    /// Parses "3*x1^2*x2 + 1/2*x3 - x2" with 1-indexed variables.
    static Poly parse(int n, const std::string& text);

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly pow(int e) const;

    /// Variable permutation sigma: x_j -> x_{sigma(j)}, i.e. the exponent
    /// vector b maps to sigma(b) with sigma(b)[sigma(j)] = b[j].
    Poly permuted(const std::vector<int>& sigma) const;

    /// Coefficients against the degree-k monomial basis, in
    /// monomials_of_degree order.
    RationalVector coefficient_vector(int degree) const;

    std::string str() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void check_ambient(const Poly& o) const;
    int n_;
    std::map<Monomial, Rational, GrlexLess> terms_;
};

/// Apolarity pairing: differentiates g by f. Bilinear extension of
/// diff(x^b, x^c) = c!/(c-b)! x^{c-b} when c >= b componentwise, else 0.
Poly diff(const Poly& f, const Poly& g);

}  // namespace apolar
