#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace apolar {

/// Arbitrary-precision integer (GMP-backed).
using Int = mpz_class;

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// Multinomial coefficient k! / (b_1! ... b_m!) for an exponent vector with sum k.
Int multinomial(unsigned k, const std::vector<int>& b);

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; the canonical zero is 0/1. Backed by GMP's mpq.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);

    /// Parses "3", "-5/7", or an exact decimal literal such as "0.25".
    /// Throws std::invalid_argument on anything else.
    static Rational parse(const std::string& text);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

using RationalVector = std::vector<Rational>;

}  // namespace apolar
