#include "apolar/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace apolar {

Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int multinomial(unsigned k, const std::vector<int>& b) {
    Int r = factorial(k);
    for (int e : b) {
        if (e < 0) throw std::invalid_argument("multinomial: negative entry");
        r /= factorial(static_cast<unsigned>(e));
    }
    return r;
}

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// mpz_class's string constructor defaults to base 0, which reads a leading
// zero as octal; always parse base 10.
Int parse_int(const std::string& s) { return mpz_class(s, 10); }

}  // namespace

Rational Rational::parse(const std::string& text) {
    const auto fail = [&] {
        throw std::invalid_argument("not an exact rational: '" + text +
                                    "' (use p, p/q, or a finite decimal)");
    };

    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den)) fail();
        Int d = parse_int(den);
        if (d == 0) fail();
        return Rational(parse_int(num), d);
    }

    if (auto dot = text.find('.'); dot != std::string::npos) {
        // Finite decimals are exact: "0.25" means 25/100.
        std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
        bool neg = !whole.empty() && (whole[0] == '-' || whole[0] == '+');
        std::string digits = neg ? whole.substr(1) : whole;
        if (frac.empty() || !is_integer_token(digits + frac)) fail();
        Int den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        Int num = parse_int(digits + frac);
        if (neg && whole[0] == '-') num = -num;
        return Rational(num, den);
    }

    if (!is_integer_token(text)) fail();
    return Rational(parse_int(text));
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace apolar
