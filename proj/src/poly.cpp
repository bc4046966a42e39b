#include "apolar/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "apolar/errors.hpp"

namespace apolar {

int monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
    std::vector<Monomial> out;
    if (n <= 0 || degree < 0) {
        if (n >= 0 && degree == 0) out.push_back(Monomial(static_cast<std::size_t>(n), 0));
        return out;
    }
    Monomial cur(static_cast<std::size_t>(n), 0);
    // Descending lex: place as much as possible on the leftmost variable.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            self(self, pos + 1, rem - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

Poly Poly::variable(int n, int index) {
    Monomial m(static_cast<std::size_t>(n), 0);
    m[static_cast<std::size_t>(index)] = 1;
    return monomial(std::move(m));
}

Poly Poly::linear_form(const RationalVector& coeffs) {
    Poly p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Monomial m(coeffs.size(), 0);
        m[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

Poly Poly::monomial(Monomial m, const Rational& coeff) {
    Poly p(static_cast<int>(m.size()));
    p.add_term(m, coeff);
    return p;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != n_)
        throw AmbientMismatchError("Poly: monomial length != ambient variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.rbegin()->first);  // grlex: last term has top degree
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return monomial_degree(terms_.begin()->first) == degree();
}

void Poly::check_ambient(const Poly& o) const {
    if (n_ != o.n_) throw AmbientMismatchError("Poly: mixed ambient variable counts");
}

Poly Poly::operator+(const Poly& o) const {
    check_ambient(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_ambient(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_ambient(o);
    Poly r(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = monomial(Monomial(static_cast<std::size_t>(n_), 0));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::permuted(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n_)
        throw AmbientMismatchError("Poly: permutation length != ambient variable count");
    Poly r(n_);
    for (const auto& [m, c] : terms_) {
        Monomial p(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) p[static_cast<std::size_t>(sigma[j])] = m[j];
        r.add_term(p, c);
    }
    return r;
}

RationalVector Poly::coefficient_vector(int degree) const {
    std::vector<Monomial> basis = monomials_of_degree(n_, degree);
    RationalVector v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i]);
    return v;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Display leading terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (s.empty()) {
            if (a.sign() < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        std::string vars;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[j] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(j + 1);
            if (m[j] > 1) vars += "^" + std::to_string(m[j]);
        }
        if (vars.empty()) s += a.str();
        else if (a == Rational(1)) s += vars;
        else s += a.str() + "*" + vars;
    }
    return s;
}

namespace {

// One multiplicand of a term: "3", "1/2", "x2", or "x2^4".
void parse_factor(const std::string& tok, int n, Monomial& m, Rational& coeff) {
    if (tok.empty()) throw std::invalid_argument("Poly::parse: empty factor");
    if (tok[0] == 'x') {
        std::string body = tok.substr(1);
        int e = 1;
        if (auto caret = body.find('^'); caret != std::string::npos) {
            e = std::stoi(body.substr(caret + 1));
            body = body.substr(0, caret);
        }
        int idx = std::stoi(body);
        if (idx < 1 || idx > n)
            throw std::invalid_argument("Poly::parse: variable x" + body + " out of range");
        if (e < 0) throw std::invalid_argument("Poly::parse: negative exponent");
        m[static_cast<std::size_t>(idx - 1)] += e;
    } else {
        coeff *= Rational::parse(tok);
    }
}

}  // namespace

Poly Poly::parse(int n, const std::string& text) {
    Poly p(n);
    // Split into signed terms, then each term into '*'-separated factors.
    std::string cur;
    std::vector<std::pair<int, std::string>> term_texts;  // sign, body
    int sign = 1;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        char ch = i < text.size() ? text[i] : '+';
        if (ch == ' ') continue;
        if ((ch == '+' || ch == '-') && !cur.empty()) {
            term_texts.emplace_back(sign, cur);
            cur.clear();
            sign = ch == '-' ? -1 : 1;
        } else if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -sign;
        } else {
            cur += ch;
        }
    }
    for (const auto& [s, body] : term_texts) {
        Monomial m(static_cast<std::size_t>(n), 0);
        Rational coeff(s);
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, '*')) parse_factor(tok, n, m, coeff);
        p.add_term(m, coeff);
    }
    return p;
}

Poly diff(const Poly& f, const Poly& g) {
    if (f.ambient() != g.ambient())
        throw AmbientMismatchError("diff: mixed ambient variable counts");
    Poly r(f.ambient());
    for (const auto& [b, cf] : f.terms()) {
        for (const auto& [c, cg] : g.terms()) {
            bool ok = true;
            for (std::size_t i = 0; i < b.size() && ok; ++i) ok = c[i] >= b[i];
            if (!ok) continue;
            Monomial m(c);
            Rational scale(1);
            for (std::size_t i = 0; i < b.size(); ++i) {
                m[i] = c[i] - b[i];
                // falling factorial c_i!/(c_i-b_i)!
                for (int v = c[i]; v > m[i]; --v) scale *= Rational(v);
            }
            r.add_term(m, cf * cg * scale);
        }
    }
    return r;
}

}  // namespace apolar
