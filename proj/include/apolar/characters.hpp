#pragma once

#include <map>
#include <vector>

#include "apolar/partition.hpp"
#include "apolar/rational.hpp"
#include "apolar/tpoly.hpp"

namespace apolar {

/// Class function on the symmetric group S_n: one value per cycle type.
/// Keys are exactly the partitions of n.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rational> values;

    static ClassFunction zero(int n);

    const Rational& at(const Partition& cycle_type) const;

    ClassFunction operator-(const ClassFunction& o) const;

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.n == b.n && a.values == b.values;
    }
};

/// Graded character: for each lambda |- n, the generating function in t of
/// the multiplicity of the irreducible of type lambda per degree. Absent
/// keys mean zero; zero polynomials are not stored.
class GradedCharacter {
public:
    GradedCharacter() = default;
    explicit GradedCharacter(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Partition, TPoly>& mult() const { return m_; }

    std::int64_t mult_at(const Partition& lambda, int degree) const;
    void add(const Partition& lambda, int degree, std::int64_t count);
    void set(const Partition& lambda, TPoly poly);

    int max_degree() const;

    /// Dimension generating function: substitutes f^lambda for each
    /// irreducible character.
    TPoly hilbert() const;

    /// The character of the degree-k component as a class function.
    ClassFunction class_function_at(int degree) const;

    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }
    friend bool operator!=(const GradedCharacter& a, const GradedCharacter& b) {
        return !(a == b);
    }

private:
    int n_ = 0;
    std::map<Partition, TPoly> m_;
};

/// Size of the conjugacy class with cycle type rho: n!/z_rho.
Int class_size(const Partition& rho);

/// Irreducible character value chi^lambda(rho) by the Murnaghan-Nakayama
/// border-strip recursion. Memoized; safe for concurrent callers.
Int irr_char_value(const Partition& lambda, const Partition& rho);

/// Multiplicities m_lambda with f = sum m_lambda chi^lambda, as exact
/// rationals: m_lambda = (1/n!) sum_rho |C_rho| f(rho) chi^lambda(rho).
/// Non-character inputs show up as non-integer output.
std::map<Partition, Rational> decompose(const ClassFunction& f);

}  // namespace apolar
