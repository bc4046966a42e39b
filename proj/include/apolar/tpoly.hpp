#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apolar {

/// Polynomial in the grading variable t with integer coefficients.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    const std::vector<std::int64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    std::int64_t coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0;
    }
    void add_to_coeff(int k, std::int64_t v);

    std::int64_t at_one() const;

    TPoly operator+(const TPoly& o) const;

    /// Renders as "t + t^2", "2 + 3*t", "0", ... with ascending powers.
    std::string str() const;

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<std::int64_t> c_;
};

}  // namespace apolar
