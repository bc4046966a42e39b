#include "apolar/tpoly.hpp"

#include <numeric>

namespace apolar {

void TPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void TPoly::add_to_coeff(int k, std::int64_t v) {
    if (k < 0 || v == 0) return;
    if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(k) + 1, 0);
    c_[static_cast<std::size_t>(k)] += v;
    trim();
}

std::int64_t TPoly::at_one() const {
    return std::accumulate(c_.begin(), c_.end(), static_cast<std::int64_t>(0));
}

TPoly TPoly::operator+(const TPoly& o) const {
    std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return TPoly(std::move(r));
}

std::string TPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        std::int64_t v = c_[k];
        if (v == 0) continue;
        if (!s.empty()) s += v > 0 ? " + " : " - ";
        else if (v < 0) s += "-";
        std::int64_t av = v > 0 ? v : -v;
        std::string power = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (power.empty()) s += std::to_string(av);
        else if (av == 1) s += power;
        else s += std::to_string(av) + "*" + power;
    }
    return s;
}

}  // namespace apolar
