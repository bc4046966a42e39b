#include "apolar/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "apolar/errors.hpp"

namespace apolar {

ClassFunction ClassFunction::zero(int n) {
    ClassFunction f;
    f.n = n;
    for (const Partition& rho : partitions_of(n)) f.values[rho] = Rational();
    return f;
}

const Rational& ClassFunction::at(const Partition& cycle_type) const {
    auto it = values.find(cycle_type);
    if (it == values.end())
        throw std::invalid_argument("ClassFunction: unknown cycle type " + cycle_type.str());
    return it->second;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    if (n != o.n) throw SizeMismatchError("ClassFunction: mixed group sizes");
    ClassFunction r = *this;
    for (auto& [rho, v] : r.values) v -= o.at(rho);
    return r;
}

std::int64_t GradedCharacter::mult_at(const Partition& lambda, int degree) const {
    auto it = m_.find(lambda);
    return it == m_.end() ? 0 : it->second.coeff(degree);
}

void GradedCharacter::add(const Partition& lambda, int degree, std::int64_t count) {
    if (count == 0) return;
    TPoly& p = m_[lambda];
    p.add_to_coeff(degree, count);
    if (p.is_zero()) m_.erase(lambda);
}

void GradedCharacter::set(const Partition& lambda, TPoly poly) {
    if (poly.is_zero()) m_.erase(lambda);
    else m_[lambda] = std::move(poly);
}

int GradedCharacter::max_degree() const {
    int d = -1;
    for (const auto& [lambda, p] : m_) d = std::max(d, p.degree());
    return d;
}

TPoly GradedCharacter::hilbert() const {
    TPoly h;
    for (const auto& [lambda, p] : m_) {
        Int f = syt_count(lambda);
        if (!f.fits_slong_p()) throw std::overflow_error("hilbert: dimension overflow");
        std::int64_t fl = f.get_si();
        for (int k = 0; k <= p.degree(); ++k) h.add_to_coeff(k, fl * p.coeff(k));
    }
    return h;
}

ClassFunction GradedCharacter::class_function_at(int degree) const {
    ClassFunction f = ClassFunction::zero(n_);
    for (const auto& [lambda, p] : m_) {
        std::int64_t c = p.coeff(degree);
        if (c == 0) continue;
        for (auto& [rho, v] : f.values) v += Rational(c) * Rational(irr_char_value(lambda, rho));
    }
    return f;
}

Int class_size(const Partition& rho) {
    // n!/z_rho with z_rho = prod_j j^{m_j} m_j!.
    Int z = 1;
    int run = 0;
    const auto& p = rho.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        run += 1;
        Int jz = p[i];
        z *= jz;
        if (i + 1 == p.size() || p[i + 1] != p[i]) {
            z *= factorial(static_cast<unsigned>(run));
            run = 0;
        }
    }
    return factorial(static_cast<unsigned>(rho.n())) / z;
}

namespace {

// Beta-set form of a partition: strictly decreasing first-column hook
// lengths. Removing a border strip of size r is subtracting r from one
// beta number without colliding with another; the strip height is the
// number of beta numbers jumped over.
std::vector<int> beta_set(const Partition& lambda) {
    const auto& p = lambda.parts();
    std::vector<int> beta(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        beta[i] = p[i] + static_cast<int>(p.size() - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int part = beta[i] - static_cast<int>(beta.size() - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Int mn_value(const Partition& lambda, const std::vector<int>& rho, std::size_t rho_pos,
             std::map<std::pair<std::vector<int>, std::size_t>, Int>& memo) {
    if (rho_pos == rho.size()) return 1;  // lambda is empty here as sizes match
    auto key = std::make_pair(lambda.parts(), rho_pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = rho[rho_pos];
    std::vector<int> beta = beta_set(lambda);
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i] - r;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int jumped = 0;
        for (int other : beta)
            if (other > b && other < beta[i]) ++jumped;
        std::vector<int> next = beta;
        next[i] = b;
        Int sub = mn_value(partition_from_beta(std::move(next)), rho, rho_pos + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int irr_char_value(const Partition& lambda, const Partition& rho) {
    if (lambda.n() != rho.n())
        throw SizeMismatchError("irr_char_value: |lambda| = " + std::to_string(lambda.n()) +
                                " but |rho| = " + std::to_string(rho.n()));
    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> cache;
    std::pair<std::vector<int>, std::vector<int>> key(lambda.parts(), rho.parts());
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::map<std::pair<std::vector<int>, std::size_t>, Int> memo;
    Int v = mn_value(lambda, rho.parts(), 0, memo);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(v)).first->second;
}

std::map<Partition, Rational> decompose(const ClassFunction& f) {
    const Rational group_order{factorial(static_cast<unsigned>(f.n))};
    std::map<Partition, Rational> out;
    for (const Partition& lambda : partitions_of(f.n)) {
        Rational s;
        for (const auto& [rho, v] : f.values) {
            if (v.is_zero()) continue;
            s += Rational(class_size(rho)) * v * Rational(irr_char_value(lambda, rho));
        }
        out[lambda] = s / group_order;
    }
    return out;
}

}  // namespace apolar
