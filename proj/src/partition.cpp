#include "apolar/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace apolar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "-") return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition: bad part '" + tok + "' in '" + text + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("Partition: bad part '" + tok + "' in '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    // Reverse-lexicographic: larger leading parts come first.
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                        a.parts_.end());
}

Partition mu_of(const RationalVector& a) {
    if (a.empty()) throw std::invalid_argument("mu_of: empty tuple");
    std::map<std::pair<Int, Int>, int> counts;
    for (const Rational& x : a) counts[{x.num(), x.den()}] += 1;
    std::vector<int> mult;
    mult.reserve(counts.size());
    for (const auto& [value, c] : counts) mult.push_back(c);
    std::sort(mult.begin(), mult.end(), std::greater<>());
    return Partition(std::move(mult));
}

Int orbit_size(const Partition& mu) {
    Int r = factorial(static_cast<unsigned>(mu.n()));
    for (int p : mu.parts()) r /= factorial(static_cast<unsigned>(p));
    return r;
}

int n_stat(const Partition& mu) {
    int s = 0;
    for (std::size_t j = 1; j < mu.num_parts(); ++j) s += static_cast<int>(j) * mu.parts()[j];
    return s;
}

Int syt_count(const Partition& lambda) {
    if (lambda.empty()) return 1;
    const auto& p = lambda.parts();
    std::vector<int> conj(static_cast<std::size_t>(p[0]), 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) conj[static_cast<std::size_t>(j)] += 1;
    Int hooks = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int hook = (p[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
            hooks *= hook;
        }
    Int r = factorial(static_cast<unsigned>(lambda.n()));
    r /= hooks;  // exact: hook length formula
    return r;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    if (n > 64) throw std::invalid_argument("partitions_of: n > 64 is not supported");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Descending enumeration: start at (n), repeatedly decrement the last
    // part greater than 1 and repack the remainder greedily.
    std::vector<int> cur{n};
    while (true) {
        out.emplace_back(cur);
        int rem = 0;
        while (!cur.empty() && cur.back() == 1) {
            rem += 1;
            cur.pop_back();
        }
        if (cur.empty()) break;
        cur.back() -= 1;
        rem += 1;
        int cap = cur.back();
        while (rem > 0) {
            int take = std::min(cap, rem);
            cur.push_back(take);
            rem -= take;
        }
    }
    return out;
}

}  // namespace apolar
