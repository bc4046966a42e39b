#pragma once

#include <string>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
///
/// Partitions compare in the canonical enumeration order used throughout
/// this project: by weight first, then reverse-lexicographically, so for
/// a fixed n the order is (n), (n-1,1), ..., (1^n). Sorted containers of
/// partitions therefore iterate in that order.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);  // "2,1,1"

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t num_parts() const { return parts_.size(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    std::string str() const;  // "2,1,1"; the empty partition prints as "-"

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Partition of repeated-value multiplicities of a tuple, sorted weakly
/// decreasing. mu_of((1,1,2,3)) = (2,1,1).
Partition mu_of(const RationalVector& a);

/// Orbit size of a tuple with multiplicity pattern mu: n!/(mu_1! ... mu_r!).
Int orbit_size(const Partition& mu);

/// n(mu) = mu_2 + 2*mu_3 + ... + (r-1)*mu_r.
int n_stat(const Partition& mu);

/// Number of standard Young tableaux of the given shape (hook length formula).
Int syt_count(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order, (n) first.
/// n > 64 is rejected.
std::vector<Partition> partitions_of(int n);

}  // namespace apolar
