#pragma once

#include <string>
#include <vector>

#include "apolar/characters.hpp"
#include "apolar/partition.hpp"
#include "apolar/tpoly.hpp"

namespace apolar {

/// Semistandard Young tableau: rows weakly increase left to right,
/// columns strictly increase top to bottom.
struct Tableau {
    std::vector<std::vector<int>> rows;

    /// Rows read bottom to top, each left to right.
    std::vector<int> reading_word() const;

    std::string str() const;
};

/// All semistandard tableaux of the given shape whose content is exactly
/// `content` (letter i appears content_i times). Deterministic order:
/// cells are filled row-major with the smallest feasible letter first.
std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content);

/// Charge statistic on a word whose letter multiplicities form a
/// partition (count of 1s >= count of 2s >= ..., no gaps). Throws
/// NonPartitionContentError otherwise.
long charge(const std::vector<int>& word);

/// Charge of a tableau = charge of its reading word.
long charge(const Tableau& t);

/// Kostka polynomial K_{lambda,mu}(t) = sum over SSYT of shape lambda and
/// content mu of t^charge. Shapes and contents of different weights are
/// rejected.
TPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

/// Graded character whose chi^lambda multiplicity in degree k is the
/// coefficient of t^{n_stat(mu) - k} in K_{lambda,mu}(t). Degrees run
/// 0..n_stat(mu); the top degree carries exactly chi^mu.
GradedCharacter r_mu_character(const Partition& mu);

}  // namespace apolar
