#pragma once

#include <optional>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/characters.hpp"
#include "apolar/partition.hpp"
#include "apolar/tpoly.hpp"

namespace apolar {

/// Everything the closed-form path produces for a multiplicity pattern mu
/// and power d.
struct CharacterReport {
    Partition mu;
    int d = 0;
    GradedCharacter character;  // degrees 0..d
    TPoly hilbert;
    Int ell;                     // number of distinct rearrangements
    int n_mu = 0;                // top degree of the associated graded quotient
    std::optional<Int> waring;   // rank certificate, when the degree is large enough
};

/// Graded character of the power-sum quotient algebra for any coefficient
/// tuple with pattern mu and nonzero entry sum: degree k carries the
/// cumulative character of the associated graded quotient up to degree
/// min(k, d-k), by the symmetry of the middle. Requires mu nonempty,
/// 0 <= d <= 64, |mu| <= 12; d = 0 yields the trivial character in
/// degree 0 alone.
GradedCharacter graded_character_formula(const Partition& mu, int d);

TPoly hilbert_series_formula(const Partition& mu, int d);

/// The number of distinct rearrangements, certified as the Waring rank of
/// the orbit sum exactly when the degree is at least twice n_stat(mu);
/// empty below that threshold.
std::optional<Int> waring_certificate(const Partition& mu, int d);

/// Full closed-form report; the waring field is set when d >= 2*n_stat(mu).
CharacterReport character_report(const Partition& mu, int d);

/// One degree of a formula-vs-bruteforce comparison.
struct CharDiff {
    Partition lambda;
    std::int64_t formula = 0;
    std::int64_t oracle = 0;
};

struct DegreeComparison {
    int k = 0;
    std::int64_t hilbert_formula = 0;
    std::int64_t hilbert_oracle = 0;
    std::vector<CharDiff> char_diffs;  // only entries where the two sides differ
    bool agree = true;
};

struct VerificationReport {
    RationalVector a;
    Partition mu;
    int d = 0;
    bool agree = true;
    std::vector<DegreeComparison> degrees;
};

/// Runs both paths on the same input and compares degree by degree.
/// Throws ZeroCoefficientSumError when the entries of a sum to zero.
/// The brute-force side limits the tuple length to 6.
VerificationReport verify(const RationalVector& a, int d, int threads = 0);

}  // namespace apolar
