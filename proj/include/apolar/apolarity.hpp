#pragma once

#include <vector>

#include "apolar/characters.hpp"
#include "apolar/matrix.hpp"
#include "apolar/partition.hpp"
#include "apolar/poly.hpp"
#include "apolar/tpoly.hpp"

namespace apolar {

/// A coefficient tuple a = (a_1, ..., a_n) together with the derived data
/// the rest of the project keys on.
struct CoeffTuple {
    RationalVector a;
    Partition mu;   // multiplicity pattern of the entries
    Int ell;        // number of distinct rearrangements of a
    Rational sum;

    explicit CoeffTuple(RationalVector coeffs);

    int n() const { return static_cast<int>(a.size()); }

    /// Throws ZeroCoefficientSumError when a_1 + ... + a_n == 0.
    void require_nonzero_sum() const;
};

/// The distinct rearrangements of a, in ascending lexicographic order.
std::vector<RationalVector> orbit_tuples(const RationalVector& a);

/// F = sum over the distinct rearrangements t of a of (t_1 x_1 + ... + t_n x_n)^d,
/// expanded by genuine polynomial arithmetic.
Poly orbit_sum(const RationalVector& a, int d);

/// Matrix of the contraction pairing against f in degree k: rows are
/// indexed by the degree-k monomials m, columns by the degree-(d-k)
/// monomials b, with entry coeff_{m+b}(f) * (m+b)!/m! -- the x^m
/// coefficient of b applied to f. Requires f homogeneous and nonzero
/// (NotHomogeneousError / DegenerateDegreeError) and 0 <= k <= d
/// (DegreeOutOfRangeError).
ExactMatrix catalecticant_matrix(const Poly& f, int k);

/// Hilbert function of the apolarity quotient of f: coefficient k is
/// rank of the degree-k catalecticant, k = 0..deg f.
TPoly hilbert_function_bruteforce(const Poly& f);

/// Same, for the orbit sum of the d-th power of a.x.
TPoly hilbert_function_bruteforce(const RationalVector& a, int d);

/// Permutation with consecutive cycles of the given lengths:
/// rho = (3,2) gives 0->1->2->0, 3->4->3. Deterministic.
std::vector<int> representative_permutation(const Partition& rho);

Partition cycle_type_of(const std::vector<int>& sigma);

/// Graded character of the apolarity quotient of a symmetric f, computed
/// degree by degree from catalecticant column spaces: the trace of each
/// cycle type acting on a column-space basis is decomposed into
/// irreducible characters. Multiplicities that fail to be nonnegative
/// integers raise NonIntegralMultiplicityError. `threads` as in
/// thread_budget().
GradedCharacter graded_character_bruteforce(const Poly& f, int threads = 0);

/// Same, for the orbit sum of the d-th power of a.x.
GradedCharacter graded_character_bruteforce(const RationalVector& a, int d, int threads = 0);

/// Character of the cycle-type action on a subspace of the degree-k
/// monomial span given by basis columns. The subspace must be stable
/// under variable permutation.
ClassFunction span_character(const ExactMatrix& basis, int n, int k);

/// Character of span{(t.x)^k : t a distinct rearrangement of a}.
ClassFunction orbit_power_character(const RationalVector& a, int k);

/// Columns are the coefficient vectors of (t.x)^k for each distinct
/// rearrangement t of a, expanded by polynomial arithmetic. dim S_k rows.
ExactMatrix phi_matrix(const RationalVector& a, int k);

/// Closed-form transpose route: entry (i, b) = multinomial(k, b) * t_i^b.
/// Equals phi_matrix(a, k) transposed.
ExactMatrix psi_matrix(const RationalVector& a, int k);

/// Diagonal matrix with entry b!/k! at each degree-k monomial b.
ExactMatrix nu_matrix(int n, int k);

}  // namespace apolar
