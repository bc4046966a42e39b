#include "apolar/apolarity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "apolar/errors.hpp"
#include "apolar/parallel.hpp"

namespace apolar {

CoeffTuple::CoeffTuple(RationalVector coeffs) : a(std::move(coeffs)) {
    if (a.empty()) throw std::invalid_argument("CoeffTuple: empty coefficient tuple");
    mu = mu_of(a);
    ell = orbit_size(mu);
    sum = Rational(0);
    for (const Rational& x : a) sum += x;
}

void CoeffTuple::require_nonzero_sum() const {
    if (sum.is_zero()) throw ZeroCoefficientSumError();
}

std::vector<RationalVector> orbit_tuples(const RationalVector& a) {
    RationalVector t = a;
    std::sort(t.begin(), t.end());
    std::vector<RationalVector> out;
    do {
        out.push_back(t);
    } while (std::next_permutation(t.begin(), t.end()));
    return out;
}

Poly orbit_sum(const RationalVector& a, int d) {
    if (a.empty()) throw std::invalid_argument("orbit_sum: empty coefficient tuple");
    if (d < 1 || d > 64) throw DegreeOutOfRangeError("orbit_sum: need 1 <= d <= 64");
    Poly f(static_cast<int>(a.size()));
    for (const RationalVector& t : orbit_tuples(a)) f = f + Poly::linear_form(t).pow(d);
    return f;
}

namespace {

Rational rising_quotient(const Monomial& m, const Monomial& b) {
    // (m+b)!/m! as an exact integer, componentwise
    Int v = 1;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int x = m[i] + b[i]; x > m[i]; --x) v *= x;
    return Rational(v);
}

}  // namespace

ExactMatrix catalecticant_matrix(const Poly& f, int k) {
    if (f.is_zero()) throw DegenerateDegreeError("catalecticant_matrix: zero polynomial");
    if (!f.is_homogeneous()) throw NotHomogeneousError("catalecticant_matrix: f must be homogeneous");
    int d = f.degree();
    if (k < 0 || k > d) throw DegreeOutOfRangeError("catalecticant_matrix: need 0 <= k <= deg f");
    auto rows = monomials_of_degree(f.ambient(), k);
    auto cols = monomials_of_degree(f.ambient(), d - k);
    ExactMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Monomial sum(rows[i]);
            for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += cols[j][x];
            Rational c = f.coeff(sum);
            if (!c.is_zero()) m(i, j) = c * rising_quotient(rows[i], cols[j]);
        }
    return m;
}

TPoly hilbert_function_bruteforce(const Poly& f) {
    if (f.is_zero()) throw DegenerateDegreeError("hilbert_function_bruteforce: zero polynomial");
    int d = f.degree();
    TPoly h;
    for (int k = 0; k <= d; ++k)
        h.add_to_coeff(k, static_cast<std::int64_t>(rank(catalecticant_matrix(f, k))));
    return h;
}

std::vector<int> representative_permutation(const Partition& rho) {
    std::vector<int> sigma(static_cast<std::size_t>(rho.n()));
    int start = 0;
    for (int len : rho.parts()) {
        for (int i = 0; i < len; ++i)
            sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return sigma;
}

Partition cycle_type_of(const std::vector<int>& sigma) {
    std::vector<char> seen(sigma.size(), 0);
    std::vector<int> lens;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<std::size_t>(sigma[j]);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
}

namespace {

// index of each degree-j monomial in the monomials_of_degree(n, j) list
std::map<Monomial, std::size_t, GrlexLess> index_map(const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t, GrlexLess> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    return idx;
}

bool is_symmetric(const Poly& f) {
    int n = f.ambient();
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> swap(static_cast<std::size_t>(n));
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[static_cast<std::size_t>(i)], swap[static_cast<std::size_t>(i + 1)]);
        if (f.permuted(swap) != f) return false;
    }
    return true;
}

}  // namespace

ClassFunction span_character(const ExactMatrix& basis, int n, int k) {
    auto mono = monomials_of_degree(n, k);
    if (basis.rows() != mono.size())
        throw SizeMismatchError("span_character: basis rows must match the degree-k monomial count");
    auto idx = index_map(mono);

    ClassFunction traces = ClassFunction::zero(n);
    for (const Partition& rho : partitions_of(n)) {
        std::vector<int> sigma = representative_permutation(rho);
        // permute the rows of basis: row of x^m moves to the row of x^{sigma m}
        ExactMatrix moved(basis.rows(), basis.cols());
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            Monomial image(mono[r].size());
            for (std::size_t j = 0; j < image.size(); ++j)
                image[static_cast<std::size_t>(sigma[j])] = mono[r][j];
            std::size_t target = idx.at(image);
            for (std::size_t c = 0; c < basis.cols(); ++c) moved(target, c) = basis(r, c);
        }
        ExactMatrix coords = solve_in_span_multi(basis, moved);
        Rational trace(0);
        for (std::size_t j = 0; j < coords.cols(); ++j) trace += coords(j, j);
        traces.values[rho] = trace;
    }
    return traces;
}

ClassFunction orbit_power_character(const RationalVector& a, int k) {
    return span_character(column_space_basis(phi_matrix(a, k)), static_cast<int>(a.size()), k);
}

GradedCharacter graded_character_bruteforce(const Poly& f, int threads) {
    if (f.is_zero()) throw DegenerateDegreeError("graded_character_bruteforce: zero polynomial");
    if (!f.is_homogeneous())
        throw NotHomogeneousError("graded_character_bruteforce: f must be homogeneous");
    if (!is_symmetric(f))
        throw std::invalid_argument("graded_character_bruteforce: f must be symmetric");

    int n = f.ambient();
    int d = f.degree();

    GradedCharacter g(n);
    std::mutex g_mutex;

    parallel_for(static_cast<std::size_t>(d + 1), thread_budget(threads), [&](std::size_t kk) {
        int k = static_cast<int>(kk);
        // degree-k component of the quotient, realized as the contraction image
        // inside the degree-k part of the dual ring
        ExactMatrix cat = catalecticant_matrix(f, k);
        ClassFunction traces = span_character(column_space_basis(cat), n, k);

        auto mults = decompose(traces);
        std::lock_guard<std::mutex> lock(g_mutex);
        for (const auto& [lambda, m] : mults) {
            if (m.is_zero()) continue;
            if (!m.is_integer() || m.sign() < 0)
                throw NonIntegralMultiplicityError(
                    "graded_character_bruteforce: multiplicity of " + lambda.str() +
                    " in degree " + std::to_string(k) + " is " + m.str());
            if (!m.num().fits_slong_p())
                throw std::overflow_error("graded_character_bruteforce: multiplicity overflow");
            g.add(lambda, k, m.num().get_si());
        }
    });
    return g;
}

GradedCharacter graded_character_bruteforce(const RationalVector& a, int d, int threads) {
    return graded_character_bruteforce(orbit_sum(a, d), threads);
}

TPoly hilbert_function_bruteforce(const RationalVector& a, int d) {
    return hilbert_function_bruteforce(orbit_sum(a, d));
}

ExactMatrix phi_matrix(const RationalVector& a, int k) {
    if (a.empty()) throw std::invalid_argument("phi_matrix: empty coefficient tuple");
    if (k < 0) throw DegreeOutOfRangeError("phi_matrix: need k >= 0");
    auto tuples = orbit_tuples(a);
    auto rows = monomials_of_degree(static_cast<int>(a.size()), k);
    ExactMatrix m(rows.size(), tuples.size());
    for (std::size_t j = 0; j < tuples.size(); ++j) {
        RationalVector col = Poly::linear_form(tuples[j]).pow(k).coefficient_vector(k);
        for (std::size_t i = 0; i < rows.size(); ++i) m(i, j) = col[i];
    }
    return m;
}

ExactMatrix psi_matrix(const RationalVector& a, int k) {
    if (a.empty()) throw std::invalid_argument("psi_matrix: empty coefficient tuple");
    if (k < 0) throw DegreeOutOfRangeError("psi_matrix: need k >= 0");
    auto tuples = orbit_tuples(a);
    auto cols = monomials_of_degree(static_cast<int>(a.size()), k);
    ExactMatrix m(tuples.size(), cols.size());
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            Rational v(multinomial(static_cast<unsigned>(k), cols[j]));
            for (std::size_t x = 0; x < cols[j].size(); ++x)
                for (int e = 0; e < cols[j][x]; ++e) v *= tuples[i][x];
            m(i, j) = v;
        }
    return m;
}

ExactMatrix nu_matrix(int n, int k) {
    if (n < 1) throw std::invalid_argument("nu_matrix: need n >= 1");
    if (k < 0) throw DegreeOutOfRangeError("nu_matrix: need k >= 0");
    auto mono = monomials_of_degree(n, k);
    ExactMatrix m(mono.size(), mono.size());
    Int kfact = factorial(static_cast<unsigned>(k));
    for (std::size_t i = 0; i < mono.size(); ++i) {
        Int bfact = 1;
        for (int e : mono[i]) bfact *= factorial(static_cast<unsigned>(e));
        m(i, i) = Rational(bfact, kfact);
    }
    return m;
}

}  // namespace apolar
