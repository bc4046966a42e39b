#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "apolar/poly.hpp"
#include "test_helpers.hpp"

using namespace apolar;
using apolar::testing::P;
using apolar::testing::rvec;

TEST_SUITE("coefficient tuples") {
    TEST_CASE("derived data") {
        CoeffTuple t(rvec({1, 1, 2, 3}));
        CHECK(t.n() == 4);
        CHECK(t.mu == P({2, 1, 1}));
        CHECK(t.ell == 12);
        CHECK(t.sum == Rational(7));
        CHECK_NOTHROW(t.require_nonzero_sum());

        CoeffTuple z(rvec({1, 1, -2}));
        CHECK_THROWS_AS(z.require_nonzero_sum(), ZeroCoefficientSumError);
        CHECK_THROWS_AS(CoeffTuple(RationalVector{}), std::invalid_argument);
    }

    TEST_CASE("orbit_tuples lists each distinct rearrangement once") {
        auto orb = orbit_tuples(rvec({1, 1, 2}));
        REQUIRE(orb.size() == 3);
        CHECK(orb[0] == rvec({1, 1, 2}));
        CHECK(orb[1] == rvec({1, 2, 1}));
        CHECK(orb[2] == rvec({2, 1, 1}));

        CHECK(orbit_tuples(rvec({5, 5})).size() == 1);
        CHECK(orbit_tuples(rvec({1, 2, 3, 4})).size() == 24);
        // count always matches the multinomial of the pattern
        RationalVector a = rvec({3, 1, 3, 1, 2});
        CHECK(Int(orbit_tuples(a).size()) == orbit_size(mu_of(a)));
    }

    TEST_CASE("orbit_sum is symmetric and expands correctly") {
        CHECK(orbit_sum(rvec({1, 1}), 2) == Poly::parse(2, "x1^2 + 2*x1*x2 + x2^2"));
        CHECK(orbit_sum(rvec({1, 2}), 1) == Poly::parse(2, "3*x1 + 3*x2"));
        // (x1+2x2)^2 + (2x1+x2)^2
        CHECK(orbit_sum(rvec({1, 2}), 2) == Poly::parse(2, "5*x1^2 + 8*x1*x2 + 5*x2^2"));

        Poly f = orbit_sum(rvec({1, 1, 2, 3}), 5);
        CHECK(f.is_homogeneous());
        CHECK(f.degree() == 5);
        CHECK(f.permuted({3, 0, 2, 1}) == f);
    }

    TEST_CASE("rearrangements with nonzero sum stay projectively distinct") {
        // scale each tuple so its first nonzero entry is 1, then count
        auto projective_count = [](const RationalVector& a) {
            std::set<std::vector<std::string>> seen;
            for (const RationalVector& t : orbit_tuples(a)) {
                Rational pivot;
                for (const Rational& c : t)
                    if (!c.is_zero()) {
                        pivot = c;
                        break;
                    }
                std::vector<std::string> normalized;
                for (const Rational& c : t) normalized.push_back((c / pivot).str());
                seen.insert(normalized);
            }
            return seen.size();
        };

        for (const auto& a : {rvec({1, 1, 2, 3}), rvec({1, 2, 4}), rvec({0, 1, 1}), rvec({2, -1})})
            CHECK(Int(projective_count(a)) == CoeffTuple(a).ell);

        // with a zero sum the points can collapse: (1,-1) and (-1,1) agree in P^1
        CHECK(projective_count(rvec({1, -1})) == 1);
        CHECK(CoeffTuple(rvec({1, -1})).ell == 2);
    }
}

TEST_SUITE("catalecticants") {
    TEST_CASE("entries realize the contraction pairing") {
        Poly f = Poly::parse(2, "x1^2 + 2*x1*x2 + x2^2");
        ExactMatrix m = catalecticant_matrix(f, 1);
        REQUIRE(m.rows() == 2);
        REQUIRE(m.cols() == 2);
        // each column is the derivative of f by the column's monomial
        CHECK(m(0, 0) == Rational(2));
        CHECK(m(0, 1) == Rational(2));
        CHECK(m(1, 0) == Rational(2));
        CHECK(m(1, 1) == Rational(2));
        CHECK(rank(m) == 1);
    }

    TEST_CASE("columns agree with the pairing applied monomial by monomial") {
        Poly f = orbit_sum(rvec({1, 1, 2}), 3);
        int d = f.degree();
        for (int k = 0; k <= d; ++k) {
            ExactMatrix m = catalecticant_matrix(f, k);
            auto cols = monomials_of_degree(f.ambient(), d - k);
            for (std::size_t j = 0; j < cols.size(); ++j) {
                RationalVector expected =
                    diff(Poly::monomial(cols[j]), f).coefficient_vector(k);
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    CAPTURE(k);
                    CAPTURE(j);
                    CHECK(m(i, j) == expected[i]);
                }
            }
        }
    }

    TEST_CASE("input validation") {
        CHECK_THROWS_AS(catalecticant_matrix(Poly(2), 0), DegenerateDegreeError);
        CHECK_THROWS_AS(catalecticant_matrix(Poly::parse(2, "x1 + x1^2"), 1), NotHomogeneousError);
        Poly f = Poly::parse(2, "x1^2");
        CHECK_THROWS_AS(catalecticant_matrix(f, 3), DegreeOutOfRangeError);
        CHECK_THROWS_AS(catalecticant_matrix(f, -1), DegreeOutOfRangeError);
    }

    TEST_CASE("hilbert function of a single power is all ones") {
        Poly f = Poly::linear_form(rvec({1, 2, 3})).pow(4);
        CHECK(hilbert_function_bruteforce(f) == TPoly({1, 1, 1, 1, 1}));
    }

    TEST_CASE("hilbert function is palindromic, and unimodal under the sum hypothesis") {
        std::mt19937 gen(424242);
        std::uniform_int_distribution<long> val(-3, 4);
        for (int trial = 0; trial < 10; ++trial) {
            int n = 2 + static_cast<int>(gen() % 3);
            int d = 2 + static_cast<int>(gen() % 4);
            RationalVector a;
            for (int i = 0; i < n; ++i) a.emplace_back(val(gen));
            Poly f = orbit_sum(a, d);
            if (f.is_zero()) continue;
            TPoly h = hilbert_function_bruteforce(f);
            CAPTURE(trial);
            for (int k = 0; k <= d; ++k) CHECK(h.coeff(k) == h.coeff(d - k));

            Rational sum;
            for (const Rational& c : a) sum += c;
            if (sum.is_zero()) continue;
            for (int k = 0; k + 1 <= d / 2; ++k) CHECK(h.coeff(k) <= h.coeff(k + 1));
        }
    }

    TEST_CASE("contraction by a monomial is the tuple-weighted sum of powers") {
        // diff(x^b, F) = d!/k! * sum_i t_i^b (t_i.x)^k  for |b| = d - k
        for (const auto& a : {rvec({1, 1, 2}), rvec({2, -1, 3}), rvec({1, -1})}) {
            int n = static_cast<int>(a.size());
            int d = 5;
            Poly f = orbit_sum(a, d);
            auto tuples = orbit_tuples(a);
            for (int k = 0; k <= d; ++k) {
                Rational scale = Rational(factorial(static_cast<unsigned>(d))) /
                                 Rational(factorial(static_cast<unsigned>(k)));
                for (const Monomial& b : monomials_of_degree(n, d - k)) {
                    Poly rhs(n);
                    for (const RationalVector& t : tuples) {
                        Rational weight = scale;
                        for (int j = 0; j < n; ++j)
                            for (int e = 0; e < b[static_cast<std::size_t>(j)]; ++e)
                                weight *= t[static_cast<std::size_t>(j)];
                        rhs = rhs + Poly::linear_form(t).pow(k).scaled(weight);
                    }
                    CAPTURE(k);
                    CHECK(diff(Poly::monomial(b), f) == rhs);
                }
            }
        }
    }

    TEST_CASE("three distinct values at degree four: regression baseline") {
        Poly f = orbit_sum(rvec({1, 2, 3}), 4);
        TPoly h = hilbert_function_bruteforce(f);
        CHECK(h == TPoly({1, 3, 5, 3, 1}));
        // palindromic and unimodal, and HS(1) is the total dimension
        CHECK(h.at_one() == 13);
        GradedCharacter g = graded_character_bruteforce(f);
        CHECK(g.mult_at(P({3}), 0) == 1);
        CHECK(g.mult_at(P({3}), 4) == 1);
        CHECK(g.hilbert() == h);
        for (const Partition& lam : partitions_of(3))
            CHECK(g.mult_at(lam, 0) == g.mult_at(lam, 4));
    }
}

TEST_SUITE("permutation plumbing") {
    TEST_CASE("representative permutations have the requested cycle type") {
        for (int n = 1; n <= 7; ++n)
            for (const Partition& rho : partitions_of(n)) {
                CAPTURE(rho.str());
                CHECK(cycle_type_of(representative_permutation(rho)) == rho);
            }
    }

    TEST_CASE("cycle_type_of on explicit permutations") {
        CHECK(cycle_type_of({0, 1, 2}) == P({1, 1, 1}));
        CHECK(cycle_type_of({1, 0, 2}) == P({2, 1}));
        CHECK(cycle_type_of({1, 2, 0}) == P({3}));
        CHECK(cycle_type_of({1, 0, 3, 2}) == P({2, 2}));
    }
}

TEST_SUITE("graded character, brute force") {
    TEST_CASE("square of a two-variable sum is trivial in every degree") {
        Poly f = orbit_sum(rvec({1, 1}), 2);
        GradedCharacter g = graded_character_bruteforce(f);
        for (int k = 0; k <= 2; ++k) {
            CHECK(g.mult_at(P({2}), k) == 1);
            CHECK(g.mult_at(P({1, 1}), k) == 0);
        }
    }

    TEST_CASE("three distinct values, square: the expected wedge") {
        // degrees 0,1,2 with middle chi^(3) + chi^(2,1)
        Poly f = orbit_sum(rvec({1, 2, 3}), 2);
        GradedCharacter g = graded_character_bruteforce(f);
        CHECK(g.mult_at(P({3}), 0) == 1);
        CHECK(g.mult_at(P({3}), 1) == 1);
        CHECK(g.mult_at(P({2, 1}), 1) == 1);
        CHECK(g.mult_at(P({1, 1, 1}), 1) == 0);
        CHECK(g.mult_at(P({3}), 2) == 1);
        CHECK(g.mult_at(P({2, 1}), 2) == 0);
        CHECK(g.hilbert() == TPoly({1, 3, 1}));
    }

    TEST_CASE("the full worked example: pattern (2,1,1) at degree 7") {
        Poly f = orbit_sum(rvec({1, 1, 2, 3}), 7);
        GradedCharacter g = graded_character_bruteforce(f);

        CHECK(g.hilbert() == TPoly({1, 4, 9, 12, 12, 9, 4, 1}));

        auto expect = [&](int k, long m4, long m31, long m22, long m211, long m1111) {
            CAPTURE(k);
            CHECK(g.mult_at(P({4}), k) == m4);
            CHECK(g.mult_at(P({3, 1}), k) == m31);
            CHECK(g.mult_at(P({2, 2}), k) == m22);
            CHECK(g.mult_at(P({2, 1, 1}), k) == m211);
            CHECK(g.mult_at(P({1, 1, 1, 1}), k) == m1111);
        };
        expect(0, 1, 0, 0, 0, 0);
        expect(1, 1, 1, 0, 0, 0);
        expect(2, 1, 2, 1, 0, 0);
        expect(3, 1, 2, 1, 1, 0);
        expect(4, 1, 2, 1, 1, 0);
        expect(5, 1, 2, 1, 0, 0);
        expect(6, 1, 1, 0, 0, 0);
        expect(7, 1, 0, 0, 0, 0);
    }

    TEST_CASE("value at the identity class recovers the hilbert function") {
        for (const auto& [a, d] : std::vector<std::pair<RationalVector, int>>{
                 {rvec({1, 1, 2}), 4}, {rvec({1, -1, 3}), 3}, {rvec({2, 3}), 5}}) {
            Poly f = orbit_sum(a, d);
            GradedCharacter g = graded_character_bruteforce(f);
            TPoly h = hilbert_function_bruteforce(f);
            Partition id(std::vector<int>(static_cast<std::size_t>(f.ambient()), 1));
            for (int k = 0; k <= d; ++k) {
                Rational dim = g.class_function_at(k).at(id);
                CHECK(dim == Rational(h.coeff(k)));
            }
        }
    }

    TEST_CASE("all-equal tuples give a line of trivial modules") {
        GradedCharacter g = graded_character_bruteforce(orbit_sum(rvec({2, 2, 2}), 3));
        CHECK(g.hilbert() == TPoly({1, 1, 1, 1}));
        for (int k = 0; k <= 3; ++k) {
            CHECK(g.mult_at(P({3}), k) == 1);
            CHECK(g.mult_at(P({2, 1}), k) == 0);
            CHECK(g.mult_at(P({1, 1, 1}), k) == 0);
        }
    }

    TEST_CASE("permutation action on the orbit decomposes as expected") {
        // count rearrangements of (1,1,2,3) fixed by one representative of
        // each cycle type, then decompose that permutation character
        auto tuples = orbit_tuples(rvec({1, 1, 2, 3}));
        ClassFunction perm = ClassFunction::zero(4);
        for (const Partition& rho : partitions_of(4)) {
            auto sigma = representative_permutation(rho);
            long fixed = 0;
            for (const RationalVector& t : tuples) {
                bool ok = true;
                for (std::size_t j = 0; j < t.size(); ++j)
                    if (t[static_cast<std::size_t>(sigma[j])] != t[j]) {
                        ok = false;
                        break;
                    }
                if (ok) ++fixed;
            }
            perm.values[rho] = Rational(fixed);
        }

        auto mults = decompose(perm);
        CHECK(mults[P({4})] == Rational(1));
        CHECK(mults[P({3, 1})] == Rational(2));
        CHECK(mults[P({2, 2})] == Rational(1));
        CHECK(mults[P({2, 1, 1})] == Rational(1));
        CHECK(mults[P({1, 1, 1, 1})] == Rational(0));
    }

    TEST_CASE("rejects asymmetric input") {
        CHECK_THROWS_AS(graded_character_bruteforce(Poly::parse(2, "x1^2")),
                        std::invalid_argument);
    }
}

TEST_SUITE("factorization of the catalecticant") {
    TEST_CASE("psi is the transpose of phi") {
        std::mt19937 gen(777);
        std::uniform_int_distribution<long> val(-4, 5);
        for (int trial = 0; trial < 8; ++trial) {
            int n = 2 + static_cast<int>(gen() % 3);
            int k = static_cast<int>(gen() % 4);
            RationalVector a;
            for (int i = 0; i < n; ++i) a.emplace_back(val(gen));
            CAPTURE(trial);
            CHECK(psi_matrix(a, k) == phi_matrix(a, k).transpose());
        }
    }

    TEST_CASE("catalecticant factors through the orbit evaluation") {
        std::mt19937 gen(31337);
        std::uniform_int_distribution<long> num(-4, 5);
        std::uniform_int_distribution<long> den(1, 3);
        for (int trial = 0; trial < 12; ++trial) {
            int n = 2 + static_cast<int>(gen() % 3);  // up to 4 variables
            int d = 1 + static_cast<int>(gen() % 6);
            int k = static_cast<int>(gen() % (d + 1));
            RationalVector a;
            for (int i = 0; i < n; ++i) a.emplace_back(Rational(Int(num(gen)), Int(den(gen))));
            Poly f = orbit_sum(a, d);
            if (f.is_zero()) continue;

            ExactMatrix lhs = catalecticant_matrix(f, k);
            ExactMatrix rhs = phi_matrix(a, k) * psi_matrix(a, d - k) * nu_matrix(n, d - k);
            Rational scale(factorial(static_cast<unsigned>(d)),
                           factorial(static_cast<unsigned>(k)));
            CAPTURE(trial);
            CAPTURE(n);
            CAPTURE(d);
            CAPTURE(k);
            CHECK(lhs == rhs.scaled(scale));
        }
    }

    TEST_CASE("diagonal scaling matrix") {
        ExactMatrix nu = nu_matrix(2, 2);
        REQUIRE(nu.rows() == 3);
        CHECK(nu(0, 0) == Rational(1));                    // x1^2: 2!/2!
        CHECK(nu(1, 1) == Rational(Int(1), Int(2)));       // x1 x2: 1!1!/2!
        CHECK(nu(2, 2) == Rational(1));
        CHECK(nu(0, 1) == Rational(0));
    }

    TEST_CASE("degree zero evaluation is the all-ones row") {
        for (const auto& a : {rvec({1, 1, 2, 3}), rvec({2, -1}), rvec({5, 5, 5})}) {
            ExactMatrix phi0 = phi_matrix(a, 0);
            REQUIRE(phi0.rows() == 1);
            REQUIRE(phi0.cols() == orbit_tuples(a).size());
            for (std::size_t j = 0; j < phi0.cols(); ++j) CHECK(phi0(0, j) == Rational(1));
        }
    }

    TEST_CASE("the two evaluation routes have equal rank") {
        for (const auto& a : {rvec({1, 1, 2}), rvec({1, -1, 3}), rvec({1, -1})})
            for (int k = 0; k <= 5; ++k) {
                CAPTURE(k);
                CHECK(rank(phi_matrix(a, k)) == rank(psi_matrix(a, k)));
            }
    }

    TEST_CASE("power span ranks of the worked example") {
        RationalVector a = rvec({1, 1, 2, 3});
        std::vector<std::size_t> expected{1, 4, 9, 12};
        for (int k = 0; k <= 3; ++k)
            CHECK(rank(phi_matrix(a, k)) == expected[static_cast<std::size_t>(k)]);
    }

    TEST_CASE("evaluation kernels shrink as the power grows") {
        // ker phi_{k+1} inside ker phi_k, under the nonzero-sum hypothesis:
        // stacking adds no new rank
        for (const auto& a : {rvec({1, 1, 2}), rvec({1, 2, 4}), rvec({1, 1, 2, 3})}) {
            CoeffTuple(a).require_nonzero_sum();
            for (int k = 0; k <= 4; ++k) {
                ExactMatrix lo = phi_matrix(a, k);
                ExactMatrix hi = phi_matrix(a, k + 1);
                CAPTURE(k);
                CHECK(rank(lo.vstack(hi)) == rank(hi));
            }
        }
    }

    TEST_CASE("evaluation and coevaluation meet transversely") {
        for (const auto& a : {rvec({1, 1, 2}), rvec({1, 2, 4}), rvec({1, 1, 2, 3})}) {
            CoeffTuple(a).require_nonzero_sum();
            for (int d = 2; d <= 5; ++d)
                for (int k = 0; k <= d; ++k) {
                    std::size_t rk = rank(phi_matrix(a, k));
                    std::size_t rdk = rank(phi_matrix(a, d - k));
                    CAPTURE(d);
                    CAPTURE(k);
                    CHECK(rank(phi_matrix(a, k) * psi_matrix(a, d - k)) == std::min(rk, rdk));
                }
        }
    }
}

TEST_SUITE("orbit power spans") {
    TEST_CASE("span of the powers has the cumulative character") {
        // pattern (2,1): quotient pieces are chi^(3) then chi^(3)+chi^(2,1)
        RationalVector a = rvec({1, 1, 2});
        ClassFunction c0 = orbit_power_character(a, 0);
        CHECK(c0.at(P({1, 1, 1})) == Rational(1));

        ClassFunction c1 = orbit_power_character(a, 1);
        CHECK(c1.at(P({1, 1, 1})) == Rational(3));  // full 3-dim span at k=1
        CHECK(c1.at(P({3})) == Rational(0));

        // stabilizes at the orbit permutation character once powers separate
        ClassFunction c5 = orbit_power_character(a, 5);
        CHECK(c5.at(P({1, 1, 1})) == Rational(3));
        ClassFunction c6 = orbit_power_character(a, 6);
        CHECK(c6.values == c5.values);
    }

    TEST_CASE("high powers of a full orbit carry the regular character") {
        // all entries distinct: the span eventually has dimension n! and
        // the permutation action on it is the regular representation
        RationalVector a = rvec({1, 2, 4});
        ClassFunction c = orbit_power_character(a, 9);
        CHECK(c.at(P({1, 1, 1})) == Rational(6));
        CHECK(c.at(P({2, 1})) == Rational(0));
        CHECK(c.at(P({3})) == Rational(0));
    }
}
