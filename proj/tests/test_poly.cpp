#include <doctest.h>

#include <algorithm>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/poly.hpp"
#include "test_helpers.hpp"

using namespace apolar;

TEST_SUITE("monomials") {
    TEST_CASE("monomials_of_degree lists descending graded-lex, x1-heavy first") {
        auto m23 = monomials_of_degree(2, 3);
        REQUIRE(m23.size() == 4);
        CHECK(m23[0] == Monomial{3, 0});
        CHECK(m23[1] == Monomial{2, 1});
        CHECK(m23[2] == Monomial{1, 2});
        CHECK(m23[3] == Monomial{0, 3});

        auto m32 = monomials_of_degree(3, 2);
        REQUIRE(m32.size() == 6);
        CHECK(m32[0] == Monomial{2, 0, 0});
        CHECK(m32[1] == Monomial{1, 1, 0});
        CHECK(m32[2] == Monomial{1, 0, 1});
        CHECK(m32[3] == Monomial{0, 2, 0});
        CHECK(m32[4] == Monomial{0, 1, 1});
        CHECK(m32[5] == Monomial{0, 0, 2});

        CHECK(monomials_of_degree(4, 0) == std::vector<Monomial>{Monomial{0, 0, 0, 0}});
        // count is the stars-and-bars binomial
        CHECK(monomials_of_degree(4, 5).size() == 56);
    }

    TEST_CASE("grlex orders by degree, then lexicographically") {
        GrlexLess less;
        CHECK(less(Monomial{1, 0}, Monomial{1, 1}));   // degree 1 < degree 2
        CHECK(less(Monomial{0, 2}, Monomial{1, 1}));   // same degree, lex
        CHECK_FALSE(less(Monomial{2, 0}, Monomial{1, 1}));
        CHECK_FALSE(less(Monomial{1, 1}, Monomial{1, 1}));
    }
}

TEST_SUITE("poly") {
    TEST_CASE("parse and str round trip") {
        Poly p = Poly::parse(3, "3*x1^2*x2 + 1/2*x3");
        CHECK(p.coeff({2, 1, 0}) == Rational(3));
        CHECK(p.coeff({0, 0, 1}) == Rational(Int(1), Int(2)));
        CHECK(p.str() == "3*x1^2*x2 + 1/2*x3");

        Poly q = Poly::parse(2, "x1 - x2");
        CHECK(q.coeff({1, 0}) == Rational(1));
        CHECK(q.coeff({0, 1}) == Rational(-1));
        CHECK(q.str() == "x1 - x2");

        CHECK(Poly::parse(2, "0.25*x2^4").coeff({0, 4}) == Rational(Int(1), Int(4)));
        CHECK(Poly::parse(1, "x1 - x1").is_zero());
        CHECK(Poly(2).str() == "0");
        CHECK(Poly::parse(2, "-x1").str() == "-x1");
        CHECK_THROWS(Poly::parse(2, "x3"));
    }

    TEST_CASE("arithmetic expands products") {
        Poly x1 = Poly::variable(2, 0);
        Poly x2 = Poly::variable(2, 1);
        Poly sq = (x1 + x2) * (x1 + x2);
        CHECK(sq.coeff({2, 0}) == Rational(1));
        CHECK(sq.coeff({1, 1}) == Rational(2));
        CHECK(sq.coeff({0, 2}) == Rational(1));
        CHECK((sq - sq).is_zero());
        CHECK(sq.degree() == 2);
        CHECK(sq.is_homogeneous());
        CHECK_FALSE((sq + x1).is_homogeneous());
        CHECK(Poly(2).degree() == -1);
    }

    TEST_CASE("pow matches the multinomial theorem") {
        Poly l = Poly::linear_form({Rational(1), Rational(1), Rational(1)});
        Poly c = l.pow(3);
        CHECK(c.coeff({1, 1, 1}) == Rational(6));
        CHECK(c.coeff({3, 0, 0}) == Rational(1));
        CHECK(c.coeff({2, 1, 0}) == Rational(3));
        CHECK(c.term_count() == 10);

        Poly weighted = Poly::linear_form({Rational(2), Rational(-1)});
        Poly w2 = weighted.pow(2);
        CHECK(w2.coeff({2, 0}) == Rational(4));
        CHECK(w2.coeff({1, 1}) == Rational(-4));
        CHECK(w2.coeff({0, 2}) == Rational(1));

        CHECK(l.pow(0) == Poly::monomial(Monomial{0, 0, 0}));
    }

    TEST_CASE("ambient dimension mismatches are rejected") {
        Poly a(2), b(3);
        CHECK_THROWS_AS(a + b, AmbientMismatchError);
        CHECK_THROWS_AS(a * b, AmbientMismatchError);
        CHECK_THROWS_AS(diff(a, b), AmbientMismatchError);
    }

    TEST_CASE("permuted relabels variables") {
        // sigma sends position 0 -> 1, 1 -> 0 (a transposition)
        Poly p = Poly::parse(2, "x1^2*x2");
        CHECK(p.permuted({1, 0}) == Poly::parse(2, "x1*x2^2"));

        // 3-cycle on three variables: x1->x2, x2->x3, x3->x1
        Poly q = Poly::parse(3, "x1^3 + 2*x2*x3");
        Poly r = q.permuted({1, 2, 0});
        CHECK(r == Poly::parse(3, "x2^3 + 2*x1*x3"));

        // a symmetric polynomial is fixed
        Poly sym = Poly::parse(3, "x1 + x2 + x3").pow(2);
        CHECK(sym.permuted({2, 0, 1}) == sym);
    }

    TEST_CASE("coefficient_vector follows the monomial basis order") {
        Poly p = Poly::parse(2, "3*x1^2 + x1*x2");
        RationalVector v = p.coefficient_vector(2);
        REQUIRE(v.size() == 3);
        CHECK(v[0] == Rational(3));
        CHECK(v[1] == Rational(1));
        CHECK(v[2] == Rational(0));
    }
}

TEST_SUITE("apolarity pairing") {
    TEST_CASE("monomial derivative rule") {
        // d/dx applied via the pairing: diff(x, x^3) = 3 x^2
        Poly x = Poly::variable(1, 0);
        CHECK(diff(x, x.pow(3)) == Poly::parse(1, "3*x1^2"));
        // second derivative: 3*2 = 6
        CHECK(diff(x.pow(2), x.pow(3)) == Poly::parse(1, "6*x1"));
        // mixed: (x1 x2) applied to x1^2 x2^2 gives 2*2 x1 x2
        CHECK(diff(Poly::parse(2, "x1*x2"), Poly::parse(2, "x1^2*x2^2")) ==
              Poly::parse(2, "4*x1*x2"));
        // annihilation when the exponent is too small
        CHECK(diff(Poly::variable(2, 1), Poly::variable(2, 0)).is_zero());
        CHECK(diff(Poly::parse(1, "x1^4"), Poly::parse(1, "x1^3")).is_zero());
    }

    TEST_CASE("full contraction of equal monomials gives the factorial product") {
        Poly m = Poly::parse(3, "x1^2*x2*x3");
        Poly r = diff(m, m);
        REQUIRE(r.term_count() == 1);
        CHECK(r.coeff({0, 0, 0}) == Rational(2));  // 2! * 1! * 1!
    }

    TEST_CASE("pairing is bilinear") {
        Poly f = Poly::parse(2, "x1 + 2*x2");
        Poly g = Poly::parse(2, "x1^2 - x2^2");
        Poly lhs = diff(f, g);
        Poly rhs = diff(Poly::parse(2, "x1"), g) + diff(Poly::parse(2, "2*x2"), g);
        CHECK(lhs == rhs);
    }

    TEST_CASE("derivative of a power of a linear form") {
        // diff(m, (a.x)^d) = d!/(d-k)! * (prod a_i^{m_i}) * (a.x)^{d-k}
        RationalVector a{Rational(1), Rational(2), Rational(-1)};
        Poly l = Poly::linear_form(a);
        Poly ld = l.pow(4);
        Poly m = Poly::parse(3, "x2^2");  // k = 2, coefficient 2^2 = 4
        Poly expected = l.pow(2).scaled(Rational(4 * 3) * Rational(4));
        CHECK(diff(m, ld) == expected);
    }
}
