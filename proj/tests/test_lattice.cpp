#include <catch2/catch_amalgamated.hpp>

#include "syzstab/core.hpp"
#include "syzstab/lattice.hpp"
#include "syzstab/rational.hpp"

using namespace syzstab;

TEST_CASE("rational reduces to lowest terms with positive denominator") {
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational(4, -8).str() == "-1/2");
    CHECK(Rational(-4, -8).str() == "1/2");
    CHECK(Rational(9, 9).str() == "1/1");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(6).str() == "6/1");
    CHECK_THROWS_AS(Rational(1, 0), input_error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK(Rational(-20, 13) < Rational(-3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 5) >= Rational(7, 5));
    CHECK(Rational(7, 5) != Rational(6, 5));
}

TEST_CASE("divisor class construction and access") {
    const DivisorClass d({3, -1, 0});
    CHECK(d.rank() == 3);
    CHECK(d[0] == 3);
    CHECK(d[1] == -1);
    CHECK(d.str() == "3,-1,0");
    CHECK_FALSE(d.is_zero());
    CHECK(DivisorClass({0, 0}).is_zero());
}

TEST_CASE("divisor coefficients are capped") {
    CHECK_NOTHROW(DivisorClass({DivisorClass::coeff_limit}));
    CHECK_THROWS_AS(DivisorClass({DivisorClass::coeff_limit + 1}), input_error);
    CHECK_THROWS_AS(DivisorClass({-DivisorClass::coeff_limit - 1}), input_error);
}

TEST_CASE("divisor vector arithmetic") {
    const DivisorClass a({1, 2}), b({3, -5});
    CHECK((a + b) == DivisorClass({4, -3}));
    CHECK((a - b) == DivisorClass({-2, 7}));
    CHECK((-a) == DivisorClass({-1, -2}));
    CHECK((3 * a) == DivisorClass({3, 6}));
    CHECK_THROWS_AS(a + DivisorClass({1}), input_error);
}

TEST_CASE("intersection form pairs exactly") {
    const IntersectionForm p2(std::vector<std::vector<Int>>{{1}});
    CHECK(intersect(DivisorClass({3}), DivisorClass({5}), p2) == 15);
    CHECK(self_intersect(DivisorClass({-4}), p2) == 16);

    // Hirzebruch F_2 in the (C, F) basis: C.C = -2, C.F = 1, F.F = 0.
    const IntersectionForm f2(std::vector<std::vector<Int>>{{-2, 1}, {1, 0}});
    const DivisorClass L({1, 3});
    CHECK(self_intersect(L, f2) == 4);
    CHECK(intersect(L, DivisorClass({0, 1}), f2) == 1);
    CHECK(intersect(L, DivisorClass({1, 0}), f2) == 1);

    const IntersectionForm dp2(
        std::vector<std::vector<Int>>{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    CHECK(self_intersect(DivisorClass({3, -1, -1}), dp2) == 7);
}

TEST_CASE("intersection form rejects shape mismatches") {
    CHECK_THROWS_AS(IntersectionForm(std::vector<std::vector<Int>>{{1, 0}}), input_error);
    const IntersectionForm f(std::vector<std::vector<Int>>{{1}});
    CHECK_THROWS_AS(intersect(DivisorClass({1, 2}), DivisorClass({1, 2}), f), input_error);
}

TEST_CASE("rows round-trips the matrix") {
    const std::vector<std::vector<Int>> m{{-3, 1}, {1, 0}};
    CHECK(IntersectionForm(std::vector<std::vector<Int>>(m)).rows() == m);
}
