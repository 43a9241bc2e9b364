#include "doctest.h"

#include "relgw/combinatorics.hpp"
#include "relgw/descendants.hpp"
#include "relgw/verify/reconstruction.hpp"

using namespace relgw;

TEST_CASE("two-point line invariants")
{
    CHECK(two_point_line(2, 0, 0) == Rational(1));
    CHECK(two_point_line(3, 2, 1) == Rational(-2));
    CHECK(two_point_line(2, 1, 4) == Rational(0));
    CHECK_THROWS_AS(two_point_line(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(two_point_line(2, -1, 0), std::invalid_argument);
}

TEST_CASE("one-point line invariants")
{
    CHECK(one_point_line(2, 2) == Rational(-3));
    CHECK(one_point_line(2, 3) == Rational(6));
    CHECK(one_point_line(3, 1) == Rational(0));
    CHECK_THROWS_AS(one_point_line(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(one_point_line(2, 4), std::invalid_argument);
}

TEST_CASE("string equation and divisor/TRR recurrence on lines")
{
    for (int s = 1; s <= 5; ++s)
        for (int a = 1; a <= 2 * s; ++a) {
            CHECK(two_point_line(s, a, s) == one_point_line(s, a - 1));
            for (int i = 0; i <= s; ++i)
                CHECK(two_point_line(s, a, i) == two_point_line(s, a - 1, i - 1) - two_point_line(s, a - 1, i));
        }
}

TEST_CASE("general descendants specialize to the line formula")
{
    for (int s = 1; s <= 5; ++s)
        for (int a = 0; a <= 2 * s - 1; ++a)
            CHECK(one_point_descendant({s, 1, a, 2 * s - 1 - a}) == one_point_line(s, a));
}

TEST_CASE("one-point descendants")
{
    CHECK(one_point_descendant({1, 2, 2, 1}) == Rational(1, 4));
    CHECK(one_point_descendant({2, 1, 3, 0}) == Rational(6));
    oracle::DescendantReconstructor rec(2);
    CHECK(one_point_descendant({2, 2, 5, 1}) == rec.one_point(2, 5, 1));
    CHECK(one_point_descendant({2, 2, 5, 1}) == Rational(-9, 16));
    CHECK(one_point_descendant({2, 2, -1, 8}) == Rational(0));
    CHECK(one_point_descendant({2, 2, 7, -1}) == Rational(0));
    CHECK_THROWS_AS(one_point_descendant({0, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(one_point_descendant({2, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("dimension gate on one-point descendants")
{
    for (int s = 1; s <= 3; ++s)
        for (int n = 1; n <= 3; ++n)
            for (int a = 0; a <= 20; ++a)
                for (int b = 0; a + b <= 20; ++b) {
                    if (a + b == one_point_dimension(s, n) && b <= s)
                        continue;
                    CHECK(one_point_descendant({s, n, a, b}) == Rational(0));
                }
}

TEST_CASE("fundamental class of degree-n maps pairs with point class as 1/(n!)^{s+1}")
{
    // <psi^{dim-s} H^s>: coefficient of H^0 in the J-function term.
    for (int s = 1; s <= 4; ++s)
        for (int n = 1; n <= 4; ++n)
            CHECK(one_point_descendant({s, n, one_point_dimension(s, n) - s, s})
                  == Rational(1) / Rational(factorial(n)).pow(s + 1));
}

TEST_CASE("psi powers on moduli of points")
{
    CHECK(psi_power_on_points(2, 0) == Rational(1));
    CHECK(psi_power_on_points(3, 1) == Rational(1));
    CHECK(psi_power_on_points(4, 1) == Rational(0));
    CHECK_THROWS_AS(psi_power_on_points(1, 0), std::invalid_argument);
}
