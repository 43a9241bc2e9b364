#include "doctest.h"

#include "relgw/verify/reconstruction.hpp"

using namespace relgw;
using oracle::DescendantReconstructor;

TEST_CASE("Kontsevich plane counts")
{
    CHECK(oracle::kontsevich_plane_count(1) == 1);
    CHECK(oracle::kontsevich_plane_count(2) == 1);
    CHECK(oracle::kontsevich_plane_count(3) == 12);
    CHECK(oracle::kontsevich_plane_count(4) == 620);
    CHECK(oracle::kontsevich_plane_count(5) == 87304);
}

TEST_CASE("reconstruction of primary and degree-zero invariants")
{
    DescendantReconstructor p2(2);
    CHECK(p2.evaluate(1, {{0, 2}, {0, 2}}) == Rational(1));                 // line through two points
    CHECK(p2.evaluate(1, {{0, 2}, {0, 2}, {0, 1}}) == Rational(1));         // divisor
    CHECK(p2.evaluate(2, {{0, 2}, {0, 2}, {0, 2}, {0, 2}, {0, 2}}) == Rational(1));
    CHECK(p2.evaluate(0, {{0, 2}, {0, 0}, {0, 0}}) == Rational(1));
    CHECK(p2.evaluate(0, {{1, 2}, {0, 0}, {0, 0}, {0, 0}}) == Rational(1));
    CHECK(p2.evaluate(1, {{0, 2}, {0, 2}, {0, 0}}) == Rational(0));          // string, no psi
    CHECK(p2.evaluate(1, {{3, 0}}) == Rational(6));

    DescendantReconstructor p1(1);
    CHECK(p1.one_point(1, 0, 1) == Rational(1));
    CHECK(p1.one_point(2, 2, 1) == Rational(1, 4));
    CHECK_THROWS(DescendantReconstructor(3));
}

TEST_CASE("dilaton equation holds for reconstructed invariants")
{
    // <tau_1(1) X>_{0,k+1,n} = (k - 2) <X>_{0,k,n}; an identity the oracle never uses.
    DescendantReconstructor p2(2);
    CHECK(p2.evaluate(1, {{1, 0}, {0, 2}, {0, 2}}) == Rational(0));
    CHECK(p2.evaluate(2, {{1, 0}, {5, 1}}) == Rational(-1) * p2.one_point(2, 5, 1));
    CHECK(p2.evaluate(1, {{1, 0}, {2, 1}}) == Rational(-1) * p2.one_point(1, 2, 1));
}

TEST_CASE("rising factorial expansion")
{
    auto c = oracle::rising_factorial_coefficients(4);
    REQUIRE(c.size() == 5);
    CHECK(c[0] == 0);
    CHECK(c[1] == 6);
    CHECK(c[2] == 11);
    CHECK(c[3] == 6);
    CHECK(c[4] == 1);
}
