#include "doctest.h"

#include "relgw/interp.hpp"

#include <filesystem>
#include <fstream>
#include <vector>

using namespace relgw;

TEST_CASE("fit T_{2,n} from two hand values")
{
    std::vector<SamplePoint> t22{{3, Rational(135, 4)}, {4, Rational(102)}};
    CHECK(fit_T_polynomial(2, t22) == RationalPolynomial{Rational(0), Rational(-63, 2), Rational(57, 4)});
    std::vector<SamplePoint> t23{{3, Rational(244)}, {4, Rational(2384, 3)}};
    CHECK(fit_T_polynomial(2, t23) == RationalPolynomial{Rational(0), Rational(-812, 3), Rational(352, 3)});
    std::vector<SamplePoint> t21{{3, Rational(9)}, {4, Rational(24)}};
    CHECK(fit_T_polynomial(2, t21) == RationalPolynomial{Rational(0), Rational(-6), Rational(3)});
}

TEST_CASE("fit rejects bad sample sets")
{
    std::vector<SamplePoint> dup{{3, Rational(1)}, {3, Rational(2)}};
    CHECK_THROWS_AS(fit_T_polynomial(2, dup), std::invalid_argument);
    std::vector<SamplePoint> one{{3, Rational(1)}};
    CHECK_THROWS_AS(fit_T_polynomial(2, one), std::invalid_argument);
    std::vector<SamplePoint> three{{3, Rational(1)}, {4, Rational(1)}, {5, Rational(1)}};
    CHECK_THROWS_AS(fit_T_polynomial(2, three), std::invalid_argument);
    std::vector<SamplePoint> low{{2, Rational(1)}, {4, Rational(1)}};
    CHECK_THROWS_AS(fit_T_polynomial(2, low), std::invalid_argument);
}

TEST_CASE("fit and verify against the engine")
{
    RelativeInvariantEngine engine;
    const int s2[] = {3, 4};
    const int c22[] = {5, 6};
    CHECK(fit_and_verify(engine, 2, 2, s2, c22) == RationalPolynomial{Rational(0), Rational(-63, 2), Rational(57, 4)});
    const int c21[] = {5, 6, 7, 8};
    CHECK(fit_and_verify(engine, 2, 1, s2, c21) == RationalPolynomial{Rational(0), Rational(-6), Rational(3)});
    const int s3[] = {5, 6, 7};
    const int c3[] = {8};
    CHECK(fit_and_verify(engine, 3, 2, s3, c3)
          == RationalPolynomial{Rational(0), Rational(39852), Rational(-30294), Rational(20331, 4)});

    const int overlap[] = {4, 5};
    CHECK_THROWS_AS(fit_and_verify(engine, 2, 2, s2, overlap), std::invalid_argument);
}

TEST_CASE("verification failure reports the offending degree")
{
    auto path = std::filesystem::temp_directory_path() / "relgw_test_stale.cache";
    std::ofstream(path) << "relgw-cache v1\n2,6,6,2,0,0=1\n";
    RelativeInvariantEngine engine;
    engine.load_cache(path);
    const int samples[] = {3, 4};
    const int checks[] = {5, 6};
    try {
        fit_and_verify(engine, 2, 2, samples, checks);
        FAIL("expected VerificationError");
    } catch (const VerificationError& e) {
        CHECK(e.d == 6);
        CHECK(e.expected == Rational(1));
        CHECK(e.actual == Rational(57 * 36, 4) - Rational(63 * 6, 2));
    }
    std::filesystem::remove(path);
}

TEST_CASE("general Lagrange interpolation")
{
    std::vector<SamplePoint> pts{{1, Rational(1)}, {2, Rational(4)}, {3, Rational(9)}};
    CHECK(lagrange_interpolate(pts) == RationalPolynomial{Rational(0), Rational(0), Rational(1)});
    std::vector<SamplePoint> dup{{1, Rational(1)}, {1, Rational(4)}};
    CHECK_THROWS_AS(lagrange_interpolate(dup), std::invalid_argument);
}
