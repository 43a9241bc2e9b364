#ifndef RELGW_INTERP_HPP
#define RELGW_INTERP_HPP

#include "relgw/gathmann.hpp"
#include "relgw/polynomial.hpp"
#include "relgw/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace relgw {

struct SamplePoint {
    int d = 0;
    Rational value;
};

/// Smallest hypersurface degree for which T_{s,n}(d) = d p(d) with deg p <= s-1.
constexpr int min_admissible_degree(int s) { return 2 * s - 1; }

/// Unique polynomial of degree < points.size() through the given (d, value)
/// pairs. Throws std::invalid_argument on repeated abscissae.
RationalPolynomial lagrange_interpolate(std::span<const SamplePoint> points);

/// Exact Lagrange interpolation of T(d)/d through s samples, multiplied back
/// by d. The result has zero constant term and degree at most s.
/// Throws std::invalid_argument on a wrong sample count, a repeated d, or
/// d < 2s-1.
RationalPolynomial fit_T_polynomial(int s, std::span<const SamplePoint> samples);

class VerificationError : public std::runtime_error {
public:
    VerificationError(int d, Rational expected, Rational actual);
    int d;
    Rational expected; ///< engine value
    Rational actual;   ///< polynomial value
};

/// Fits T_{s,n} from engine values at sample_ds, then requires the fit to
/// reproduce the engine at every check_d.
RationalPolynomial fit_and_verify(RelativeInvariantEngine& engine, int s, int n,
                                  std::span<const int> sample_ds, std::span<const int> check_ds);

} // namespace relgw

#endif
