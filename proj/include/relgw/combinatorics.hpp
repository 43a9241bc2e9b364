#ifndef RELGW_COMBINATORICS_HPP
#define RELGW_COMBINATORICS_HPP

#include "relgw/rational.hpp"

#include <span>

namespace relgw {

/// Binomial coefficient with the vanishing convention: zero when a < i or i < 0.
/// Negative a with 0 <= i <= a cannot occur, so every negative a yields zero.
Integer binomial(long a, long i);

Integer factorial(long n);

/// Signed Stirling numbers of the first kind, defined through
///   x(x+1)...(x+n-1) = sum_k (-1)^(n-k) S(n,k) x^k.
/// S(0,0) = 1; S(n,0) = 0 for n > 0; S(n,k) = 0 for k > n.
Integer stirling_first_signed(int n, int k);

/// (sum parts)! / prod(parts_i!)
Integer multinomial(std::span<const int> parts);

} // namespace relgw

#endif
