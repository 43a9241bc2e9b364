#ifndef RELGW_DESCENDANTS_HPP
#define RELGW_DESCENDANTS_HPP

#include "relgw/rational.hpp"

namespace relgw {

/// One-point genus-0 descendant  int_{M_{0,1}(P^s, n)} psi^a ev*(H)^b.
struct DescendantQuery {
    int s = 1; ///< ambient projective dimension
    int n = 1; ///< curve degree
    int a = 0; ///< psi exponent
    int b = 0; ///< hyperplane exponent
};

/// Dimension of M_{0,1}(P^s, n).
constexpr int one_point_dimension(int s, int n) { return s + n * (s + 1) - 2; }

/// int_{M_{0,2}(P^s,1)} psi_1^a ev_1*(H)^{s-a+i} ev_2*(H)^{s-i} = (-1)^{a-i} C(a,i).
Rational two_point_line(int s, int a, int i);

/// int_{M_{0,1}(P^s,1)} psi^a ev*(H)^{2s-1-a} = (-1)^{a-s-1} C(a+1,s).
/// Throws when the hyperplane exponent 2s-1-a would be negative.
Rational one_point_line(int s, int a);

/// General one-point descendant of P^s in degree n.
///
/// Read off the degree-n term of the small J-function: the invariant is the
/// coefficient of H^{s-b} hbar^{-(a+2)} in prod_{m=1..n} (H + m hbar)^{-(s+1)},
/// with H^{s+1} = 0. Returns zero on any query that fails the dimension gate,
/// has b > s, or has a negative exponent.
Rational one_point_descendant(const DescendantQuery& q);

/// int_{M_{0,1+r}} psi_1^j, which is 1 when j = r - 2 and 0 otherwise.
Rational psi_power_on_points(int r, int j);

} // namespace relgw

#endif
