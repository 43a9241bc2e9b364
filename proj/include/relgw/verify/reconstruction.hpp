#ifndef RELGW_VERIFY_RECONSTRUCTION_HPP
#define RELGW_VERIFY_RECONSTRUCTION_HPP

#include "relgw/rational.hpp"

#include <compare>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace relgw::oracle {

/// tau_psi(H^h) at one marked point.
struct Insertion {
    int psi = 0;
    int h = 0;
    friend auto operator<=>(const Insertion&, const Insertion&) = default;
};

/// Genus-0 descendant invariants <tau_{a_1}(H^{b_1}) ... tau_{a_k}(H^{b_k})>_{0,k,n}
/// of P^s, rebuilt from scratch with the string equation, the divisor
/// equation and the topological recursion relation. Degree-0 invariants use
/// the psi-integral multinomial on M_{0,k}; primary invariants reduce to
/// Kontsevich's plane counts (s = 2) or the single line of P^1 (s = 1).
///
/// Independent of the J-function route used by the engine; only s = 1, 2.
class DescendantReconstructor {
public:
    explicit DescendantReconstructor(int s);

    Rational evaluate(int n, std::vector<Insertion> insertions);

    /// <psi^a ev*(H)^b>_{0,1,n}
    Rational one_point(int n, int a, int b) { return evaluate(n, {{a, b}}); }

private:
    Rational eval(int n, const std::vector<Insertion>& ins);

    int s_;
    std::mutex mutex_;
    std::map<std::pair<int, std::vector<Insertion>>, Rational> memo_;
};

/// Number of rational plane curves of degree n through 3n-1 general points.
Integer kontsevich_plane_count(int n);

/// Coefficients of x(x+1)...(x+n-1), lowest degree first, by direct
/// multiplication of the linear factors.
std::vector<Integer> rising_factorial_coefficients(int n);

} // namespace relgw::oracle

#endif
