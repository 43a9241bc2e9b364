#ifndef RELGW_POLYNOMIAL_HPP
#define RELGW_POLYNOMIAL_HPP

#include "relgw/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace relgw {

/// Dense univariate polynomial in d with rational coefficients,
/// lowest degree first. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(std::initializer_list<Rational> coeffs);
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    /// The monomial c * d^power.
    static RationalPolynomial monomial(const Rational& c, int power);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of d^power (zero beyond the degree).
    Rational operator[](int power) const;

    Rational evaluate(const Rational& d) const;

    /// Multiplicity of 0 as a root; -1 for the zero polynomial.
    int zero_root_multiplicity() const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& c);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// Human-readable form, highest degree first: "57/4*d^2 - 63/2*d".
    std::string to_string() const;
    /// JSON array of coefficient strings, lowest degree first: ["0","-63/2","57/4"].
    std::string to_json() const;
    static RationalPolynomial from_json(const std::string& text);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

inline Rational poly_eval(const RationalPolynomial& p, const Rational& d) { return p.evaluate(d); }

} // namespace relgw

#endif
