#include "relgw/polynomial.hpp"

#include "json.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace relgw {

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs)
{
    trim();
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int power)
{
    if (power < 0)
        throw std::invalid_argument("monomial: negative power");
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational RationalPolynomial::operator[](int power) const
{
    if (power < 0 || power > degree())
        return 0;
    return coeffs_[power];
}

Rational RationalPolynomial::evaluate(const Rational& d) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * d + *it;
    return acc;
}

int RationalPolynomial::zero_root_multiplicity() const
{
    if (is_zero())
        return -1;
    int m = 0;
    while (coeffs_[m].is_zero())
        ++m;
    return m;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o)
{
    return *this += o * Rational(-1);
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const Rational& c = coeffs_[p];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == Rational(1);
        if (p == 0 || !unit)
            os << mag;
        if (p > 0) {
            if (!unit)
                os << '*';
            os << 'd';
            if (p > 1)
                os << '^' << p;
        }
    }
    return os.str();
}

std::string RationalPolynomial::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_)
        arr.push_back(c.to_string());
    return arr.dump();
}

RationalPolynomial RationalPolynomial::from_json(const std::string& text)
{
    auto arr = nlohmann::json::parse(text);
    if (!arr.is_array())
        throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : arr) {
        if (!c.is_string())
            throw std::invalid_argument("polynomial coefficients must be strings");
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    }
    return RationalPolynomial(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p)
{
    return os << p.to_string();
}

} // namespace relgw
