#include "relgw/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace relgw {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(long e) const
{
    if (e < 0) {
        if (is_zero())
            throw std::domain_error("Rational: zero to a negative power");
        return Rational(1) / pow(-e);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

std::string Rational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    bool ok = !digits.empty();
    for (char c : digits)
        ok = ok && c >= '0' && c <= '9';
    if (!ok)
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (den == 0)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

} // namespace relgw
