#include "relgw/descendants.hpp"

#include "relgw/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace relgw {

namespace {

int minus_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

void require_dimension(int s)
{
    if (s < 1)
        throw std::invalid_argument("projective dimension s must be >= 1");
}

// Truncated series in x = H/hbar of prod_{m=1..n} (1 + m x)^{-(s+1)}, i.e. the
// J-function term with the overall hbar^{-n(s+1)} / (n!)^{s+1} scale removed.
// Coefficient c of the returned vector multiplies H^c hbar^{-c}.
class JFunctionTerms {
public:
    std::vector<Rational> get(int s, int n)
    {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(s, n);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        return cache_.emplace(key, compute(s, n)).first->second;
    }

private:
    static std::vector<Rational> compute(int s, int n)
    {
        std::vector<Rational> series(s + 1, Rational(0));
        series[0] = 1;
        for (int m = 1; m <= n; ++m) {
            // (H + m hbar)^{-(s+1)} = (m hbar)^{-(s+1)} sum_c (-1)^c C(s+c,c) (x/m)^c
            std::vector<Rational> factor(s + 1);
            for (int c = 0; c <= s; ++c)
                factor[c] = Rational(minus_one_pow(c) * binomial(s + c, c)) / Rational(m).pow(c);
            std::vector<Rational> next(s + 1, Rational(0));
            for (int i = 0; i <= s; ++i) {
                if (series[i].is_zero())
                    continue;
                for (int c = 0; i + c <= s; ++c)
                    next[i + c] += series[i] * factor[c];
            }
            series = std::move(next);
        }
        return series;
    }

    std::mutex mutex_;
    std::map<std::pair<int, int>, std::vector<Rational>> cache_;
};

JFunctionTerms& j_function_terms()
{
    static JFunctionTerms terms;
    return terms;
}

} // namespace

Rational two_point_line(int s, int a, int i)
{
    require_dimension(s);
    if (a < 0)
        throw std::invalid_argument("two_point_line: negative psi exponent");
    return Rational(minus_one_pow(a - i) * binomial(a, i));
}

Rational one_point_line(int s, int a)
{
    require_dimension(s);
    if (a < 0)
        throw std::invalid_argument("one_point_line: negative psi exponent");
    if (a > 2 * s - 1)
        throw std::invalid_argument("one_point_line: psi exponent exceeds 2s-1");
    return Rational(minus_one_pow(a - s - 1) * binomial(a + 1, s));
}

Rational one_point_descendant(const DescendantQuery& q)
{
    require_dimension(q.s);
    if (q.n < 1)
        throw std::invalid_argument("one_point_descendant: degree must be >= 1");
    if (q.a < 0 || q.b < 0 || q.b > q.s)
        return 0;
    if (q.a + q.b != one_point_dimension(q.s, q.n))
        return 0;

    // hbar exponent: -(n(s+1) + c) with c = s - b must equal -(a+2); the
    // dimension gate above makes this automatic.
    const int c = q.s - q.b;
    auto series = j_function_terms().get(q.s, q.n);
    Rational scale = Rational(1, factorial(q.n)).pow(q.s + 1);
    return scale * series[c];
}

Rational psi_power_on_points(int r, int j)
{
    if (r < 2)
        throw std::invalid_argument("psi_power_on_points: need r >= 2");
    return j == r - 2 ? Rational(1) : Rational(0);
}

} // namespace relgw
