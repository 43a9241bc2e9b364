#include "relgw/verify/reconstruction.hpp"

#include "relgw/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace relgw::oracle {

DescendantReconstructor::DescendantReconstructor(int s)
    : s_(s)
{
    if (s != 1 && s != 2)
        throw std::invalid_argument("reconstruction oracle supports P^1 and P^2 only");
}

Rational DescendantReconstructor::evaluate(int n, std::vector<Insertion> insertions)
{
    if (n < 0)
        throw std::invalid_argument("negative degree");
    std::sort(insertions.begin(), insertions.end());
    std::lock_guard lock(mutex_);
    return eval(n, insertions);
}

Rational DescendantReconstructor::eval(int n, const std::vector<Insertion>& ins)
{
    const int k = static_cast<int>(ins.size());
    int degree = 0;
    for (const auto& x : ins) {
        if (x.psi < 0 || x.h < 0 || x.h > s_)
            return 0;
        degree += x.psi + x.h;
    }
    if (degree != s_ + n * (s_ + 1) + k - 3)
        return 0;

    auto key = std::make_pair(n, ins);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    auto sorted = [](std::vector<Insertion> v) {
        std::sort(v.begin(), v.end());
        return v;
    };

    Rational value = 0;
    std::vector<int> with_psi;
    for (int i = 0; i < k; ++i)
        if (ins[i].psi > 0)
            with_psi.push_back(i);

    if (n == 0) {
        // M_{0,k} x P^s: psi integrals give (k-3)! / prod a_i!, cohomology must fill P^s.
        int h_total = 0;
        for (const auto& x : ins)
            h_total += x.h;
        if (k >= 3 && h_total == s_) {
            std::vector<int> psis;
            for (const auto& x : ins)
                psis.push_back(x.psi);
            value = Rational(multinomial(psis));
        }
    } else if (!with_psi.empty() && k >= 3) {
        // TRR: psi_1 on M_{0,k} splits marks 1 | 2,3.
        const int first = with_psi.front();
        std::vector<int> others;
        for (int i = 0; i < k; ++i)
            if (i != first)
                others.push_back(i);
        const Insertion lowered{ins[first].psi - 1, ins[first].h};
        std::vector<Insertion> rest;
        for (std::size_t i = 2; i < others.size(); ++i)
            rest.push_back(ins[others[i]]);
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            std::vector<Insertion> left{lowered}, right{ins[others[0]], ins[others[1]]};
            for (std::size_t i = 0; i < rest.size(); ++i)
                ((mask >> i) & 1u ? left : right).push_back(rest[i]);
            for (int n1 = 0; n1 <= n; ++n1) {
                if (n1 == 0 && left.size() + 1 < 3)
                    continue;
                for (int e = 0; e <= s_; ++e) {
                    auto l = left;
                    l.push_back({0, e});
                    Rational lv = eval(n1, sorted(l));
                    if (lv.is_zero())
                        continue;
                    auto r = right;
                    r.push_back({0, s_ - e});
                    value += lv * eval(n - n1, sorted(r));
                }
            }
        }
    } else if (!with_psi.empty()) {
        // Fewer than three marks: add a divisor mark and undo the divisor equation.
        auto lifted = ins;
        lifted.push_back({0, 1});
        value = eval(n, sorted(lifted));
        for (int i : with_psi) {
            auto shifted = ins;
            shifted[i] = {ins[i].psi - 1, ins[i].h + 1};
            value -= eval(n, sorted(shifted));
        }
        value /= Rational(n);
    } else {
        // Primary insertions only.
        auto identity = std::find(ins.begin(), ins.end(), Insertion{0, 0});
        auto divisor = std::find(ins.begin(), ins.end(), Insertion{0, 1});
        if (identity != ins.end()) {
            value = 0; // string equation with no psi to lower
        } else if (divisor != ins.end()) {
            auto reduced = ins;
            reduced.erase(reduced.begin() + (divisor - ins.begin()));
            value = Rational(n) * eval(n, reduced);
        } else if (k == 0) {
            value = (s_ == 1 && n == 1) ? Rational(1) : Rational(0);
        } else if (s_ == 2 && k == 3 * n - 1) {
            value = Rational(kontsevich_plane_count(n)); // all insertions are points
        }
    }

    memo_.emplace(std::move(key), value);
    return value;
}

Integer kontsevich_plane_count(int n)
{
    if (n < 1)
        throw std::invalid_argument("kontsevich_plane_count: degree must be >= 1");
    std::vector<Integer> N(n + 1, 0);
    N[1] = 1;
    for (int d = 2; d <= n; ++d) {
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            Integer a = Integer(d1 * d1) * (d2 * d2) * binomial(3 * d - 4, 3 * d1 - 2);
            Integer b = Integer(d1 * d1 * d1) * d2 * binomial(3 * d - 4, 3 * d1 - 1);
            N[d] += N[d1] * N[d2] * (a - b);
        }
    }
    return N[n];
}

std::vector<Integer> rising_factorial_coefficients(int n)
{
    std::vector<Integer> poly{1};
    for (int m = 0; m < n; ++m) {
        std::vector<Integer> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] += poly[i] * m;
        }
        poly = std::move(next);
    }
    return poly;
}

} // namespace relgw::oracle
