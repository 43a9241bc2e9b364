#include "relgw/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace relgw {

Integer binomial(long a, long i)
{
    if (i < 0 || a < i)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(i));
    return r;
}

Integer factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {

// Rows of S(n, .) grown on demand via S(n+1,k) = S(n,k-1) - n S(n,k).
class StirlingTable {
public:
    Integer get(int n, int k)
    {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(rows_.size()) <= n) {
            const auto& prev = rows_.back();
            int m = static_cast<int>(rows_.size()) - 1;
            std::vector<Integer> next(prev.size() + 1, 0);
            for (int j = 0; j < static_cast<int>(next.size()); ++j) {
                Integer left = j >= 1 ? prev[j - 1] : Integer(0);
                Integer right = j < static_cast<int>(prev.size()) ? prev[j] : Integer(0);
                next[j] = left - m * right;
            }
            rows_.push_back(std::move(next));
        }
        return rows_[n][k];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

StirlingTable& stirling_table()
{
    static StirlingTable table;
    return table;
}

} // namespace

Integer stirling_first_signed(int n, int k)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("stirling_first_signed: negative argument");
    if (k > n)
        return 0;
    return stirling_table().get(n, k);
}

Integer multinomial(std::span<const int> parts)
{
    long total = 0;
    Integer denom = 1;
    for (int p : parts) {
        if (p < 0)
            throw std::invalid_argument("multinomial: negative part");
        total += p;
        denom *= factorial(p);
    }
    return factorial(total) / denom;
}

} // namespace relgw
