#ifndef RELGW_GATHMANN_HPP
#define RELGW_GATHMANN_HPP

#include "relgw/polynomial.hpp"
#include "relgw/rational.hpp"

#include <atomic>
#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relgw {

/// Identifies I(s,d; m,n,k,j) = int ev*(Y)^k psi^j over the virtual class of
/// the space of degree-n genus-0 one-pointed maps to P^s with contact order m
/// to a general degree-d hypersurface Y at the marked point.
struct InvariantKey {
    int s = 1;
    int d = 1;
    int m = 0;
    int n = 1;
    int k = 0;
    int j = 0;

    friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
    std::string to_string() const;
};

/// Expected dimension s + n(s+1) - 2 - m of the contact-m space.
constexpr int relative_dimension(int s, int n, int m) { return s + n * (s + 1) - 2 - m; }

/// True when the key is forced to vanish: wrong degree for the dimension, or,
/// once the marked point is constrained to Y (m >= 1), k >= s.
bool is_gated_zero(const InvariantKey& key);

/// Memoized values, shared between concurrent evaluations. A key is written at
/// most once; writing a different value for a stored key is a logic error.
class MemoTable {
public:
    std::optional<Rational> find(const InvariantKey& key) const;
    void insert(const InvariantKey& key, const Rational& value);
    std::size_t size() const;
    std::vector<std::pair<InvariantKey, Rational>> entries() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::map<InvariantKey, Rational> table_;
};

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCacheHeader = "relgw-cache v1";

/// Evaluator for the multiplicity-raising recursion
///
///   I(m; k, j) = I(m-1; k+1, j) + (m-1) I(m-1; k, j+1) - D(m-1; k, j)
///
/// seeded by I(0; k, j) = d^k <psi^j H^k>_{P^s, n}. D is the contribution of
/// comb curves: a contracted component in Y carrying the mark and r >= 2 teeth
/// of degrees n_i meeting Y with contact m_i at the node.
class RelativeInvariantEngine {
public:
    RelativeInvariantEngine() = default;
    RelativeInvariantEngine(const RelativeInvariantEngine&) = delete;
    RelativeInvariantEngine& operator=(const RelativeInvariantEngine&) = delete;

    Rational relative_invariant(const InvariantKey& key);

    /// D(m; k, j) for the step from contact m to m+1:
    ///   sum over r = j+2 (the only r with a nonzero point-moduli integral),
    ///   (1/r!) d^{k+1} sum_{ordered (m_i), (n_i), (t_i)} prod_i m_i d^{-(s-t_i)} I(m_i, n_i; s-1-t_i, 0)
    /// with m_i, n_i >= 1 summing to m and n, and 0 <= t_i <= s-1 summing to s-1-k.
    Rational correction_term(int s, int d, int m, int n, int k, int j);

    /// Virtual number of maximal-contact curves, I(s,d; s-2+n(s+1), n, 0, 0).
    Rational virtual_count_T(int s, int n, int d);

    const MemoTable& memo() const { return memo_; }
    void clear_memo() { memo_.clear(); }
    int max_depth_seen() const { return max_depth_.load(); }

    void save_cache(const std::filesystem::path& path) const;
    /// Merges a cache file into the memo table. Throws CacheError naming the
    /// file on a bad header, a malformed line, or a value that contradicts a
    /// gate or an already-known value.
    void load_cache(const std::filesystem::path& path);

private:
    Rational compute(const InvariantKey& key, int depth, int depth_limit);
    Rational correction(int s, int d, int m, int n, int k, int j, int depth, int depth_limit);

    MemoTable memo_;
    std::atomic<int> max_depth_{0};
};

/// Closed formula for lines of maximal contact 2s-1:
///   (-1)^{s+1} sum_{k=1..s} S(2s-1,k) C(2s-k,s) d^k.
RationalPolynomial max_contact_lines_polynomial(int s);
Rational max_contact_lines_closed(int s, int d);

} // namespace relgw

#endif
