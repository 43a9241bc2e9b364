#include "relgw/gathmann.hpp"

#include "relgw/combinatorics.hpp"
#include "relgw/descendants.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

namespace relgw {

std::string InvariantKey::to_string() const
{
    std::ostringstream os;
    os << s << ',' << d << ',' << m << ',' << n << ',' << k << ',' << j;
    return os.str();
}

bool is_gated_zero(const InvariantKey& key)
{
    if (key.k < 0 || key.j < 0)
        return true;
    if (key.k + key.j != relative_dimension(key.s, key.n, key.m))
        return true;
    return key.m >= 1 && key.k >= key.s;
}

std::optional<Rational> MemoTable::find(const InvariantKey& key) const
{
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end())
        return std::nullopt;
    return it->second;
}

void MemoTable::insert(const InvariantKey& key, const Rational& value)
{
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, value);
    if (!inserted && it->second != value)
        throw std::logic_error("memo conflict at " + key.to_string() + ": " + it->second.to_string()
                               + " vs " + value.to_string());
}

std::size_t MemoTable::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

std::vector<std::pair<InvariantKey, Rational>> MemoTable::entries() const
{
    std::shared_lock lock(mutex_);
    return {table_.begin(), table_.end()};
}

void MemoTable::clear()
{
    std::unique_lock lock(mutex_);
    table_.clear();
}

namespace {

void check_key(const InvariantKey& key)
{
    if (key.s < 1 || key.d < 1 || key.n < 1 || key.m < 0)
        throw std::invalid_argument("invariant key out of range: " + key.to_string());
}

// Calls f(parts) for every ordered composition of total into r positive parts.
template <typename F>
void for_each_composition(int total, int r, int min_part, int max_part, std::vector<int>& parts, F&& f)
{
    if (static_cast<int>(parts.size()) == r) {
        if (total == 0)
            f(parts);
        return;
    }
    int remaining = r - static_cast<int>(parts.size()) - 1;
    for (int p = min_part; p <= max_part && p <= total - remaining * min_part; ++p) {
        parts.push_back(p);
        for_each_composition(total - p, r, min_part, max_part, parts, f);
        parts.pop_back();
    }
}

} // namespace

Rational RelativeInvariantEngine::relative_invariant(const InvariantKey& key)
{
    check_key(key);
    return compute(key, 0, key.m);
}

Rational RelativeInvariantEngine::compute(const InvariantKey& key, int depth, int depth_limit)
{
    if (depth > depth_limit)
        throw std::logic_error("recursion depth exceeded at " + key.to_string());
    for (int seen = max_depth_.load(); depth > seen && !max_depth_.compare_exchange_weak(seen, depth);)
        ;

    if (is_gated_zero(key))
        return 0;
    if (auto hit = memo_.find(key))
        return *hit;

    Rational value;
    if (key.m == 0) {
        value = Rational(key.d).pow(key.k) * one_point_descendant({key.s, key.n, key.j, key.k});
    } else {
        InvariantKey raise_y = key;
        raise_y.m -= 1;
        raise_y.k += 1;
        InvariantKey raise_psi = key;
        raise_psi.m -= 1;
        raise_psi.j += 1;
        value = compute(raise_y, depth + 1, depth_limit);
        if (key.m > 1)
            value += Rational(key.m - 1) * compute(raise_psi, depth + 1, depth_limit);
        value -= correction(key.s, key.d, key.m - 1, key.n, key.k, key.j, depth, depth_limit);
    }
    memo_.insert(key, value);
    return value;
}

Rational RelativeInvariantEngine::correction_term(int s, int d, int m, int n, int k, int j)
{
    if (s < 1 || d < 1 || n < 1)
        throw std::invalid_argument("correction_term: s, d, n must be >= 1");
    return correction(s, d, m, n, k, j, 0, m + 1);
}

Rational RelativeInvariantEngine::correction(int s, int d, int m, int n, int k, int j, int depth,
                                             int depth_limit)
{
    const int r = j + 2;
    const int t_total = s - 1 - k;
    if (k < 0 || j < 0 || t_total < 0 || r > m || r > n)
        return 0;

    const Rational dd(d);
    Rational sum = 0;
    std::vector<int> ms, ns, ts;
    for_each_composition(m, r, 1, m, ms, [&](const std::vector<int>& mparts) {
        for_each_composition(n, r, 1, n, ns, [&](const std::vector<int>& nparts) {
            for_each_composition(t_total, r, 0, s - 1, ts, [&](const std::vector<int>& tparts) {
                Rational term = 1;
                for (int i = 0; i < r && !term.is_zero(); ++i) {
                    InvariantKey tooth{s, d, mparts[i], nparts[i], s - 1 - tparts[i], 0};
                    term *= Rational(mparts[i]) * dd.pow(-(s - tparts[i]))
                            * compute(tooth, depth + 1, depth_limit);
                }
                sum += term;
            });
        });
    });
    return sum * dd.pow(k + 1) / Rational(factorial(r)) * psi_power_on_points(r, j);
}

Rational RelativeInvariantEngine::virtual_count_T(int s, int n, int d)
{
    if (s < 1 || n < 1 || d < 1)
        throw std::invalid_argument("virtual_count_T: s, n, d must be >= 1");
    return relative_invariant({s, d, s - 2 + n * (s + 1), n, 0, 0});
}

void RelativeInvariantEngine::save_cache(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    if (!out)
        throw CacheError("cannot write cache file " + path.string());
    out << kCacheHeader << '\n';
    for (const auto& [key, value] : memo_.entries())
        out << key.to_string() << '=' << value.to_string() << '\n';
    if (!out)
        throw CacheError("error writing cache file " + path.string());
}

void RelativeInvariantEngine::load_cache(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw CacheError("cannot open cache file " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader)
        throw CacheError("cache file " + path.string() + ": expected header '" + kCacheHeader + "'");

    std::vector<std::pair<InvariantKey, Rational>> loaded;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        auto fail = [&](const std::string& why) {
            return CacheError("cache file " + path.string() + " line " + std::to_string(line_no) + ": " + why);
        };
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw fail("missing '='");
        std::istringstream fields(line.substr(0, eq));
        InvariantKey key;
        char c1, c2, c3, c4, c5;
        fields >> key.s >> c1 >> key.d >> c2 >> key.m >> c3 >> key.n >> c4 >> key.k >> c5 >> key.j;
        if (!fields || c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',' || c5 != ','
            || fields.peek() != std::char_traits<char>::eof())
            throw fail("malformed key");
        if (key.s < 1 || key.d < 1 || key.n < 1 || key.m < 0)
            throw fail("key out of range");
        Rational value;
        try {
            value = Rational::parse(line.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
        if (is_gated_zero(key) && !value.is_zero())
            throw fail("nonzero value for a vanishing key");
        loaded.emplace_back(key, value);
    }
    for (const auto& [key, value] : loaded) {
        try {
            memo_.insert(key, value);
        } catch (const std::logic_error& e) {
            throw CacheError("cache file " + path.string() + ": " + e.what());
        }
    }
}

RationalPolynomial max_contact_lines_polynomial(int s)
{
    if (s < 1)
        throw std::invalid_argument("max_contact_lines: s must be >= 1");
    std::vector<Rational> coeffs(s + 1, Rational(0));
    const int sign = (s + 1) % 2 == 0 ? 1 : -1;
    for (int k = 1; k <= s; ++k)
        coeffs[k] = Rational(sign * stirling_first_signed(2 * s - 1, k) * binomial(2 * s - k, s));
    return RationalPolynomial(std::move(coeffs));
}

Rational max_contact_lines_closed(int s, int d)
{
    return max_contact_lines_polynomial(s).evaluate(Rational(d));
}

} // namespace relgw
