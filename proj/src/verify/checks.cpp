#include "relgw/verify/checks.hpp"

#include "relgw/combinatorics.hpp"
#include "relgw/counts.hpp"
#include "relgw/descendants.hpp"
#include "relgw/interp.hpp"
#include "relgw/verify/reconstruction.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace relgw::verify {

namespace {

template <typename A, typename B>
void require_equal(const std::string& what, const A& actual, const B& expected)
{
    if (!(actual == expected)) {
        std::ostringstream os;
        os << what << ": got " << actual << ", expected " << expected;
        throw CheckFailure(os.str());
    }
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw CheckFailure(what);
}

std::string key_label(const char* name, std::initializer_list<int> args)
{
    std::ostringstream os;
    os << name << '(';
    bool first = true;
    for (int a : args) {
        os << (first ? "" : ",") << a;
        first = false;
    }
    os << ')';
    return os.str();
}

RationalPolynomial poly_from(std::initializer_list<long> coeffs)
{
    std::vector<Rational> v;
    for (long c : coeffs)
        v.emplace_back(c);
    return RationalPolynomial(std::move(v));
}

// 1
std::string check_stirling(RelativeInvariantEngine&)
{
    const std::pair<std::pair<int, int>, long> table[] = {
        {{3, 1}, 2}, {{3, 2}, -3}, {{5, 1}, 24}, {{5, 2}, -50}, {{5, 3}, 35}};
    for (const auto& [nk, v] : table)
        require_equal(key_label("S", {nk.first, nk.second}), stirling_first_signed(nk.first, nk.second), Integer(v));

    for (int n = 0; n <= 12; ++n) {
        auto expanded = oracle::rising_factorial_coefficients(n);
        for (int k = 0; k <= n; ++k) {
            Integer via_stirling = ((n - k) % 2 == 0 ? 1 : -1) * stirling_first_signed(n, k);
            require_equal("rising factorial n=" + std::to_string(n) + " coefficient x^" + std::to_string(k),
                          via_stirling, expanded[k]);
        }
    }
    return "5 tabulated values, rising-factorial identity n<=12";
}

// 2
std::string check_line_descendants(RelativeInvariantEngine&)
{
    int compared = 0;
    // closed form against the reconstruction oracle on P^1 and P^2
    for (int s = 1; s <= 2; ++s) {
        oracle::DescendantReconstructor rec(s);
        for (int a = 0; a <= 2 * s - 1; ++a)
            for (int i = 0; i <= s; ++i) {
                if (s - a + i < 0)
                    continue;
                Rational expected = rec.evaluate(1, {{a, s - a + i}, {0, s - i}});
                require_equal(key_label("two_point_line vs oracle", {s, a, i}), two_point_line(s, a, i), expected);
                ++compared;
            }
    }
    for (int s = 1; s <= 5; ++s) {
        for (int a = 1; a <= 2 * s; ++a) {
            require_equal(key_label("string consistency", {s, a}), two_point_line(s, a, s), one_point_line(s, a - 1));
            for (int i = -1; i <= s + 1; ++i)
                require_equal(key_label("divisor/TRR recurrence", {s, a, i}), two_point_line(s, a, i),
                              two_point_line(s, a - 1, i - 1) - two_point_line(s, a - 1, i));
        }
    }
    require_equal("one_point_line(2,2)", one_point_line(2, 2), Rational(-3));
    require_equal("one_point_line(2,3)", one_point_line(2, 3), Rational(6));
    return std::to_string(compared) + " oracle comparisons, string/TRR identities s<=5";
}

// 3
std::string check_descendant_oracle(RelativeInvariantEngine&)
{
    int compared = 0;
    for (int s = 1; s <= 2; ++s) {
        oracle::DescendantReconstructor rec(s);
        const int max_n = s == 2 ? 2 : 3;
        for (int n = 1; n <= max_n; ++n) {
            const int dim = one_point_dimension(s, n);
            for (int b = 0; b <= s; ++b) {
                const int a = dim - b;
                if (a < 0)
                    continue;
                require_equal(key_label("J-function vs reconstruction", {s, n, a, b}),
                              one_point_descendant({s, n, a, b}), rec.one_point(n, a, b));
                ++compared;
            }
        }
    }
    require_equal("<psi^2 H>_{P^1,2}", one_point_descendant({1, 2, 2, 1}), Rational(1, 4));
    return std::to_string(compared) + " admissible (s,n,a,b) agree; (1,2,2,1) = 1/4";
}

// 4
std::string check_max_contact_lines(RelativeInvariantEngine& engine)
{
    const auto cubic = poly_from({0, 240, -200, 35});
    const auto quad = poly_from({0, -6, 3});
    require_equal("closed-form polynomial s=2", max_contact_lines_polynomial(2), quad);
    require_equal("closed-form polynomial s=3", max_contact_lines_polynomial(3), cubic);
    for (int s = 2; s <= 3; ++s)
        for (int d = 3; d <= 8; ++d)
            require_equal(key_label("T_{s,1}(d) engine vs closed form", {s, d}), engine.virtual_count_T(s, 1, d),
                          max_contact_lines_closed(s, d));
    for (int d = 3; d <= 8; ++d)
        require_equal(key_label("T_{2,1} = 3d(d-2)", {d}), engine.virtual_count_T(2, 1, d), Rational(3 * d * (d - 2)));
    require_equal("T_{3,1}(5)", engine.virtual_count_T(3, 1, 5), Rational(575));
    return "s in {2,3}, d in 3..8; T_{3,1}(5) = 575";
}

// 5
std::string check_hand_values(RelativeInvariantEngine& engine)
{
    require_equal("T_{2,2}(3)", engine.virtual_count_T(2, 2, 3), Rational(135, 4));
    require_equal("T_{2,2}(4)", engine.virtual_count_T(2, 2, 4), Rational(102));
    require_equal("T_{2,3}(3)", engine.virtual_count_T(2, 3, 3), Rational(244));
    require_equal("T_{2,3}(4)", engine.virtual_count_T(2, 3, 4), Rational(2384, 3));
    return "135/4, 102, 244, 2384/3";
}

// 6
std::string check_interpolation(RelativeInvariantEngine& engine)
{
    const RationalPolynomial t22{Rational(0), Rational(-63, 2), Rational(57, 4)};
    const RationalPolynomial t23{Rational(0), Rational(-812, 3), Rational(352, 3)};
    const RationalPolynomial t32{Rational(0), Rational(39852), Rational(-30294), Rational(20331, 4)};
    const int s2_samples[] = {3, 4};
    const int s2_checks[] = {5, 6};
    const int s3_samples[] = {5, 6, 7};
    const int s3_checks[] = {8};
    try {
        require_equal("fitted T_{2,2}", fit_and_verify(engine, 2, 2, s2_samples, s2_checks), t22);
        require_equal("fitted T_{2,3}", fit_and_verify(engine, 2, 3, s2_samples, s2_checks), t23);
        require_equal("fitted T_{3,2}", fit_and_verify(engine, 3, 2, s3_samples, s3_checks), t32);
    } catch (const VerificationError& e) {
        throw CheckFailure(e.what());
    }
    return "T_{2,2}, T_{2,3} from d=3,4 (checked 5,6); T_{3,2} from d=5,6,7 (checked 8)";
}

// 7
std::string check_double_cover_contribution(RelativeInvariantEngine&)
{
    for (int d = 3; d <= 7; ++d) {
        auto b = b_d_breakdown(d);
        const std::string at = " at d=" + std::to_string(d);
        require_equal("section term" + at, b.section_term, Rational(1));
        require_equal("cross term" + at, b.cross_term, Rational(5, 4));
        require_equal("excess term" + at, b.excess_coefficient * b.excess_term, Rational(3, 2));
        require_equal("b_d" + at, b_d_via_restriction(d), Rational(3, 4));
    }
    require_equal("BPS k=2, w=3", multiple_cover_contribution(2, 3), Rational(3, 4));
    return "b_d = 1 + 5/4 - 3/2 = 3/4 for d in 3..7";
}

// 8
std::string check_sextactic(RelativeInvariantEngine& engine)
{
    const long expected[] = {27, 84, 165, 270, 399};
    for (int d = 3; d <= 7; ++d) {
        Rational n_d = sextactic_count(engine, d);
        require_equal(key_label("n_d", {d}), n_d, Rational(expected[d - 3]));
        require_equal(key_label("3d(4d-9)", {d}), n_d, Rational(3 * d * (4 * d - 9)));
        require(n_d.is_integer() && n_d.sign() > 0, "n_d is not a positive integer");
    }
    return "27, 84, 165, 270, 399";
}

// 9
std::string check_cubic(RelativeInvariantEngine& engine)
{
    require_equal("N_3", cubic_count_conjectural(engine, 3), Rational(234));
    for (int d = 3; d <= 6; ++d)
        require_equal(key_label("6d(19d-44)", {d}), cubic_count_conjectural(engine, d),
                      Rational(6 * d * (19 * d - 44)));
    return "N_3 = 234; 6d(19d-44) for d in 3..6";
}

// 10
std::string check_properties(RelativeInvariantEngine& engine)
{
    // Polynomiality: for contact m >= 1 the invariant is d^{k+1} p(d), deg p <= s-1-k.
    // s+2 samples so that the degree bound is actually tested.
    int fitted = 0;
    for (int s = 1; s <= 2; ++s)
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= s - 2 + n * (s + 1); ++m)
                for (int k = 0; k <= s - 1; ++k) {
                    const int j = relative_dimension(s, n, m) - k;
                    if (j < 0)
                        continue;
                    std::vector<SamplePoint> pts;
                    for (int d = 2 * s - 1; d < 2 * s - 1 + s + 2; ++d)
                        pts.push_back({d, engine.relative_invariant({s, d, m, n, k, j})});
                    auto p = lagrange_interpolate(pts);
                    const std::string at = key_label("(s,n,m,k,j)", {s, n, m, k, j});
                    require(p.degree() <= s, "polynomiality degree bound fails at " + at + ": " + p.to_string());
                    require(p.is_zero() || p.zero_root_multiplicity() >= k + 1,
                            "d^{k+1} divisibility fails at " + at + ": " + p.to_string());
                    ++fitted;
                }

    // Vanishing gates on the full grid.
    int gated = 0;
    for (int s = 1; s <= 3; ++s)
        for (int n = 1; n <= 2; ++n)
            for (int m = 0; m <= 8; ++m) {
                const int dim = relative_dimension(s, n, m);
                for (int k = 0; k <= dim + 3; ++k)
                    for (int j = 0; j <= dim + 3; ++j) {
                        const bool wrong_dim = k + j != dim;
                        const bool k_gate = m >= 1 && k >= s;
                        if (!wrong_dim && !k_gate)
                            continue;
                        require(engine.relative_invariant({s, 2 * s + 1, m, n, k, j}).is_zero(),
                                "gate violated at " + key_label("(s,n,m,k,j)", {s, n, m, k, j}));
                        ++gated;
                    }
            }

    // Memo-order determinism: forward, reversed and concurrent evaluation agree.
    std::vector<InvariantKey> keys;
    for (int d = 3; d <= 5; ++d)
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 3 * n; ++m)
                for (int k = 0; k <= 1; ++k)
                    keys.push_back({2, d, m, n, k, relative_dimension(2, n, m) - k});
    RelativeInvariantEngine forward, backward, shared;
    std::vector<Rational> fwd, bwd(keys.size()), par(keys.size());
    for (const auto& key : keys)
        fwd.push_back(forward.relative_invariant(key));
    for (std::size_t i = keys.size(); i-- > 0;)
        bwd[i] = backward.relative_invariant(keys[i]);
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < 4; ++t)
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < keys.size(); i += 4) {
                    const std::size_t idx = keys.size() - 1 - i;
                    par[idx] = shared.relative_invariant(keys[idx]);
                }
            });
    }
    require(fwd == bwd && fwd == par, "evaluation order changed a value");
    require(forward.memo().entries() == backward.memo().entries()
                && forward.memo().entries() == shared.memo().entries(),
            "evaluation order changed the memo table");

    // Interpolation round trip on random d * p(d).
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> num(-1000, 1000), den(1, 60), s_dist(1, 4), shift(0, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const int s = s_dist(rng);
        std::vector<Rational> coeffs{Rational(0)};
        for (int i = 0; i < s; ++i)
            coeffs.emplace_back(Integer(num(rng)), Integer(den(rng)));
        RationalPolynomial q(coeffs);
        std::vector<int> ds;
        while (static_cast<int>(ds.size()) < s) {
            int d = 2 * s - 1 + shift(rng);
            if (std::find(ds.begin(), ds.end(), d) == ds.end())
                ds.push_back(d);
        }
        std::vector<SamplePoint> samples;
        for (int d : ds)
            samples.push_back({d, q.evaluate(Rational(d))});
        require_equal("interpolation round trip", fit_T_polynomial(s, samples), q);
    }

    return std::to_string(fitted) + " polynomiality fits, " + std::to_string(gated) + " gated keys, "
           + std::to_string(keys.size()) + " keys order-independent, 200 round trips";
}

} // namespace

const std::vector<Check>& regression_checks()
{
    static const std::vector<Check> checks = {
        {1, "stirling", "Stirling numbers and rising-factorial identity", 1, check_stirling},
        {2, "lines", "closed-form line descendants", 1, check_line_descendants},
        {3, "oracle", "J-function descendants vs string/divisor/TRR reconstruction", 5, check_descendant_oracle},
        {4, "max-lines", "maximal-contact lines: engine vs Stirling formula", 5, check_max_contact_lines},
        {5, "hand-values", "T_{2,2} and T_{2,3} hand values", 10, check_hand_values},
        {6, "interp", "interpolated T_{2,2}, T_{2,3}, T_{3,2}", 60, check_interpolation},
        {7, "b_d", "double-cover contribution b_d = 3/4", 1, check_double_cover_contribution},
        {8, "sextactic", "sextactic conics n_d = 3d(4d-9)", 10, check_sextactic},
        {9, "cubic", "conjectural cubic count N_d = 6d(19d-44)", 30, check_cubic},
        {10, "properties", "polynomiality, gates, memo determinism, interpolation round trip", 10, check_properties},
    };
    return checks;
}

namespace {

bool compare_warm_cache(const std::filesystem::path& path, RelativeInvariantEngine& cold, std::ostream& out)
{
    RelativeInvariantEngine warm;
    try {
        warm.load_cache(path);
    } catch (const CacheError& e) {
        out << "FAIL  [cache] " << e.what() << '\n';
        return false;
    }
    const InvariantKey probes[] = {{2, 3, 6, 2, 0, 0}, {2, 4, 6, 2, 0, 0}, {2, 3, 9, 3, 0, 0},
                                   {2, 4, 9, 3, 0, 0}, {2, 5, 3, 1, 0, 0}, {3, 5, 5, 1, 0, 0}};
    for (const auto& key : probes) {
        Rational w = warm.relative_invariant(key);
        Rational c = cold.relative_invariant(key);
        if (w != c) {
            out << "FAIL  [cache] cache file " << path.string() << " disagrees at " << key.to_string() << ": "
                << w << " vs cold " << c << '\n';
            return false;
        }
    }
    out << "PASS  [cache] warm cache " << path.string() << " agrees with cold evaluation\n";
    return true;
}

} // namespace

int run_verify(const VerifyOptions& options, std::ostream& out)
{
    const auto& all = regression_checks();
    for (const auto& id : options.only) {
        bool known = std::any_of(all.begin(), all.end(), [&](const Check& c) { return c.id == id; });
        if (!known)
            throw std::invalid_argument("unknown check '" + id + "'");
    }

    RelativeInvariantEngine engine;
    std::string first_failure;
    int passed = 0, failed = 0;
    for (const auto& check : all) {
        if (!options.only.empty()
            && std::find(options.only.begin(), options.only.end(), check.id) == options.only.end())
            continue;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = check.run(engine);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > check.budget_seconds) {
            ok = false;
            std::ostringstream os;
            os << "exceeded time budget of " << check.budget_seconds << " s";
            detail = os.str();
        }
        out << (ok ? "PASS" : "FAIL") << "  [" << check.number << "] " << check.id << ": " << check.title << " | "
            << detail << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (first_failure.empty())
                first_failure = check.id;
        }
    }

    if (options.cache && !compare_warm_cache(*options.cache, engine, out)) {
        ++failed;
        if (first_failure.empty())
            first_failure = "cache";
    }

    out << passed << " passed, " << failed << " failed\n";
    if (failed > 0) {
        out << "first failing check: " << first_failure << '\n';
        return 1;
    }
    return 0;
}

} // namespace relgw::verify
