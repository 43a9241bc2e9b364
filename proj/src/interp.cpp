#include "relgw/interp.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <string>

namespace relgw {

RationalPolynomial lagrange_interpolate(std::span<const SamplePoint> points)
{
    // sum_i v_i prod_{j != i} (d - d_j) / (d_i - d_j)
    RationalPolynomial out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            if (points[i].d == points[j].d)
                throw std::invalid_argument("lagrange_interpolate: duplicate d=" + std::to_string(points[i].d));
            basis = basis * RationalPolynomial{Rational(-points[j].d), Rational(1)};
            denom *= Rational(points[i].d - points[j].d);
        }
        out += basis * (points[i].value / denom);
    }
    return out;
}

RationalPolynomial fit_T_polynomial(int s, std::span<const SamplePoint> samples)
{
    if (s < 1)
        throw std::invalid_argument("fit_T_polynomial: s must be >= 1");
    if (static_cast<int>(samples.size()) != s)
        throw std::invalid_argument("fit_T_polynomial: need exactly " + std::to_string(s) + " samples, got "
                                    + std::to_string(samples.size()));
    std::set<int> seen;
    for (const auto& p : samples) {
        if (p.d < min_admissible_degree(s))
            throw std::invalid_argument("fit_T_polynomial: sample d=" + std::to_string(p.d) + " is below 2s-1="
                                        + std::to_string(min_admissible_degree(s)));
        if (!seen.insert(p.d).second)
            throw std::invalid_argument("fit_T_polynomial: duplicate sample d=" + std::to_string(p.d));
    }

    std::vector<SamplePoint> divided;
    for (const auto& p : samples)
        divided.push_back({p.d, p.value / Rational(p.d)});
    return lagrange_interpolate(divided) * RationalPolynomial{Rational(0), Rational(1)};
}

VerificationError::VerificationError(int d_, Rational expected_, Rational actual_)
    : std::runtime_error("interpolation check failed at d=" + std::to_string(d_) + ": engine "
                         + expected_.to_string() + ", polynomial " + actual_.to_string())
    , d(d_)
    , expected(std::move(expected_))
    , actual(std::move(actual_))
{
}

namespace {

std::vector<Rational> evaluate_concurrently(RelativeInvariantEngine& engine, int s, int n, std::span<const int> ds)
{
    std::vector<std::future<Rational>> jobs;
    for (int d : ds)
        jobs.push_back(std::async(std::launch::async, [&engine, s, n, d] { return engine.virtual_count_T(s, n, d); }));
    std::vector<Rational> out;
    for (auto& job : jobs)
        out.push_back(job.get());
    return out;
}

} // namespace

RationalPolynomial fit_and_verify(RelativeInvariantEngine& engine, int s, int n, std::span<const int> sample_ds,
                                  std::span<const int> check_ds)
{
    for (int d : check_ds) {
        if (std::find(sample_ds.begin(), sample_ds.end(), d) != sample_ds.end())
            throw std::invalid_argument("fit_and_verify: d=" + std::to_string(d) + " is both sample and check");
        if (d < min_admissible_degree(s))
            throw std::invalid_argument("fit_and_verify: check d=" + std::to_string(d) + " is below 2s-1");
    }

    auto values = evaluate_concurrently(engine, s, n, sample_ds);
    std::vector<SamplePoint> samples;
    for (std::size_t i = 0; i < sample_ds.size(); ++i)
        samples.push_back({sample_ds[i], values[i]});
    auto poly = fit_T_polynomial(s, samples);

    auto checks = evaluate_concurrently(engine, s, n, check_ds);
    for (std::size_t i = 0; i < check_ds.size(); ++i) {
        Rational fitted = poly.evaluate(Rational(check_ds[i]));
        if (fitted != checks[i])
            throw VerificationError(check_ds[i], checks[i], fitted);
    }
    return poly;
}

} // namespace relgw
