#ifndef RELGW_VERIFY_CHECKS_HPP
#define RELGW_VERIFY_CHECKS_HPP

#include "relgw/gathmann.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace relgw::verify {

class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One regression criterion. `run` throws CheckFailure on a mismatch and
/// returns a short summary otherwise.
struct Check {
    int number;
    std::string id;
    std::string title;
    double budget_seconds;
    std::function<std::string(RelativeInvariantEngine&)> run;
};

const std::vector<Check>& regression_checks();

struct VerifyOptions {
    std::vector<std::string> only; ///< check ids; empty runs everything
    std::optional<std::filesystem::path> cache;
};

/// Runs the selected checks on a cold engine, printing one PASS/FAIL line per
/// check. With a cache, the cache is then loaded into a second engine and its
/// answers compared against the cold run. Returns 0 when everything passes,
/// 1 otherwise; unknown ids in `only` throw std::invalid_argument.
int run_verify(const VerifyOptions& options, std::ostream& out);

} // namespace relgw::verify

#endif
