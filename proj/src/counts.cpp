#include "relgw/counts.hpp"

#include "relgw/combinatorics.hpp"
#include "relgw/descendants.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace relgw {

std::string to_string(CountKind kind)
{
    switch (kind) {
    case CountKind::Virtual:
        return "virtual";
    case CountKind::Enumerative:
        return "enumerative";
    case CountKind::Conjectural:
        return "conjectural";
    }
    return "unknown";
}

Rational CountReport::correction_total() const
{
    Rational total = 0;
    for (const auto& c : corrections)
        total += c.count * c.contribution;
    return total;
}

bool CountReport::is_consistent() const
{
    return enumerative_count == total_virtual - correction_total();
}

namespace {

nlohmann::ordered_json report_json(const CountReport& r)
{
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["d"] = r.d;
    j["kind"] = to_string(r.kind);
    j["total_virtual"] = r.total_virtual.to_string();
    auto corr = nlohmann::ordered_json::array();
    for (const auto& c : r.corrections) {
        nlohmann::ordered_json e;
        e["label"] = c.label;
        e["count"] = c.count.to_string();
        e["contribution"] = c.contribution.to_string();
        corr.push_back(std::move(e));
    }
    j["corrections"] = std::move(corr);
    j["correction_total"] = r.correction_total().to_string();
    j["enumerative_count"] = r.enumerative_count.to_string();
    return j;
}

void require_plane_degree(int d, const char* what)
{
    if (d < 3)
        throw std::invalid_argument(std::string(what) + ": requires d >= 3");
}

CountReport finish(CountReport r)
{
    r.enumerative_count = r.total_virtual - r.correction_total();
    return r;
}

} // namespace

std::string CountReport::to_json() const
{
    return report_json(*this).dump();
}

std::string reports_to_json(const std::vector<CountReport>& rows)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string reports_to_csv(const std::vector<CountReport>& rows)
{
    std::ostringstream os;
    os << "name,d,total_virtual,correction_total,enumerative_count\n";
    for (const auto& r : rows)
        os << r.name << ',' << r.d << ',' << r.total_virtual << ',' << r.correction_total() << ','
           << r.enumerative_count << '\n';
    return os.str();
}

Rational inflectional_lines(int d)
{
    require_plane_degree(d, "inflectional_lines");
    return Rational(3 * d * (d - 2));
}

Rational multiple_cover_contribution(int k, int w)
{
    if (k < 1)
        throw std::invalid_argument("multiple_cover_contribution: k must be >= 1");
    if (w < 2)
        throw std::invalid_argument("multiple_cover_contribution: w must be >= 2");
    return Rational(binomial(static_cast<long>(k) * (w - 1) - 1, k - 1)) / Rational(k).pow(2);
}

DoubleCoverBreakdown b_d_breakdown(int d)
{
    require_plane_degree(d, "b_d_via_restriction");
    // Integrals over M_{0,1}(P^1, 2); H^2 = 0 on P^1 and Y restricts to the
    // flex point, so ev*(Y) acts as ev*(H) on the restricted classes.
    auto integral = [](int psi, int h) { return one_point_descendant({1, 2, psi, h}); };

    DoubleCoverBreakdown b;
    b.section_term = 1;
    // (d ev*H + 5 psi) ev*H (ev*H + psi) = d ev*H^3 + (d + 5) ev*H^2 psi + 5 ev*H psi^2
    const Rational dd(d);
    b.cross_term = dd * integral(0, 3) + (dd + Rational(5)) * integral(1, 2) + Rational(5) * integral(2, 1);
    // ev*H (ev*H + psi)(ev*H + 2 psi) = ev*H^3 + 3 ev*H^2 psi + 2 ev*H psi^2
    b.excess_term = integral(0, 3) + Rational(3) * integral(1, 2) + Rational(2) * integral(2, 1);
    b.excess_coefficient = 3;
    return b;
}

Rational b_d_via_restriction(int d)
{
    return b_d_breakdown(d).value();
}

CountReport tsn_report(RelativeInvariantEngine& engine, int s, int n, int d)
{
    std::ostringstream name;
    name << "T_" << s << '_' << n;
    CountReport r{name.str(), d, CountKind::Virtual, engine.virtual_count_T(s, n, d), {}, 0};
    return finish(std::move(r));
}

CountReport lines_report(RelativeInvariantEngine& engine, int s, int d)
{
    if (d < 3 || d < 2 * s - 1)
        throw std::invalid_argument("lines: requires d >= max(3, 2s-1)");
    std::ostringstream name;
    name << "lines_" << s;
    CountReport r{name.str(), d, CountKind::Enumerative, engine.virtual_count_T(s, 1, d), {}, 0};
    return finish(std::move(r));
}

CountReport sextactic_report(RelativeInvariantEngine& engine, int d)
{
    require_plane_degree(d, "sextactic_count");
    CountReport r{"sextactic", d, CountKind::Enumerative, engine.virtual_count_T(2, 2, d),
                  {{"double covers of flex lines", inflectional_lines(d), b_d_via_restriction(d)}}, 0};
    return finish(std::move(r));
}

CountReport cubic_report(RelativeInvariantEngine& engine, int d)
{
    require_plane_degree(d, "cubic_count_conjectural");
    CountReport r{"cubic", d, CountKind::Conjectural, engine.virtual_count_T(2, 3, d),
                  {{"triple covers of flex lines", inflectional_lines(d), multiple_cover_contribution(3, 3)}}, 0};
    return finish(std::move(r));
}

Rational sextactic_count(RelativeInvariantEngine& engine, int d)
{
    return sextactic_report(engine, d).enumerative_count;
}

Rational cubic_count_conjectural(RelativeInvariantEngine& engine, int d)
{
    return cubic_report(engine, d).enumerative_count;
}

} // namespace relgw
