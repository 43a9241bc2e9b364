#ifndef RELGW_COUNTS_HPP
#define RELGW_COUNTS_HPP

#include "relgw/gathmann.hpp"
#include "relgw/rational.hpp"

#include <string>
#include <vector>

namespace relgw {

/// Contribution subtracted from a virtual count: `count` identical
/// configurations, each contributing `contribution`.
struct Correction {
    std::string label;
    Rational count;
    Rational contribution;
};

enum class CountKind { Virtual, Enumerative, Conjectural };

std::string to_string(CountKind kind);

struct CountReport {
    std::string name;
    int d = 0;
    CountKind kind = CountKind::Virtual;
    Rational total_virtual;
    std::vector<Correction> corrections;
    Rational enumerative_count;

    Rational correction_total() const;
    /// enumerative_count == total_virtual - sum(count * contribution)
    bool is_consistent() const;

    std::string to_json() const;
};

std::string reports_to_json(const std::vector<CountReport>& rows);
std::string reports_to_csv(const std::vector<CountReport>& rows);

/// Flex lines of a general plane curve of degree d >= 3: 3d(d-2).
Rational inflectional_lines(int d);

/// (1/k^2) C(k(w-1)-1, k-1): contribution of a k-fold cover of a curve with
/// maximal contact w.
Rational multiple_cover_contribution(int k, int w);

/// Terms of the double-cover contribution of one flex line to T_{2,2}.
struct DoubleCoverBreakdown {
    Rational section_term; ///< multiplicity of the contact-raising section at M* cap M_l
    Rational cross_term;   ///< (ev*Y + 5 psi) restricted to M_l
    Rational excess_coefficient;
    Rational excess_term;  ///< comb locus D restricted to M_l
    Rational value() const { return section_term + cross_term - excess_coefficient * excess_term; }
};

/// The pieces are computed on M_l = M^H_{(2)}(P^1, 2), so none depends on d.
DoubleCoverBreakdown b_d_breakdown(int d);
Rational b_d_via_restriction(int d);

/// Conics with contact order 6 to a general plane curve of degree d >= 3.
Rational sextactic_count(RelativeInvariantEngine& engine, int d);
/// Rational cubics with contact order 9, assuming the cover formula holds beyond d = 3.
Rational cubic_count_conjectural(RelativeInvariantEngine& engine, int d);

CountReport tsn_report(RelativeInvariantEngine& engine, int s, int n, int d);
/// Lines of maximal contact 2s-1 to a hypersurface in P^s; d >= max(3, 2s-1).
CountReport lines_report(RelativeInvariantEngine& engine, int s, int d);
CountReport sextactic_report(RelativeInvariantEngine& engine, int d);
CountReport cubic_report(RelativeInvariantEngine& engine, int d);

} // namespace relgw

#endif
