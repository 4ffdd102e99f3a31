#ifndef LINKC_REPORT_HPP
#define LINKC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "linkc/bounds.hpp"

namespace linkc {

// One bound report: everything the front end prints about one input, in any
// of the three output formats.
struct Report {
    std::string input;
    std::optional<CrossingCertificate> crn;
    std::optional<Int> determinant;
    std::vector<Bound> bounds;
    BoundInterval interval;
    std::vector<std::string> warnings;

    // Sweep rows for family members outside their theorem's hypotheses.
    bool skipped = false;
    std::string skip_reason;
};

// JSON object text with the stable field set
//   {input, crn: {value, status}, determinant,
//    bounds: [{tag, value, kind, status}], interval: {lower, upper},
//    warnings}
// crn and determinant are null when the input has no diagram route (pair
// expressions). Values that fit in 64 bits are JSON numbers; anything larger
// becomes a decimal string.
std::string report_json_text(const Report& r);
std::string reports_json_text(const std::vector<Report>& rs);

// Key/value block for a single report.
std::string render_detail(const Report& r);

// Aligned columns, one row per report.
std::string render_table(const std::vector<Report>& rs);

// CSV with header input,crn,crn_status,determinant,lower,upper,warnings.
std::string render_csv(const std::vector<Report>& rs);

} // namespace linkc

#endif
