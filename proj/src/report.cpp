#include "linkc/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace linkc {

namespace {

using nlohmann::json;

json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

std::string crn_status_name(CrnStatus s) {
    switch (s) {
    case CrnStatus::exact_reduced_alternating: return "exact-reduced-alternating";
    case CrnStatus::exact_closed_form: return "exact-closed-form";
    case CrnStatus::upper_only: return "upper-only";
    }
    return "?";
}

std::string kind_name(BoundKind k) {
    return k == BoundKind::lower ? "lower" : "upper";
}

std::string status_name(BoundStatus s) {
    switch (s) {
    case BoundStatus::certified: return "certified";
    case BoundStatus::conditional: return "conditional";
    case BoundStatus::asymptotic: return "asymptotic";
    }
    return "?";
}

json report_json(const Report& r) {
    json j;
    j["input"] = r.input;
    if (r.skipped) {
        j["skipped"] = true;
        j["skip_reason"] = r.skip_reason;
        return j;
    }
    if (r.crn)
        j["crn"] = {{"value", r.crn->value}, {"status", crn_status_name(r.crn->status)}};
    else
        j["crn"] = nullptr;
    j["determinant"] = r.determinant ? json_int(*r.determinant) : json(nullptr);
    j["bounds"] = json::array();
    for (const Bound& b : r.bounds)
        j["bounds"].push_back({{"tag", b.tag},
                               {"value", json_int(b.value)},
                               {"kind", kind_name(b.kind)},
                               {"status", status_name(b.status)}});
    j["interval"] = {{"lower", json_int(r.interval.lower)},
                     {"upper", r.interval.upper ? json_int(*r.interval.upper) : json(nullptr)}};
    j["warnings"] = r.warnings;
    return j;
}

std::string interval_text(const BoundInterval& iv) {
    return "[" + iv.lower.str() + ", " + (iv.upper ? iv.upper->str() : "?") + "]";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string report_json_text(const Report& r) { return report_json(r).dump(2); }

std::string reports_json_text(const std::vector<Report>& rs) {
    json arr = json::array();
    for (const Report& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string render_detail(const Report& r) {
    std::ostringstream out;
    out << "input:       " << (r.input.empty() ? "(empty: unknot)" : r.input) << "\n";
    if (r.skipped) {
        out << "skipped:     " << r.skip_reason << "\n";
        return out.str();
    }
    if (r.crn)
        out << "crossings:   " << r.crn->value << " (" << crn_status_name(r.crn->status)
            << ")\n";
    if (r.determinant) out << "determinant: " << *r.determinant << "\n";
    if (!r.bounds.empty()) {
        out << "bounds:\n";
        std::size_t tag_w = 0;
        for (const Bound& b : r.bounds) tag_w = std::max(tag_w, b.tag.size());
        for (const Bound& b : r.bounds) {
            out << "  " << b.tag << std::string(tag_w - b.tag.size() + 2, ' ')
                << kind_name(b.kind) << " " << b.value << " (" << status_name(b.status)
                << ")";
            if (!b.note.empty()) out << "  " << b.note;
            out << "\n";
        }
    }
    out << "interval:    " << interval_text(r.interval) << "\n";
    for (const std::string& w : r.warnings) out << "warning:     " << w << "\n";
    return out.str();
}

std::string render_table(const std::vector<Report>& rs) {
    std::vector<std::array<std::string, 6>> rows;
    rows.push_back({"input", "crn", "det", "lower", "upper", "notes"});
    for (const Report& r : rs) {
        std::array<std::string, 6> row;
        row[0] = r.input.empty() ? "(unknot)" : r.input;
        if (r.skipped) {
            row[1] = row[2] = row[3] = row[4] = "-";
            row[5] = "skipped: " + r.skip_reason;
        } else {
            row[1] = r.crn ? std::to_string(r.crn->value) +
                                 (r.crn->exact() ? "" : "?")
                           : "-";
            row[2] = r.determinant ? r.determinant->str() : "-";
            row[3] = r.interval.lower.str();
            row[4] = r.interval.upper ? r.interval.upper->str() : "?";
            row[5] = r.warnings.empty() ? "" : r.warnings.front();
        }
        rows.push_back(row);
    }
    std::array<std::size_t, 6> w{};
    for (const auto& row : rows)
        for (int i = 0; i < 6; ++i) w[i] = std::max(w[i], row[i].size());
    std::ostringstream out;
    for (const auto& row : rows) {
        for (int i = 0; i < 6; ++i) {
            out << row[i];
            if (i < 5) out << std::string(w[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string render_csv(const std::vector<Report>& rs) {
    std::ostringstream out;
    out << "input,crn,crn_status,determinant,lower,upper,warnings\n";
    for (const Report& r : rs) {
        std::string warn;
        if (r.skipped)
            warn = "skipped: " + r.skip_reason;
        else
            for (const std::string& s : r.warnings) {
                if (!warn.empty()) warn += "; ";
                warn += s;
            }
        out << csv_field(r.input) << ",";
        if (!r.skipped && r.crn)
            out << r.crn->value << "," << crn_status_name(r.crn->status);
        else
            out << ",";
        out << ",";
        if (!r.skipped && r.determinant) out << r.determinant->str();
        out << ",";
        if (!r.skipped) out << r.interval.lower.str();
        out << ",";
        if (!r.skipped && r.interval.upper) out << r.interval.upper->str();
        out << "," << csv_field(warn) << "\n";
    }
    return out.str();
}

} // namespace linkc
