#include "linkc/commands.hpp"

#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "linkc/bounds.hpp"
#include "linkc/braid.hpp"
#include "linkc/corpus.hpp"
#include "linkc/errors.hpp"
#include "linkc/families.hpp"
#include "linkc/invariants.hpp"
#include "linkc/report.hpp"
#include "linkc/roots.hpp"

namespace linkc {

namespace {

void check_options(const Options& opt) {
    if (opt.format != "table" && opt.format != "json" && opt.format != "csv")
        throw parse_error("unknown format '" + opt.format + "'; expected table, json or csv");
    if (opt.volume && opt.volume_source.empty())
        throw parse_error("--volume requires --volume-source to record where the value came from");
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

bool looks_like_braid(const std::string& s) {
    auto i = s.find_first_not_of(" \t\r\n");
    return i != std::string::npos && s.compare(i, 7, "strands") == 0;
}

// Warnings for bounds that are present but kept out of the certified
// interval, and for notes that flag a boundary or ambiguity.
void add_bound_warnings(Report& r, const Options& opt) {
    for (const Bound& b : r.bounds) {
        if (b.status == BoundStatus::conditional && !opt.assume_prime)
            r.warnings.push_back("bound " + b.tag +
                                 " assumes a prime, non-split input and is not merged; "
                                 "pass --assume-prime to assert that");
        if (b.status == BoundStatus::asymptotic && !opt.include_asymptotic)
            r.warnings.push_back("bound " + b.tag +
                                 " holds for sufficiently large family members only; "
                                 "pass --include-asymptotic to merge it");
        if (b.tag == "volume-lower" &&
            (b.note.find("strictness applied") != std::string::npos ||
             b.note.find("conservative value") != std::string::npos))
            r.warnings.push_back(b.note);
    }
}

Report diagram_report(const LinkDiagram& d, const std::string& echo, bool prime,
                      const Options& opt, std::optional<long long> turks_param) {
    Report r;
    r.input = echo;
    CrossingCertificate crn = crn_certificate(d);
    long long comps = component_count(d);
    r.crn = crn;
    r.determinant = determinant(d);
    r.bounds.push_back(diagram_upper_bound(crn, comps));
    r.bounds.push_back(det_lower_bound(d, prime));
    if (crn.status == CrnStatus::exact_reduced_alternating && comps == 1)
        r.bounds.push_back(alternating_crn_lower_bound(crn, prime));
    if (turks_param) r.bounds.push_back(turks_head_lower_bound(*turks_param));
    if (opt.volume)
        r.bounds.push_back(
            volume_lower_bound(*opt.volume, opt.volume_tolerance, opt.volume_source));
    r.interval = combine(r.bounds, opt.include_asymptotic);
    add_bound_warnings(r, opt);
    return r;
}

Report torus_report(const TorusFacts& f, const std::string& echo, const Options& opt) {
    Report r;
    r.input = echo;
    r.crn = f.crn;
    r.determinant = f.det;
    r.bounds = f.bounds;
    if (opt.volume)
        r.bounds.push_back(
            volume_lower_bound(*opt.volume, opt.volume_tolerance, opt.volume_source));
    r.interval = combine(r.bounds, opt.include_asymptotic);
    add_bound_warnings(r, opt);
    if (f.torus_link)
        r.warnings.push_back("parameters are not coprime: this is a " +
                             std::to_string(f.components) + "-component torus link");
    return r;
}

Report pair_report(const PairExpression& e, const std::string& echo, long long n,
                   const Options& opt) {
    if (opt.volume)
        throw parse_error("volume bounds apply to diagram inputs, not pair expressions");
    Report r;
    r.input = echo;
    PairExpression norm = normalize(e);
    r.interval = complexity(norm);
    XnFacts facts = xn_facts(n);
    r.warnings.push_back("pair in S^2 x S^1; bounds transfer from the root " +
                         std::string("(S^3, T(2,") + std::to_string(n) +
                         ")), whose complexity the pair shares");
    r.warnings.push_back("normal form: " + serialize_expression(norm));
    if (facts.root_components == 2)
        r.warnings.push_back("the root link T(2," + std::to_string(n) +
                             ") has 2 components");
    if (facts.degenerate)
        r.warnings.push_back("degenerate member: T(2,1) is unknotted");
    return r;
}

Report build_report(const std::string& input, const Options& opt) {
    if (auto spec = parse_family_spec(input)) {
        FamilyFacts f = family_facts(*spec);
        if (!f.valid) throw parse_error(f.skip_reason);
        if (f.torus) return torus_report(*f.torus, spec->text, opt);
        if (f.diagram)
            return diagram_report(*f.diagram, spec->text,
                                  f.asserted_prime_nonsplit || opt.assume_prime, opt,
                                  f.turks_head_param);
        return pair_report(*f.pair, spec->text, spec->args[0], opt);
    }
    if (looks_like_braid(input))
        return diagram_report(braid_closure(parse_braid(input)), input,
                              opt.assume_prime, opt, std::nullopt);
    LinkDiagram d;
    if (blank(input))
        d.unknots = 1; // the empty input is the unknot
    else
        d = parse_pd(input);
    return diagram_report(d, input, opt.assume_prime, opt, std::nullopt);
}

Report family_report(const FamilySpec& spec, const Options& opt) {
    FamilyFacts f = family_facts(spec);
    if (!f.valid) {
        Report r;
        r.input = spec.text;
        r.skipped = true;
        r.skip_reason = f.skip_reason;
        return r;
    }
    if (f.torus) return torus_report(*f.torus, spec.text, opt);
    if (f.diagram)
        return diagram_report(*f.diagram, spec.text,
                              f.asserted_prime_nonsplit || opt.assume_prime, opt,
                              f.turks_head_param);
    return pair_report(*f.pair, spec.text, spec.args[0], opt);
}

int report_errors(const std::exception& e, std::ostream& err, bool internal) {
    err << (internal ? "internal contradiction: " : "error: ") << e.what() << "\n";
    return internal ? exit_contradiction : exit_input;
}

} // namespace

int cmd_bounds(const std::string& input, const Options& opt, std::ostream& out,
               std::ostream& err) {
    try {
        check_options(opt);
        Report r = build_report(input, opt);
        if (opt.format == "json")
            out << report_json_text(r) << "\n";
        else if (opt.format == "csv")
            out << render_csv({r});
        else
            out << render_detail(r);
        return exit_ok;
    } catch (const parse_error& e) {
        return report_errors(e, err, false);
    } catch (const std::exception& e) {
        return report_errors(e, err, true);
    }
}

int cmd_sweep(const std::string& family, const std::string& range, const Options& opt,
              std::ostream& out, std::ostream& err) {
    try {
        check_options(opt);
        FamilySpec::Kind kind;
        if (family == "fib")
            kind = FamilySpec::Kind::fib;
        else if (family == "th")
            kind = FamilySpec::Kind::th;
        else if (family == "twist")
            kind = FamilySpec::Kind::twist;
        else if (family == "xn")
            kind = FamilySpec::Kind::xn;
        else if (family == "torus")
            throw parse_error("the torus family has two parameters and does not sweep; "
                              "use bounds torus(m,q)");
        else
            throw parse_error("unknown family '" + family +
                              "'; expected fib, th, twist or xn");

        auto dots = range.find("..");
        if (dots == std::string::npos)
            throw parse_error("range must look like 2..8, got '" + range + "'");
        long long lo, hi;
        try {
            lo = std::stoll(range.substr(0, dots));
            hi = std::stoll(range.substr(dots + 2));
        } catch (const std::exception&) {
            throw parse_error("range must look like 2..8, got '" + range + "'");
        }
        if (lo > hi) throw parse_error("empty range " + range);
        if (hi - lo > 5000) throw parse_error("range wider than 5000 members");

        std::vector<Report> rows;
        for (long long n = lo; n <= hi; ++n) {
            FamilySpec spec;
            spec.kind = kind;
            spec.args = {n};
            spec.text = family + "(" + std::to_string(n) + ")";
            rows.push_back(family_report(spec, opt));
        }
        if (opt.format == "json")
            out << reports_json_text(rows) << "\n";
        else if (opt.format == "csv")
            out << render_csv(rows);
        else
            out << render_table(rows);
        return exit_ok;
    } catch (const parse_error& e) {
        return report_errors(e, err, false);
    } catch (const std::exception& e) {
        return report_errors(e, err, true);
    }
}

int cmd_roots(const std::string& expression, const Options& opt, std::ostream& out,
              std::ostream& err) {
    try {
        check_options(opt);
        PairExpression parsed = parse_expression(expression);
        PairExpression norm = normalize(parsed);
        BoundInterval c = complexity(norm);
        std::string lower = c.lower.str();
        std::string upper = c.upper ? c.upper->str() : "?";
        if (opt.format == "json") {
            auto as_json = [](const Int& v) -> nlohmann::json {
                static const Int lo = std::numeric_limits<long long>::min();
                static const Int hi = std::numeric_limits<long long>::max();
                if (v >= lo && v <= hi) return v.convert_to<long long>();
                return v.str();
            };
            nlohmann::json j;
            j["input"] = expression;
            j["normalized"] = serialize_expression(norm);
            j["complexity"]["lower"] = as_json(c.lower);
            j["complexity"]["upper"] = c.upper ? as_json(*c.upper) : nlohmann::json(nullptr);
            j["log"] = norm.log;
            out << j.dump(2) << "\n";
        } else if (opt.format == "csv") {
            out << "input,normalized,lower,upper\n";
            out << "\"" << expression << "\",\"" << serialize_expression(norm) << "\","
                << lower << "," << (c.upper ? upper : "") << "\n";
        } else {
            out << "expression:  " << (blank(expression) ? "(empty)" : expression) << "\n";
            out << "normal form: " << serialize_expression(norm) << "\n";
            out << "complexity:  [" << lower << ", " << upper << "]\n";
            for (const std::string& line : norm.log) out << "  " << line << "\n";
        }
        return exit_ok;
    } catch (const parse_error& e) {
        return report_errors(e, err, false);
    } catch (const std::exception& e) {
        return report_errors(e, err, true);
    }
}

int cmd_selftest(const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        check_options(opt);
        SelftestResult r = run_selftest(bundled_corpus(), opt.quick);
        if (opt.format == "json") {
            nlohmann::json j;
            j["entries_checked"] = r.entries_checked;
            j["failures"] = r.failures;
            j["ok"] = r.ok;
            out << j.dump(2) << "\n";
        } else {
            for (const std::string& f : r.failures) out << "FAIL  " << f << "\n";
            out << "selftest: " << r.entries_checked << " entries checked, "
                << r.failures.size() << (r.failures.size() == 1 ? " failure" : " failures")
                << (opt.quick ? " (quick subset)" : "") << "\n";
        }
        return r.ok ? exit_ok : exit_failed;
    } catch (const std::exception& e) {
        return report_errors(e, err, true);
    }
}

} // namespace linkc
