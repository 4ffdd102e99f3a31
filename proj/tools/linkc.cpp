#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "linkc/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Certified complexity bounds for links from diagrams, and an exact "
                 "connected-sum calculus for link pairs."};
    app.require_subcommand(1);

    linkc::Options opt;
    std::string volume;
    app.add_option("--format", opt.format, "Output format: table, json or csv")
        ->capture_default_str();
    app.add_flag("--assume-prime", opt.assume_prime,
                 "Assert the input is prime and non-split, certifying the determinant "
                 "and alternating lower bounds");
    app.add_flag("--include-asymptotic", opt.include_asymptotic,
                 "Merge bounds that hold only for sufficiently large family members");
    auto* volume_opt =
        app.add_option("--volume", volume,
                       "Hyperbolic volume of the link exterior as decimal text, "
                       "e.g. 2.02988 (certified input; lower bound via the ideal "
                       "tetrahedron volume)");
    app.add_option("--volume-source", opt.volume_source,
                   "Provenance of the volume value (required with --volume)");
    app.add_flag("--quick", opt.quick, "selftest: only entries with at most 8 crossings");

    std::string input, family, range, expression;
    auto* bounds = app.add_subcommand(
        "bounds", "Bound report for one input; the empty string is the unknot");
    bounds->add_option("input", input,
                       "PD text, braid text (strands=n : ...), or family spec like th(4)");
    bounds->fallthrough();
    auto* sweep =
        app.add_subcommand("sweep", "One bound report per family member over a range");
    sweep->add_option("family", family, "fib, th, twist or xn")->required();
    sweep->add_option("range", range, "Inclusive range, e.g. 2..8")->required();
    sweep->fallthrough();
    auto* roots = app.add_subcommand(
        "roots", "Normalize a pair expression and report its complexity interval");
    roots->add_option("expression", expression,
                      "Pair expression, e.g. \"Prime(trefoil, 3) #2 D\"");
    roots->fallthrough();
    auto* selftest = app.add_subcommand(
        "selftest", "Re-derive the bundled corpus through both determinant routes");
    selftest->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : linkc::exit_input;
    }
    if (volume_opt->count() > 0) opt.volume = volume;

    if (bounds->parsed()) return linkc::cmd_bounds(input, opt, std::cout, std::cerr);
    if (sweep->parsed()) return linkc::cmd_sweep(family, range, opt, std::cout, std::cerr);
    if (roots->parsed()) return linkc::cmd_roots(expression, opt, std::cout, std::cerr);
    return linkc::cmd_selftest(opt, std::cout, std::cerr);
}
