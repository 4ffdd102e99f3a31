#ifndef LINKC_COMMANDS_HPP
#define LINKC_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace linkc {

// Global front-end options shared by all commands.
struct Options {
    std::string format = "table"; // table | json | csv
    bool assume_prime = false;    // certify det/alt-crn lower bounds
    bool include_asymptotic = false;
    std::optional<std::string> volume; // decimal text, e.g. "2.02988"
    std::string volume_source;         // mandatory provenance when volume is set
    std::string volume_tolerance = "0.0001";
    bool quick = false; // selftest: <= 8-crossing subset
};

// Exit codes shared by the commands and the binary: 0 success, 1 selftest
// failure, 2 input error, 3 internal theorem contradiction.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_contradiction = 3;

// Bound report for one input: PD text, braid text ("strands=n : ..."), or a
// family spec ("th(4)"). The empty string is the unknot.
int cmd_bounds(const std::string& input, const Options& opt, std::ostream& out,
               std::ostream& err);

// One report per member of `family` ("fib", "th", "twist", "xn") over an
// inclusive range "a..b", in input order; members outside their theorem's
// hypotheses become skip rows rather than errors.
int cmd_sweep(const std::string& family, const std::string& range,
              const Options& opt, std::ostream& out, std::ostream& err);

// Normalize a pair expression and report its complexity interval and the
// rewrite log.
int cmd_roots(const std::string& expression, const Options& opt,
              std::ostream& out, std::ostream& err);

// Re-derive every bundled corpus entry's frozen values through both
// determinant routes; nonzero exit on any failure.
int cmd_selftest(const Options& opt, std::ostream& out, std::ostream& err);

} // namespace linkc

#endif
