#pragma once

#include "linkc/diagram.hpp"
#include "linkc/integer_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

// Certified integer bounds on the spine complexity of a link, assembled from
// diagram data and exact invariants. Every threshold that involves a
// logarithm is computed by big-integer power comparison; the only non-integer
// input anywhere is an externally supplied hyperbolic volume, which is parsed
// from decimal text into an exact rational.

namespace linkc {

using Rational = boost::multiprecision::cpp_rational;

enum class BoundKind { lower, upper };

// certified: holds unconditionally for the input as given.
// conditional: holds under a caller-asserted hypothesis (primality or
//   non-splitness), which this library does not verify.
// asymptotic: stated only for sufficiently large family parameters.
enum class BoundStatus { certified, conditional, asymptotic };

const char* to_string(BoundKind k);
const char* to_string(BoundStatus s);

// One bound with its origin. `tag` is a stable identifier used in reports
// and the JSON schema; `note` carries the human-readable derivation.
struct Bound {
    std::string tag;
    Int value = 0;
    BoundKind kind = BoundKind::lower;
    BoundStatus status = BoundStatus::certified;
    std::string note;
};

// The certified window for the complexity of one pair. `upper` is empty when
// no upper bound is known. `provenance` lists the bounds that entered.
struct BoundInterval {
    Int lower = 0;
    std::optional<Int> upper;
    std::vector<std::string> provenance;
};

enum class CrnStatus {
    exact_reduced_alternating, // diagram is reduced and alternating, so its
                               // crossing count realizes the crossing number
    exact_closed_form,         // crossing number from a proven formula
    upper_only                 // crossing count of some diagram, nothing more
};

const char* to_string(CrnStatus s);

struct CrossingCertificate {
    long long value = 0;
    CrnStatus status = CrnStatus::upper_only;

    bool exact() const { return status != CrnStatus::upper_only; }
};

// Crossing count of `d`, marked exact when the diagram is reduced and
// alternating (such diagrams achieve the crossing number).
CrossingCertificate crn_certificate(const LinkDiagram& d);

// Least k with 5^(k+1) > x, i.e. the strongest integer consequence of
// "c > log5(x) - 1". For x = 0 the inequality says nothing; the result is 0
// with `vacuous` set.
struct StrictLog5 {
    long long value = 0;
    bool vacuous = false;
};

StrictLog5 strict_log5_lower(const Int& x);

// c <= 4*crn + 2*components - 1, valid for every link in the 3-sphere. When
// the certificate is not exact the result is still a correct upper bound,
// computed from the larger crossing count; the note says so.
Bound diagram_upper_bound(const CrossingCertificate& crn, long long components);

// c(T(m,q)) <= 2*(sum of partial quotients of m/q) - 3 for coprime m > q >= 2.
Bound torus_upper_bound(long long m, long long q);

// c > log5 |H1 of the double branched cover| - 1, via the determinant for
// knots and the torsion order of the Goeritz matrix for links. Requires the
// link to be prime and non-split, which the caller asserts via the flag;
// without it the bound is reported as conditional.
Bound det_lower_bound(const LinkDiagram& d, bool prime_nonsplit);

// c > log5(crn) - 1 for prime alternating knots. Requires an exact
// reduced-alternating certificate; primality is again a caller assertion.
Bound alternating_crn_lower_bound(const CrossingCertificate& crn, bool prime);

// Exact rational from decimal text such as "2.02988", "0.5", or "1e-4".
Rational parse_decimal(const std::string& text);

// The printed truncation of the regular ideal tetrahedron volume, used as an
// exact rational so that boundary cases are decidable.
const Rational& v3_volume();

// Integer consequences of "c > vol / v3" where vol is known only to within
// `tolerance`. If vol / v3 is exactly an integer N, strictness gives N + 1
// and `boundary` is set. Otherwise the bound is computed from the worst case
// vol - tolerance; `ambiguous` is set when an integer lies within tolerance
// of vol / v3, meaning a more precise volume could improve the bound.
struct VolumeAnalysis {
    long long value = 0;
    bool boundary = false;
    bool ambiguous = false;
};

VolumeAnalysis volume_floor_analysis(const Rational& vol, const Rational& tolerance);

// Bound wrapper around volume_floor_analysis; `source` records where the
// volume came from and is copied into the note.
Bound volume_lower_bound(const std::string& volume_text,
                         const std::string& tolerance_text,
                         const std::string& source);

// n <= c(Th_n), stated for sufficiently large n; always tagged asymptotic.
Bound turks_head_lower_bound(long long n);

// max of usable lowers, min of usable uppers. Asymptotic and conditional
// bounds stay in provenance but enter the interval only when the matching
// flag is set. A certified lower above a certified upper is an internal
// error: the theorems cannot contradict each other.
BoundInterval combine(const std::vector<Bound>& bounds,
                      bool include_asymptotic = false,
                      bool include_conditional = false);

// Interval arithmetic for the two connected sums. Complexity is exactly
// additive under 0-sums. Under 2-sums it is additive only when both pairs
// are free of 1-spheres: otherwise no lower bound survives (a knot 2-summed
// with D collapses to D) and only the superadditive upper remains.
BoundInterval sum_bounds_0(const BoundInterval& a, const BoundInterval& b);
BoundInterval sum_bounds_2(const BoundInterval& a, bool one_sphere_free_a,
                           const BoundInterval& b, bool one_sphere_free_b);

// Everything the closed forms say about the pair (S^3, T(m,q)), without
// building a diagram: exact crossing number, determinant where a formula
// exists, and the combined interval. Torus links are prime and non-split,
// so the determinant lower bound enters as certified. Parameters are
// symmetric and get normalized to m >= q; q = 1 is the unknot.
struct TorusFacts {
    long long m = 0, q = 0;
    long long components = 1;
    bool unknot = false;     // q = 1 after normalization
    bool torus_link = false; // gcd > 1: crossing formula applied to a link
    CrossingCertificate crn;
    std::optional<Int> det;
    std::vector<Bound> bounds;
    BoundInterval interval;
};

TorusFacts torus_pair_facts(long long m, long long q);

} // namespace linkc
