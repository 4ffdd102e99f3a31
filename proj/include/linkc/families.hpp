#ifndef LINKC_FAMILIES_HPP
#define LINKC_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "linkc/bounds.hpp"
#include "linkc/braid.hpp"
#include "linkc/diagram.hpp"
#include "linkc/roots.hpp"

namespace linkc {

// (sigma_1 ... sigma_{m-1})^q on m strands. The closure is the (m,q) torus
// link, with gcd(m,q) components. Requires m >= 2, q >= 1.
BraidWord torus_braid(long long m, long long q);

// Consecutive Fibonacci parameters (f_n, f_{n-1}) for the torus family,
// f_0 = f_1 = 1. The closed forms work for any n >= 3; `valid` follows the
// sharper hypothesis n >= 4 and n mod 3 in {0, 2}, which is exactly when one
// of the two numbers is even and the determinant route applies.
struct FibTorus {
    long long n = 0;
    long long m = 0, q = 0; // f_n, f_{n-1}
    bool valid = false;
    std::string skip_reason; // empty when valid
};
FibTorus fib_torus(long long n); // n >= 2

// (sigma_1 sigma_2^{-1})^n on 3 strands. The closure is the n-th Turk's head
// weave: reduced, alternating, 2n crossings, 3 components when 3 | n and a
// knot otherwise. Requires n >= 2.
BraidWord turks_head(long long n);

// Reduced alternating diagram of the n-th twist knot: a twist region of n+1
// crossings closed against a clasp of 2, so n+3 crossings in all.
// determinant = 2n+3 and the twist number is 2 for every n. Requires n >= 1.
//
// Indexing: the family starts at the figure-eight, pinned by
// determinant(twist_knot(1)) = 5 = determinant of the Th_2 closure. Starting
// at the trefoil instead is impossible on this family's terms: the trefoil's
// only reduced alternating diagram has a single twist region, not two.
LinkDiagram twist_knot(long long n);

// The same knot drawn the usual non-alternating way: one extra half twist in
// the region compensated by a clasp of the opposite hand (the tangle
// fractions (n+1) + 1/2 and (n+2) - 1/2 agree). n+4 crossings, reduced,
// not alternating, same determinant as twist_knot(n). Requires n >= 1.
LinkDiagram twist_knot_usual(long long n);

// The pair X_n in S^2 x S^1 as a one-atom expression ready for the rewrite
// engine. Requires n >= 1.
PairExpression xn_pair(long long n);

// A parsed family spec: torus(3,2), fib(6), th(4), twist(5), xn(7).
struct FamilySpec {
    enum class Kind { torus, fib, th, twist, xn };
    Kind kind = Kind::torus;
    std::vector<long long> args;
    std::string text; // normalized echo, e.g. "th(4)"
};

// Recognizer for family spec strings. Returns nullopt when the text does not
// have the name(args) shape at all, so callers can fall back to PD or braid
// input. A recognized name with bad arity or an out-of-range parameter
// throws parse_error instead of falling through.
std::optional<FamilySpec> parse_family_spec(const std::string& text);

// Everything the reporting layer needs about one family member. Exactly one
// payload is set: closed-form torus facts (torus, fib), a diagram (th,
// twist), or a pair expression (xn). A well-formed but theorem-invalid
// member (fib with n = 1 mod 3) comes back with valid = false and a skip
// reason; its closed-form payload is still filled for callers that want it.
struct FamilyFacts {
    FamilySpec spec;
    bool valid = true;
    std::string skip_reason;

    std::optional<TorusFacts> torus;
    std::optional<LinkDiagram> diagram;
    std::optional<PairExpression> pair;

    // Torus links, Turk's head weaves and twist knots are classically prime
    // and non-split, so determinant lower bounds on them are certified
    // rather than conditional.
    bool asserted_prime_nonsplit = false;

    // th(n) only: parameter for the asymptotic half-crossing lower bound.
    std::optional<long long> turks_head_param;

    // fib(n) only: parameters echoed for the closed-form columns.
    std::optional<FibTorus> fib;
};
FamilyFacts family_facts(const FamilySpec& spec);

} // namespace linkc

#endif
