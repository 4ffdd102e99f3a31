#pragma once

#include "linkc/bounds.hpp"

#include <string>
#include <utility>
#include <vector>

// Symbolic calculus of link-pairs. A pair expression is a formal 0-connected
// sum of atoms; 2-sums are evaluated eagerly through the case analysis below
// and leave their trace in the structure log. Complexity is exactly additive
// over the atoms of an expression, so every rewrite here either preserves
// the complexity interval or replaces it by a proven weaker one (the mixed
// 2-sum cases, where no lower bound can exist).

namespace linkc {

enum class AtomKind {
    prime,      // a declared (0,1,2)-irreducible pair with a complexity interval
    trivial0,   // (S^3, empty), complexity 0
    trivial2,   // (S^3, unknot), complexity 0
    d_pair,     // D = (S^2 x S^1, {*} x S^1), complexity 0, contains a 1-sphere
    handle,     // (S^2 x S^1, empty), complexity 0, trivial root
    exceptional,// one of the six complexity-0 irreducible pairs
    xn,         // the pair X_n in S^2 x S^1 whose root is (S^3, T(2,n))
    torus_pair, // (S^3, T(m,q))
    opaque      // pair of known complexity interval but unknown decomposition
};

const char* to_string(AtomKind k);

// The six (0,1,2)-irreducible pairs of complexity 0: manifold S^3, P^3, or
// L(3,1), link empty or the core of a Heegaard torus.
enum class ExceptionalPair {
    s3_empty, s3_core, p3_empty, p3_core, l31_empty, l31_core
};

const char* to_string(ExceptionalPair e);

struct Atom {
    AtomKind kind = AtomKind::trivial0;
    std::string label;           // prime and opaque atoms
    ExceptionalPair exceptional = ExceptionalPair::s3_empty;
    long long n = 0;             // xn parameter
    long long m = 0, q = 0;      // torus parameters
    long long components = 0;    // components of the link part
    bool in_s3 = false;          // manifold part is the 3-sphere
    BoundInterval complexity;    // exact when lower == upper

    bool complexity_exact() const;
    bool has_link() const { return components > 0; }

    static Atom prime(std::string label, BoundInterval complexity,
                      long long components = 1, bool in_s3 = true);
    static Atom prime_exact(std::string label, Int complexity,
                            long long components = 1, bool in_s3 = true);
    static Atom prime_unknown(std::string label, long long components = 1,
                              bool in_s3 = true);
    static Atom trivial_0();
    static Atom trivial_2();
    static Atom d();
    static Atom handle_pair();
    static Atom exceptional_pair(ExceptionalPair which);
    static Atom xn_pair_atom(long long n);
    static Atom torus(long long m, long long q);
    static Atom opaque_pair(std::string label, BoundInterval complexity,
                            long long components);
};

// Stable text form of one atom; doubles as the multiset key.
std::string atom_key(const Atom& a);

struct PairExpression {
    std::vector<Atom> atoms;      // multiset; order carries no meaning
    std::vector<std::string> log; // applied sums and rewrites
};

// Multiset equality of atoms, ignoring logs and order.
bool same_expression(const PairExpression& a, const PairExpression& b);

// True when some atom may contain a 1-sphere: D certainly does, and opaque
// atoms might. Every other atom kind provably cannot (their manifolds are
// irreducible, their links empty, or the X_n classification rules it out).
bool may_contain_1_spheres(const PairExpression& e);

// 0-connected sum: multiset union, complexity exactly additive.
PairExpression sum0(const PairExpression& a, const PairExpression& b);

// 2-connected sum along the links of atoms `target_a` in `a` and `target_b`
// in `b` (indices into the atoms vectors; both must have nonempty link).
// Cases, in order:
//   both targets D                -> opaque "D#2D" of complexity exactly 0;
//   one target D, other an S^3    -> the knot is absorbed: the D atom stays,
//     knot (prime, trivial2,         the knot atom is discarded;
//     or S^3 Heegaard core)
//   both targets prime and no     -> fused prime atom, complexity exactly
//     atom on either side may        the interval sum;
//     contain a 1-sphere
//   anything else                 -> opaque atom with interval
//                                    [0, sum of the targets' uppers]:
//                                    no lower bound survives.
// Non-target atoms of both expressions ride along unchanged.
PairExpression sum2(const PairExpression& a, std::size_t target_a,
                    const PairExpression& b, std::size_t target_b);

// Root-preserving cleanup: drop trivial pairs and handles, rewrite Xn(n) and
// TorusPair(m,q) to Prime("T(m,q)") atoms carrying the torus interval.
// Idempotent; preserves the complexity interval of the expression.
PairExpression normalize(const PairExpression& e);

// Split e into (expression without D atoms, number of D atoms removed).
std::pair<PairExpression, long long> extract_d_factors(const PairExpression& e);

// Sum of the atoms' complexity intervals. Empty expression -> exactly 0.
BoundInterval complexity(const PairExpression& e);

// Established facts about the family X_n, n >= 1.
struct XnFacts {
    long long n = 0;
    Atom root;                           // Prime("T(2,n)")
    long long root_components = 1;       // 1 for odd n, 2 for even n
    bool distinct_from_all_other_xm = true;
    bool zero_one_irreducible = false;           // stated for even n
    bool has_essential_separating_2sphere = false; // odd n >= 3
    bool link_is_knot = true;
    bool degenerate = false;             // n = 1: the root link is an unknot
};

XnFacts xn_facts(long long n);

// Expression text. Atoms:
//   Prime(label), Prime(label, c), Prime(label, ?), Prime(label, [lo,hi]),
//     optionally with a components count: Prime(label, c, components)
//   Trivial0  Trivial2  D  Handle
//   Exceptional(S3 | S3-core | P3 | P3-core | L31 | L31-core)
//   Xn(n)  T(m,q)
//   Opaque(label, c | ? | [lo,hi], components)
// Terms combine with `+` (0-sum) and `#2` (2-sum), both left-associative;
// `#2[i,j]` picks the 0-based target atoms on each side, default is the
// first link-bearing atom. A prefix `k*` repeats an atom k times. Labels may
// be double-quoted; unquoted labels run to the next `,` or `)`.
PairExpression parse_expression(const std::string& text);
std::string serialize_expression(const PairExpression& e);

} // namespace linkc
