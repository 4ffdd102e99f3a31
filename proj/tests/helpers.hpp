#ifndef LINKC_TESTS_HELPERS_HPP
#define LINKC_TESTS_HELPERS_HPP

// Test-side oracles and random generators shared by the unit tests and the
// acceptance harness. Everything here is deliberately naive: the point is to
// check the library against independent computations, so nothing in this
// file may call back into the routines it is used to test.

#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "linkc/braid.hpp"
#include "linkc/roots.hpp"

namespace testers {

// Component count of a braid closure via the strand permutation: track which
// strand ends at each position, then count the cycles of that permutation.
inline int closure_components_oracle(const linkc::BraidWord& b) {
    std::vector<int> at(static_cast<std::size_t>(b.strands));
    std::iota(at.begin(), at.end(), 0);
    for (int letter : b.letters) {
        int i = std::abs(letter) - 1;
        std::swap(at[static_cast<std::size_t>(i)],
                  at[static_cast<std::size_t>(i) + 1]);
    }
    std::vector<bool> seen(at.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < at.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(at[t]))
            seen[t] = true;
    }
    return cycles;
}

// Plain Euclidean continued fraction of num/den, quotients only.
inline std::vector<long long> euclid_oracle(long long num, long long den) {
    std::vector<long long> qs;
    while (den != 0) {
        qs.push_back(num / den);
        long long r = num % den;
        num = den;
        den = r;
    }
    return qs;
}

// Largest k with 5^k <= x, by repeated multiplication in long long. Only
// sound while 5^(k+1) stays in range, which covers every value the tests
// feed it.
inline long long log5_oracle(long long x) {
    long long k = 0;
    long long power = 5;
    while (power <= x) {
        ++k;
        power *= 5;
    }
    return k;
}

inline linkc::BraidWord random_braid(std::mt19937& rng) {
    linkc::BraidWord b;
    b.strands = std::uniform_int_distribution<int>(2, 5)(rng);
    int len = std::uniform_int_distribution<int>(0, 12)(rng);
    std::uniform_int_distribution<int> index(1, b.strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int k = 0; k < len; ++k)
        b.letters.push_back(index(rng) * (sign(rng) ? 1 : -1));
    return b;
}

inline linkc::BoundInterval random_interval(std::mt19937& rng) {
    linkc::BoundInterval c;
    c.lower = std::uniform_int_distribution<int>(0, 5)(rng);
    if (std::uniform_int_distribution<int>(0, 3)(rng) != 0)
        c.upper = c.lower + std::uniform_int_distribution<int>(0, 6)(rng);
    return c;
}

inline linkc::Atom random_atom(std::mt19937& rng) {
    using linkc::Atom;
    using linkc::ExceptionalPair;
    switch (std::uniform_int_distribution<int>(0, 8)(rng)) {
    case 0: return Atom::trivial_0();
    case 1: return Atom::trivial_2();
    case 2: return Atom::d();
    case 3: return Atom::handle_pair();
    case 4: {
        static const ExceptionalPair all[] = {
            ExceptionalPair::s3_empty,  ExceptionalPair::s3_core,
            ExceptionalPair::p3_empty,  ExceptionalPair::p3_core,
            ExceptionalPair::l31_empty, ExceptionalPair::l31_core,
        };
        return Atom::exceptional_pair(
            all[std::uniform_int_distribution<int>(0, 5)(rng)]);
    }
    case 5:
        return Atom::xn_pair_atom(
            std::uniform_int_distribution<long long>(1, 40)(rng));
    case 6:
        return Atom::torus(std::uniform_int_distribution<long long>(2, 7)(rng),
                           std::uniform_int_distribution<long long>(1, 7)(rng));
    case 7:
        return Atom::prime(
            "K" + std::to_string(std::uniform_int_distribution<int>(0, 99)(rng)),
            random_interval(rng),
            std::uniform_int_distribution<long long>(1, 3)(rng));
    default:
        return Atom::opaque_pair(
            "W" + std::to_string(std::uniform_int_distribution<int>(0, 99)(rng)),
            random_interval(rng),
            std::uniform_int_distribution<long long>(0, 3)(rng));
    }
}

inline linkc::PairExpression random_expression(std::mt19937& rng,
                                               int max_atoms = 5) {
    linkc::PairExpression e;
    int n = std::uniform_int_distribution<int>(0, max_atoms)(rng);
    for (int k = 0; k < n; ++k) e.atoms.push_back(random_atom(rng));
    return e;
}

// Interval equality that treats provenance as commentary.
inline bool same_window(const linkc::BoundInterval& a,
                        const linkc::BoundInterval& b) {
    if (a.lower != b.lower) return false;
    if (a.upper.has_value() != b.upper.has_value()) return false;
    return !a.upper || *a.upper == *b.upper;
}

} // namespace testers

#endif
