#ifndef LINKC_INVARIANTS_HPP
#define LINKC_INVARIANTS_HPP

#include <vector>

#include "linkc/diagram.hpp"
#include "linkc/integer_matrix.hpp"

namespace linkc {

// Checkerboard color classes of the faces. The white class is chosen
// deterministically: the larger class, ties broken toward the class
// containing face 0.
enum class Color { white, black };

// Proper two-coloring of the faces (faces sharing an edge get different
// colors). Always exists for a 4-valent planar diagram; failure to color is
// an internal error, not an input property.
std::vector<Color> checkerboard_coloring(const LinkDiagram& d,
                                         const std::vector<Face>& fs);

// Goeritz form of the chosen color class, one region's row and column
// already deleted. Crossing types follow one fixed picture: looking along
// the under-strand axis (slots 0/2 vertical),
//
//        NW | NE       eta = +1 when the chosen-color corners are NE/SW,
//        ---+---       eta = -1 when they are SE/NW.
//        SW | SE
//
// Off-diagonal entries are -sum(eta) over crossings where regions i and j
// hold the two chosen-color corners; diagonals make row sums zero. Only the
// absolute determinant is consumed downstream, so the convention choice is
// free but globally consistent.
IntegerMatrix goeritz_matrix(const LinkDiagram& d, Color color);

// Same form before the row/column deletion (row sums are all zero).
IntegerMatrix goeritz_matrix_full(const LinkDiagram& d, Color color);

// Link determinant through the Goeritz route: |det| of the reduced Goeritz
// matrix. A diagram presented as split (disconnected 4-valent graph, or
// crossing-free unknots next to anything else) has infinite first homology
// of the double branched cover and returns 0. The crossing-free unknot
// returns 1.
Int determinant(const LinkDiagram& d);

// Independent cross-check of determinant(d): the Wirtinger crossing/arc
// relation matrix evaluated at -1 (each crossing row: +2 on the over-arc,
// -1 on each under-arc), one row and column deleted, absolute determinant.
// Requires a connected presentation; a component that never passes under
// lies above the rest, so the link splits and the value is 0.
Int alexander_minus_one_oracle(const LinkDiagram& d);

// Crossing number of the torus link T(m,q): min(m(q-1), q(m-1)).
// Non-coprime parameters give a torus link rather than a knot; the formula
// is applied unchanged.
long long torus_crossing_number(long long m, long long q);

// Alexander value |A(-1)| of the torus knot T(m,q) in closed form: the odd
// member of {m, q}. Requires m,q >= 2 coprime with exactly one even; both
// odd has no closed-form value on this route and is rejected.
Int torus_det_minus_one(long long m, long long q);

// Continued-fraction quotients of num/den (num > den >= 1, coprime) by the
// Euclidean algorithm; the final quotient is >= 2 except for den = 1.
std::vector<long long> continued_fraction(long long num, long long den);

// Fibonacci numbers with f_0 = f_1 = 1.
Int fibonacci(int n);

} // namespace linkc

#endif
