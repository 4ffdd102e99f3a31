#ifndef LINKC_INTEGER_MATRIX_HPP
#define LINKC_INTEGER_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace linkc {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over arbitrary-precision integers. Everything downstream that
// feeds a determinant or a Smith normal form goes through this type, so no
// invariant computation ever touches floating point or fixed-width overflow.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntegerMatrix& other) const = default;

    // Copy with row r and column c removed.
    IntegerMatrix minor_matrix(std::size_t r, std::size_t c) const;

    // Row-major text form: "rows cols" header line, then one line per row.
    std::string to_text() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Exact determinant (square input; the 0x0 matrix has determinant 1).
// Fraction-free Bareiss elimination, so intermediate values stay integral.
Int determinant_exact(const IntegerMatrix& m);

// Diagonal of the Smith normal form: nonnegative elementary divisors
// d_1 | d_2 | ... | d_k (k = min(rows, cols)), trailing zeros for the
// rank-deficient part. Input is not modified.
std::vector<Int> smith_normal_form(const IntegerMatrix& m);

// Product of the nonzero Smith divisors; 1 for an empty or zero matrix.
// For a presentation matrix of an abelian group this is the torsion order.
Int torsion_order(const IntegerMatrix& m);

} // namespace linkc

#endif
