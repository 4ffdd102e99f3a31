#include "linkc/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace linkc {

IntegerMatrix IntegerMatrix::minor_matrix(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("minor_matrix: index out of range");
    IntegerMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == c) continue;
            out.at(oi, oj) = at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

std::string IntegerMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

Int determinant_exact(const IntegerMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant_exact: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;

    IntegerMatrix a = m;
    Int prev = 1; // pivot of the previous step; divisions below are exact
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

// Position of a nonzero entry of minimal absolute value in the submatrix
// starting at (t, t); false if that submatrix is all zeros.
bool find_pivot(const IntegerMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Int v = abs(a.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

std::vector<Int> smith_normal_form(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> divisors(n, 0);

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pr = t, pc = t;
        if (!find_pivot(a, t, pr, pc)) break; // remaining block is zero

        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(t, j), a.at(pr, j));
        for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, t), a.at(i, pc));

        // Clear row and column t; a failed exact division leaves a smaller
        // remainder behind, so the minimal-pivot loop terminates.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                for (std::size_t j = t; j < a.cols(); ++j)
                    a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) {
                    for (std::size_t j = t; j < a.cols(); ++j)
                        std::swap(a.at(t, j), a.at(i, j));
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                for (std::size_t i = t; i < a.rows(); ++i)
                    a.at(i, j) -= q * a.at(i, t);
                if (a.at(t, j) != 0) {
                    for (std::size_t i = t; i < a.rows(); ++i)
                        std::swap(a.at(i, t), a.at(i, j));
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility fix-up: fold any entry the pivot does not
                // divide into column t and start over.
                for (std::size_t i = t + 1; i < a.rows() && clean; ++i)
                    for (std::size_t j = t + 1; j < a.cols() && clean; ++j)
                        if (a.at(i, j) % a.at(t, t) != 0) {
                            for (std::size_t jj = t; jj < a.cols(); ++jj)
                                a.at(t, jj) += a.at(i, jj);
                            clean = false;
                        }
            }
        }
        divisors[t] = abs(a.at(t, t));
    }
    return divisors;
}

Int torsion_order(const IntegerMatrix& m) {
    Int out = 1;
    for (const Int& d : smith_normal_form(m))
        if (d != 0) out *= d;
    return out;
}

} // namespace linkc
