#ifndef POLYINV_INTMATRIX_HPP
#define POLYINV_INTMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "polyinv/int.hpp"

namespace polyinv {

// Row-major integer matrix.
class IntMatrix {
 public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);

 private:
    size_t rows_, cols_;
    std::vector<Int> e_;
};

// Fraction-free (Bareiss) determinant; square matrices only.
Int determinant(IntMatrix a);

struct HermiteResult {
    IntMatrix h;  // A * U = H, column-style Hermite form
    IntMatrix u;  // unimodular
};

// Column-style Hermite normal form: pivots positive, zero entries below each
// pivot, entries to the right of a pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& a);

struct SmithResult {
    IntMatrix s;  // U * A * V = S, diagonal, each entry divides the next
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix v;  // unimodular, cols x cols
};

SmithResult smith_normal_form(const IntMatrix& a);

// Minimal r >= 1 with r*v in the integer column lattice of A.
// Errors with "infeasible: raise degree bound" when v is not even in the
// rational column span.
Int minimal_multiplier(const IntMatrix& a, const std::vector<Int>& v);

// One integer solution x of A x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// Unique solution of a square nonsingular system when it is integral.
// Rational Gaussian elimination; nullopt when singular, non-integral, or
// inconsistent. Cheap where Smith-based solving would swell.
std::optional<std::vector<Int>> solve_square_integer(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace polyinv

#endif
