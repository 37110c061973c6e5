#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "smallarr/rational.hpp"

namespace smallarr {

/// Dense matrix over the rationals, row major. Rows of a matrix are read as
/// spanning vectors of a subspace of Q^cols; the unique reduced row echelon
/// form with zero rows removed is the canonical representative of that
/// subspace, and every equality test below compares canonical forms.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix identity(std::size_t n);
    /// The 0 x cols matrix, representing the zero subspace of Q^cols.
    static Matrix empty(std::size_t cols) { return Matrix(0, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    void append_row(const std::vector<Rational>& v);
    bool is_zero_row(std::size_t r) const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form with zero rows removed; the result's row count is
/// the rank. Canonical for the row space: rref(P*A) == rref(A) for invertible P.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows of a stacked on top of rows of b. Requires equal column counts.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Canonical basis of span(rows(a)) + span(rows(b)).
Matrix row_space_sum(const Matrix& a, const Matrix& b);

/// Canonical basis of span(rows(a)) ∩ span(rows(b)), computed as the kernel
/// of the stacked dual system kernel(a), kernel(b).
Matrix row_space_intersect(const Matrix& a, const Matrix& b);

/// Canonical basis of the right null space { x : m x = 0 }.
/// rank(kernel(m)) == cols(m) - rank(m).
Matrix kernel(const Matrix& m);

/// Deterministic complement C of m inside l: C ⊆ l, C ∩ m = 0, C + m = l.
/// Chosen by extending m with rows of l's canonical basis, first fit by row
/// index. Requires span(m) ⊆ span(l); throws input_error otherwise.
Matrix complement_within(const Matrix& l, const Matrix& m);

bool row_space_contains(const Matrix& outer, const Matrix& inner);
bool same_row_space(const Matrix& a, const Matrix& b);

/// coeffs · m (a single row-space element).
std::vector<Rational> combine_rows(const Matrix& m, const std::vector<Rational>& coeffs);

/// Nonzero element of span(rows(l)) with seeded random coefficients whose
/// numerators and denominators are bounded by `bound`. Deterministic in
/// (l, seed). Throws input_error on the zero space.
std::vector<Rational> random_point(const Matrix& l, std::uint64_t seed, int bound = 100);

}  // namespace smallarr
