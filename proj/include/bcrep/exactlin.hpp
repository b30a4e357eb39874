#ifndef BCREP_EXACTLIN_HPP
#define BCREP_EXACTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcrep {

/// Exact rational; GMP keeps it canonical (positive denominator, reduced, zero is 0/1).
using Rat = mpq_class;

/// Parses "p/q" or "p". Rejects zero denominators and trailing garbage.
Rat parse_rat(std::string_view text);

/// Inverse of parse_rat: "p" when the denominator is 1, else "p/q".
std::string format_rat(const Rat& value);

/**
 * Dense row-major matrix over Q.
 *
 * 0 x n and n x 0 matrices are ordinary values; they are the morphisms to and
 * from the zero space.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    /// Rows must have equal length; an empty list gives the 0 x 0 matrix.
    static Matrix from_rows(std::initializer_list<std::initializer_list<Rat>> rows);
    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols_if_empty = 0);
    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix scalar(const Rat& value) { return Matrix(1, 1, {value}); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const;
    bool same_shape(const Matrix& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const std::vector<Rat>& entries() const noexcept { return data_; }

    Matrix transpose() const;
    Matrix column(std::size_t j) const;
    /// Submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rat& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= Rat(-1); }
    friend Matrix operator*(Matrix a, const Rat& s) { return a *= s; }
    friend Matrix operator*(const Rat& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix& other) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block diagonal a (+) b.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Reduced row echelon form together with its pivot columns (first nonzero pivot per column).
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space: one column per free variable, in
/// increasing order of the free column, with a 1 in that coordinate.
Matrix kernel_basis(const Matrix& m);

/// Some X with m X = b, or nullopt when inconsistent. Free variables are set to 0.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);
Rat determinant(const Matrix& m);

/**
 * Splitting of d : V1 -> V0 (cols = dim V1, rows = dim V0).
 *
 * p0 * d * p1^{-1} == split_block_form(d.rows(), d.cols(), kernel_dim, rank):
 * the first kernel_dim source coordinates span ker d, the last rank source
 * coordinates map identically onto the last rank target coordinates.
 */
struct ComplexSplitting {
    Matrix p1;
    Matrix p0;
    Matrix p1_inverse;
    Matrix p0_inverse;
    std::size_t kernel_dim = 0;
    std::size_t rank = 0;
};

ComplexSplitting split_complex(const Matrix& d);
Matrix split_block_form(std::size_t rows, std::size_t cols, std::size_t kernel_dim, std::size_t rank);

}  // namespace bcrep

#endif
