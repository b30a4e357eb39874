#include "bcrep/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "bcrep/error.hpp"

namespace bcrep {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (!a.same_shape(b)) {
        throw AlgebraError(ErrorKind::shape, std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                                                 std::to_string(a.cols()) + " vs " +
                                                 std::to_string(b.rows()) + "x" +
                                                 std::to_string(b.cols()));
    }
}

}  // namespace

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw AlgebraError(ErrorKind::parse, "malformed rational \"" + std::string(text) + "\"");
    }
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw AlgebraError(ErrorKind::parse, "zero denominator in \"" + std::string(text) + "\"");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::string format_rat(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw AlgebraError(ErrorKind::shape, "entry count " + std::to_string(data_.size()) +
                                                 " does not match " + std::to_string(rows) + "x" +
                                                 std::to_string(cols));
    }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
    std::vector<std::vector<Rat>> copy;
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(copy);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols_if_empty) {
    if (rows.empty()) return Matrix(0, cols_if_empty);
    const std::size_t cols = rows.front().size();
    std::vector<Rat> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw AlgebraError(ErrorKind::shape, "ragged matrix rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw AlgebraError(ErrorKind::shape, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rat& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw AlgebraError(ErrorKind::shape, "multiply: " + std::to_string(a.rows_) + "x" +
                                                 std::to_string(a.cols_) + " by " +
                                                 std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ',';
            out << format_rat((*this)(i, j));
        }
        out << ']';
    }
    out << ']';
    if (rows_ == 0 && cols_ != 0) out << "(0x" << cols_ << ')';
    return out.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw AlgebraError(ErrorKind::shape, "hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw AlgebraError(ErrorKind::shape, "vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

// ---------------------------------------------------------------------------
// Elimination

Echelon row_reduce(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    Rat factor;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && sgn(m(p, col)) == 0) ++p;
        if (p == rows) continue;
        if (p != row) {
            for (std::size_t j = col; j < cols; ++j) std::swap(m(p, j), m(row, j));
        }
        const Rat inv = 1 / m(row, col);
        support.clear();
        for (std::size_t j = col; j < cols; ++j) {
            if (sgn(m(row, j)) != 0) {
                m(row, j) *= inv;
                support.push_back(j);
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            factor = m(i, col);
            for (std::size_t j : support) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    const Echelon e = row_reduce(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, f);
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw AlgebraError(ErrorKind::shape, "solve: row mismatch");
    const std::size_t n = m.cols();
    const Echelon e = row_reduce(hstack(m, b));
    if (!e.pivots.empty() && e.pivots.back() >= n) return std::nullopt;
    Matrix x(n, b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
    return x;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
    if (!is_invertible(m)) throw AlgebraError(ErrorKind::invariant, "matrix is not invertible");
    return *solve(m, Matrix::identity(m.rows()));
}

Rat determinant(const Matrix& m) {
    if (!m.is_square()) throw AlgebraError(ErrorKind::shape, "determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && sgn(a(p, col)) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0) continue;
            const Rat f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// Splitting

Matrix split_block_form(std::size_t rows, std::size_t cols, std::size_t kernel_dim, std::size_t rank) {
    if (kernel_dim + rank != cols || rank > rows) throw AlgebraError(ErrorKind::shape, "split block form");
    Matrix b(rows, cols);
    for (std::size_t i = 0; i < rank; ++i) b(rows - rank + i, kernel_dim + i) = 1;
    return b;
}

ComplexSplitting split_complex(const Matrix& d) {
    const std::size_t m = d.rows();
    const std::size_t n = d.cols();
    const Echelon e = row_reduce(d);
    const std::size_t r = e.pivots.size();

    // Source basis: ker d, then the pivot coordinates (whose images span im d).
    Matrix sources = kernel_basis(d);
    Matrix image(m, r);
    for (std::size_t k = 0; k < r; ++k) {
        Matrix unit(n, 1);
        unit(e.pivots[k], 0) = 1;
        sources = hstack(sources, unit);
        for (std::size_t i = 0; i < m; ++i) image(i, k) = d(i, e.pivots[k]);
    }

    // Target basis: a complement of im d from the standard basis, then im d.
    const Echelon ext = row_reduce(hstack(image, Matrix::identity(m)));
    Matrix targets(m, 0);
    for (std::size_t p : ext.pivots) {
        if (p < r) continue;
        Matrix unit(m, 1);
        unit(p - r, 0) = 1;
        targets = hstack(targets, unit);
    }
    targets = hstack(targets, image);

    ComplexSplitting s;
    s.kernel_dim = n - r;
    s.rank = r;
    s.p1_inverse = std::move(sources);
    s.p0_inverse = std::move(targets);
    s.p1 = inverse(s.p1_inverse);
    s.p0 = inverse(s.p0_inverse);
    return s;
}

}  // namespace bcrep
