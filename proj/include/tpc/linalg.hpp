#pragma once

// Dense exact linear algebra over the prime fields GF(2), GF(3), GF(5).
//
// Matrices are row-major and carry their modulus. Vectors are 1 x n (row) or
// n x 1 (column) matrices; most of the module code works with row spaces, so
// helpers for row-space bookkeeping live here too.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tpc {

using Scalar = std::uint8_t;

class Field {
public:
    /// Throws std::invalid_argument unless p is 2, 3 or 5.
    explicit Field(int p);

    int p() const { return p_; }

    Scalar reduce(long long v) const
    {
        long long r = v % p_;
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>((a + b) % p_); }
    Scalar sub(Scalar a, Scalar b) const { return static_cast<Scalar>((a + p_ - b) % p_); }
    Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>((a * b) % p_); }
    Scalar neg(Scalar a) const { return static_cast<Scalar>((p_ - a) % p_); }
    Scalar inv(Scalar a) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    int p_;
};

class Matrix {
public:
    Matrix() : Matrix(0, 0, Field(2)) {}
    Matrix(std::size_t rows, std::size_t cols, Field field);

    static Matrix zero(std::size_t rows, std::size_t cols, Field field) { return {rows, cols, field}; }
    static Matrix identity(std::size_t n, Field field);
    /// Builds a matrix from nested rows; entries are reduced mod p.
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows, Field field);
    /// Standard basis row vector e_i of length n.
    static Matrix unit_row(std::size_t n, std::size_t i, Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = field_.reduce(v); }

    const std::vector<Scalar>& data() const { return data_; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix row(std::size_t r) const;
    Matrix col(std::size_t c) const;
    Matrix transpose() const;
    Matrix rows_subset(const std::vector<std::size_t>& which) const;
    Matrix cols_subset(const std::vector<std::size_t>& which) const;
    Matrix scaled(Scalar s) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    Field field_;
    std::vector<Scalar> data_;
};

/// Vertical concatenation. Both blocks must have equal column counts
/// (a 0 x 0 block is accepted as neutral).
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
/// Block diagonal sum.
Matrix block_diag(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning rows top-to-bottom within the leftmost unfinished column.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with a * x = b, or nullopt if the system is inconsistent.
/// Throws std::invalid_argument if a.rows() != b.rows() or b is not a column.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Basis of {x : a * x = 0} as column vectors; size = cols - rank.
std::vector<Matrix> nullspace_basis(const Matrix& a);

/// Rows forming a basis of {v : v * a = 0}, stacked as a matrix (RREF).
Matrix left_kernel(const Matrix& a);

/// The nonzero rows of rref(m): a canonical basis of the row space.
Matrix row_basis(const Matrix& m);
/// True iff every row of `sub` lies in the row space of `space`.
bool row_space_contains(const Matrix& space, const Matrix& sub);
Matrix row_space_sum(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace tpc
