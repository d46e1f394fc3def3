#include "tpc/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace tpc {

Field::Field(int p) : p_(p)
{
    if (p != 2 && p != 3 && p != 5) {
        throw std::invalid_argument("unsupported field characteristic " + std::to_string(p) +
                                    " (expected 2, 3 or 5)");
    }
}

Scalar Field::inv(Scalar a) const
{
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    for (int b = 1; b < p_; ++b) {
        if ((a * b) % p_ == 1) return static_cast<Scalar>(b);
    }
    throw std::logic_error("unreachable: no inverse mod prime");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(std::size_t n, Field field)
{
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, Field field)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::unit_row(std::size_t n, std::size_t i, Field field)
{
    Matrix m(1, n, field);
    m(0, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (Scalar s : data_) {
        if (s != 0) return false;
    }
    return true;
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

Matrix Matrix::row(std::size_t r) const
{
    Matrix m(1, cols_, field_);
    for (std::size_t j = 0; j < cols_; ++j) m(0, j) = (*this)(r, j);
    return m;
}

Matrix Matrix::col(std::size_t c) const
{
    Matrix m(rows_, 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, c);
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    }
    return m;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& which) const
{
    Matrix m(which.size(), cols_, field_);
    for (std::size_t i = 0; i < which.size(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(which[i], j);
    }
    return m;
}

Matrix Matrix::cols_subset(const std::vector<std::size_t>& which) const
{
    Matrix m(rows_, which.size(), field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < which.size(); ++j) m(i, j) = (*this)(i, which[j]);
    }
    return m;
}

Matrix Matrix::scaled(Scalar s) const
{
    Matrix m = *this;
    for (Scalar& v : m.data_) v = field_.mul(v, s);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    const int p = a.field_.p();
    Matrix m(a.rows_, b.cols_, a.field_);
    std::vector<int> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const int aik = a(i, k);
            if (aik == 0) continue;
            const Scalar* brow = &b.data_[k * b.cols_];
            for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += aik * brow[j];
        }
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = static_cast<Scalar>(acc[j] % p);
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return m;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ',';
            out << static_cast<int>((*this)(i, j));
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

Matrix vstack(const Matrix& top, const Matrix& bottom)
{
    if (top.rows() == 0 && top.cols() == 0) return bottom;
    if (bottom.rows() == 0 && bottom.cols() == 0) return top;
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix m(top.rows() + bottom.rows(), top.cols(), top.field());
    for (std::size_t i = 0; i < top.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
    }
    for (std::size_t i = 0; i < bottom.rows(); ++i) {
        for (std::size_t j = 0; j < bottom.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
    }
    return m;
}

Matrix hstack(const Matrix& left, const Matrix& right)
{
    return vstack(left.transpose(), right.transpose()).transpose();
}

Matrix block_diag(const Matrix& a, const Matrix& b)
{
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    }
    return m;
}

RrefResult rref(const Matrix& m)
{
    RrefResult out{m, 0, {}};
    Matrix& r = out.reduced;
    const Field& f = m.field();
    const int p = f.p();
    const std::size_t rows = r.rows();
    const std::size_t cols = r.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t piv = lead;
        while (piv < rows && r(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != lead) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(r(piv, j), r(lead, j));
        }
        const Scalar s = f.inv(r(lead, c));
        if (s != 1) {
            for (std::size_t j = c; j < cols; ++j) r(lead, j) = f.mul(r(lead, j), s);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead) continue;
            const int factor = r(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                r(i, j) = static_cast<Scalar>((r(i, j) + (p - factor) * r(lead, j)) % p);
            }
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = lead;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b)
{
    if (b.cols() != 1) throw std::invalid_argument("solve_linear: right-hand side must be a column");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b(i, 0);
    }
    const RrefResult red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
    Matrix x(n, 1, a.field());
    for (std::size_t r = 0; r < red.rank; ++r) x(red.pivots[r], 0) = red.reduced(r, n);
    return x;
}

std::vector<Matrix> nullspace_basis(const Matrix& a)
{
    const RrefResult red = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;
    std::vector<Matrix> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Matrix x(n, 1, a.field());
        x(free, 0) = 1;
        for (std::size_t r = 0; r < red.rank; ++r) {
            x(red.pivots[r], 0) = a.field().neg(red.reduced(r, free));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Matrix left_kernel(const Matrix& a)
{
    const auto cols = nullspace_basis(a.transpose());
    Matrix out(0, a.rows(), a.field());
    for (const Matrix& c : cols) out = vstack(out, c.transpose());
    return row_basis(out);
}

Matrix row_basis(const Matrix& m)
{
    const RrefResult red = rref(m);
    std::vector<std::size_t> keep(red.rank);
    for (std::size_t i = 0; i < red.rank; ++i) keep[i] = i;
    return red.reduced.rows_subset(keep);
}

bool row_space_contains(const Matrix& space, const Matrix& sub)
{
    if (sub.rows() == 0) return true;
    return rank(vstack(space, sub)) == rank(space);
}

Matrix row_space_sum(const Matrix& a, const Matrix& b) { return row_basis(vstack(a, b)); }

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    const RrefResult red = rref(hstack(m, Matrix::identity(n, m.field())));
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
    std::vector<std::size_t> right(n);
    for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
    return red.reduced.cols_subset(right);
}

}  // namespace tpc
