#include "orbcat/matrix.hpp"

#include <stdexcept>

namespace orbcat {

Vector::Vector(std::vector<Scalar> entries) : e_(std::move(entries)) {
    if (!e_.empty()) {
        f_ = e_[0].field();
        for (const auto& s : e_) check_same_field(f_, s.field());
    }
}

bool Vector::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

Vector Vector::operator+(const Vector& o) const {
    if (size() != o.size()) throw std::invalid_argument("vector size mismatch");
    Vector r(f_, size());
    for (size_t i = 0; i < size(); ++i) r[i] = e_[i] + o[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    if (size() != o.size()) throw std::invalid_argument("vector size mismatch");
    Vector r(f_, size());
    for (size_t i = 0; i < size(); ++i) r[i] = e_[i] - o[i];
    return r;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector r(f_, size());
    for (size_t i = 0; i < size(); ++i) r[i] = e_[i] * c;
    return r;
}

Matrix::Matrix(const Field& f, size_t rows, size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::zero(const Field& f, size_t rows, size_t cols) { return Matrix(f, rows, cols); }

Matrix Matrix::from_int(const Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
        size_t j = 0;
        for (long long v : row) m.at(i, j++) = Scalar(f, v);
        ++i;
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column height mismatch");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

void Matrix::set(size_t i, size_t j, const Scalar& v) {
    check_same_field(f_, v.field());
    at(i, j) = v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(f_, o.f_);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) = r.at(i, j) + aik * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(f_, o.f_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    Vector r(f_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Scalar acc = Scalar::zero(f_);
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) acc = acc + at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_same_field(f_, o.f_);
    if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix r(f_, rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_same_field(f_, o.f_);
    if (cols_ != o.cols_) throw std::invalid_argument("vstack column mismatch");
    Matrix r(f_, rows_ + o.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::column(size_t j) const {
    Matrix r(f_, rows_, 1);
    for (size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

Vector Matrix::column_vector(size_t j) const {
    Vector v(f_, rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow needs a square matrix");
    Matrix r = identity(f_, rows_);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(f_, rows_);
}

Vector Matrix::vec() const {
    Vector v(f_, rows_ * cols_);
    for (size_t i = 0; i < a_.size(); ++i) v[i] = a_[i];
    return v;
}

Matrix Matrix::unvec(const Field& f, size_t rows, size_t cols, const Vector& v) {
    if (v.size() != rows * cols) throw std::invalid_argument("unvec size mismatch");
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

namespace {

struct Echelon {
    Matrix m;                    // reduced row echelon form
    std::vector<size_t> pivots;  // pivot column per used row
};

Echelon rref(Matrix m) {
    const Field f = m.field();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Scalar inv = Scalar::one(f) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar c = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - c * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

size_t Matrix::rank() const { return rref(*this).pivots.size(); }

std::vector<Vector> Matrix::kernel_basis() const {
    Echelon e = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vector v(f_, cols_);
        v[free] = Scalar::one(f_);
        for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: rhs length must equal row count");
    check_same_field(f_, b.size() ? b.field() : f_);
    Matrix aug = hstack(from_columns(f_, rows_, {b}));
    Echelon e = rref(aug);
    for (size_t c : e.pivots)
        if (c == cols_) return std::nullopt;  // pivot in the rhs column: inconsistent
    Vector x(f_, cols_);
    for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.m.at(r, cols_);
    return x;
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("solve_matrix: rhs row mismatch");
    Matrix x(f_, cols_, b.cols());
    for (size_t j = 0; j < b.cols(); ++j) {
        auto xj = solve(b.column_vector(j));
        if (!xj) return std::nullopt;
        for (size_t i = 0; i < cols_; ++i) x.at(i, j) = (*xj)[i];
    }
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse needs a square matrix");
    auto inv = solve_matrix(identity(f_, rows_));
    if (!inv) return std::nullopt;
    if (!((*this) * (*inv)).is_identity()) return std::nullopt;  // singular with consistent columns
    return inv;
}

std::vector<size_t> extend_column_basis(const Matrix& base, const Matrix& candidates) {
    if (base.rows() != candidates.rows()) throw std::invalid_argument("extend_column_basis row mismatch");
    Matrix acc = base;
    size_t r = acc.cols() == 0 ? 0 : acc.rank();
    std::vector<size_t> accepted;
    for (size_t j = 0; j < candidates.cols(); ++j) {
        Matrix cand = acc.cols() == 0 ? candidates.column(j) : acc.hstack(candidates.column(j));
        size_t nr = cand.rank();
        if (nr > r) {
            acc = std::move(cand);
            r = nr;
            accepted.push_back(j);
        }
    }
    return accepted;
}

}  // namespace orbcat
