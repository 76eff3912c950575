#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "orbcat/field.hpp"

namespace orbcat {

class Matrix;

class Vector {
public:
    Vector() = default;
    Vector(const Field& f, size_t n) : f_(f), e_(n, Scalar::zero(f)) {}
    explicit Vector(std::vector<Scalar> entries);

    const Field& field() const { return f_; }
    size_t size() const { return e_.size(); }
    Scalar& operator[](size_t i) { return e_[i]; }
    const Scalar& operator[](size_t i) const { return e_[i]; }

    bool is_zero() const;
    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector scaled(const Scalar& c) const;
    bool operator==(const Vector& o) const { return f_ == o.f_ && e_ == o.e_; }

private:
    Field f_;
    std::vector<Scalar> e_;
};

// Dense row-major matrix over one field. All operations are exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const Field& f, size_t rows, size_t cols);

    static Matrix identity(const Field& f, size_t n);
    static Matrix zero(const Field& f, size_t rows, size_t cols);
    static Matrix from_int(const Field& f, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_columns(const Field& f, size_t rows, const std::vector<Vector>& cols);

    const Field& field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, const Scalar& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix column(size_t j) const;
    Vector column_vector(size_t j) const;
    Matrix pow(unsigned k) const;  // square matrices

    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    bool is_identity() const;

    // Flatten in row-major order (the coordinate embedding used when a
    // matrix is treated as a vector of unknowns).
    Vector vec() const;
    static Matrix unvec(const Field& f, size_t rows, size_t cols, const Vector& v);

    size_t rank() const;
    std::vector<Vector> kernel_basis() const;
    std::optional<Vector> solve(const Vector& b) const;
    std::optional<Matrix> solve_matrix(const Matrix& b) const;  // columnwise
    std::optional<Matrix> inverse() const;

private:
    Field f_;
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

inline size_t rank(const Matrix& m) { return m.rank(); }
inline std::vector<Vector> kernel_basis(const Matrix& m) { return m.kernel_basis(); }
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) { return m.solve(b); }

// Greedy basis extension: rank of span(cols of base) and which candidate
// columns enlarge it. Returns indices of accepted candidates.
std::vector<size_t> extend_column_basis(const Matrix& base, const Matrix& candidates);

}  // namespace orbcat
