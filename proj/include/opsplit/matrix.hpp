#pragma once

#include <cstddef>
#include <vector>

#include "opsplit/scalar.hpp"

namespace opsplit {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const Field& f);
Vec basis_vec(std::size_t n, std::size_t i, const Field& f);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);

// Dense exact matrix, row-major. All entries share one field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f),
          entries_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(std::size_t n, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Vec apply(const Vec& v) const;
    Matrix transposed() const;
    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> entries_;
};

// Unique solution of a*x = b for invertible square a.
// Gaussian elimination with the first nonzero pivot; exact throughout.
Vec solve_linear(const Matrix& a, const Vec& b);

bool is_invertible(const Matrix& a);

Matrix transpose(const Matrix& a);

} // namespace opsplit
