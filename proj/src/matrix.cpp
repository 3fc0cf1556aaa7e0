#include "opsplit/matrix.hpp"

namespace opsplit {

namespace {

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b))
        throw FieldMismatch("matrix/vector fields differ: " + a.str() + " vs " + b.str());
}

} // namespace

Vec zero_vec(std::size_t n, const Field& f) {
    return Vec(n, Scalar::zero(f));
}

Vec basis_vec(std::size_t n, std::size_t i, const Field& f) {
    Vec v = zero_vec(n, f);
    v[i] = Scalar::one(f);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix shapes differ in +");
    Matrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix shapes differ in -");
    Matrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix shapes incompatible in *");
    require_same_field(field_, o.field_);
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& e : r.entries_) e *= c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix/vector shapes in apply");
    Vec r = zero_vec(rows_, field_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            r[i] += at(i, j) * v[j];
    }
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Matrix transpose(const Matrix& a) { return a.transposed(); }

namespace {

// Reduces [a | rhs] in place; returns false when a is singular.
bool eliminate(Matrix& m, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return false;
        if (pivot != col)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(col, j));
        Scalar inv = m.at(col, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return true;
}

} // namespace

Vec solve_linear(const Matrix& a, const Vec& b) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("solve_linear needs a square matrix");
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side length differs from matrix size");
    const std::size_t n = a.rows();
    for (const auto& c : b) require_same_field(a.field(), c.field());

    Matrix aug(n, n + 1, a.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    if (!eliminate(aug, n))
        throw SingularMatrix("coefficient matrix is not invertible");
    Vec x = zero_vec(n, a.field());
    for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
    return x;
}

bool is_invertible(const Matrix& a) {
    if (a.rows() != a.cols()) return false;
    Matrix m = a;
    return eliminate(m, a.rows());
}

} // namespace opsplit
