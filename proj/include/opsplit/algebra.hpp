#pragma once

#include <map>
#include <string>

#include "opsplit/matrix.hpp"

namespace opsplit {

// Structure-constant tensor: c(i,j,k) is the e_k coefficient of e_i * e_j.
class OpTensor {
public:
    OpTensor() : dim_(0), field_(Field::rationals()) {}
    OpTensor(std::size_t dim, const Field& f)
        : dim_(dim), field_(f), c_(dim * dim * dim, Scalar::zero(f)) {}

    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    bool operator==(const OpTensor& o) const { return dim_ == o.dim_ && vec_eq(c_, o.c_); }
    bool operator!=(const OpTensor& o) const { return !(*this == o); }
    bool is_zero() const { return is_zero_vec(c_); }

private:
    std::size_t dim_;
    Field field_;
    std::vector<Scalar> c_;
};

// A finite-dimensional vector space with named bilinear operations.
// Conventional names: "dot", "bracket", "star", "circ", "succ", "prec".
struct Algebra {
    std::size_t dim = 0;
    Field field = Field::rationals();
    std::map<std::string, OpTensor> ops;

    Algebra() = default;
    Algebra(std::size_t dim, const Field& f) : dim(dim), field(f) {}

    bool has_op(const std::string& name) const { return ops.count(name) != 0; }
    const OpTensor& op(const std::string& name) const;
    void add_op(const std::string& name, OpTensor t);

    bool operator==(const Algebra& o) const {
        return dim == o.dim && field == o.field && ops == o.ops;
    }
};

enum class Side { Left, Right };

// Bilinear extension of the structure constants.
Vec apply(const Algebra& a, const std::string& op, const Vec& x, const Vec& y);

// Tensor of (x,y) -> x*y - y*x.
OpTensor commutator(const Algebra& a, const std::string& op);

// Tensor of (x,y) -> x*y + y*x.
OpTensor anticommutator(const Algebra& a, const std::string& op);

// Matrix of y -> x*y (Left) or y -> y*x (Right) in the standard basis.
Matrix mult_matrix(const Algebra& a, const std::string& op, Side side, const Vec& x);

OpTensor tensor_add(const OpTensor& a, const OpTensor& b);
OpTensor tensor_neg(const OpTensor& a);

} // namespace opsplit
