#include "opsplit/algebra.hpp"

namespace opsplit {

const OpTensor& Algebra::op(const std::string& name) const {
    auto it = ops.find(name);
    if (it == ops.end())
        throw UnknownOperation("operation \"" + name + "\" not present in algebra");
    return it->second;
}

void Algebra::add_op(const std::string& name, OpTensor t) {
    if (t.dim() != dim || !(t.field() == field))
        throw DimensionMismatch("tensor for \"" + name + "\" does not match the algebra");
    if (has_op(name))
        throw UnknownOperation("duplicate operation name \"" + name + "\"");
    ops.emplace(name, std::move(t));
}

Vec apply(const Algebra& a, const std::string& op, const Vec& x, const Vec& y) {
    if (x.size() != a.dim || y.size() != a.dim)
        throw DimensionMismatch("apply: argument length differs from algebra dimension");
    const OpTensor& t = a.op(op);
    Vec r = zero_vec(a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < a.dim; ++k) {
                const Scalar& c = t.at(i, j, k);
                if (!c.is_zero()) r[k] += w * c;
            }
        }
    }
    return r;
}

OpTensor commutator(const Algebra& a, const std::string& op) {
    const OpTensor& t = a.op(op);
    OpTensor r(a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                r.at(i, j, k) = t.at(i, j, k) - t.at(j, i, k);
    return r;
}

OpTensor anticommutator(const Algebra& a, const std::string& op) {
    const OpTensor& t = a.op(op);
    OpTensor r(a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                r.at(i, j, k) = t.at(i, j, k) + t.at(j, i, k);
    return r;
}

Matrix mult_matrix(const Algebra& a, const std::string& op, Side side, const Vec& x) {
    if (x.size() != a.dim)
        throw DimensionMismatch("mult_matrix: argument length differs from algebra dimension");
    const OpTensor& t = a.op(op);
    Matrix m(a.dim, a.dim, a.field);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) {
                const Scalar& c = (side == Side::Left) ? t.at(i, j, k) : t.at(j, i, k);
                if (!c.is_zero()) m.at(k, j) += x[i] * c;
            }
    }
    return m;
}

OpTensor tensor_add(const OpTensor& a, const OpTensor& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("tensor dimensions differ");
    OpTensor r = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                r.at(i, j, k) += b.at(i, j, k);
    return r;
}

OpTensor tensor_neg(const OpTensor& a) {
    OpTensor r = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                r.at(i, j, k) = -r.at(i, j, k);
    return r;
}

} // namespace opsplit
