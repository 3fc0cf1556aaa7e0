#include <doctest.h>

#include "opsplit/matrix.hpp"
#include "opsplit/rng.hpp"

using namespace opsplit;

namespace {

Matrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m(rows.size(), rows.begin()->size(), Field::rationals());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Scalar::rational(v);
        ++i;
    }
    return m;
}

Vec rational_vec(std::initializer_list<long> entries) {
    Vec v;
    for (long e : entries) v.push_back(Scalar::rational(e));
    return v;
}

} // namespace

TEST_CASE("solve_linear on the identity") {
    Matrix id = Matrix::identity(2, Field::rationals());
    CHECK(vec_eq(solve_linear(id, rational_vec({3, 5})), rational_vec({3, 5})));
}

TEST_CASE("solve_linear rotation example, verified by multiplying back") {
    Matrix a = rational_matrix({{0, 1}, {-1, 0}});
    Vec b = rational_vec({1, 0});
    Vec x = solve_linear(a, b);
    CHECK(vec_eq(x, rational_vec({0, 1})));
    CHECK(vec_eq(a.apply(x), b));
}

TEST_CASE("solve_linear rejects singular systems") {
    Matrix a = rational_matrix({{1, 1}, {2, 2}});
    CHECK_THROWS_AS(solve_linear(a, rational_vec({1, 0})), SingularMatrix);
    CHECK_FALSE(is_invertible(a));
    CHECK(is_invertible(rational_matrix({{1, 1}, {2, 3}})));
}

TEST_CASE("solve_linear rejects mixed fields and bad shapes") {
    Matrix a = Matrix::identity(2, Field::prime(5));
    CHECK_THROWS_AS(solve_linear(a, rational_vec({1, 0})), FieldMismatch);
    CHECK_THROWS_AS(solve_linear(Matrix(2, 3, Field::rationals()), rational_vec({1, 0, 0})),
                    DimensionMismatch);
}

TEST_CASE("a * solve(a,b) = b for random invertible matrices") {
    Rng rng(11);
    for (const Field& f : {Field::rationals(), Field::prime(7)}) {
        int solved = 0;
        while (solved < 50) {
            std::size_t n = 1 + rng.below(5);
            Matrix a(n, n, f);
            Vec b = zero_vec(n, f);
            for (std::size_t i = 0; i < n; ++i) {
                b[i] = Scalar::from_integer(rng.integer_in(-9, 9), f);
                for (std::size_t j = 0; j < n; ++j)
                    a.at(i, j) = Scalar::from_integer(rng.integer_in(-9, 9), f);
            }
            if (!is_invertible(a)) continue;
            CHECK(vec_eq(a.apply(solve_linear(a, b)), b));
            ++solved;
        }
    }
}

TEST_CASE("transpose") {
    Matrix a = rational_matrix({{1, 2}, {3, 4}});
    CHECK(transpose(a) == rational_matrix({{1, 3}, {2, 4}}));
    Matrix sym = rational_matrix({{1, 2}, {2, 5}});
    CHECK(transpose(sym) == sym);

    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        Matrix m(r, c, Field::rationals());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = Scalar::rational(rng.integer_in(-20, 20), rng.integer_in(1, 9));
        CHECK(transpose(transpose(m)) == m);
    }
}

TEST_CASE("exact elimination has no tolerance: tiny pivots work") {
    // entries around 1e-30 in magnitude, fatal for floating point
    Matrix a(2, 2, Field::rationals());
    Scalar tiny = Scalar::rational(1);
    for (int i = 0; i < 30; ++i) tiny *= Scalar::rational(1, 10);
    a.at(0, 0) = tiny;
    a.at(0, 1) = Scalar::rational(1);
    a.at(1, 0) = Scalar::rational(1);
    a.at(1, 1) = Scalar::rational(1);
    Vec b = rational_vec({1, 2});
    CHECK(vec_eq(a.apply(solve_linear(a, b)), b));
}
