#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bcrep/exactlin.hpp"
#include "gen.hpp"

using namespace bcrep;

namespace {

// Leibniz expansion, independent of the elimination code.
Rat leibniz(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rat total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
        Rat term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace

TEST_SUITE("exactlin") {

TEST_CASE("rational literals") {
    CHECK(parse_rat("3/6") == Rat(1) / 2);
    CHECK(parse_rat("-4") == -4);
    CHECK(parse_rat("+2/3") == Rat(2) / 3);
    CHECK(format_rat(Rat(-6) / 4) == "-3/2");
    CHECK(format_rat(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), AlgebraError);
    CHECK_THROWS_AS(parse_rat("1/-2"), AlgebraError);
    CHECK_THROWS_AS(parse_rat("x"), AlgebraError);
    CHECK_THROWS_AS(parse_rat(""), AlgebraError);
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::from_rows({{1, 0}, {0, 0}})) == 1);
    CHECK(rank(Matrix(0, 0)) == 0);
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
    const Matrix k1 = kernel_basis(Matrix::from_rows({{1, 0}, {0, 0}}));
    CHECK(k1 == Matrix::from_rows({{0}, {1}}));
    CHECK(kernel_basis(Matrix::from_rows({{2, 1}, {1, 1}})).cols() == 0);
    const Matrix k3 = kernel_basis(Matrix::from_rows({{1, 2}, {2, 4}}));
    REQUIRE(k3.cols() == 1);
    CHECK(k3(0, 0) == -2 * k3(1, 0));
    CHECK(k3(1, 0) != 0);
}

TEST_CASE("solve examples") {
    const Matrix b = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(solve(Matrix::identity(2), b) == b);
    CHECK_FALSE(solve(Matrix::from_rows({{1}, {1}}), Matrix::from_rows({{1}, {2}})).has_value());
    CHECK(solve(Matrix::from_rows({{2}}), Matrix::from_rows({{1}})) == Matrix::from_rows({{Rat(1) / 2}}));
}

TEST_CASE("invertibility examples") {
    CHECK(is_invertible(Matrix::from_rows({{2}})));
    CHECK_FALSE(is_invertible(Matrix::from_rows({{1, 0}, {0, 0}})));
    CHECK(is_invertible(Matrix(0, 0)));
    CHECK_FALSE(is_invertible(Matrix(2, 3)));
    CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 1}, {1, 1}})), AlgebraError);
}

TEST_CASE("split_complex examples") {
    const Matrix d = Matrix::from_rows({{1, 0}, {0, 0}});
    const ComplexSplitting s = split_complex(d);
    CHECK(s.kernel_dim == 1);
    CHECK(s.rank == 1);
    CHECK(s.p0 * d * s.p1_inverse == split_block_form(2, 2, 1, 1));

    const Matrix inv = Matrix::from_rows({{2, 1}, {1, 1}});
    const ComplexSplitting t = split_complex(inv);
    CHECK(t.kernel_dim == 0);
    CHECK(t.rank == 2);
    CHECK(t.p0 * inv * t.p1_inverse == Matrix::identity(2));

    const ComplexSplitting z = split_complex(Matrix(2, 3));
    CHECK(z.kernel_dim == 3);
    CHECK(z.rank == 0);
    CHECK(split_block_form(2, 3, 3, 0).is_zero());
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(Matrix(2, 2) * Matrix(3, 1), AlgebraError);
    CHECK_THROWS_AS(Matrix(2, 2) + Matrix(2, 1), AlgebraError);
    CHECK_THROWS_AS(Matrix(2, 2, {1, 2, 3}), AlgebraError);
}

TEST_CASE("property: rank, kernel, solve, determinant on random matrices") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = rng.index(5), c = rng.index(5);
        const std::size_t k = rng.index(std::min(r, c) + 1);
        const Matrix m = gen::matrix_of_rank(rng, r, c, k);
        CHECK(rank(m) == k);
        CHECK(rank(m.transpose()) == k);
        const Matrix ker = kernel_basis(m);
        CHECK(ker.cols() == c - k);
        CHECK((m * ker).is_zero());
        CHECK(rank(ker) == ker.cols());

        const Matrix x = gen::matrix(rng, c, 2);
        const Matrix b = m * x;
        const auto y = solve(m, b);
        REQUIRE(y.has_value());
        CHECK(m * *y == b);

        const Matrix sq = gen::matrix(rng, r, r);
        CHECK(determinant(sq) == leibniz(sq));
        CHECK(is_invertible(sq) == (leibniz(sq) != 0));
        if (is_invertible(sq)) CHECK(sq * inverse(sq) == Matrix::identity(r));
    }
}

TEST_CASE("property: split_complex block identity") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = rng.index(6), cols = rng.index(6);
        const std::size_t k = rng.index(std::min(rows, cols) + 1);
        const Matrix d = gen::matrix_of_rank(rng, rows, cols, k);
        const ComplexSplitting s = split_complex(d);
        CHECK(s.rank == k);
        CHECK(s.kernel_dim == cols - k);
        CHECK(s.p1 * s.p1_inverse == Matrix::identity(cols));
        CHECK(s.p0 * s.p0_inverse == Matrix::identity(rows));
        CHECK(s.p0 * d * s.p1_inverse == split_block_form(rows, cols, s.kernel_dim, s.rank));
    }
}

}
