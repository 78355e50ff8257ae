#include "doctest.h"

#include <cmath>

#include "bide/error.hpp"
#include "bide/linalg.hpp"
#include "bide/opmat.hpp"
#include "support.hpp"

using namespace bide;

namespace {

DenseMatrix naive_power(const DenseMatrix& a, int m)
{
    DenseMatrix out = DenseMatrix::identity(a.rows());
    for (int p = 0; p < m; ++p) {
        DenseMatrix next(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                for (std::size_t l = 0; l < a.cols(); ++l)
                    next(i, j) += out(i, l) * a(l, j);
        out = next;
    }
    return out;
}

} // namespace

TEST_CASE("identity, products and powers")
{
    const DenseMatrix t = theta(7).theta;
    CHECK(mat_pow(t, 0) == identity(8));
    CHECK(mat_mul(identity(8), t) == t);
    CHECK(mat_pow(t, 5)(0, 0) == doctest::Approx(naive_power(t, 5)(0, 0)).epsilon(1e-14));
    CHECK(max_abs_diff(mat_pow(t, 5), naive_power(t, 5)) < 1e-15);
    CHECK(transpose(DenseMatrix{{1, 2}, {3, 4}}) == DenseMatrix{{1, 3}, {2, 4}});
    CHECK(mat_add(identity(2), identity(2)) == DenseMatrix{{2, 0}, {0, 2}});
}

TEST_CASE("dimension checks")
{
    CHECK_THROWS_AS(mat_mul(DenseMatrix(2, 3), DenseMatrix(2, 3)), DimensionError);
    CHECK_THROWS_AS(mat_add(DenseMatrix(2, 2), DenseMatrix(3, 3)), DimensionError);
    CHECK_THROWS_AS(mat_pow(DenseMatrix(2, 3), 2), DimensionError);
    CHECK_THROWS_AS(solve_transposed(identity(3), CoeffVector(2)), DimensionError);
}

TEST_CASE("solve_transposed small systems")
{
    const CoeffVector r{0.3, -1.0, 2.5};
    CHECK(solve_transposed(identity(3), r) == r);

    const double d[] = {2.0, 4.0};
    const CoeffVector c = solve_transposed(DenseMatrix::diagonal(d), CoeffVector{2.0, 8.0});
    CHECK(c[0] == doctest::Approx(1.0));
    CHECK(c[1] == doctest::Approx(2.0));

    // c^T M = r^T picks the transpose: M = [[1, 1], [0, 1]] gives c = (1, 1) for r = (1, 2).
    const CoeffVector c2 = solve_transposed(DenseMatrix{{1, 1}, {0, 1}}, CoeffVector{1.0, 2.0});
    CHECK(c2[0] == doctest::Approx(1.0));
    CHECK(c2[1] == doctest::Approx(1.0));
}

TEST_CASE("solve_transposed reproduces the printed first coefficient from the printed right side")
{
    const DenseMatrix t = theta(7).theta;
    const DenseMatrix m = identity(8) - mat_pow(t, 4) + mat_pow(t, 5);
    const CoeffVector r{7.83814, 2.6674, 0.386136, 0.0327736, 0.00188342, 0.000138055, 5.83649e-6, 1.49271e-7};
    const CoeffVector c = solve_transposed(m, r);
    CHECK(std::abs(c[0] - 7.87309) <= 5e-4 * 7.87309);
}

TEST_CASE("singular systems are reported")
{
    CHECK_THROWS_AS(solve_transposed(DenseMatrix{{1, 2}, {2, 4}}, CoeffVector{1.0, 1.0}), SingularMatrixError);
    CHECK_THROWS_AS(solve_transposed(DenseMatrix(3, 3), CoeffVector(3)), SingularMatrixError);
    CHECK_NOTHROW(solve_transposed(DenseMatrix{{1e-20, 0}, {0, 1e-20}}, CoeffVector{1.0, 1.0}));
}

TEST_CASE("condition estimate")
{
    CHECK(condition_estimate(identity(4)) == doctest::Approx(1.0));
    const double d[] = {1.0, 100.0};
    CHECK(condition_estimate(DenseMatrix::diagonal(d)) == doctest::Approx(100.0));
}

TEST_CASE("property: transposed solve recovers the right side")
{
    for (int trial = 0; trial < 200; ++trial) {
        DenseMatrix m = bide::testing::random_matrix(8);
        for (std::size_t i = 0; i < 8; ++i)
            m(i, i) += 8.0;  // diagonally dominant, so well conditioned
        CoeffVector r(8);
        for (std::size_t i = 0; i < 8; ++i)
            r[i] = bide::testing::uniform(-5.0, 5.0);
        const CoeffVector c = solve_transposed(m, r);
        CHECK(max_abs_diff(vec_mat(c, m), r) <= 1e-10 * norm_inf(r));
        CHECK(max_abs_diff(mat_vec(transpose(m), c), r) <= 1e-10 * norm_inf(r));
    }
}

TEST_CASE("property: matrix powers add exponents")
{
    for (int trial = 0; trial < 30; ++trial) {
        const DenseMatrix a = bide::testing::random_matrix(6, 0.5);
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; i + j <= 8; ++j)
                CHECK(max_abs_diff(mat_pow(a, i + j), mat_mul(mat_pow(a, i), mat_pow(a, j))) <= 1e-12);
    }
}

TEST_CASE("lu inverse")
{
    const DenseMatrix a{{4, 1, 0}, {1, 3, 1}, {0, 1, 2}};
    CHECK(max_abs_diff(a * LuDecomposition(a).inverse(), identity(3)) < 1e-15);
}
