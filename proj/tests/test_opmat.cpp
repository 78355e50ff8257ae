#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bide/basis.hpp"
#include "bide/error.hpp"
#include "bide/opmat.hpp"
#include "bide/project.hpp"
#include "support.hpp"

using namespace bide;

namespace {

double sub_entry(int i)
{
    return -1.0 / (2.0 * std::sqrt((2.0 * i - 1.0) * (2.0 * i + 1.0)));
}

double super_entry(int i)
{
    return 1.0 / (2.0 * std::sqrt((2.0 * i + 1.0) * (2.0 * i + 3.0)));
}

/// Component of integral_0^x phi_i along phi_l, from exact rationals:
/// returns (sign, square of the component).
std::pair<int, Rational> exact_integral_component(const std::vector<RationalPolynomial>& q, std::size_t i,
                                                  std::size_t l)
{
    const Rational ip = inner_product(integrate(q[i]), q[l]);
    const Rational norm_i = inner_product(q[i], q[i]);
    const Rational norm_l = inner_product(q[l], q[l]);
    // <int phi_i, phi_l> = <int q_i, q_l> / (|q_i| |q_l|)
    return {ip.is_zero() ? 0 : (ip < Rational(0) ? -1 : 1), ip * ip / (norm_i * norm_l)};
}

} // namespace

TEST_CASE("theta closed form")
{
    const DenseMatrix t1 = theta(1).theta;
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(max_abs_diff(t1, 0.5 * DenseMatrix{{1, s}, {-s, 0}}) < 1e-16);

    for (int n = 1; n <= 16; ++n) {
        const DenseMatrix t = theta(n).theta;
        CHECK(t(0, 0) == 0.5);
        CHECK(t(0, 1) == 1.0 / (2.0 * std::sqrt(3.0)));
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                double expected = 0.0;
                if (i == 0 && j <= 1)
                    expected = t(i, j);
                else if (i >= 1 && j == i - 1)
                    expected = sub_entry(i);
                else if (i >= 1 && i < n && j == i + 1)
                    expected = super_entry(i);
                CHECK(t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == expected);
            }
        }
    }
    CHECK_THROWS_AS(theta(0), std::out_of_range);
}

TEST_CASE("integral of phi_0 and phi_3 in basis coordinates")
{
    const BasisSet basis = orthonormal_basis(8);
    const DenseMatrix t = theta(7).theta;
    const CoeffVector c0 = basis.coordinates(integrate(basis[0]));
    CHECK(c0[0] == doctest::Approx(t(0, 0)).epsilon(1e-14));
    CHECK(c0[1] == doctest::Approx(t(0, 1)).epsilon(1e-14));

    // The phi_2 component is negative: integral of phi_3 vanishes at 0.
    const CoeffVector c3 = basis.coordinates(integrate(basis[3]));
    for (std::size_t k = 0; k < c3.size(); ++k) {
        double expected = 0.0;
        if (k == 2)
            expected = -1.0 / (2.0 * std::sqrt(35.0));
        if (k == 4)
            expected = 1.0 / (2.0 * std::sqrt(63.0));
        CHECK(std::abs(c3[k] - expected) < 1e-12);
    }
    CHECK(integrate(basis[3])(0.0) == 0.0);
}

TEST_CASE("integration identity, exactly in rationals")
{
    const int n = 7;
    const auto q = orthogonal_bernoulli(n + 1);
    const DenseMatrix t = theta(n).theta;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
        CAPTURE(i);
        for (std::size_t l = 0; l <= static_cast<std::size_t>(n) + 1; ++l) {
            const auto [sign, square] = exact_integral_component(q, i, l);
            const double entry = l <= static_cast<std::size_t>(n) ? t(i, l) : 0.0;
            if (l == static_cast<std::size_t>(n) + 1 && i == static_cast<std::size_t>(n)) {
                // The truncated direction: 1/(2 sqrt(15 * 17)) for n = 7.
                CHECK(sign == 1);
                CHECK(square == Rational(1, 4 * 15 * 17));
                continue;
            }
            CHECK(sign == (entry > 0) - (entry < 0));
            CHECK(std::abs(square.to_double() - entry * entry) <= 1e-16);
        }
    }
}

TEST_CASE("property: rows below n integrate exactly in monomial coefficients")
{
    for (int n = 1; n <= 10; ++n) {
        const BasisSet basis = orthonormal_basis(n);
        const DenseMatrix t = theta(n).theta;
        for (int i = 0; i < n; ++i) {
            Polynomial row;
            for (std::size_t k = 0; k < basis.size(); ++k)
                row = row + t(static_cast<std::size_t>(i), k) * basis[k];
            const Polynomial exact = integrate(basis[static_cast<std::size_t>(i)]);
            double scale = 1.0;
            for (double c : exact.coeffs())
                scale = std::max(scale, std::abs(c));
            CAPTURE(n);
            CAPTURE(i);
            CHECK(bide::testing::max_coeff_diff(row, exact) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("theta is tridiagonal plus the corner")
{
    const DenseMatrix t = theta(12).theta;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            if (j + 1 < i || j > i + 1 || (i == j && i > 0))
                CHECK(t(i, j) == 0.0);
}

TEST_CASE("convolution matrix carries the factorial")
{
    const DenseMatrix t = theta(7).theta;
    CHECK(convolution_matrix(1, t) == t);
    CHECK(convolution_matrix(2, t) == mat_pow(t, 2));
    CHECK(max_abs_diff(convolution_matrix(3, t), 2.0 * mat_pow(t, 3)) < 1e-16);
    CHECK_THROWS_AS(convolution_matrix(0, t), std::out_of_range);

    // integral_0^x (x-t)^2 dt = x^3 / 3
    const BasisSet basis = orthonormal_basis(7);
    const CoeffVector lhs = vec_mat(CoeffVector::unit(8, 0), convolution_matrix(3, t));
    const CoeffVector rhs = basis.coordinates(Polynomial::monomial(3, 1.0 / 3));
    CHECK(max_abs_diff(lhs, rhs) < 1e-14);
}

TEST_CASE("product matrix")
{
    const BasisSet basis = orthonormal_basis(5);
    const QuadratureRule& quad = gauss_legendre(default_quadrature_order(5));
    CHECK(max_abs_diff(product_matrix([](double) { return 1.0; }, basis, quad), identity(6)) < 1e-12);

    const DenseMatrix a = product_matrix([](double x) { return 1.0 + x * x; }, basis, quad);
    CHECK(a(0, 0) == doctest::Approx(4.0 / 3).epsilon(1e-13));
    CHECK(a(0, 1) == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-13));
    CHECK(a(0, 2) == doctest::Approx(1.0 / (6.0 * std::sqrt(5.0))).epsilon(1e-13));
    CHECK(a(1, 1) == doctest::Approx(7.0 / 5).epsilon(1e-13));
    CHECK(max_abs_diff(a, transpose(a)) < 1e-14);

    CHECK_THROWS_AS(product_matrix([](double x) { return 1.0 / (x - x); }, basis, quad), QuadratureError);
}

TEST_CASE("property: product matrix is exact for polynomial coefficients")
{
    for (int trial = 0; trial < 20; ++trial) {
        const int n = bide::testing::uniform_int(1, 9);
        const int d = bide::testing::uniform_int(0, 6);
        std::vector<Rational> coeffs;
        for (int i = 0; i <= d; ++i)
            coeffs.emplace_back(bide::testing::uniform_int(-9, 9), bide::testing::uniform_int(1, 5));
        const RationalPolynomial a(coeffs);
        const Polynomial a_real = a.to_polynomial();

        const BasisSet basis = orthonormal_basis(n);
        const auto q = orthogonal_bernoulli(n);
        const int order = n + d / 2 + 1;
        const DenseMatrix got = product_matrix([&](double x) { return a_real(x); }, basis, gauss_legendre(order));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const Rational num = inner_product(a * q[j], q[k]);
                const double expected =
                    num.to_double() / std::sqrt(inner_product(q[j], q[j]).to_double() *
                                                inner_product(q[k], q[k]).to_double());
                CHECK(std::abs(got(j, k) - expected) <= 1e-12 * 10.0);
            }
        }
    }
}

TEST_CASE("kernel matrix reduces to theta for K = 1")
{
    for (int n = 1; n <= 9; ++n) {
        const BasisSet basis = orthonormal_basis(n);
        const DenseMatrix k = kernel_matrix([](double) { return 1.0; }, [](double, double) { return 1.0; }, basis,
                                            gauss_legendre(default_quadrature_order(n)));
        CHECK(max_abs_diff(k, theta(n).theta) < 1e-10);
    }
}

TEST_CASE("kernel matrix of x - t is theta squared")
{
    for (int n = 1; n <= 9; ++n) {
        const BasisSet basis = orthonormal_basis(n);
        const DenseMatrix k = kernel_matrix([](double) { return 1.0; }, [](double x, double t) { return x - t; },
                                            basis, gauss_legendre(default_quadrature_order(n)));
        const DenseMatrix wide = theta(n + 1).theta;
        CHECK(bide::testing::leading_block_diff(k, wide * wide, basis.size()) < 1e-10);
    }
}

TEST_CASE("property: kernel matrix of (x-t)^(m-1) against the convolution matrix")
{
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 9; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const BasisSet basis = orthonormal_basis(n);
            const DenseMatrix k = kernel_matrix(
                [](double) { return 1.0; }, [m](double x, double t) { return std::pow(x - t, m - 1); }, basis,
                gauss_legendre(default_quadrature_order(n)));
            // Theta(n + m)^m has no truncated rows in its leading block.
            const DenseMatrix wide = convolution_matrix(m, theta(n + m).theta);
            CHECK(bide::testing::leading_block_diff(k, wide, basis.size()) <= 1e-8);

            // With theta(n) itself, rows below n - m + 1 never touch the truncated row.
            const DenseMatrix narrow = convolution_matrix(m, theta(n).theta);
            for (int r = 0; r <= n - m; ++r)
                for (std::size_t c = 0; c < basis.size(); ++c)
                    CHECK(std::abs(k(static_cast<std::size_t>(r), c) - narrow(static_cast<std::size_t>(r), c)) <=
                          1e-8);
        }
    }
}

TEST_CASE("kernel matrix with a weight factors through the product matrix")
{
    const int n = 7;
    const BasisSet basis = orthonormal_basis(n);
    const QuadratureRule& quad = gauss_legendre(default_quadrature_order(n));
    const auto cosine = [](double x) { return std::cos(x); };
    const DenseMatrix k =
        kernel_matrix(cosine, [](double x, double t) { return (x - t) * (x - t); }, basis, quad);
    const DenseMatrix factored = 2.0 * mat_pow(theta(n).theta, 3) * product_matrix(cosine, basis, quad);
    for (std::size_t r = 0; r + 3 <= static_cast<std::size_t>(n); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            CHECK(std::abs(k(r, c) - factored(r, c)) <= 1e-8);

    const DenseMatrix wide = 2.0 * mat_pow(theta(n + 3).theta, 3);
    const BasisSet big = orthonormal_basis(n + 3);
    const DenseMatrix a_big = product_matrix(cosine, big, quad);
    // Rows of the exact triple integral live in degree <= n + 3; project through the wider basis.
    const DenseMatrix full = wide * a_big;
    CHECK(bide::testing::leading_block_diff(k, full, basis.size()) <= 1e-8);
}
