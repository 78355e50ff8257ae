#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bide/basis.hpp"
#include "bide/error.hpp"
#include "support.hpp"

using namespace bide;
using bide::testing::max_coeff_diff;

namespace {

/// Basis polynomials as printed in the reference listing, 70x^4 in phi_4.
Polynomial listed_phi(int k)
{
    switch (k) {
    case 0:
        return Polynomial{1.0};
    case 1:
        return std::sqrt(3.0) * Polynomial{-1, 2};
    case 2:
        return std::sqrt(5.0) * Polynomial{1, -6, 6};
    case 3:
        return std::sqrt(7.0) * Polynomial{-1, 12, -30, 20};
    case 4:
        return 3.0 * Polynomial{1, -20, 90, -140, 70};
    case 5:
        return std::sqrt(11.0) * Polynomial{-1, 30, -210, 560, -630, 252};
    case 6:
        return std::sqrt(13.0) * Polynomial{1, -42, 420, -1680, 3150, -2772, 924};
    default:
        return std::sqrt(15.0) * Polynomial{-1, 56, -756, 4200, -11550, 16632, -12012, 3432};
    }
}

double exact_gram_defect(const BasisSet& basis)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            worst = std::max(worst, std::abs(bide::testing::accurate_inner_product(basis[i], basis[j]) -
                                             (i == j ? 1.0 : 0.0)));
    return worst;
}

} // namespace

TEST_CASE("Bernoulli numbers from the recurrence")
{
    const auto b1 = bernoulli_numbers(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == Rational(1));
    CHECK(b1[1] == Rational(-1, 2));

    const auto b4 = bernoulli_numbers(4);
    CHECK(b4[2] == Rational(1, 6));
    CHECK(b4[3] == Rational(0));
    CHECK(b4[4] == Rational(-1, 30));

    const auto b12 = bernoulli_numbers(12);
    CHECK(b12[12] == Rational(-691, 2730));
}

TEST_CASE("Kronecker double sum agrees with the recurrence")
{
    CHECK(bernoulli_numbers_kronecker(16) == bernoulli_numbers(16));
}

TEST_CASE("Bernoulli polynomials")
{
    CHECK(bernoulli_poly(0) == RationalPolynomial({Rational(1)}));
    CHECK(bernoulli_poly(2) == RationalPolynomial({Rational(1, 6), Rational(-1), Rational(1)}));
    CHECK(bernoulli_poly(3) == RationalPolynomial({Rational(0), Rational(1, 2), Rational(-3, 2), Rational(1)}));
    CHECK(bernoulli_poly(4) ==
          RationalPolynomial({Rational(-1, 30), Rational(0), Rational(1), Rational(-2), Rational(1)}));
}

TEST_CASE("every B_m with m >= 1 is orthogonal to B_0")
{
    for (int m = 1; m <= 16; ++m)
        CHECK(inner_product(bernoulli_poly(0), bernoulli_poly(m)).is_zero());
}

TEST_CASE("shifted Legendre oracle")
{
    CHECK(shifted_legendre(0) == Polynomial{1.0});
    CHECK(max_coeff_diff(shifted_legendre(1), std::sqrt(3.0) * Polynomial{-1, 2}) < 1e-15);
    CHECK(max_coeff_diff(shifted_legendre(4), 3.0 * Polynomial{1, -20, 90, -140, 70}) < 1e-12);
}

TEST_CASE("orthonormal basis matches the listed polynomials")
{
    CHECK(orthonormal_basis(0)[0] == Polynomial{1.0});
    const BasisSet basis = orthonormal_basis(7);
    for (int k = 0; k <= 7; ++k) {
        CAPTURE(k);
        const Polynomial expected = listed_phi(k);
        double scale = 0.0;
        for (double c : expected.coeffs())
            scale = std::max(scale, std::abs(c));
        CHECK(max_coeff_diff(basis[static_cast<std::size_t>(k)], expected) <= 1e-13 * scale);
    }
}

TEST_CASE("degree bound")
{
    CHECK_NOTHROW(orthonormal_basis(16));
    CHECK_THROWS_AS(orthonormal_basis(17), std::out_of_range);
    CHECK_THROWS_AS(orthonormal_basis(-1), std::out_of_range);
}

TEST_CASE("Gram-Schmidt is exactly orthogonal before normalization")
{
    const auto q = orthogonal_bernoulli(kMaxBasisDegree);
    for (std::size_t i = 0; i < q.size(); ++i) {
        CHECK(q[i].degree() == static_cast<int>(i));
        CHECK(q[i][i] == Rational(1));
        for (std::size_t j = 0; j < i; ++j)
            CHECK(inner_product(q[i], q[j]).is_zero());
    }
}

TEST_CASE("Gram defect of the stored coefficients")
{
    // Coefficients are correctly rounded doubles; the defect that remains is
    // the conditioning of the monomial representation. Reference values were
    // computed from the same coefficients with exact fractions.
    CHECK(exact_gram_defect(orthonormal_basis(7)) <= 1e-12);
    CHECK(exact_gram_defect(orthonormal_basis(7)) == doctest::Approx(2.739568631247553e-13).epsilon(1e-3));
    CHECK(exact_gram_defect(orthonormal_basis(10)) == doctest::Approx(4.6191275246969225e-11).epsilon(1e-3));
    CHECK(exact_gram_defect(orthonormal_basis(12)) == doctest::Approx(1.5547598991168657e-09).epsilon(1e-3));
}

TEST_CASE("property: orthonormality and oracle agreement up to n = 12")
{
    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        const BasisSet basis = orthonormal_basis(n);
        CHECK(exact_gram_defect(basis) <= (n <= 7 ? 1e-12 : 2e-9));
        for (int k = 0; k <= n; ++k) {
            const Polynomial& phi = basis[static_cast<std::size_t>(k)];
            CHECK(phi.degree() == k);
            CHECK(phi[static_cast<std::size_t>(k)] > 0.0);
            const Polynomial oracle = shifted_legendre(k);
            double scale = 1.0;
            for (double c : oracle.coeffs())
                scale = std::max(scale, std::abs(c));
            // Coefficients reach ~3e8 at k = 12; compare relative to that size.
            CHECK(max_coeff_diff(phi, oracle) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("property: change of basis matrices are inverse")
{
    for (int n = 0; n <= 12; ++n) {
        const BasisSet basis = orthonormal_basis(n);
        CHECK(max_abs_diff(basis.to_monomial() * basis.from_monomial(), identity(basis.size())) <= 1e-12);
    }
}

TEST_CASE("property: coordinates reproduce random polynomials")
{
    for (int trial = 0; trial < 100; ++trial) {
        const int n = bide::testing::uniform_int(0, 12);
        const BasisSet basis = orthonormal_basis(n);
        const Polynomial p = bide::testing::random_polynomial(bide::testing::uniform_int(0, n));
        const CoeffVector c = basis.coordinates(p);
        Polynomial back;
        for (std::size_t k = 0; k < basis.size(); ++k)
            back = back + c[k] * basis[k];
        CHECK(max_coeff_diff(back, p) <= 1e-12);
    }
}

TEST_CASE("coordinates rejects polynomials above the basis degree")
{
    CHECK_THROWS_AS(orthonormal_basis(3).coordinates(Polynomial::monomial(4)), DimensionError);
}
