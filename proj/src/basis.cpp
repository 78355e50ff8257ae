#include "bide/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bide/error.hpp"

namespace bide {

namespace {

Rational int_power(int base, int exponent)
{
    Rational out(1);
    for (int i = 0; i < exponent; ++i)
        out *= Rational(base);
    return out;
}

long double sqrt_rational(const Rational& r)
{
    return std::sqrt(static_cast<long double>(r.num()) / static_cast<long double>(r.den()));
}

} // namespace

std::vector<Rational> bernoulli_numbers(int n)
{
    if (n < 0)
        throw std::out_of_range("bernoulli_numbers: negative count");
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = Rational(1);
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    }
    return b;
}

std::vector<Rational> bernoulli_numbers_kronecker(int n)
{
    if (n < 0)
        throw std::out_of_range("bernoulli_numbers_kronecker: negative count");
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        Rational outer;
        for (int j = 1; j <= m + 1; ++j) {
            Rational power_sum;
            for (int k = 0; k <= j - 1; ++k)
                power_sum += int_power(k, m);
            const Rational sign(j % 2 == 0 ? 1 : -1);
            outer += sign / Rational(j) * Rational(binomial(m + 1, j)) * power_sum;
        }
        b[static_cast<std::size_t>(m)] = -outer;
    }
    return b;
}

RationalPolynomial bernoulli_poly(int m)
{
    if (m < 0)
        throw std::out_of_range("bernoulli_poly: negative degree");
    const std::vector<Rational> numbers = bernoulli_numbers(m);
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j)
        c[static_cast<std::size_t>(m - j)] = Rational(binomial(m, j)) * numbers[static_cast<std::size_t>(j)];
    return RationalPolynomial(std::move(c));
}

Polynomial shifted_legendre(int k)
{
    if (k < 0)
        throw std::out_of_range("shifted_legendre: negative degree");
    const RationalPolynomial s({Rational(-1), Rational(2)});
    RationalPolynomial prev({Rational(1)});
    RationalPolynomial cur = s;
    if (k == 0) {
        cur = prev;
    } else {
        // (j+1) P_{j+1} = (2j+1) s P_j - j P_{j-1}
        for (int j = 1; j < k; ++j) {
            RationalPolynomial next = Rational(2 * j + 1, j + 1) * (s * cur) - Rational(j, j + 1) * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    const double norm = std::sqrt(static_cast<double>(2 * k + 1));
    return scale(cur.to_polynomial(), norm);
}

BasisSet::BasisSet(std::vector<Polynomial> phis, DenseMatrix to_monomial, DenseMatrix from_monomial)
    : phis_(std::move(phis)), to_monomial_(std::move(to_monomial)), from_monomial_(std::move(from_monomial))
{
}

std::vector<double> BasisSet::eval_all(double x) const
{
    // Legendre recurrence in s = 2x - 1, in extended precision; avoids the
    // cancellation of Horner on the large alternating monomial coefficients.
    std::vector<double> out(phis_.size());
    const long double s = 2.0L * x - 1.0L;
    long double prev = 1.0L;
    long double cur = s;
    for (std::size_t k = 0; k < out.size(); ++k) {
        long double p = 1.0L;
        if (k == 1) {
            p = s;
        } else if (k >= 2) {
            const auto j = static_cast<long double>(k - 1);
            p = ((2.0L * j + 1.0L) * s * cur - j * prev) / (j + 1.0L);
            prev = cur;
            cur = p;
        }
        out[k] = static_cast<double>(std::sqrt(2.0L * static_cast<long double>(k) + 1.0L) * p);
    }
    return out;
}

CoeffVector BasisSet::coordinates(const Polynomial& p) const
{
    if (p.degree() > degree())
        throw DimensionError("coordinates: polynomial degree " + std::to_string(p.degree()) +
                             " exceeds basis degree " + std::to_string(degree()));
    CoeffVector mono(size());
    for (std::size_t i = 0; i < size(); ++i)
        mono[i] = p[i];
    return mat_vec(from_monomial_, mono);
}

std::vector<RationalPolynomial> orthogonal_bernoulli(int n)
{
    if (n < 0 || n > kMaxBasisDegree)
        throw std::out_of_range("basis degree " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxBasisDegree) + "]");
    // Classical Gram-Schmidt on B_0..B_n; exact, so no re-orthogonalization.
    std::vector<RationalPolynomial> ortho;
    std::vector<Rational> norms_sq;
    ortho.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const RationalPolynomial b = bernoulli_poly(k);
        RationalPolynomial q = b;
        for (std::size_t j = 0; j < ortho.size(); ++j)
            q = q - (inner_product(b, ortho[j]) / norms_sq[j]) * ortho[j];
        norms_sq.push_back(inner_product(q, q));
        ortho.push_back(std::move(q));
    }
    return ortho;
}

BasisSet orthonormal_basis(int n)
{
    const std::vector<RationalPolynomial> ortho = orthogonal_bernoulli(n);
    const std::size_t size = ortho.size();
    std::vector<Rational> norms_sq;
    for (const RationalPolynomial& q : ortho)
        norms_sq.push_back(inner_product(q, q));

    // Each B_k is monic, so q_k is monic and the leading coefficient stays positive.
    std::vector<Polynomial> phis;
    DenseMatrix to_mono(size, size);
    DenseMatrix from_mono(size, size);
    for (std::size_t k = 0; k < size; ++k) {
        const long double norm = sqrt_rational(norms_sq[k]);
        std::vector<double> c(size, 0.0);
        for (std::size_t i = 0; i < size; ++i) {
            const Rational& qi = ortho[k][i];
            c[i] = static_cast<double>(static_cast<long double>(qi.num()) / static_cast<long double>(qi.den()) / norm);
            to_mono(i, k) = c[i];
        }
        phis.emplace_back(std::move(c));
        // <x^i, phi_k> = <x^i, q_k> / |q_k|, exact up to the final division.
        for (std::size_t i = 0; i < size; ++i) {
            const Rational ip = inner_product(RationalPolynomial::monomial(static_cast<int>(i)), ortho[k]);
            from_mono(k, i) =
                static_cast<double>(static_cast<long double>(ip.num()) / static_cast<long double>(ip.den()) / norm);
        }
    }
    return BasisSet(std::move(phis), std::move(to_mono), std::move(from_mono));
}

} // namespace bide
