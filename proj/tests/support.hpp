#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "bide/linalg.hpp"
#include "bide/poly.hpp"

namespace bide::testing {

/// Fixed-seed source for the property tests so failures reproduce.
inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(0x5eedb1deULL);
    return engine;
}

inline double uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline Polynomial random_polynomial(int degree, double scale = 1.0)
{
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (double& v : c)
        v = uniform(-scale, scale);
    if (c.back() == 0.0)
        c.back() = scale;
    return Polynomial(std::move(c));
}

inline double max_coeff_diff(const Polynomial& p, const Polynomial& q)
{
    const int d = std::max(p.degree(), q.degree());
    double worst = 0.0;
    for (int i = 0; i <= d; ++i)
        worst = std::max(worst, std::abs(p[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i)]));
    return worst;
}

/// Integral over [0,1] of p*q from the stored coefficients, accumulated in
/// double-double so the result is exact to far below double rounding.
inline double accurate_inner_product(const Polynomial& p, const Polynomial& q)
{
    double hi = 0.0;
    double lo = 0.0;
    const auto add = [&](double a, double b) {
        const double s = hi + a;
        const double bb = s - hi;
        const double err = (hi - (s - bb)) + (a - bb);
        const double t = lo + b + err;
        hi = s + t;
        lo = t - (hi - s);
    };
    for (std::size_t a = 0; a < p.coeffs().size(); ++a) {
        for (std::size_t b = 0; b < q.coeffs().size(); ++b) {
            const double ph = p.coeffs()[a] * q.coeffs()[b];
            const double pl = std::fma(p.coeffs()[a], q.coeffs()[b], -ph);
            const double d = static_cast<double>(a + b + 1);
            const double h = ph / d;
            const double r = std::fma(-h, d, ph) + pl;
            add(h, r / d);
        }
    }
    return hi + lo;
}

inline DenseMatrix random_matrix(std::size_t n, double scale = 1.0)
{
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = uniform(-scale, scale);
    return a;
}

inline double leading_block_diff(const DenseMatrix& a, const DenseMatrix& b, std::size_t size)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

} // namespace bide::testing
