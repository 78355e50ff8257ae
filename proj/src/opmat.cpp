#include "bide/opmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bide/error.hpp"

namespace bide {

namespace {

void check_finite(double value, const char* what, double x)
{
    if (!std::isfinite(value))
        throw QuadratureError(std::string("non-finite ") + what + " sample at x = " + std::to_string(x));
}

} // namespace

OperationalMatrix theta(int n)
{
    if (n < 1)
        throw std::out_of_range("operational matrix needs n >= 1, got " + std::to_string(n));
    const auto size = static_cast<std::size_t>(n) + 1;
    DenseMatrix t(size, size);
    t(0, 0) = 0.5;
    t(0, 1) = 1.0 / (2.0 * std::sqrt(3.0));
    for (std::size_t i = 1; i < size; ++i) {
        const double di = static_cast<double>(i);
        t(i, i - 1) = -1.0 / (2.0 * std::sqrt((2.0 * di - 1.0) * (2.0 * di + 1.0)));
        if (i + 1 < size)
            t(i, i + 1) = 1.0 / (2.0 * std::sqrt((2.0 * di + 1.0) * (2.0 * di + 3.0)));
    }
    return {n, std::move(t)};
}

DenseMatrix convolution_matrix(int m, const DenseMatrix& theta)
{
    if (m < 1)
        throw std::out_of_range("convolution kernel power must be >= 1, got " + std::to_string(m));
    double factorial = 1.0;
    for (int i = 2; i < m; ++i)
        factorial *= i;
    return mat_scale(mat_pow(theta, m), factorial);
}

DenseMatrix product_matrix(const RealFunction& a, const BasisSet& basis, const QuadratureRule& quad)
{
    const std::size_t size = basis.size();
    DenseMatrix out(size, size);
    for (int q = 0; q < quad.order(); ++q) {
        const double x = quad.nodes[static_cast<std::size_t>(q)];
        const double ax = a(x);
        check_finite(ax, "coefficient", x);
        const std::vector<double> phi = basis.eval_all(x);
        const double w = quad.weights[static_cast<std::size_t>(q)] * ax;
        for (std::size_t j = 0; j < size; ++j)
            for (std::size_t k = 0; k < size; ++k)
                out(j, k) += w * phi[j] * phi[k];
    }
    return out;
}

DenseMatrix kernel_matrix(const RealFunction& f, const KernelFunction& kernel, const BasisSet& basis,
                          const QuadratureRule& quad)
{
    const std::size_t size = basis.size();
    DenseMatrix out(size, size);
    std::vector<double> inner(size);
    for (int a = 0; a < quad.order(); ++a) {
        const double x = quad.nodes[static_cast<std::size_t>(a)];
        const double fx = f(x);
        check_finite(fx, "weight", x);

        // g_j(x) = integral_0^x K(x,t) phi_j(t) dt with t = x s.
        std::fill(inner.begin(), inner.end(), 0.0);
        for (int b = 0; b < quad.order(); ++b) {
            const double t = x * quad.nodes[static_cast<std::size_t>(b)];
            const double kxt = kernel(x, t);
            check_finite(kxt, "kernel", x);
            const double w = x * quad.weights[static_cast<std::size_t>(b)] * kxt;
            const std::vector<double> phi_t = basis.eval_all(t);
            for (std::size_t j = 0; j < size; ++j)
                inner[j] += w * phi_t[j];
        }

        const std::vector<double> phi = basis.eval_all(x);
        const double w = quad.weights[static_cast<std::size_t>(a)] * fx;
        for (std::size_t j = 0; j < size; ++j)
            for (std::size_t k = 0; k < size; ++k)
                out(j, k) += w * inner[j] * phi[k];
    }
    return out;
}

} // namespace bide
