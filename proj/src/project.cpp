#include "bide/project.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bide/error.hpp"

namespace bide {

namespace {

struct LegendreValue {
    long double value;
    long double derivative;
};

// P_q(x) and P_q'(x) on [-1,1] by the three-term recurrence.
LegendreValue legendre(int q, long double x)
{
    long double p0 = 1.0L;
    long double p1 = x;
    for (int k = 2; k <= q; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, q * (x * p1 - p0) / (x * x - 1.0L)};
}

QuadratureRule build_gauss_legendre(int q)
{
    // Roots are symmetric about 0, so only the positive half is solved by Newton.
    std::vector<double> nodes(static_cast<std::size_t>(q));
    std::vector<double> weights(static_cast<std::size_t>(q));
    for (int i = 0; i < (q + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (q + 0.5L));
        for (int iter = 0; iter < 100; ++iter) {
            const LegendreValue p = legendre(q, x);
            const long double step = p.value / p.derivative;
            x -= step;
            if (std::abs(step) < 1e-19L)
                break;
        }
        const long double d = legendre(q, x).derivative;
        const long double w = 2.0L / ((1.0L - x * x) * d * d);
        const auto hi = static_cast<std::size_t>(q - 1 - i);
        const auto lo = static_cast<std::size_t>(i);
        nodes[hi] = static_cast<double>(0.5L + 0.5L * x);
        nodes[lo] = static_cast<double>(0.5L - 0.5L * x);
        weights[hi] = static_cast<double>(0.5L * w);
        weights[lo] = static_cast<double>(0.5L * w);
    }
    if (q % 2 == 1)
        nodes[static_cast<std::size_t>(q / 2)] = 0.5;
    return QuadratureRule{std::move(nodes), std::move(weights)};
}

struct RuleTable {
    std::array<QuadratureRule, kMaxQuadratureOrder + 1> rules;

    RuleTable()
    {
        for (int q = 1; q <= kMaxQuadratureOrder; ++q)
            rules[static_cast<std::size_t>(q)] = build_gauss_legendre(q);
    }
};

void check_finite(double value, double x)
{
    if (!std::isfinite(value))
        throw QuadratureError("non-finite integrand sample at x = " + std::to_string(x));
}

} // namespace

const QuadratureRule& gauss_legendre(int q)
{
    if (q < 1 || q > kMaxQuadratureOrder)
        throw std::out_of_range("quadrature order " + std::to_string(q) + " outside [1, " +
                                std::to_string(kMaxQuadratureOrder) + "]");
    static const RuleTable table;
    return table.rules[static_cast<std::size_t>(q)];
}

int default_quadrature_order(int n)
{
    return std::max(40, 2 * n + 20);
}

double inner_product(const RealFunction& f, const RealFunction& g, const QuadratureRule& quad)
{
    double acc = 0.0;
    for (int i = 0; i < quad.order(); ++i) {
        const double x = quad.nodes[static_cast<std::size_t>(i)];
        const double fx = f(x);
        const double gx = g(x);
        check_finite(fx, x);
        check_finite(gx, x);
        acc += quad.weights[static_cast<std::size_t>(i)] * fx * gx;
    }
    return acc;
}

CoeffVector project(const RealFunction& f, const BasisSet& basis, const QuadratureRule& quad)
{
    std::vector<long double> acc(basis.size(), 0.0L);
    for (int i = 0; i < quad.order(); ++i) {
        const double x = quad.nodes[static_cast<std::size_t>(i)];
        const double fx = f(x);
        check_finite(fx, x);
        const long double wf = static_cast<long double>(quad.weights[static_cast<std::size_t>(i)]) * fx;
        const std::vector<double> phi = basis.eval_all(x);
        for (std::size_t k = 0; k < basis.size(); ++k)
            acc[k] += wf * phi[k];
    }
    CoeffVector c(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        c[k] = static_cast<double>(acc[k]);
    return c;
}

CoeffVector project(const RealFunction& f, const BasisSet& basis)
{
    return project(f, basis, gauss_legendre(default_quadrature_order(basis.degree())));
}

Polynomial reconstruct(const CoeffVector& c, const BasisSet& basis)
{
    if (c.size() != basis.size())
        throw DimensionError("reconstruct: " + std::to_string(c.size()) + " coefficients for a basis of size " +
                             std::to_string(basis.size()));
    return Polynomial(mat_vec(basis.to_monomial(), c).vector());
}

double sup_distance(const RealFunction& f, const RealFunction& g, int samples)
{
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        worst = std::max(worst, std::abs(f(x) - g(x)));
    }
    return worst;
}

} // namespace bide
