#pragma once

#include <functional>
#include <vector>

#include "bide/basis.hpp"
#include "bide/linalg.hpp"
#include "bide/poly.hpp"

namespace bide {

using RealFunction = std::function<double(double)>;
using KernelFunction = std::function<double(double, double)>;

/// Quadrature rule on [0,1] with strictly increasing nodes and positive weights summing to one.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int order() const noexcept { return static_cast<int>(nodes.size()); }
};

inline constexpr int kMaxQuadratureOrder = 128;

/// q-point Gauss-Legendre rule mapped to [0,1]. Rules are built once per
/// order and then shared read-only, so the returned reference stays valid.
const QuadratureRule& gauss_legendre(int q);

/// Order used when the caller does not pick one: max(40, 2n + 20).
int default_quadrature_order(int n);

/// sum_i w_i f(x_i) g(x_i); throws QuadratureError on a non-finite sample.
double inner_product(const RealFunction& f, const RealFunction& g, const QuadratureRule& quad);

/// c_k = <f, phi_k> for k = 0..n.
CoeffVector project(const RealFunction& f, const BasisSet& basis, const QuadratureRule& quad);
CoeffVector project(const RealFunction& f, const BasisSet& basis);

/// sum_k c_k phi_k as a monomial polynomial.
Polynomial reconstruct(const CoeffVector& c, const BasisSet& basis);

inline constexpr int kDiagnosticSamples = 1001;

/// max |f(x) - g(x)| over `samples` equispaced points of [0,1].
double sup_distance(const RealFunction& f, const RealFunction& g, int samples = kDiagnosticSamples);

} // namespace bide
