#pragma once

#include "bide/basis.hpp"
#include "bide/linalg.hpp"
#include "bide/project.hpp"

namespace bide {

/// Operational matrix of integration: integral_0^x phi(t) dt ~= theta * phi(x).
///
/// Tridiagonal apart from entry (0,0). Row i < n is exact; row n drops the
/// phi_{n+1} component of integral_0^x phi_n, which has magnitude
/// 1/(2 sqrt((2n+1)(2n+3))).
struct OperationalMatrix {
    int n = 0;
    DenseMatrix theta;
};

OperationalMatrix theta(int n);

/// (m-1)! theta^m, the basis image of integral_0^x (x-t)^(m-1) phi(t) dt
/// (Cauchy's repeated-integration formula).
DenseMatrix convolution_matrix(int m, const DenseMatrix& theta);

/// A[j][k] = <a phi_j, phi_k>, so a(x) phi(x) ~= A phi(x).
DenseMatrix product_matrix(const RealFunction& a, const BasisSet& basis, const QuadratureRule& quad);

/// Row j is the basis projection of f(x) integral_0^x K(x,t) phi_j(t) dt.
/// The inner integral uses `quad` mapped onto [0, x] at every outer node.
DenseMatrix kernel_matrix(const RealFunction& f, const KernelFunction& kernel, const BasisSet& basis,
                          const QuadratureRule& quad);

} // namespace bide
