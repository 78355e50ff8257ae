#pragma once

#include <vector>

#include "bide/linalg.hpp"
#include "bide/poly.hpp"
#include "bide/rational.hpp"

namespace bide {

/// Highest supported basis degree; exact Gram-Schmidt stays inside 128-bit rationals up to here.
inline constexpr int kMaxBasisDegree = 16;

/// Bernoulli numbers B_0(0)..B_n(0) from the standard recurrence
/// B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k.
std::vector<Rational> bernoulli_numbers(int n);

/// Bernoulli numbers from Kronecker's double sum,
///   B_n = -sum_{j=1}^{n+1} (-1)^j/j C(n+1,j) sum_{k=0}^{j-1} k^n,
/// with 0^0 = 1. The inner sum stops at j-1; summing to j gives B_0 = 2.
/// Independent of the recurrence; kept as a cross-check.
std::vector<Rational> bernoulli_numbers_kronecker(int n);

/// B_m(x) = sum_j C(m,j) B_j(0) x^(m-j), exactly.
RationalPolynomial bernoulli_poly(int m);

/// sqrt(2k+1) P_k(2x-1) expanded in monomials via the Legendre three-term recurrence.
Polynomial shifted_legendre(int k);

/// Orthonormal polynomials phi_0..phi_n on L2[0,1] obtained from the
/// Bernoulli polynomials by exact Gram-Schmidt.
class BasisSet {
public:
    BasisSet(std::vector<Polynomial> phis, DenseMatrix to_monomial, DenseMatrix from_monomial);

    int degree() const noexcept { return static_cast<int>(phis_.size()) - 1; }
    std::size_t size() const noexcept { return phis_.size(); }

    const std::vector<Polynomial>& phis() const noexcept { return phis_; }
    const Polynomial& operator[](std::size_t k) const { return phis_[k]; }

    /// Column k holds the monomial coefficients of phi_k.
    const DenseMatrix& to_monomial() const noexcept { return to_monomial_; }
    /// Inverse of to_monomial(): column i holds the basis coordinates of x^i.
    const DenseMatrix& from_monomial() const noexcept { return from_monomial_; }

    /// Evaluates phi_0(x)..phi_n(x) by the three-term recurrence, which is
    /// far more accurate than Horner on phis() for n beyond about 8.
    std::vector<double> eval_all(double x) const;

    /// Basis coordinates of a polynomial of degree <= n.
    CoeffVector coordinates(const Polynomial& p) const;

private:
    std::vector<Polynomial> phis_;
    DenseMatrix to_monomial_;
    DenseMatrix from_monomial_;
};

/// Monic orthogonal polynomials q_0..q_n from exact Gram-Schmidt on
/// B_0..B_n, before normalization. Throws std::out_of_range unless
/// 0 <= n <= kMaxBasisDegree.
std::vector<RationalPolynomial> orthogonal_bernoulli(int n);

/// phi_k = q_k / |q_k|, with the square root taken in floating point.
/// Throws std::out_of_range unless 0 <= n <= kMaxBasisDegree.
BasisSet orthonormal_basis(int n);

} // namespace bide
