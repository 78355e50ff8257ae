#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bide/rational.hpp"

namespace bide {

/// Dense real polynomial in the monomial basis; coeffs()[i] multiplies x^i.
///
/// Kept in canonical form: trailing zero coefficients are trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs) : Polynomial(std::vector<double>(coeffs)) {}

    static Polynomial constant(double value) { return Polynomial({value}); }
    static Polynomial monomial(int degree, double scale = 1.0);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero past the degree.
    double operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    /// Horner evaluation.
    double operator()(double x) const noexcept;

private:
    std::vector<double> coeffs_;
};

double eval(const Polynomial& p, double x);
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, double c);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Antiderivative vanishing at zero, i.e. x -> integral_0^x p(t) dt.
Polynomial integrate(const Polynomial& p);
Polynomial differentiate(const Polynomial& p, int times = 1);
/// integral_0^1 p(x) dx.
double integral_unit(const Polynomial& p);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return add(p, scale(q, -1.0)); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(double c, const Polynomial& p) { return scale(p, c); }
inline bool operator==(const Polynomial& p, const Polynomial& q)
{
    return std::equal(p.coeffs().begin(), p.coeffs().end(), q.coeffs().begin(), q.coeffs().end());
}

/// Polynomial with exact rational coefficients; used where floating-point
/// drift is not acceptable (Bernoulli polynomials, Gram-Schmidt).
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial monomial(int degree, Rational scale = Rational(1));

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const;

    Polynomial to_polynomial() const;

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q);
RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q);
RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);
RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);

RationalPolynomial integrate(const RationalPolynomial& p);
RationalPolynomial differentiate(const RationalPolynomial& p);
Rational integral_unit(const RationalPolynomial& p);

/// Exact L2[0,1] inner product, sum_ij p_i q_j / (i + j + 1).
Rational inner_product(const RationalPolynomial& p, const RationalPolynomial& q);

} // namespace bide
