#include "bide/poly.hpp"

#include <algorithm>

namespace bide {

namespace {

template <typename T>
void trim(std::vector<T>& c)
{
    while (!c.empty() && c.back() == T(0))
        c.pop_back();
}

} // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    trim(coeffs_);
}

Polynomial Polynomial::monomial(int degree, double scale)
{
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = scale;
    return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const noexcept
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double eval(const Polynomial& p, double x)
{
    return p(x);
}

Polynomial add(const Polynomial& p, const Polynomial& q)
{
    std::vector<double> c(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = p[i] + q[i];
    return Polynomial(std::move(c));
}

Polynomial scale(const Polynomial& p, double s)
{
    std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
    for (double& v : c)
        v *= s;
    return Polynomial(std::move(c));
}

Polynomial mul(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() || q.is_zero())
        return {};
    std::vector<double> c(p.coeffs().size() + q.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            c[i + j] += p[i] * q[j];
    return Polynomial(std::move(c));
}

Polynomial integrate(const Polynomial& p)
{
    if (p.is_zero())
        return {};
    std::vector<double> c(p.coeffs().size() + 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        c[i + 1] = p[i] / static_cast<double>(i + 1);
    return Polynomial(std::move(c));
}

Polynomial differentiate(const Polynomial& p, int times)
{
    Polynomial out = p;
    for (int t = 0; t < times && !out.is_zero(); ++t) {
        std::vector<double> c(out.coeffs().size() - 1);
        for (std::size_t i = 1; i < out.coeffs().size(); ++i)
            c[i - 1] = static_cast<double>(i) * out[i];
        out = Polynomial(std::move(c));
    }
    return out;
}

double integral_unit(const Polynomial& p)
{
    double acc = 0.0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc += p[i] / static_cast<double>(i + 1);
    return acc;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim(coeffs_);
}

RationalPolynomial RationalPolynomial::monomial(int degree, Rational scale)
{
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = scale;
    return RationalPolynomial(std::move(c));
}

Rational RationalPolynomial::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial RationalPolynomial::to_polynomial() const
{
    std::vector<double> c;
    c.reserve(coeffs_.size());
    for (const Rational& r : coeffs_)
        c.push_back(r.to_double());
    return Polynomial(std::move(c));
}

RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q)
{
    std::vector<Rational> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = p[i] + q[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& p, const RationalPolynomial& q)
{
    return p + Rational(-1) * q;
}

RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q)
{
    if (p.is_zero() || q.is_zero())
        return {};
    std::vector<Rational> c(p.coeffs().size() + q.coeffs().size() - 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            c[i + j] += p[i] * q[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p)
{
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    for (Rational& v : c)
        v *= s;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial integrate(const RationalPolynomial& p)
{
    if (p.is_zero())
        return {};
    std::vector<Rational> c(p.coeffs().size() + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        c[i + 1] = p[i] / Rational(static_cast<int128>(i + 1));
    return RationalPolynomial(std::move(c));
}

RationalPolynomial differentiate(const RationalPolynomial& p)
{
    if (p.is_zero())
        return {};
    std::vector<Rational> c(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        c[i - 1] = Rational(static_cast<int128>(i)) * p[i];
    return RationalPolynomial(std::move(c));
}

Rational integral_unit(const RationalPolynomial& p)
{
    Rational acc;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        acc += p[i] / Rational(static_cast<int128>(i + 1));
    return acc;
}

Rational inner_product(const RationalPolynomial& p, const RationalPolynomial& q)
{
    Rational acc;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p[i].is_zero())
            continue;
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            acc += p[i] * q[j] / Rational(static_cast<int128>(i + j + 1));
    }
    return acc;
}

} // namespace bide
