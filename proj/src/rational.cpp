#include "bide/rational.hpp"

#include <algorithm>
#include <limits>

#include "bide/error.hpp"

namespace bide {

namespace {

int128 abs128(int128 v)
{
    return v < 0 ? -v : v;
}

int128 gcd128(int128 a, int128 b)
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

int128 checked_mul(int128 a, int128 b)
{
    int128 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("rational multiplication overflows 128 bits");
    return out;
}

int128 checked_add(int128 a, int128 b)
{
    int128 out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("rational addition overflows 128 bits");
    return out;
}

} // namespace

std::string to_string(int128 value)
{
    if (value == 0)
        return "0";
    const bool negative = value < 0;
    // Work with negative remainders so INT128_MIN does not overflow.
    std::string digits;
    while (value != 0) {
        const int digit = static_cast<int>(value % 10);
        digits.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        value /= 10;
    }
    if (negative)
        digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

int128 binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n - k + i) is always divisible by i at this point.
        result = checked_mul(result, n - k + i) / i;
    }
    return result;
}

Rational::Rational(int128 num, int128 den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const int128 g = gcd128(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

double Rational::to_double() const noexcept
{
    // Split so the conversion keeps full double precision for large parts.
    const int128 q = num_ / den_;
    const int128 r = num_ % den_;
    return static_cast<double>(q) + static_cast<double>(static_cast<long double>(r) / static_cast<long double>(den_));
}

std::string Rational::to_string() const
{
    if (den_ == 1)
        return bide::to_string(num_);
    return bide::to_string(num_) + "/" + bide::to_string(den_);
}

Rational Rational::operator-() const
{
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    const int128 g = gcd128(den_, rhs.den_);
    const int128 lhs_scale = rhs.den_ / g;
    const int128 rhs_scale = den_ / g;
    const int128 num = checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale));
    const int128 den = checked_mul(den_, lhs_scale);
    *this = Rational(num, den);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    // Cross-reduce first to keep intermediates small.
    const int128 g1 = gcd128(num_, rhs.den_);
    const int128 g2 = gcd128(rhs.num_, den_);
    const int128 a = g1 == 0 ? num_ : num_ / g1;
    const int128 d = g1 == 0 ? rhs.den_ : rhs.den_ / g1;
    const int128 c = g2 == 0 ? rhs.num_ : rhs.num_ / g2;
    const int128 b = g2 == 0 ? den_ : den_ / g2;
    *this = Rational(checked_mul(a, c), checked_mul(b, d));
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.num_ == 0)
        throw DomainError("rational division by zero");
    Rational inverse;
    inverse.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inverse.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inverse;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const Rational diff = a - b;
    if (diff.num_ < 0)
        return std::strong_ordering::less;
    if (diff.num_ > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace bide
