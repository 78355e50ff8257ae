#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace bide {

using int128 = __int128;

/// Exact rational number on a 128-bit numerator/denominator pair.
///
/// Always stored in lowest terms with a positive denominator. Every
/// arithmetic operation is overflow-checked and throws OverflowError
/// instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(int128 num, int128 den = 1);
    Rational(int value) : Rational(static_cast<int128>(value)) {}
    Rational(long value) : Rational(static_cast<int128>(value)) {}
    Rational(long long value) : Rational(static_cast<int128>(value)) {}

    int128 num() const noexcept { return num_; }
    int128 den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    double to_double() const noexcept;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    int128 num_ = 0;
    int128 den_ = 1;
};

std::string to_string(int128 value);

/// Binomial coefficient C(n, k) as an exact integer.
int128 binomial(int n, int k);

} // namespace bide
