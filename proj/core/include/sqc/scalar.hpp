#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "sqc/rational.hpp"

namespace sqc {

/// Element of F = Q(z) where z is a primitive 12th root of unity, stored as
/// c0 + c1·z + c2·z² + c3·z³ reduced modulo the minimal polynomial z⁴ = z² − 1.
/// The field contains i = z³ (i² = −1) and the primitive cube root w = z⁴ = z² − 1.
/// Equality is coefficient-wise; all operations are exact.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& c0) : c_{c0, 0, 0, 0} {}   // NOLINT: implicit from base rationals
    Scalar(int c0) : c_{Rational(c0), 0, 0, 0} {}      // NOLINT
    explicit Scalar(std::array<Rational, 4> coeffs) : c_(std::move(coeffs)) {}

    const std::array<Rational, 4>& coeffs() const { return c_; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    /// True when the element lies in Q (no z, z², z³ part).
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    /// The c0 coefficient; equals the value itself when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    Scalar operator-() const { return Scalar({-c_[0], -c_[1], -c_[2], -c_[3]}); }
    Scalar& operator+=(const Scalar& o) {
        for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return scalar_mul(a, b); }
    Scalar& operator*=(const Scalar& o) { return *this = scalar_mul(*this, o); }

    /// Product reduced modulo z⁴ − z² + 1.
    friend Scalar scalar_mul(const Scalar& a, const Scalar& b);

private:
    std::array<Rational, 4> c_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

/// Multiplicative inverse. Throws division_by_zero on zero input.
Scalar scalar_inv(const Scalar& a);

/// z^k for any integer k (negative allowed), reduced; zeta_power(12) = 1.
Scalar zeta_power(long long k);

/// i = z³, the square root of −1.
inline Scalar scalar_i() { return zeta_power(3); }

/// w = z⁴ = z² − 1, a primitive cube root of unity.
inline Scalar scalar_omega() { return zeta_power(4); }

inline Scalar operator/(const Scalar& a, const Scalar& b) { return a * scalar_inv(b); }

/// Human-readable form like "1/2 + 3z^2" (for diagnostics only).
std::string scalar_to_string(const Scalar& a);

} // namespace sqc
