#pragma once

#include <iosfwd>
#include <string>

#include "hodgeforge/rational.hpp"

namespace hodgeforge {

// Element re + i*im of Q(i).
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(std::int64_t r) : re(r) {}         // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
    [[nodiscard]] bool is_real() const noexcept { return im.is_zero(); }
    [[nodiscard]] Gaussian conj() const { return {re, -im}; }
    [[nodiscard]] Rational norm() const { return re * re + im * im; }
    [[nodiscard]] Gaussian inverse() const;
    [[nodiscard]] std::string to_string() const;

    Gaussian operator-() const { return {-re, -im}; }
    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b);
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.inverse(); }

    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) noexcept {
        return a.re == b.re && a.im == b.im;
    }
};

// Multiplication by i^e for any integer e.
Gaussian times_i_power(const Gaussian& z, int e);

Gaussian pow(const Gaussian& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

// Conjugation hooks so generic code can treat both fields uniformly.
inline Rational conjugate(const Rational& r) { return r; }
inline Gaussian conjugate(const Gaussian& z) { return z.conj(); }

}  // namespace hodgeforge
