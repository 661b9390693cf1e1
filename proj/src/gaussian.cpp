#include "hodgeforge/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace hodgeforge {

Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    if (a.im.is_zero() && b.im.is_zero()) return {a.re * b.re, Rational()};
    if (a.im.is_zero()) return {a.re * b.re, a.re * b.im};
    if (b.im.is_zero()) return {a.re * b.re, a.im * b.re};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Gaussian Gaussian::inverse() const {
    if (is_zero()) throw std::domain_error("Gaussian: division by zero");
    if (im.is_zero()) return {re.inverse(), Rational()};
    const Rational n = norm();
    return {re / n, -im / n};
}

std::string Gaussian::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string imag;
    if (im.is_one()) {
        imag = "i";
    } else if (im == Rational(-1)) {
        imag = "-i";
    } else {
        imag = im.to_string() + "i";
    }
    if (re.is_zero()) return imag;
    if (imag[0] == '-') return re.to_string() + imag;
    return re.to_string() + "+" + imag;
}

Gaussian times_i_power(const Gaussian& z, int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return z;
        case 1: return {-z.im, z.re};
        case 2: return -z;
        default: return {z.im, -z.re};
    }
}

Gaussian pow(const Gaussian& base, int exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Gaussian result(1);
    Gaussian b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << z.to_string(); }

}  // namespace hodgeforge
