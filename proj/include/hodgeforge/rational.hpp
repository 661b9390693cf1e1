#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hodgeforge {

// Exact rational number in lowest terms with positive denominator.
//
// Values whose numerator and denominator fit in an int64 are stored inline;
// anything larger lives in a shared, immutable mpq_class. The representation
// is canonical: a value is stored big only if it does not fit inline, so
// equality never has to compare across representations.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpz_class& n);
    explicit Rational(const mpq_class& q);

    // Accepts "p", "p/q", optional leading '-' (or U+2212 minus sign).
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const noexcept;

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    // Only meaningful when is_small().
    [[nodiscard]] std::int64_t small_num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t small_den() const noexcept { return den_; }

    [[nodiscard]] std::string to_string() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    static Rational from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, int exponent);

}  // namespace hodgeforge
