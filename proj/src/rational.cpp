#include "hodgeforge/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hodgeforge {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

bool fits(const mpz_class& z) { return z.fits_slong_p() && z != kMin; }

bool add_ok(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_add_overflow(a, b, &out) && out != kMin;
}

bool mul_ok(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_mul_overflow(a, b, &out) && out != kMin;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace

Rational::Rational(std::int64_t n) {
    if (n == kMin) {
        *this = from_mpq(mpq_class(mpz_class(static_cast<long>(n))));
    } else {
        num_ = n;
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (num == kMin || den == kMin) {
        mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q.canonicalize();
        *this = from_mpq(std::move(q));
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = gcd64(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational::Rational(const mpz_class& n) { *this = from_mpq(mpq_class(n)); }

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    *this = from_mpq(std::move(c));
}

Rational Rational::from_mpq(mpq_class q) {
    Rational r;
    if (fits(q.get_num()) && fits(q.get_den())) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
    } else {
        r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    // Accept the Unicode minus sign as well as ASCII '-'.
    const std::string unicode_minus = "\xE2\x88\x92";
    if (s.rfind(unicode_minus, 0) == 0) s = "-" + s.substr(unicode_minus.size());
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') return false;
        }
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
        throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return from_mpq(-*big_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0) return b;
        if (b.num_ == 0) return a;
        const std::int64_t g = gcd64(a.den_, b.den_);
        const std::int64_t ad = a.den_ / g;
        const std::int64_t bd = b.den_ / g;
        std::int64_t x, y, n;
        if (mul_ok(a.num_, bd, x) && mul_ok(b.num_, ad, y) && add_ok(x, y, n)) {
            if (n == 0) return Rational();
            const std::int64_t g2 = gcd64(n, g);
            std::int64_t d;
            if (mul_ok(ad, b.den_ / g2, d)) {
                Rational r;
                r.num_ = n / g2;
                r.den_ = d;
                return r;
            }
        }
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        const std::int64_t g1 = gcd64(a.num_, b.den_);
        const std::int64_t g2 = gcd64(b.num_, a.den_);
        std::int64_t n, d;
        if (mul_ok(a.num_ / g1, b.num_ / g2, n) && mul_ok(a.den_ / g2, b.den_ / g1, d)) {
            Rational r;
            r.num_ = n;
            r.den_ = d;
            return r;
        }
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_) {
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }
    return from_mpq(1 / *big_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const __int128 l = static_cast<__int128>(a.num_) * b.den_;
        const __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

}  // namespace hodgeforge
