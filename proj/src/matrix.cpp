#include "hodgeforge/matrix.hpp"

#include <cstdint>
#include <numeric>
#include <optional>

namespace hodgeforge {

namespace {

mpz_class mpz_from_i128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

struct ScaledInts {
    std::vector<std::int64_t> values;
    std::int64_t denominator = 1;
    std::int64_t max_abs = 0;
};

// Writes m as (integer matrix) / denominator, if everything fits in int64.
std::optional<ScaledInts> scale_to_integers(const QMatrix& m) {
    ScaledInts out;
    std::int64_t d = 1;
    for (const auto& x : m.data()) {
        if (!x.is_small()) return std::nullopt;
        if (x.is_zero()) continue;
        const std::int64_t g = std::gcd(d, x.small_den());
        std::int64_t next;
        if (__builtin_mul_overflow(d / g, x.small_den(), &next)) return std::nullopt;
        d = next;
    }
    out.denominator = d;
    out.values.reserve(m.data().size());
    for (const auto& x : m.data()) {
        if (x.is_zero()) {
            out.values.push_back(0);
            continue;
        }
        std::int64_t v;
        if (__builtin_mul_overflow(x.small_num(), d / x.small_den(), &v) || v == INT64_MIN) return std::nullopt;
        out.values.push_back(v);
        out.max_abs = std::max(out.max_abs, v < 0 ? -v : v);
    }
    return out;
}

QMatrix multiply_generic(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto arow = a.row(i);
        auto crow = c.row(i);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (arow[l].is_zero()) continue;
            const auto brow = b.row(l);
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!brow[j].is_zero()) crow[j] += arow[l] * brow[j];
        }
    }
    return c;
}

}  // namespace

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix*Matrix: shape mismatch");
    const auto sa = scale_to_integers(a);
    const auto sb = sa ? scale_to_integers(b) : std::nullopt;
    // Require every dot product to stay well inside __int128.
    const bool fast = sa && sb &&
                      static_cast<long double>(sa->max_abs) * static_cast<long double>(sb->max_abs) *
                              static_cast<long double>(a.cols() + 1) <
                          1.0e37L;
    if (!fast) return multiply_generic(a, b);

    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    std::vector<__int128> acc(n * p, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < m; ++l) {
            const std::int64_t x = sa->values[i * m + l];
            if (x == 0) continue;
            const std::int64_t* brow = &sb->values[l * p];
            __int128* crow = &acc[i * p];
            for (std::size_t j = 0; j < p; ++j) crow[j] += static_cast<__int128>(x) * brow[j];
        }
    }
    const __int128 den = static_cast<__int128>(sa->denominator) * sb->denominator;
    QMatrix c(n, p);
    for (std::size_t k = 0; k < n * p; ++k) {
        const __int128 v = acc[k];
        if (v == 0) continue;
        if (v > INT64_MIN && v <= INT64_MAX && den <= INT64_MAX) {
            c(k / p, k % p) = Rational(static_cast<std::int64_t>(v), static_cast<std::int64_t>(den));
        } else {
            c(k / p, k % p) = Rational(mpq_class(mpz_from_i128(v), mpz_from_i128(den)));
        }
    }
    return c;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix*Matrix: shape mismatch");
    const QMatrix ar = real_part(a), ai = imag_part(a);
    const QMatrix br = real_part(b), bi = imag_part(b);
    const bool a_real = ai.is_zero(), b_real = bi.is_zero();
    QMatrix re = ar * br;
    QMatrix im(a.rows(), b.cols());
    if (!a_real && !b_real) re -= ai * bi;
    if (!b_real) im += ar * bi;
    if (!a_real) im += ai * br;
    GMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = Gaussian(re(i, j), im(i, j));
    return c;
}

GMatrix complexify(const QMatrix& m) {
    GMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Gaussian(m(i, j));
    return out;
}

GVector complexify(const QVector& v) {
    GVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

QMatrix real_part(const GMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).re;
    return out;
}

QMatrix imag_part(const GMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).im;
    return out;
}

GMatrix conj(const GMatrix& m) {
    GMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conj();
    return out;
}

GMatrix adjoint(const GMatrix& m) { return conj(m).transpose(); }

GVector conj(const GVector& v) {
    GVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.conj());
    return out;
}

}  // namespace hodgeforge
