#include "hodgeforge/linalg.hpp"

#include <stdexcept>

namespace hodgeforge {

template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const F& s = a(i, j);
            if (s.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
        }
    }
    return out;
}

template <class F>
Matrix<F> kron_power(const Matrix<F>& a, int k) {
    if (k < 0) throw std::invalid_argument("kron_power: negative exponent");
    Matrix<F> out = Matrix<F>::identity(1);
    for (int i = 0; i < k; ++i) out = kron(out, a);
    return out;
}

template <class F>
Echelon<F> rref(Matrix<F> a) {
    Echelon<F> e;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            auto pr = a.row(pivot), rr = a.row(r);
            for (std::size_t j = 0; j < cols; ++j) std::swap(pr[j], rr[j]);
        }
        auto prow = a.row(r);
        const F inv = F(1) / prow[c];
        support.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (prow[j].is_zero()) continue;
            prow[j] *= inv;
            support.push_back(j);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto row = a.row(i);
            if (row[c].is_zero()) continue;
            const F factor = row[c];
            for (std::size_t j : support) row[j] -= factor * prow[j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(a);
    return e;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
    return rref(a).pivots.size();
}

template <class F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& a) {
    const auto e = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<Vector<F>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector<F> v(n);
        v[free] = F(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const F& x = e.reduced(r, free);
            if (!x.is_zero()) v[e.pivots[r]] = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::vector<Vector<F>> eigenspace(const Matrix<F>& a, const F& lambda) {
    if (!a.is_square()) throw std::invalid_argument("eigenspace: matrix not square");
    Matrix<F> shifted = a;
    for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= lambda;
    return kernel_basis(shifted);
}

template <class F>
bool is_idempotent(const Matrix<F>& p) {
    if (!p.is_square()) throw std::invalid_argument("is_idempotent: matrix not square");
    return p * p == p;
}

template <class F>
std::size_t commutant_dimension(std::span<const Matrix<F>> mats) {
    if (mats.empty()) throw std::invalid_argument("commutant_dimension: empty family");
    const std::size_t n = mats.front().rows();
    for (const auto& m : mats)
        if (!m.is_square() || m.rows() != n) throw std::invalid_argument("commutant_dimension: size mismatch");
    // Unknown X(r, s) sits at column r * n + s; equation (i, j) of (XA - AX).
    Matrix<F> system(mats.size() * n * n, n * n);
    std::size_t eq = 0;
    for (const auto& a : mats) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j, ++eq) {
                for (std::size_t l = 0; l < n; ++l) {
                    if (!a(l, j).is_zero()) system(eq, i * n + l) += a(l, j);
                    if (!a(i, l).is_zero()) system(eq, l * n + j) -= a(i, l);
                }
            }
        }
    }
    return n * n - rank(system);
}

template <class F>
Matrix<F> column_basis(const Matrix<F>& a) {
    const auto e = rref(a);
    Matrix<F> out(a.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, k) = a(i, e.pivots[k]);
    return out;
}

template <class F>
std::optional<Matrix<F>> solve_full_column_rank(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    const std::size_t n = a.cols(), m = b.cols();
    Matrix<F> aug(a.rows(), n + m);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = b(i, j);
    }
    const auto e = rref(std::move(aug));
    if (e.pivots.size() < n) throw std::invalid_argument("solve: matrix lacks full column rank");
    for (std::size_t r = 0; r < n; ++r)
        if (e.pivots[r] != r) throw std::invalid_argument("solve: matrix lacks full column rank");
    if (e.pivots.size() > n) return std::nullopt;
    Matrix<F> x(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) x(i, j) = e.reduced(i, n + j);
    return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
    auto x = solve_full_column_rank(a, Matrix<F>::identity(a.rows()));
    if (!x) throw std::domain_error("inverse: singular matrix");
    return *x;
}

bool is_positive_definite(const GMatrix& h) {
    if (!h.is_square()) throw std::invalid_argument("is_positive_definite: matrix not square");
    const std::size_t n = h.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(h(i, j) == h(j, i).conj())) return false;
    GMatrix a = h;
    for (std::size_t k = 0; k < n; ++k) {
        const Gaussian& d = a(k, k);
        if (!d.is_real() || d.re.sign() <= 0) return false;
        const Gaussian inv = d.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Gaussian factor = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j)
                if (!a(k, j).is_zero()) a(i, j) -= factor * a(k, j);
        }
    }
    return true;
}

#define HODGEFORGE_INSTANTIATE(F)                                                                  \
    template Matrix<F> kron(const Matrix<F>&, const Matrix<F>&);                                   \
    template Matrix<F> kron_power(const Matrix<F>&, int);                                          \
    template Echelon<F> rref(Matrix<F>);                                                           \
    template std::size_t rank(const Matrix<F>&);                                                   \
    template std::vector<Vector<F>> kernel_basis(const Matrix<F>&);                                \
    template std::vector<Vector<F>> eigenspace(const Matrix<F>&, const F&);                        \
    template bool is_idempotent(const Matrix<F>&);                                                 \
    template std::size_t commutant_dimension(std::span<const Matrix<F>>);                          \
    template Matrix<F> column_basis(const Matrix<F>&);                                             \
    template std::optional<Matrix<F>> solve_full_column_rank(const Matrix<F>&, const Matrix<F>&); \
    template Matrix<F> inverse(const Matrix<F>&);

HODGEFORGE_INSTANTIATE(Rational)
HODGEFORGE_INSTANTIATE(Gaussian)

#undef HODGEFORGE_INSTANTIATE

}  // namespace hodgeforge
