#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hodgeforge/matrix.hpp"

namespace hodgeforge {

// Kronecker product. Row/column index of the result is (i_a * rows_b + i_b),
// i.e. the left factor is the most significant digit.
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b);

// k-fold Kronecker power; kron_power(a, 0) is the 1x1 identity.
template <class F>
Matrix<F> kron_power(const Matrix<F>& a, int k);

template <class F>
struct Echelon {
    Matrix<F> reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

// Reduced row echelon form; the pivot in each column is the first nonzero
// entry at or below the current row.
template <class F>
Echelon<F> rref(Matrix<F> a);

template <class F>
std::size_t rank(const Matrix<F>& a);

// Basis of {x : a x = 0}. One vector per free column, in increasing column
// order, with that free variable set to 1.
template <class F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& a);

// kernel_basis(a - lambda I).
template <class F>
std::vector<Vector<F>> eigenspace(const Matrix<F>& a, const F& lambda);

template <class F>
bool is_idempotent(const Matrix<F>& p);

// Dimension of {X : X A = A X for all A in mats}, by solving the linear
// system in the n^2 entries of X directly.
template <class F>
std::size_t commutant_dimension(std::span<const Matrix<F>> mats);

// The pivot columns of a: a basis of its column space.
template <class F>
Matrix<F> column_basis(const Matrix<F>& a);

// Unique X with a X = b when a has full column rank; nullopt if the system is
// inconsistent.
template <class F>
std::optional<Matrix<F>> solve_full_column_rank(const Matrix<F>& a, const Matrix<F>& b);

template <class F>
Matrix<F> inverse(const Matrix<F>& a);

// Hermitian (or, over Q, symmetric) positive definiteness, via the signs of
// the pivots of a symmetric elimination.
bool is_positive_definite(const GMatrix& h);

}  // namespace hodgeforge
