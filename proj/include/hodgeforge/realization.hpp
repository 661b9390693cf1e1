#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hodgeforge/linalg.hpp"
#include "hodgeforge/matrix.hpp"
#include "hodgeforge/torus_rep.hpp"

namespace hodgeforge {

// Raised when a torus element cannot separate the characters of V^{⊗k}.
class DegenerateElementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a construction violates rationality, orthogonality or capacity.
class RealizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rational point (x, y) != (0, 0) of Res_{Q(i)/Q} G_m, acting on V = H^1(E)
// in the basis v1, v2 by [[x, -y], [y, x]].
class TorusElement {
public:
    TorusElement(Rational x, Rational y);

    [[nodiscard]] const Rational& x() const noexcept { return x_; }
    [[nodiscard]] const Rational& y() const noexcept { return y_; }
    [[nodiscard]] QMatrix matrix() const;
    // z = x + iy, the eigenvalue on dz.
    [[nodiscard]] Gaussian z() const { return {x_, y_}; }
    // Value z^a zbar^b of the character (a, b).
    [[nodiscard]] Gaussian value(Character c) const;
    [[nodiscard]] std::string to_string() const;

private:
    Rational x_;
    Rational y_;
};

struct BaseStructure {
    GVector dz;      // i v1 + v2
    GVector dz_bar;  // -i v1 + v2
};

BaseStructure base_structure();

// The alternating form on V with Q(v1, v2) = -1.
QMatrix base_polarization();

// t^{⊗k} as an explicit 2^k x 2^k matrix.
QMatrix action_matrix(const TorusElement& t, int k);

// M^{⊗k} X and X M^{⊗k} for a 2x2 matrix M, computed one tensor factor at a
// time. X must have 2^k rows (resp. columns); k = 0 is the identity.
template <class F>
Matrix<F> apply_tensor_power_left(const Matrix<F>& m, int k, Matrix<F> x);
template <class F>
Matrix<F> apply_tensor_power_right(Matrix<F> x, const Matrix<F>& m, int k);
template <class F>
Vector<F> apply_tensor_power(const Matrix<F>& m, int k, Vector<F> v);

// One frame vector: an eigenvector of character `type`. conj(vec) equals
// conj_scalar times the vector of its partner (the adjacent entry of
// conjugate type, or itself for a Tate vector).
struct FrameVector {
    Character type;
    GVector vec;
    Gaussian conj_scalar{1};
};

// Index of each frame entry's partner; throws if the frame is not laid out as
// adjacent (p,q),(q,p) pairs and single Tate entries.
std::vector<std::size_t> frame_partners(const std::vector<FrameVector>& frame);

// A sub-Hodge structure of V^{⊗k} cut out by a rational idempotent.
// For k = 0 the ambient space is Q^dim with trivial torus action.
struct RealizedObject {
    int k = 0;
    std::size_t dim = 1;
    QMatrix projector;
    std::vector<FrameVector> frame;
    std::vector<SimpleLabel> copies;  // one per simple summand, in frame order
    RepObject formal;
};

// Orthogonal projector onto the span of a Hermitian-orthogonal,
// conjugation-stable frame; throws RealizationError unless it is rational.
QMatrix projector_from_frame(std::size_t dim, const std::vector<FrameVector>& frame);

// H(p,q) inside V^{⊗(p+q)}: span of dz^{⊗(p-q)} ⊗ ω^{⊗q} and its conjugate,
// with ω = v1⊗v2 - v2⊗v1.
RealizedObject realize_simple(int p, int q);

// Several simples of weight k sharing one V^{⊗k}. Copies are spanned by
// tensor words in dz and dz̄; the number of copies of each label is bounded by
// the number of available words.
RealizedObject realize_packed(int k, const std::vector<std::pair<SimpleLabel, std::int64_t>>& contents);

// k = 0: identity on Q^d, d copies of Q(0).
RealizedObject realize_trivial(std::size_t d);

// Eigen-decomposition of a torus element on V, computed exactly.
struct EigenData {
    GMatrix basis;      // columns: eigenvectors for z and for zbar
    GMatrix basis_inv;
    Gaussian z;
    Gaussian z_bar;
    GMatrix conj_in_basis;  // K with conj(basis) = basis * K
};

EigenData eigen_data(const TorusElement& t);

// Throws DegenerateElementError unless z^j zbar^(k-j), j = 0..k, are distinct.
void require_separating(const TorusElement& t, int k);

// image(P ⊗ C) ∩ (eigenspace of t^{⊗k} for character (k-q, q)), for each q,
// expressed in eigen coordinates (the tensor basis built from eigen_data).
struct HodgePieces {
    EigenData eigen;
    int k = 0;
    std::vector<std::vector<GVector>> by_q;
};

HodgePieces hodge_pieces(const QMatrix& projector, int k, const TorusElement& t);

HodgeNumbers realized_hodge_numbers(const QMatrix& projector, int k, const TorusElement& t);
HodgeNumbers realized_hodge_numbers(const RealizedObject& r, const TorusElement& t);

bool check_equivariance(const QMatrix& projector, int k, const TorusElement& t);
bool check_equivariance(const RealizedObject& r, const TorusElement& t);

struct PolarizationData {
    std::vector<int> signs;  // per simple copy, ±1
    QMatrix gram;            // on the rational descent basis of the frame
    bool hodge_riemann_1 = false;
    bool hodge_riemann_2 = false;
};

// Gram matrix of the k-fold tensor power of base_polarization() on R, with
// per-copy sign normalization, and both Hodge–Riemann relations checked on
// R's frame.
PolarizationData polarization(const RealizedObject& r);

// The rational basis {f + conj f, i (f - conj f)} (or f alone for Tate
// vectors) underlying a frame, one group per copy.
std::vector<QVector> descent_basis(const std::vector<FrameVector>& frame);

// Checks both Hodge–Riemann relations for the form sign * Q^{⊗k}, where the
// vectors are given in the coordinates described by `form2` (the 2x2 matrix of
// Q in those coordinates) and `conj2` (conjugation acts as conj2^{⊗k} ∘ conj).
struct HodgeRiemannResult {
    bool first = true;
    bool second = true;
};

HodgeRiemannResult check_hodge_riemann(const std::vector<std::pair<Character, GVector>>& vectors, int k,
                                       const GMatrix& form2, const GMatrix& conj2, int sign);

struct EndomorphismComparison {
    std::size_t commutant = 0;
    std::int64_t expected = 0;
    [[nodiscard]] bool ok() const { return static_cast<std::int64_t>(commutant) == expected; }
};

// Restricted action of t on image(P) in a rational basis of that image.
QMatrix restricted_action(const QMatrix& projector, int k, const TorusElement& t);

EndomorphismComparison endomorphism_dims(const RealizedObject& r, const TorusElement& t);
bool endomorphism_check(const RealizedObject& r, const TorusElement& t);

}  // namespace hodgeforge
