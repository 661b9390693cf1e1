#include "hodgeforge/realization.hpp"

#include <bit>
#include <sstream>

namespace hodgeforge {

namespace {

template <class F>
Vector<F> kron_vec(const Vector<F>& a, const Vector<F>& b) {
    Vector<F> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
}

template <class F>
F dot(const Vector<F>& a, const Vector<F>& b) {
    F acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

// Hermitian inner product sum conj(a_i) b_i.
Gaussian hdot(const GVector& a, const GVector& b) {
    Gaussian acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i].conj() * b[i];
    return acc;
}

std::size_t ambient_dim(int k) {
    if (k < 0 || k > 24) throw std::invalid_argument("tensor power out of range");
    return std::size_t{1} << k;
}

void require_rows(std::size_t rows, int k, const char* what) {
    if (k > 0 && rows != ambient_dim(k)) throw std::invalid_argument(std::string(what) + ": size is not 2^k");
}

// The tensor word in {e0, e1} over V with letters from `index` (bit k-1-f is
// factor f).
GVector word_vector(const GVector& e0, const GVector& e1, int k, std::size_t index) {
    GVector v{Gaussian(1)};
    for (int f = 0; f < k; ++f) {
        const bool letter = (index >> (k - 1 - f)) & 1U;
        v = kron_vec(v, letter ? e1 : e0);
    }
    return v;
}

std::size_t complement(std::size_t index, int k) { return index ^ (ambient_dim(k) - 1); }

QVector real_vector(const GVector& v, const char* what) {
    QVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_real()) throw RealizationError(std::string(what) + ": vector is not rational");
        out.push_back(x.re);
    }
    return out;
}

}  // namespace

TorusElement::TorusElement(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.is_zero() && y_.is_zero()) throw std::invalid_argument("TorusElement: (x, y) must be nonzero");
}

QMatrix TorusElement::matrix() const { return QMatrix{{x_, -y_}, {y_, x_}}; }

Gaussian TorusElement::value(Character c) const { return pow(z(), c.a) * pow(z().conj(), c.b); }

std::string TorusElement::to_string() const { return "(" + x_.to_string() + "," + y_.to_string() + ")"; }

BaseStructure base_structure() {
    return {GVector{Gaussian::i(), Gaussian(1)}, GVector{-Gaussian::i(), Gaussian(1)}};
}

QMatrix base_polarization() { return QMatrix{{0, -1}, {1, 0}}; }

QMatrix action_matrix(const TorusElement& t, int k) { return kron_power(t.matrix(), k); }

template <class F>
Matrix<F> apply_tensor_power_left(const Matrix<F>& m, int k, Matrix<F> x) {
    if (k == 0) return x;
    require_rows(x.rows(), k, "apply_tensor_power_left");
    const std::size_t n = x.rows();
    for (int f = 0; f < k; ++f) {
        const std::size_t bit = std::size_t{1} << (k - 1 - f);
        for (std::size_t i0 = 0; i0 < n; ++i0) {
            if (i0 & bit) continue;
            const std::size_t i1 = i0 | bit;
            auto r0 = x.row(i0);
            auto r1 = x.row(i1);
            for (std::size_t c = 0; c < x.cols(); ++c) {
                if (r0[c].is_zero() && r1[c].is_zero()) continue;
                F a = m(0, 0) * r0[c] + m(0, 1) * r1[c];
                F b = m(1, 0) * r0[c] + m(1, 1) * r1[c];
                r0[c] = std::move(a);
                r1[c] = std::move(b);
            }
        }
    }
    return x;
}

template <class F>
Matrix<F> apply_tensor_power_right(Matrix<F> x, const Matrix<F>& m, int k) {
    if (k == 0) return x;
    require_rows(x.cols(), k, "apply_tensor_power_right");
    const std::size_t n = x.cols();
    for (int f = 0; f < k; ++f) {
        const std::size_t bit = std::size_t{1} << (k - 1 - f);
        for (std::size_t r = 0; r < x.rows(); ++r) {
            auto row = x.row(r);
            for (std::size_t c0 = 0; c0 < n; ++c0) {
                if (c0 & bit) continue;
                const std::size_t c1 = c0 | bit;
                if (row[c0].is_zero() && row[c1].is_zero()) continue;
                F a = row[c0] * m(0, 0) + row[c1] * m(1, 0);
                F b = row[c0] * m(0, 1) + row[c1] * m(1, 1);
                row[c0] = std::move(a);
                row[c1] = std::move(b);
            }
        }
    }
    return x;
}

template <class F>
Vector<F> apply_tensor_power(const Matrix<F>& m, int k, Vector<F> v) {
    Matrix<F> col = Matrix<F>::from_columns(v.size(), std::span<const Vector<F>>(&v, 1));
    return apply_tensor_power_left(m, k, std::move(col)).column(0);
}

template QMatrix apply_tensor_power_left(const QMatrix&, int, QMatrix);
template GMatrix apply_tensor_power_left(const GMatrix&, int, GMatrix);
template QMatrix apply_tensor_power_right(QMatrix, const QMatrix&, int);
template GMatrix apply_tensor_power_right(GMatrix, const GMatrix&, int);
template QVector apply_tensor_power(const QMatrix&, int, QVector);
template GVector apply_tensor_power(const GMatrix&, int, GVector);

std::vector<std::size_t> frame_partners(const std::vector<FrameVector>& frame) {
    std::vector<std::size_t> partner(frame.size());
    for (std::size_t i = 0; i < frame.size();) {
        const Character c = frame[i].type;
        if (c.a == c.b) {
            partner[i] = i;
            i += 1;
        } else if (c.a > c.b && i + 1 < frame.size() && frame[i + 1].type == c.conjugate()) {
            partner[i] = i + 1;
            partner[i + 1] = i;
            i += 2;
        } else {
            throw RealizationError("frame is not laid out as conjugate pairs");
        }
    }
    return partner;
}

QMatrix projector_from_frame(std::size_t dim, const std::vector<FrameVector>& frame) {
    for (std::size_t a = 0; a < frame.size(); ++a) {
        if (frame[a].vec.size() != dim) throw RealizationError("frame vector has wrong length");
        for (std::size_t b = a + 1; b < frame.size(); ++b)
            if (!hdot(frame[a].vec, frame[b].vec).is_zero())
                throw RealizationError("frame vectors are not Hermitian-orthogonal");
    }
    GMatrix p(dim, dim);
    for (const auto& fv : frame) {
        const Gaussian norm = hdot(fv.vec, fv.vec);
        if (norm.is_zero()) throw RealizationError("zero frame vector");
        const Gaussian inv = norm.inverse();
        for (std::size_t i = 0; i < dim; ++i) {
            if (fv.vec[i].is_zero()) continue;
            const Gaussian left = fv.vec[i] * inv;
            for (std::size_t j = 0; j < dim; ++j)
                if (!fv.vec[j].is_zero()) p(i, j) += left * fv.vec[j].conj();
        }
    }
    if (!imag_part(p).is_zero()) throw RealizationError("projector is not rational");
    return real_part(p);
}

RealizedObject realize_simple(int p, int q) {
    if (q < 0 || p < q) throw std::invalid_argument("realize_simple: need p >= q >= 0");
    const int n = p - q;
    const auto base = base_structure();
    const GVector omega{Gaussian(0), Gaussian(1), Gaussian(-1), Gaussian(0)};

    GVector f{Gaussian(1)};
    for (int i = 0; i < n; ++i) f = kron_vec(f, base.dz);
    for (int i = 0; i < q; ++i) f = kron_vec(f, omega);

    RealizedObject r;
    r.k = p + q;
    r.dim = ambient_dim(r.k);
    if (n > 0) {
        r.frame.push_back({Character{p, q}, f, Gaussian(1)});
        r.frame.push_back({Character{q, p}, conj(f), Gaussian(1)});
    } else {
        r.frame.push_back({Character{p, p}, f, Gaussian(1)});
    }
    r.projector = projector_from_frame(r.dim, r.frame);
    r.copies = {SimpleLabel{p, q}};
    r.formal = simple(p, q);
    return r;
}

RealizedObject realize_packed(int k, const std::vector<std::pair<SimpleLabel, std::int64_t>>& contents) {
    if (k < 1) throw std::invalid_argument("realize_packed: need k >= 1");
    const auto base = base_structure();
    RealizedObject r;
    r.k = k;
    r.dim = ambient_dim(k);
    for (const auto& [label, count] : contents) {
        if (label.weight() != k || label.q < 0 || label.p < label.q)
            throw std::invalid_argument("realize_packed: label does not have weight k");
        std::int64_t placed = 0;
        for (std::size_t w = 0; w < r.dim && placed < count; ++w) {
            if (std::popcount(w) != label.q) continue;
            if (label.p > label.q) {
                const GVector vec = word_vector(base.dz, base.dz_bar, k, w);
                r.frame.push_back({Character{label.p, label.q}, vec, Gaussian(1)});
                r.frame.push_back({Character{label.q, label.p}, conj(vec), Gaussian(1)});
                r.copies.push_back(label);
                ++placed;
            } else {
                // Pair w with its complement; w starts with dz.
                if (w & (std::size_t{1} << (k - 1))) continue;
                const GVector a = word_vector(base.dz, base.dz_bar, k, w);
                const GVector b = word_vector(base.dz, base.dz_bar, k, complement(w, k));
                GVector sum(r.dim), diff(r.dim);
                for (std::size_t i = 0; i < r.dim; ++i) {
                    sum[i] = a[i] + b[i];
                    diff[i] = Gaussian::i() * (a[i] - b[i]);
                }
                for (auto* v : {&sum, &diff}) {
                    if (placed == count) break;
                    r.frame.push_back({Character{label.p, label.p}, *v, Gaussian(1)});
                    r.copies.push_back(label);
                    ++placed;
                }
            }
        }
        if (placed < count) throw RealizationError("realize_packed: capacity exceeded");
        r.formal.add(label, count);
    }
    r.projector = projector_from_frame(r.dim, r.frame);
    return r;
}

RealizedObject realize_trivial(std::size_t d) {
    RealizedObject r;
    r.k = 0;
    r.dim = d;
    r.projector = QMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i) {
        GVector e(d);
        e[i] = Gaussian(1);
        r.frame.push_back({Character{0, 0}, std::move(e), Gaussian(1)});
        r.copies.push_back(SimpleLabel{0, 0});
    }
    r.formal.add(SimpleLabel{0, 0}, static_cast<std::int64_t>(d));
    return r;
}

EigenData eigen_data(const TorusElement& t) {
    if (t.y().is_zero()) throw DegenerateElementError("torus element " + t.to_string() + " has a real eigenvalue");
    const GMatrix m = complexify(t.matrix());
    EigenData e;
    e.z = t.z();
    e.z_bar = e.z.conj();
    const auto v = eigenspace(m, e.z);
    const auto w = eigenspace(m, e.z_bar);
    if (v.size() != 1 || w.size() != 1) throw DegenerateElementError("unexpected eigenspace dimensions");
    const GVector cols[] = {v[0], w[0]};
    e.basis = GMatrix::from_columns(2, cols);
    e.basis_inv = inverse(e.basis);
    e.conj_in_basis = e.basis_inv * conj(e.basis);
    return e;
}

void require_separating(const TorusElement& t, int k) {
    if (k == 0) return;
    std::vector<Gaussian> values;
    for (int j = 0; j <= k; ++j) {
        const Gaussian v = t.value(Character{j, k - j});
        for (const auto& u : values)
            if (u == v)
                throw DegenerateElementError("torus element " + t.to_string() +
                                             " does not separate the characters of weight " + std::to_string(k));
        values.push_back(v);
    }
}

HodgePieces hodge_pieces(const QMatrix& projector, int k, const TorusElement& t) {
    if (!projector.is_square()) throw std::invalid_argument("hodge_pieces: projector not square");
    require_rows(projector.rows(), k, "hodge_pieces");
    HodgePieces out;
    out.k = k;
    const std::size_t n = projector.rows();
    if (k == 0) {
        out.eigen.basis = GMatrix::identity(1);
        out.eigen.basis_inv = GMatrix::identity(1);
        out.eigen.conj_in_basis = GMatrix::identity(1);
        GMatrix shifted = complexify(projector) - GMatrix::identity(n);
        out.by_q.push_back(kernel_basis(shifted));
        return out;
    }
    require_separating(t, k);
    out.eigen = eigen_data(t);
    GMatrix pe = apply_tensor_power_left(out.eigen.basis_inv, k, complexify(projector));
    pe = apply_tensor_power_right(std::move(pe), out.eigen.basis, k);
    out.by_q.resize(static_cast<std::size_t>(k) + 1);
    for (int q = 0; q <= k; ++q) {
        std::vector<std::size_t> support;
        for (std::size_t w = 0; w < n; ++w)
            if (std::popcount(w) == q) support.push_back(w);
        GMatrix block(n, support.size());
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < support.size(); ++s) {
                block(r, s) = pe(r, support[s]);
                if (r == support[s]) block(r, s) -= Gaussian(1);
            }
        for (auto& v : kernel_basis(block)) {
            GVector full(n);
            for (std::size_t s = 0; s < support.size(); ++s) full[support[s]] = std::move(v[s]);
            out.by_q[static_cast<std::size_t>(q)].push_back(std::move(full));
        }
    }
    return out;
}

HodgeNumbers realized_hodge_numbers(const QMatrix& projector, int k, const TorusElement& t) {
    const auto pieces = hodge_pieces(projector, k, t);
    HodgeNumbers h{k, {}};
    for (const auto& piece : pieces.by_q) h.g.push_back(static_cast<std::int64_t>(piece.size()));
    return h;
}

HodgeNumbers realized_hodge_numbers(const RealizedObject& r, const TorusElement& t) {
    return realized_hodge_numbers(r.projector, r.k, t);
}

bool check_equivariance(const QMatrix& projector, int k, const TorusElement& t) {
    if (k == 0) return true;
    const QMatrix m = t.matrix();
    return apply_tensor_power_left(m, k, projector) == apply_tensor_power_right(projector, m, k);
}

bool check_equivariance(const RealizedObject& r, const TorusElement& t) {
    return check_equivariance(r.projector, r.k, t);
}

std::vector<QVector> descent_basis(const std::vector<FrameVector>& frame) {
    frame_partners(frame);  // validates the pair layout
    std::vector<QVector> out;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const auto& fv = frame[i];
        if (fv.type.a < fv.type.b) continue;
        const GVector c = conj(fv.vec);
        if (fv.type.a > fv.type.b) {
            GVector s(c.size()), d(c.size());
            for (std::size_t j = 0; j < c.size(); ++j) {
                s[j] = fv.vec[j] + c[j];
                d[j] = Gaussian::i() * (fv.vec[j] - c[j]);
            }
            out.push_back(real_vector(s, "descent_basis"));
            out.push_back(real_vector(d, "descent_basis"));
        } else {
            bool real = true;
            for (const auto& x : fv.vec) real = real && x.is_real();
            if (real) {
                out.push_back(real_vector(fv.vec, "descent_basis"));
                continue;
            }
            GVector s(c.size());
            bool zero = true;
            for (std::size_t j = 0; j < c.size(); ++j) {
                s[j] = fv.vec[j] + c[j];
                zero = zero && s[j].is_zero();
            }
            if (zero)
                for (std::size_t j = 0; j < c.size(); ++j) s[j] = Gaussian::i() * fv.vec[j];
            out.push_back(real_vector(s, "descent_basis"));
        }
    }
    return out;
}

HodgeRiemannResult check_hodge_riemann(const std::vector<std::pair<Character, GVector>>& vectors, int k,
                                       const GMatrix& form2, const GMatrix& conj2, int sign) {
    HodgeRiemannResult res;
    std::vector<GVector> q_of;  // Q y for each vector y
    std::vector<GVector> conj_of;
    q_of.reserve(vectors.size());
    for (const auto& [type, v] : vectors) {
        q_of.push_back(apply_tensor_power(form2, k, v));
        conj_of.push_back(apply_tensor_power(conj2, k, conj(v)));
    }
    for (std::size_t a = 0; a < vectors.size() && res.first; ++a)
        for (std::size_t b = a; b < vectors.size(); ++b) {
            if (vectors[b].first == vectors[a].first.conjugate()) continue;
            if (!dot(vectors[a].second, q_of[b]).is_zero()) {
                res.first = false;
                break;
            }
        }
    std::map<Character, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < vectors.size(); ++a) groups[vectors[a].first].push_back(a);
    for (const auto& [type, idx] : groups) {
        GMatrix h(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r) {
            const GVector qc = apply_tensor_power(form2, k, conj_of[idx[r]]);
            for (std::size_t c = 0; c < idx.size(); ++c) {
                // h(x_c, x_r) with x_r conjugated: fill column r.
                Gaussian val = times_i_power(dot(vectors[idx[c]].second, qc), type.a - type.b);
                h(c, r) = sign > 0 ? val : -val;
            }
        }
        if (!is_positive_definite(h)) {
            res.second = false;
            break;
        }
    }
    return res;
}

PolarizationData polarization(const RealizedObject& r) {
    if (!r.formal.is_zero()) {
        const auto w = pure_weight(r.formal);
        if (!w || *w != r.k) throw RepError("polarization: object is not pure of weight k");
        if (!is_effective(r.formal)) throw RepError("polarization: object is not effective");
    }
    const QMatrix q2 = base_polarization();
    const GMatrix form2 = complexify(q2);
    const GMatrix conj2 = GMatrix::identity(2);
    const auto partner = frame_partners(r.frame);

    // Group frame entries by copy.
    std::vector<std::vector<std::size_t>> copy_entries;
    for (std::size_t i = 0; i < r.frame.size(); ++i) {
        if (partner[i] < i) continue;
        copy_entries.push_back(partner[i] == i ? std::vector<std::size_t>{i} : std::vector<std::size_t>{i, partner[i]});
    }
    if (copy_entries.size() != r.copies.size()) throw RealizationError("polarization: frame does not match copies");

    PolarizationData out;
    out.hodge_riemann_1 = true;
    out.hodge_riemann_2 = true;

    std::vector<std::pair<Character, GVector>> all;
    for (const auto& fv : r.frame) all.emplace_back(fv.type, fv.vec);
    out.hodge_riemann_1 = check_hodge_riemann(all, r.k, form2, conj2, 1).first;

    for (const auto& entries : copy_entries) {
        const auto& lead = r.frame[entries.front()];
        const GVector qc = apply_tensor_power(form2, r.k, conj(lead.vec));
        const Gaussian val = times_i_power(dot(lead.vec, qc), lead.type.a - lead.type.b);
        const int s = (val.is_real() && val.re.sign() < 0) ? -1 : 1;
        out.signs.push_back(s);
        std::vector<std::pair<Character, GVector>> mine;
        for (std::size_t i : entries) mine.emplace_back(r.frame[i].type, r.frame[i].vec);
        if (!check_hodge_riemann(mine, r.k, form2, conj2, s).second) out.hodge_riemann_2 = false;
    }
    // Different copies of one type must be orthogonal for the Hermitian form,
    // so that positivity per copy gives positivity on the whole H^{p,q}.
    for (std::size_t a = 0; a < copy_entries.size(); ++a)
        for (std::size_t b = a + 1; b < copy_entries.size(); ++b)
            for (std::size_t i : copy_entries[a])
                for (std::size_t j : copy_entries[b]) {
                    if (!(r.frame[i].type == r.frame[j].type)) continue;
                    const GVector qc = apply_tensor_power(form2, r.k, conj(r.frame[j].vec));
                    if (!dot(r.frame[i].vec, qc).is_zero()) out.hodge_riemann_2 = false;
                }

    const auto basis = descent_basis(r.frame);
    std::vector<int> row_sign;
    for (std::size_t c = 0; c < copy_entries.size(); ++c) {
        const std::size_t width = copy_entries[c].size() == 1 ? 1 : 2;
        for (std::size_t i = 0; i < width; ++i) row_sign.push_back(out.signs[c]);
    }
    out.gram = QMatrix(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const QVector qb = apply_tensor_power(q2, r.k, basis[j]);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Rational v = dot(basis[i], qb);
            out.gram(i, j) = row_sign[i] > 0 ? v : -v;
        }
    }
    return out;
}

QMatrix restricted_action(const QMatrix& projector, int k, const TorusElement& t) {
    const QMatrix b = column_basis(projector);
    if (k == 0) return QMatrix::identity(b.cols());
    const QMatrix ab = apply_tensor_power_left(t.matrix(), k, b);
    auto x = solve_full_column_rank(b, ab);
    if (!x) throw RealizationError("restricted_action: image is not torus-stable");
    return *x;
}

EndomorphismComparison endomorphism_dims(const RealizedObject& r, const TorusElement& t) {
    const QMatrix a = restricted_action(r.projector, r.k, t);
    EndomorphismComparison c;
    c.expected = end_algebra_dim(r.formal);
    c.commutant = a.rows() == 0 ? 0 : commutant_dimension(std::span<const QMatrix>(&a, 1));
    return c;
}

bool endomorphism_check(const RealizedObject& r, const TorusElement& t) { return endomorphism_dims(r, t).ok(); }

}  // namespace hodgeforge
