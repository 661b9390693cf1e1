#include "hodgeforge/constructor.hpp"

#include <algorithm>
#include <map>

namespace hodgeforge {

namespace {

std::size_t ambient_dim(int k) { return std::size_t{1} << k; }

Block make_block(const RealizedObject& r) {
    Block b;
    for (const auto& label : r.copies) {
        if (!b.simples.empty() && b.simples.back().label == label) {
            ++b.simples.back().mult;
        } else {
            b.simples.push_back({label, 1});
        }
    }
    b.k = r.k;
    b.dim = r.dim;
    b.projector = r.projector;
    b.frame = r.frame;
    const auto pol = polarization(r);
    if (!pol.hodge_riemann_1 || !pol.hodge_riemann_2)
        throw InternalVerificationError("Hodge-Riemann relations fail on a constructed block");
    b.signs = pol.signs;
    b.gram = pol.gram;
    return b;
}

void validate_plan(const Plan& plan) {
    if (plan.weight < 0) throw std::invalid_argument("plan: negative weight");
    for (const auto& e : plan.entries) {
        if (e.label.weight() != plan.weight || e.label.q < 0 || e.label.p < e.label.q || e.mult <= 0)
            throw std::invalid_argument("plan: entry does not describe effective simples of the plan's weight");
    }
}

// Greedy first-fit by descending multiplicity.
std::vector<std::vector<PlanEntry>> pack(const Plan& plan) {
    std::vector<PlanEntry> order = plan.entries;
    std::stable_sort(order.begin(), order.end(), [](const PlanEntry& a, const PlanEntry& b) { return a.mult > b.mult; });
    std::vector<std::map<SimpleLabel, std::int64_t, CanonicalOrder>> bins;
    for (const auto& e : order) {
        const std::int64_t cap = capacity(plan.weight, e.label);
        for (std::int64_t copy = 0; copy < e.mult; ++copy) {
            auto it = std::find_if(bins.begin(), bins.end(), [&](auto& bin) { return bin[e.label] < cap; });
            if (it == bins.end()) {
                bins.emplace_back();
                it = std::prev(bins.end());
            }
            ++(*it)[e.label];
        }
    }
    std::vector<std::vector<PlanEntry>> out;
    for (const auto& bin : bins) {
        std::vector<PlanEntry> contents;
        for (const auto& [label, count] : bin)
            if (count > 0) contents.push_back({label, count});
        out.push_back(std::move(contents));
    }
    return out;
}

// First element among primary and fallbacks that separates weight-k
// characters.
const TorusElement& separating_element(const VerifyOptions& options, int k) {
    auto usable = [k](const TorusElement& t) {
        if (k == 0) return true;
        if (t.y().is_zero()) return false;
        try {
            require_separating(t, k);
            return true;
        } catch (const DegenerateElementError&) {
            return false;
        }
    };
    if (usable(options.primary)) return options.primary;
    for (const auto& t : options.fallbacks)
        if (usable(t)) return t;
    throw DegenerateElementError("no configured torus element separates the characters of weight " +
                                 std::to_string(k));
}

void note(VerificationReport& r, const std::string& msg) {
    if (std::find(r.notes.begin(), r.notes.end(), msg) == r.notes.end()) r.notes.push_back(msg);
}

bool check_layout(const Certificate& c, VerificationReport& report) {
    const int k = c.input.weight;
    if (c.version != "1") {
        note(report, "unsupported format version");
        return false;
    }
    if (c.plan.weight != k) {
        note(report, "plan weight differs from input weight");
        return false;
    }
    for (const auto& e : c.plan.entries) {
        if (e.label.weight() != k || e.label.q < 0 || e.label.p < e.label.q || e.mult <= 0) {
            note(report, "plan contains an invalid entry");
            return false;
        }
    }
    try {
        if (hodge_numbers(c.plan.formal(), k) != c.input) {
            note(report, "plan does not reproduce the input Hodge numbers");
            return false;
        }
    } catch (const std::exception&) {
        note(report, "plan does not reproduce the input Hodge numbers");
        return false;
    }
    RepObject placed;
    for (const auto& b : c.blocks) {
        const std::size_t expected_dim = k == 0 ? b.dim : ambient_dim(k);
        if (b.k != k || b.dim != expected_dim || b.projector.rows() != b.dim || b.projector.cols() != b.dim) {
            note(report, "block has the wrong ambient size");
            return false;
        }
        for (const auto& e : b.simples) {
            if (e.label.weight() != k || e.mult <= 0 || e.label.q < 0 || e.label.p < e.label.q) {
                note(report, "block holds a simple of the wrong weight");
                return false;
            }
            if (k > 0 && e.mult > capacity(k, e.label)) {
                note(report, "block exceeds the capacity of V^{⊗k}");
                return false;
            }
        }
        placed = direct_sum(placed, b.formal());
    }
    if (placed != c.plan.formal()) {
        note(report, "blocks do not hold exactly the planned simples");
        return false;
    }
    if (c.n_factors != static_cast<std::int64_t>(k) * static_cast<std::int64_t>(c.blocks.size())) {
        note(report, "N is not k times the number of blocks");
        return false;
    }
    if (c.mode == Mode::Block && k > 0) {
        for (const auto& b : c.blocks) {
            if (b.simples.size() != 1 || b.simples.front().mult != 1) {
                note(report, "BLOCK mode requires one simple per block");
                return false;
            }
        }
    }
    if (k == 0 && c.blocks.size() > 1) {
        note(report, "weight 0 uses a single block");
        return false;
    }
    return true;
}

// The stored Gram must be the form, times the block sign, on the rational
// descent of the stored frames, and those vectors must be a basis of the image.
bool gram_matches_frames(const Block& b, int sign) {
    std::vector<QVector> basis;
    try {
        basis = descent_basis(b.frame);
    } catch (const std::exception&) {
        return false;
    }
    if (basis.size() != b.gram.rows()) return false;
    for (const auto& v : basis)
        if (v.size() != b.dim || !(b.projector * v == v)) return false;
    if (!basis.empty() && rank(QMatrix::from_columns(b.dim, basis)) != basis.size()) return false;
    const QMatrix q2 = base_polarization();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const QVector qb = apply_tensor_power(q2, b.k, basis[j]);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Rational v;
            for (std::size_t l = 0; l < qb.size(); ++l)
                if (!basis[i][l].is_zero() && !qb[l].is_zero()) v += basis[i][l] * qb[l];
            if (!(b.gram(i, j) == (sign > 0 ? v : -v))) return false;
        }
    }
    return true;
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::Block ? "block" : "packed"; }

Mode parse_mode(const std::string& s) {
    if (s == "block") return Mode::Block;
    if (s == "packed") return Mode::Packed;
    throw std::invalid_argument("unknown mode '" + s + "' (expected block or packed)");
}

RepObject Plan::formal() const {
    RepObject out;
    for (const auto& e : entries) out.add(e.label, e.mult);
    return out;
}

std::int64_t Plan::total_copies() const {
    std::int64_t n = 0;
    for (const auto& e : entries) n += e.mult;
    return n;
}

RepObject Block::formal() const {
    RepObject out;
    for (const auto& e : simples) out.add(e.label, e.mult);
    return out;
}

Plan make_plan(const HodgeNumbers& g) {
    if (auto why = admissibility_violation(g)) throw AdmissibilityError(*why);
    Plan plan;
    plan.weight = g.weight;
    for (int q = 0; 2 * q <= g.weight; ++q) {
        const int p = g.weight - q;
        const std::int64_t m = g.at(p, q);
        if (m > 0) plan.entries.push_back({SimpleLabel{p, q}, m});
    }
    return plan;
}

std::int64_t capacity(int k, SimpleLabel label) {
    if (label.weight() != k) throw std::invalid_argument("capacity: label weight differs from k");
    if (label.q < 0 || label.p < label.q) throw std::invalid_argument("capacity: need p >= q >= 0");
    return binomial(k, label.q);
}

void VerificationReport::finalize() {
    bool eq = !equivariance.empty();
    for (const auto& e : equivariance) eq = eq && e.ok;
    pass = admissible && layout && idempotent && eq && hodge_numbers_match && hodge_riemann_1 && hodge_riemann_2 &&
           endomorphism_oracle;
}

Certificate build_certificate(const Plan& plan, Mode mode, const VerifyOptions& options) {
    validate_plan(plan);
    Certificate c;
    c.input = hodge_numbers(plan.formal(), plan.weight);
    c.plan = plan;
    c.mode = mode;
    const int k = plan.weight;

    if (plan.entries.empty()) {
        // zero object: nothing to realize
    } else if (k == 0) {
        c.blocks.push_back(make_block(realize_trivial(static_cast<std::size_t>(plan.total_copies()))));
    } else if (mode == Mode::Block) {
        for (const auto& e : plan.entries) {
            const Block b = make_block(realize_simple(e.label.p, e.label.q));
            for (std::int64_t i = 0; i < e.mult; ++i) c.blocks.push_back(b);
        }
    } else {
        for (const auto& contents : pack(plan)) {
            std::vector<std::pair<SimpleLabel, std::int64_t>> items;
            for (const auto& e : contents) items.emplace_back(e.label, e.mult);
            c.blocks.push_back(make_block(realize_packed(k, items)));
        }
    }
    c.n_factors = static_cast<std::int64_t>(k) * static_cast<std::int64_t>(c.blocks.size());

    c.report = verify_certificate(c, options);
    if (!c.report.pass) {
        std::string why;
        for (const auto& n : c.report.notes) why += (why.empty() ? "" : "; ") + n;
        throw InternalVerificationError("constructed certificate failed verification: " + why);
    }
    return c;
}

VerificationReport verify_certificate(const Certificate& c, const VerifyOptions& options) {
    VerificationReport report;
    const int k = c.input.weight;
    if (auto why = admissibility_violation(c.input)) {
        report.admissible = false;
        note(report, "input not admissible: " + *why);
    } else {
        report.admissible = true;
    }
    report.layout = report.admissible && check_layout(c, report);

    report.idempotent = true;
    report.hodge_numbers_match = true;
    report.hodge_riemann_1 = true;
    report.hodge_riemann_2 = true;
    report.endomorphism_oracle = true;
    report.equivariance = {{options.primary, true}, {options.secondary, true}};

    auto fail = [&report](bool& flag, const std::string& why) {
        flag = false;
        note(report, why);
    };

    std::vector<std::int64_t> total(static_cast<std::size_t>(std::max(k, 0)) + 1, 0);
    for (std::size_t bi = 0; bi < c.blocks.size(); ++bi) {
        const Block& b = c.blocks[bi];
        const std::string where = "block " + std::to_string(bi) + ": ";
        if (!b.projector.is_square() || b.projector.rows() != b.dim || b.k != k ||
            (k > 0 && b.dim != ambient_dim(k))) {
            fail(report.idempotent, where + "projector has the wrong shape");
            report.hodge_numbers_match = report.hodge_riemann_1 = report.hodge_riemann_2 = false;
            report.endomorphism_oracle = false;
            for (auto& e : report.equivariance) e.ok = false;
            continue;
        }
        const QMatrix& p = b.projector;
        if (!is_idempotent(p)) fail(report.idempotent, where + "projector is not idempotent");
        for (auto& e : report.equivariance) {
            if (!check_equivariance(p, k, e.element)) {
                e.ok = false;
                note(report, where + "projector does not commute with " + e.element.to_string());
            }
        }

        const TorusElement& t = separating_element(options, k);
        const HodgePieces pieces = hodge_pieces(p, k, t);
        std::vector<std::int64_t> h;
        std::int64_t realized_rank = 0;
        for (const auto& piece : pieces.by_q) {
            h.push_back(static_cast<std::int64_t>(piece.size()));
            realized_rank += h.back();
        }
        for (std::size_t q = 0; q < h.size() && q < total.size(); ++q) total[q] += h[q];
        try {
            if (hodge_numbers(b.formal(), k).g != h)
                fail(report.hodge_numbers_match, where + "realized Hodge numbers differ from the block's simples");
        } catch (const std::exception&) {
            fail(report.hodge_numbers_match, where + "block simples are not pure of the certificate weight");
        }

        // Hodge–Riemann on frames recomputed from the projector.
        const bool uniform = !b.signs.empty() && std::all_of(b.signs.begin(), b.signs.end(), [&](int s) {
            return (s == 1 || s == -1) && s == b.signs.front();
        });
        if (!uniform) {
            fail(report.hodge_riemann_2, where + "polarization signs must be a uniform ±1 per block");
        }
        const int sign = uniform ? b.signs.front() : 1;
        std::vector<std::pair<Character, GVector>> vectors;
        for (std::size_t q = 0; q < pieces.by_q.size(); ++q)
            for (const auto& v : pieces.by_q[q]) vectors.emplace_back(Character{k - static_cast<int>(q), static_cast<int>(q)}, v);
        const GMatrix base = complexify(base_polarization());
        const GMatrix form2 = k == 0 ? base : pieces.eigen.basis.transpose() * base * pieces.eigen.basis;
        const GMatrix conj2 = k == 0 ? GMatrix::identity(2) : pieces.eigen.conj_in_basis;
        const auto hr = check_hodge_riemann(vectors, k, form2, conj2, sign);
        if (!hr.first) fail(report.hodge_riemann_1, where + "first Hodge-Riemann relation fails");
        if (!hr.second) fail(report.hodge_riemann_2, where + "second Hodge-Riemann relation fails");
        const Rational parity = (k % 2 == 0) ? Rational(1) : Rational(-1);
        if (b.gram.rows() != static_cast<std::size_t>(realized_rank) || b.gram.cols() != b.gram.rows() ||
            !(b.gram.transpose() == b.gram * parity)) {
            fail(report.hodge_riemann_1, where + "polarization Gram matrix is not (-1)^k-symmetric of full size");
        }
        else if (!gram_matches_frames(b, sign)) {
            fail(report.hodge_riemann_1, where + "polarization Gram matrix does not match the frames");
        }

        // Endomorphism algebra of the realized block vs. the formal count.
        const std::int64_t expected = end_algebra_dim(b.formal());
        std::int64_t found = -1;
        if (static_cast<std::size_t>(realized_rank) <= options.brute_force_commutant_limit) {
            try {
                const QMatrix a = restricted_action(p, k, t);
                found = a.rows() == 0 ? 0 : static_cast<std::int64_t>(commutant_dimension(std::span<const QMatrix>(&a, 1)));
            } catch (const std::exception&) {
                found = -1;
            }
        } else if (static_cast<std::size_t>(realized_rank) == rank(p)) {
            found = 0;
            for (auto x : h) found += x * x;
        }
        if (found != expected) fail(report.endomorphism_oracle, where + "endomorphism algebra dimension mismatch");
    }
    if (report.admissible && total != c.input.g)
        fail(report.hodge_numbers_match, "realized Hodge numbers differ from the input");
    report.finalize();
    return report;
}

}  // namespace hodgeforge
