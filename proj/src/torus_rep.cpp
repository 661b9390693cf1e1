#include "hodgeforge/torus_rep.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hodgeforge {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("multiplicity overflow");
    return out;
}

RepObject map_labels(const RepObject& a, auto&& f) {
    RepObject out;
    for (const auto& [label, mult] : a.entries()) out.add(f(label), mult);
    return out;
}

// Coefficient of t^n in prod_c (1 - c t)^{-m_c} (symmetric) or
// prod_c (1 + c t)^{m_c} (exterior), as a character multiset.
RepObject power_series(const RepObject& a, int n, bool exterior) {
    if (n < 0) throw RepError("symmetric/exterior power: negative degree");
    std::vector<CharacterMultiset> poly(n + 1);
    poly[0][Character{0, 0}] = 1;
    for (const auto& [c, m] : a.characters()) {
        std::vector<CharacterMultiset> next(n + 1);
        for (int d = 0; d <= n; ++d) {
            for (const auto& [chi, count] : poly[d]) {
                for (int j = 0; d + j <= n; ++j) {
                    if (exterior && j > m) break;
                    const std::int64_t coeff = exterior ? binomial(m, j) : binomial(m + j - 1, j);
                    const Character shifted{chi.a + j * c.a, chi.b + j * c.b};
                    auto& slot = next[d + j][shifted];
                    slot = checked_add(slot, checked_mul(count, coeff));
                }
            }
        }
        poly = std::move(next);
    }
    return RepObject::from_characters(poly[n]);
}

}  // namespace

std::vector<Character> SimpleLabel::characters() const {
    if (p == q) return {Character{p, q}};
    return {Character{p, q}, Character{q, p}};
}

RepObject& RepObject::add(SimpleLabel label, std::int64_t mult) {
    if (mult < 0) throw RepError("RepObject::add: negative multiplicity");
    if (mult == 0) return *this;
    label = SimpleLabel::canonical(label.p, label.q);
    auto& slot = mults_[label];
    slot = checked_add(slot, mult);
    return *this;
}

std::int64_t RepObject::multiplicity(SimpleLabel label) const {
    const auto it = mults_.find(SimpleLabel::canonical(label.p, label.q));
    return it == mults_.end() ? 0 : it->second;
}

std::int64_t RepObject::dimension() const {
    std::int64_t d = 0;
    for (const auto& [label, mult] : mults_) d = checked_add(d, checked_mul(mult, label.dimension()));
    return d;
}

CharacterMultiset RepObject::characters() const {
    CharacterMultiset out;
    for (const auto& [label, mult] : mults_)
        for (const auto& c : label.characters()) out[c] = checked_add(out[c], mult);
    return out;
}

RepObject RepObject::from_characters(const CharacterMultiset& chars) {
    RepObject out;
    for (const auto& [c, count] : chars) {
        if (count == 0) continue;
        if (count < 0) throw RepError("from_characters: negative count");
        if (c.a < c.b) continue;
        if (c.a > c.b) {
            const auto it = chars.find(c.conjugate());
            const std::int64_t partner = it == chars.end() ? 0 : it->second;
            if (partner != count) throw RepError("from_characters: character multiset is not Galois-stable");
        }
        out.add(SimpleLabel{c.a, c.b}, count);
    }
    for (const auto& [c, count] : chars) {
        if (count != 0 && c.a < c.b && chars.count(c.conjugate()) == 0)
            throw RepError("from_characters: character multiset is not Galois-stable");
    }
    return out;
}

std::int64_t HodgeNumbers::at(int p, int q) const {
    if (p + q != weight || p < 0 || q < 0) return 0;
    return g[static_cast<std::size_t>(q)];
}

std::int64_t HodgeNumbers::total() const {
    std::int64_t t = 0;
    for (auto x : g) t = checked_add(t, x);
    return t;
}

std::optional<std::string> admissibility_violation(const HodgeNumbers& h) {
    if (h.weight < 0) return "weight must be nonnegative (k >= 0)";
    if (h.g.size() != static_cast<std::size_t>(h.weight) + 1)
        return "expected " + std::to_string(h.weight + 1) + " Hodge numbers for weight " + std::to_string(h.weight) +
               ", got " + std::to_string(h.g.size());
    for (std::size_t i = 0; i < h.g.size(); ++i) {
        if (h.g[i] < 0) return "Hodge numbers must be nonnegative (entry " + std::to_string(i) + ")";
    }
    for (int q = 0; q <= h.weight; ++q) {
        const int p = h.weight - q;
        if (h.at(p, q) != h.at(q, p)) {
            return "Hodge symmetry violated: g^{" + std::to_string(p) + "," + std::to_string(q) +
                   "} = " + std::to_string(h.at(p, q)) + " but g^{" + std::to_string(q) + "," + std::to_string(p) +
                   "} = " + std::to_string(h.at(q, p));
        }
    }
    return std::nullopt;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step.
        __int128 t = static_cast<__int128>(r) * (n - k + i) / i;
        if (t > INT64_MAX) throw std::overflow_error("binomial overflow");
        r = static_cast<std::int64_t>(t);
    }
    return r;
}

RepObject simple(int p, int q) { return RepObject{}.add(SimpleLabel{p, q}, 1); }

RepObject unit() { return simple(0, 0); }

RepObject direct_sum(const RepObject& a, const RepObject& b) {
    RepObject out = a;
    for (const auto& [label, mult] : b.entries()) out.add(label, mult);
    return out;
}

RepObject tensor(const RepObject& a, const RepObject& b) {
    CharacterMultiset out;
    const auto ca = a.characters();
    const auto cb = b.characters();
    for (const auto& [x, m] : ca)
        for (const auto& [y, n] : cb) {
            auto& slot = out[x + y];
            slot = checked_add(slot, checked_mul(m, n));
        }
    return RepObject::from_characters(out);
}

RepObject tate_twist(const RepObject& a, int m) {
    return map_labels(a, [m](SimpleLabel l) { return SimpleLabel{l.p + m, l.q + m}; });
}

RepObject dual(const RepObject& a) {
    return map_labels(a, [](SimpleLabel l) { return SimpleLabel::canonical(-l.q, -l.p); });
}

RepObject sym_power(const RepObject& a, int n) { return power_series(a, n, false); }

RepObject ext_power(const RepObject& a, int n) { return power_series(a, n, true); }

std::optional<int> pure_weight(const RepObject& a) {
    if (a.is_zero()) return std::nullopt;
    const int w = a.entries().begin()->first.weight();
    for (const auto& [label, mult] : a.entries())
        if (label.weight() != w) return std::nullopt;
    return w;
}

bool is_pure(const RepObject& a) { return a.is_zero() || pure_weight(a).has_value(); }

bool is_effective(const RepObject& a) {
    return std::all_of(a.entries().begin(), a.entries().end(), [](const auto& e) { return e.first.is_effective(); });
}

bool is_irreducible(const RepObject& a) { return a.entries().size() == 1 && a.entries().begin()->second == 1; }

std::vector<std::pair<SimpleLabel, std::int64_t>> decompose(const RepObject& a) {
    return {a.entries().begin(), a.entries().end()};
}

HodgeNumbers hodge_numbers(const RepObject& a, int weight) {
    if (weight < 0) throw RepError("hodge_numbers: negative weight");
    if (!is_effective(a)) throw RepError("hodge_numbers: object is not effective");
    HodgeNumbers h{weight, std::vector<std::int64_t>(static_cast<std::size_t>(weight) + 1, 0)};
    for (const auto& [label, mult] : a.entries()) {
        if (label.weight() != weight) throw RepError("hodge_numbers: object is not pure of weight " + std::to_string(weight));
        for (const auto& c : label.characters()) h.g[static_cast<std::size_t>(c.b)] += mult;
    }
    return h;
}

HodgeNumbers hodge_numbers(const RepObject& a) {
    const auto w = pure_weight(a);
    if (!w) {
        throw RepError(a.is_zero() ? "hodge_numbers: zero object has no weight" : "hodge_numbers: object is not pure");
    }
    return hodge_numbers(a, *w);
}

int level(const RepObject& a) {
    if (a.is_zero()) throw RepError("level: zero object");
    if (!pure_weight(a)) throw RepError("level: object is not pure");
    if (!is_effective(a)) throw RepError("level: object is not effective");
    int best = 0;
    for (const auto& [label, mult] : a.entries()) best = std::max(best, label.p - label.q);
    return best;
}

std::string TwoDimensionalClass::tag() const {
    if (kind == Kind::ReducibleTateSum) return "REDUCIBLE_TATE_SUM";
    std::string t = "IRREDUCIBLE_H(" + std::to_string(label.p) + "," + std::to_string(label.q) + ")";
    if (level_one_elliptic) t += " LEVEL_ONE_ELLIPTIC";
    return t;
}

TwoDimensionalClass classify_two_dimensional(const RepObject& a) {
    if (a.dimension() != 2) throw RepError("classify: object has dimension " + std::to_string(a.dimension()) + ", not 2");
    if (!pure_weight(a)) throw RepError("classify: object is not pure");
    if (!is_effective(a)) throw RepError("classify: object is not effective");
    const auto& [label, mult] = *a.entries().begin();
    if (a.entries().size() == 1 && label.p > label.q) {
        TwoDimensionalClass c{TwoDimensionalClass::Kind::IrreducibleH, label};
        c.level_one_elliptic = (label.p - label.q == 1);
        c.twist = c.level_one_elliptic ? label.q : 0;
        return c;
    }
    // Pure of weight k and two-dimensional with no 2-dimensional simple:
    // necessarily Q(-k/2)^2.
    return TwoDimensionalClass{TwoDimensionalClass::Kind::ReducibleTateSum, label};
}

std::int64_t end_algebra_dim(const RepObject& a) {
    std::int64_t d = 0;
    for (const auto& [label, mult] : a.entries())
        d = checked_add(d, checked_mul(checked_mul(mult, mult), label.p > label.q ? 2 : 1));
    return d;
}

std::string to_string(const RepObject& a) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [label, mult] : a.entries()) {
        if (!first) os << ", ";
        first = false;
        os << '(' << label.p << ',' << label.q << "):" << mult;
    }
    os << ']';
    return os.str();
}

std::string to_string(const HodgeNumbers& h) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < h.g.size(); ++i) os << (i ? "," : "") << h.g[i];
    os << ')';
    return os.str();
}

}  // namespace hodgeforge
