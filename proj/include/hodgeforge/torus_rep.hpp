#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgeforge {

// Raised when an operation's purity, effectivity or dimension precondition
// fails.
class RepError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Character z^a zbar^b of the torus Res_{Q(i)/Q} G_m. Its Hodge type is (a, b).
struct Character {
    int a = 0;
    int b = 0;

    [[nodiscard]] int weight() const { return a + b; }
    [[nodiscard]] Character conjugate() const { return {b, a}; }

    friend Character operator+(Character x, Character y) { return {x.a + y.a, x.b + y.b}; }
    friend auto operator<=>(const Character&, const Character&) = default;
};

// Galois orbit {(p,q), (q,p)}, stored with p >= q.
struct SimpleLabel {
    int p = 0;
    int q = 0;

    static SimpleLabel canonical(int p, int q) { return p >= q ? SimpleLabel{p, q} : SimpleLabel{q, p}; }

    [[nodiscard]] int weight() const { return p + q; }
    [[nodiscard]] int dimension() const { return p > q ? 2 : 1; }
    [[nodiscard]] bool is_effective() const { return q >= 0; }
    [[nodiscard]] bool is_tate() const { return p == q; }
    [[nodiscard]] std::vector<Character> characters() const;

    friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

// Canonical order: by weight, then p descending.
struct CanonicalOrder {
    bool operator()(const SimpleLabel& x, const SimpleLabel& y) const {
        if (x.weight() != y.weight()) return x.weight() < y.weight();
        return x.p > y.p;
    }
};

using CharacterMultiset = std::map<Character, std::int64_t>;

// A formal direct sum of simple objects: label -> positive multiplicity.
class RepObject {
public:
    using Map = std::map<SimpleLabel, std::int64_t, CanonicalOrder>;

    RepObject() = default;

    // Adds mult copies of the simple with this (canonicalized) label.
    RepObject& add(SimpleLabel label, std::int64_t mult);

    [[nodiscard]] const Map& entries() const noexcept { return mults_; }
    [[nodiscard]] bool is_zero() const noexcept { return mults_.empty(); }
    [[nodiscard]] std::int64_t multiplicity(SimpleLabel label) const;
    [[nodiscard]] std::int64_t dimension() const;
    [[nodiscard]] CharacterMultiset characters() const;

    // Regroups a Galois-stable character multiset into orbits.
    static RepObject from_characters(const CharacterMultiset& chars);

    friend bool operator==(const RepObject&, const RepObject&) = default;

private:
    Map mults_;
};

// Hodge numbers of a pure object of weight k: g[i] = h^{k-i, i}.
struct HodgeNumbers {
    int weight = 0;
    std::vector<std::int64_t> g;

    [[nodiscard]] std::int64_t at(int p, int q) const;
    [[nodiscard]] std::int64_t total() const;

    friend bool operator==(const HodgeNumbers&, const HodgeNumbers&) = default;
};

// Empty optional if admissible, otherwise a message naming the violated
// condition.
std::optional<std::string> admissibility_violation(const HodgeNumbers& h);

std::int64_t binomial(std::int64_t n, std::int64_t k);

RepObject simple(int p, int q);
RepObject unit();
RepObject direct_sum(const RepObject& a, const RepObject& b);
RepObject tensor(const RepObject& a, const RepObject& b);
RepObject tate_twist(const RepObject& a, int m);
RepObject dual(const RepObject& a);
RepObject sym_power(const RepObject& a, int n);
RepObject ext_power(const RepObject& a, int n);

// Weight shared by every label, or nullopt (zero object or mixed weights).
std::optional<int> pure_weight(const RepObject& a);
bool is_pure(const RepObject& a);
bool is_effective(const RepObject& a);
bool is_irreducible(const RepObject& a);
std::vector<std::pair<SimpleLabel, std::int64_t>> decompose(const RepObject& a);

HodgeNumbers hodge_numbers(const RepObject& a);
// Same, for an object known to be of the given weight (the zero object included).
HodgeNumbers hodge_numbers(const RepObject& a, int weight);
int level(const RepObject& a);

struct TwoDimensionalClass {
    enum class Kind { IrreducibleH, ReducibleTateSum };
    Kind kind;
    SimpleLabel label;             // the simple (or the Tate label, twice)
    bool level_one_elliptic = false;  // H ~ H^1(E)(-m)
    int twist = 0;                 // m when level_one_elliptic

    [[nodiscard]] std::string tag() const;
};

TwoDimensionalClass classify_two_dimensional(const RepObject& a);

std::int64_t end_algebra_dim(const RepObject& a);

std::string to_string(const RepObject& a);
std::string to_string(const HodgeNumbers& h);

}  // namespace hodgeforge
