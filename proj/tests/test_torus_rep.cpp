#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hodgeforge/torus_rep.hpp"

using namespace hodgeforge;

namespace {

RepObject make(std::initializer_list<std::tuple<int, int, std::int64_t>> items) {
    RepObject r;
    for (const auto& [p, q, m] : items) r.add(SimpleLabel::canonical(p, q), m);
    return r;
}

const RepObject V = simple(1, 0);

// Characters listed with repetition, for brute-force symmetric/exterior powers.
std::vector<Character> flat_characters(const RepObject& a) {
    std::vector<Character> out;
    for (const auto& [c, m] : a.characters())
        for (std::int64_t i = 0; i < m; ++i) out.push_back(c);
    return out;
}

void choose(const std::vector<Character>& chars, int n, std::size_t start, bool repeat, Character acc,
            CharacterMultiset& out) {
    if (n == 0) {
        out[acc] += 1;
        return;
    }
    for (std::size_t i = start; i < chars.size(); ++i)
        choose(chars, n - 1, repeat ? i : i + 1, repeat, acc + chars[i], out);
}

RepObject brute_power(const RepObject& a, int n, bool symmetric) {
    CharacterMultiset out;
    choose(flat_characters(a), n, 0, symmetric, Character{0, 0}, out);
    return RepObject::from_characters(out);
}

RepObject random_object(std::mt19937_64& rng, int weight, bool effective = true) {
    std::uniform_int_distribution<int> count(1, 3), mult(1, 2);
    RepObject r;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int lo = effective ? 0 : -2;
        std::uniform_int_distribution<int> qd(lo, weight);
        int q = qd(rng);
        if (2 * q > weight) q = weight - q;
        r.add(SimpleLabel::canonical(weight - q, q), mult(rng));
    }
    return r;
}

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST_CASE("simple objects") {
    CHECK(V.dimension() == 2);
    CHECK(simple(3, 3).dimension() == 1);
    CHECK(simple(0, 2) == simple(2, 0));
    CHECK(decompose(simple(0, 2)).front().first == SimpleLabel{2, 0});
    CHECK(unit() == simple(0, 0));
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(V, RepObject{}) == V);
    const RepObject vv = direct_sum(V, V);
    CHECK(vv.multiplicity({1, 0}) == 2);
    CHECK(vv.dimension() == 4);
}

TEST_CASE("tensor examples") {
    CHECK(tensor(V, V) == make({{2, 0, 1}, {1, 1, 2}}));
    CHECK(tensor(V, simple(1, 1)) == simple(2, 1));
    CHECK(tensor(simple(3, 1), unit()) == simple(3, 1));
    CHECK(tensor(RepObject{}, V).is_zero());
}

TEST_CASE("tate twist and dual") {
    CHECK(tate_twist(V, 1) == simple(2, 1));
    const RepObject a = make({{3, 1, 2}, {2, 2, 1}});
    CHECK(tate_twist(a, 0) == a);
    CHECK(tate_twist(tate_twist(a, 2), -2) == a);
    CHECK(tate_twist(a, 3) == tensor(a, simple(3, 3)));
    CHECK(dual(simple(1, 1)) == simple(-1, -1));
    CHECK(dual(dual(a)) == a);
    CHECK(tensor(V, dual(V)).multiplicity({0, 0}) == 2);
    CHECK_FALSE(is_effective(dual(V)));
}

TEST_CASE("symmetric and exterior powers") {
    CHECK(sym_power(V, 2) == make({{2, 0, 1}, {1, 1, 1}}));
    CHECK(ext_power(V, 2) == simple(1, 1));
    CHECK(sym_power(make({{4, 1, 3}}), 0) == unit());
    CHECK(ext_power(V, 0) == unit());
    for (int n = 0; n <= 8; ++n) CHECK(sym_power(V, n).dimension() == n + 1);
    for (int n = 3; n <= 6; ++n) CHECK(ext_power(V, n).is_zero());
    CHECK(ext_power(make({{1, 0, 2}}), 5).is_zero());
    CHECK_THROWS(sym_power(V, -1));
}

TEST_CASE("powers agree with brute-force multiset enumeration") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const RepObject a = random_object(rng, 1 + trial % 3, trial % 4 != 0);
        for (int n = 0; n <= 4; ++n) {
            CHECK(sym_power(a, n) == brute_power(a, n, true));
            CHECK(ext_power(a, n) == brute_power(a, n, false));
        }
    }
}

TEST_CASE("hodge numbers") {
    for (int p = 1; p <= 5; ++p)
        for (int q = 0; q < p; ++q) {
            const HodgeNumbers h = hodge_numbers(simple(p, q));
            CHECK(h.weight == p + q);
            for (int j = 0; j <= p + q; ++j) CHECK(h.at(p + q - j, j) == ((j == p || j == q) ? 1 : 0));
        }
    const HodgeNumbers tate = hodge_numbers(simple(2, 2));
    CHECK(tate.g == std::vector<std::int64_t>{0, 0, 1, 0, 0});
    CHECK(hodge_numbers(tensor(V, V)).g == std::vector<std::int64_t>{1, 2, 1});
    CHECK_THROWS_AS(hodge_numbers(direct_sum(V, simple(1, 1))), RepError);
    CHECK_THROWS_AS(hodge_numbers(dual(V)), RepError);
    CHECK(hodge_numbers(RepObject{}, 3).g == std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("admissibility") {
    CHECK_FALSE(admissibility_violation({2, {1, 0, 1}}).has_value());
    const auto v = admissibility_violation({2, {1, 1, 0}});
    REQUIRE(v.has_value());
    CHECK(v->find("Hodge symmetry") != std::string::npos);
    CHECK(admissibility_violation({-1, {}}).has_value());
    CHECK(admissibility_violation({2, {1, 1}}).has_value());
    CHECK(admissibility_violation({0, {-1}}).has_value());
}

TEST_CASE("level") {
    CHECK(level(simple(3, 3)) == 0);
    for (int p = 1; p <= 6; ++p)
        for (int q = 0; q < p; ++q) CHECK(level(simple(p, q)) == p - q);
    CHECK(level(tensor(V, V)) == 2);
    CHECK_THROWS(level(RepObject{}));
    CHECK_THROWS(level(direct_sum(V, simple(2, 0))));
}

TEST_CASE("predicates and decompose") {
    const RepObject vv = tensor(V, V);
    const auto d = decompose(vv);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == std::pair<SimpleLabel, std::int64_t>{{2, 0}, 1});
    CHECK(d[1] == std::pair<SimpleLabel, std::int64_t>{{1, 1}, 2});
    CHECK(is_irreducible(simple(3, 1)));
    CHECK_FALSE(is_irreducible(direct_sum(V, V)));
    CHECK_FALSE(is_irreducible(RepObject{}));
    CHECK(is_pure(vv));
    CHECK_FALSE(is_pure(direct_sum(V, unit())));
    CHECK(is_pure(RepObject{}));
    // decompose sorts by weight, then p descending
    const auto mixed = decompose(make({{0, 0, 1}, {3, 1, 1}, {4, 0, 2}, {1, 0, 1}}));
    CHECK(mixed[0].first == SimpleLabel{0, 0});
    CHECK(mixed[1].first == SimpleLabel{1, 0});
    CHECK(mixed[2].first == SimpleLabel{4, 0});
    CHECK(mixed[3].first == SimpleLabel{3, 1});
    CHECK(to_string(vv) == "[(2,0):1, (1,1):2]");
}

TEST_CASE("ring laws over random objects") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const bool eff = trial % 3 != 0;
        const RepObject a = random_object(rng, trial % 4, eff), b = random_object(rng, (trial + 1) % 3, eff),
                        c = random_object(rng, trial % 2 + 1, eff);
        CHECK(tensor(a, b) == tensor(b, a));
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        CHECK(tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c)));
        CHECK(dual(tensor(a, b)) == tensor(dual(a), dual(b)));
        CHECK(dual(dual(a)) == a);
        CHECK(tensor(a, b).dimension() == a.dimension() * b.dimension());
        RepObject rebuilt;
        for (const auto& [label, m] : decompose(a)) rebuilt.add(label, m);
        CHECK(rebuilt == a);
    }
}

TEST_CASE("hodge vectors add under sums and convolve under tensor") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        const int ka = trial % 4, kb = (trial / 4) % 4;
        const RepObject a = random_object(rng, ka), a2 = random_object(rng, ka), b = random_object(rng, kb);
        const HodgeNumbers ha = hodge_numbers(a), hb = hodge_numbers(b);
        CHECK(hodge_numbers(tensor(a, b)).g == convolve(ha.g, hb.g));
        const HodgeNumbers sum = hodge_numbers(direct_sum(a, a2));
        for (std::size_t i = 0; i < sum.g.size(); ++i) CHECK(sum.g[i] == ha.g[i] + hodge_numbers(a2).g[i]);
        for (std::size_t i = 0; i < ha.g.size(); ++i) CHECK(ha.g[i] == ha.g[ha.g.size() - 1 - i]);
        CHECK(ha.total() == a.dimension());
    }
}

TEST_CASE("classify two-dimensional") {
    const auto v = classify_two_dimensional(V);
    CHECK(v.kind == TwoDimensionalClass::Kind::IrreducibleH);
    CHECK(v.level_one_elliptic);
    CHECK(v.twist == 0);
    CHECK(v.tag() == "IRREDUCIBLE_H(1,0) LEVEL_ONE_ELLIPTIC");
    CHECK(classify_two_dimensional(simple(2, 0)).tag() == "IRREDUCIBLE_H(2,0)");
    CHECK(classify_two_dimensional(simple(4, 3)).twist == 3);
    CHECK(classify_two_dimensional(make({{1, 1, 2}})).tag() == "REDUCIBLE_TATE_SUM");
    CHECK_THROWS(classify_two_dimensional(simple(1, 1)));
    CHECK_THROWS(classify_two_dimensional(direct_sum(simple(1, 1), simple(2, 2))));
    CHECK_THROWS(classify_two_dimensional(dual(V)));
}

TEST_CASE("end algebra dimension") {
    CHECK(end_algebra_dim(V) == 2);
    CHECK(end_algebra_dim(make({{1, 1, 3}})) == 9);
    CHECK(end_algebra_dim(tensor(V, V)) == 6);
    CHECK(end_algebra_dim(RepObject{}) == 0);
}

TEST_CASE("binomial and capacity table") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
    // V^{⊗k} contains each label of weight k with multiplicity C(k,q)
    for (int k = 0; k <= 8; ++k) {
        RepObject power = unit();
        for (int i = 0; i < k; ++i) power = tensor(power, V);
        for (const auto& [label, m] : power.entries()) CHECK(m == binomial(k, label.q));
    }
}

TEST_CASE("from_characters rejects Galois-unstable multisets") {
    CHECK_THROWS_AS(RepObject::from_characters({{Character{2, 0}, 1}}), RepError);
    CHECK(RepObject::from_characters({{Character{1, 1}, 2}}) == make({{1, 1, 2}}));
}
