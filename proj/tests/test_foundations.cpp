#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hodgeforge/linalg.hpp"
#include "hodgeforge/realization.hpp"

using namespace hodgeforge;

namespace {

Rational random_rational(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> num(-bound, bound), den(1, bound);
    return Rational(num(rng), den(rng));
}

Gaussian random_gaussian(std::mt19937_64& rng, std::int64_t bound) {
    return {random_rational(rng, bound), random_rational(rng, bound)};
}

template <class F, class Gen>
Matrix<F> random_matrix(std::size_t r, std::size_t c, Gen gen) {
    Matrix<F> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = gen();
    return m;
}

}  // namespace

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::parse("−7/14") == Rational(-1, 2));
    CHECK(Rational::parse("10/5").is_integer());
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS((void)Rational(0).inverse());
}

TEST_CASE("rational overflow falls back to big integers") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    const Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    CHECK(sq.to_mpq() == mpq_class(mpz_class(big.numerator() * big.numerator())));
    // returns to the small representation when the value fits again
    const Rational back = sq / big;
    CHECK(back.is_small());
    CHECK(back == big);
    const Rational min(std::numeric_limits<std::int64_t>::min());
    CHECK((-min).to_mpq() == -min.to_mpq());
    CHECK(Rational::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
}

TEST_CASE("rational arithmetic matches GMP on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t bound = trial % 2 ? 1000 : (std::int64_t{1} << 40);
        const Rational a = random_rational(rng, bound), b = random_rational(rng, bound), c = random_rational(rng, bound);
        const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(((a < b) == (qa < qb)));
        const mpq_class s = (a * b * c).to_mpq();
        CHECK(mpz_class(gcd(s.get_num(), s.get_den())) == 1);
    }
}

TEST_CASE("gaussian conjugation is an involutive field homomorphism") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Gaussian z = random_gaussian(rng, 50), w = random_gaussian(rng, 50);
        CHECK(z.conj().conj() == z);
        CHECK((z * w).conj() == z.conj() * w.conj());
        CHECK((z + w).conj() == z.conj() + w.conj());
        CHECK((z.conj() == z) == z.is_real());
        if (!w.is_zero()) CHECK((z / w) * w == z);
    }
    CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
    CHECK(times_i_power(Gaussian(1), 3) == -Gaussian::i());
    CHECK(times_i_power(Gaussian(1), -1) == -Gaussian::i());
    CHECK(pow(Gaussian(1, 2), 2) == Gaussian(-3, 4));
}

TEST_CASE("kron examples") {
    CHECK(kron(QMatrix::identity(2), QMatrix::identity(2)) == QMatrix::identity(4));
    const QMatrix swap{{0, 1}, {1, 0}};
    CHECK(kron(swap, QMatrix{{2}}) == QMatrix{{0, 2}, {2, 0}});
    // left factor most significant
    const QMatrix a{{1, 2}, {3, 4}};
    const QMatrix k = kron(a, swap);
    CHECK(k == QMatrix{{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}});
    CHECK(kron_power(a, 0) == QMatrix::identity(1));
}

TEST_CASE("kron(h,h) scales dz⊗dz by the squared eigenvalue") {
    const TorusElement t(Rational(1), Rational(2));
    const BaseStructure b = base_structure();
    GVector dzdz(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dzdz[2 * i + j] = b.dz[i] * b.dz[j];
    const GMatrix h2 = complexify(kron(t.matrix(), t.matrix()));
    const GVector image = h2 * dzdz;
    const Gaussian lambda = Gaussian(1, 2) * Gaussian(1, 2);
    for (int i = 0; i < 4; ++i) CHECK(image[i] == lambda * dzdz[i]);
}

TEST_CASE("mixed product property of kron") {
    std::mt19937_64 rng(3);
    auto gen = [&] { return random_rational(rng, 9); };
    for (int trial = 0; trial < 30; ++trial) {
        const QMatrix a = random_matrix<Rational>(2, 3, gen), b = random_matrix<Rational>(3, 2, gen);
        const QMatrix c = random_matrix<Rational>(3, 2, gen), d = random_matrix<Rational>(2, 3, gen);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
    auto ggen = [&] { return random_gaussian(rng, 5); };
    const GMatrix a = random_matrix<Gaussian>(2, 2, ggen), b = random_matrix<Gaussian>(2, 2, ggen);
    CHECK(kron(a, b) * kron(b, a) == kron(a * b, b * a));
}

TEST_CASE("integer fast path agrees with naive multiplication") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t bound = trial % 3 == 0 ? (std::int64_t{1} << 50) : 20;
        auto gen = [&] { return random_rational(rng, bound); };
        const QMatrix a = random_matrix<Rational>(5, 4, gen), b = random_matrix<Rational>(4, 6, gen);
        const QMatrix c = a * b;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                mpq_class acc = 0;
                for (std::size_t l = 0; l < 4; ++l) acc += a(i, l).to_mpq() * b(l, j).to_mpq();
                CHECK(c(i, j).to_mpq() == acc);
            }
    }
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(QMatrix::identity(3)).empty());
    const auto zero = kernel_basis(QMatrix(2, 2));
    REQUIRE(zero.size() == 2);
    CHECK(zero[0] == QVector{1, 0});
    CHECK(zero[1] == QVector{0, 1});
    const Gaussian i = Gaussian::i();
    const GMatrix m{{Gaussian(1), i}, {-i, Gaussian(1)}};
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK((m * k[0]) == GVector{Gaussian(0), Gaussian(0)});
}

TEST_CASE("kernel_basis is independent and satisfies rank-nullity") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> small(-2, 2), dimension(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = dimension(rng), c = dimension(rng);
        QMatrix a(r, c);
        // low-rank products make nontrivial kernels common
        const std::size_t inner = 1 + trial % 3;
        QMatrix u(r, inner), v(inner, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < inner; ++j) u(i, j) = small(rng);
        for (std::size_t i = 0; i < inner; ++i)
            for (std::size_t j = 0; j < c; ++j) v(i, j) = small(rng);
        a = u * v;
        const auto ker = kernel_basis(a);
        CHECK(rank(a) + ker.size() == c);
        for (const auto& x : ker) {
            const QVector ax = a * x;
            CHECK(std::all_of(ax.begin(), ax.end(), [](const Rational& e) { return e.is_zero(); }));
        }
        if (!ker.empty()) CHECK(rank(QMatrix::from_columns(c, ker)) == ker.size());
    }
}

TEST_CASE("eigenspace examples") {
    CHECK(eigenspace(QMatrix::identity(2), Rational(1)).size() == 2);
    const QMatrix d{{2, 0}, {0, 3}};
    CHECK(eigenspace(d, Rational(5)).empty());
    const TorusElement t(Rational(1), Rational(2));
    const auto e = eigenspace(complexify(t.matrix()), Gaussian(1, 2));
    REQUIRE(e.size() == 1);
    // proportional to dz = (i, 1)
    const BaseStructure b = base_structure();
    CHECK(e[0][0] * b.dz[1] == e[0][1] * b.dz[0]);
}

TEST_CASE("eigenspace vectors are eigenvectors") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        QMatrix a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = (i + j + trial) % 3 == 0 ? Rational(small(rng)) : Rational(0);
        const Rational lambda = small(rng);
        for (const auto& v : eigenspace(a, lambda)) {
            const QVector av = a * v;
            for (std::size_t i = 0; i < 4; ++i) CHECK(av[i] == lambda * v[i]);
        }
    }
}

TEST_CASE("is_idempotent examples") {
    CHECK(is_idempotent(QMatrix::identity(3)));
    CHECK_FALSE(is_idempotent(QMatrix{{1, 1}, {0, 1}}));
    CHECK(is_idempotent(QMatrix{{1, 1}, {0, 0}}));
}

TEST_CASE("commutant_dimension examples") {
    const QMatrix id = QMatrix::identity(2);
    CHECK(commutant_dimension<Rational>(std::span(&id, 1)) == 4);
    const QMatrix d{{1, 0}, {0, 2}};
    CHECK(commutant_dimension<Rational>(std::span(&d, 1)) == 2);
    const QMatrix t = TorusElement(Rational(1), Rational(2)).matrix();
    CHECK(commutant_dimension<Rational>(std::span(&t, 1)) == 2);
    const std::vector<QMatrix> mismatched{QMatrix::identity(2), QMatrix::identity(3)};
    CHECK_THROWS(commutant_dimension<Rational>(mismatched));
}

TEST_CASE("inverse and positive definiteness") {
    const QMatrix a{{2, 1}, {1, 1}};
    CHECK(a * inverse(a) == QMatrix::identity(2));
    CHECK_THROWS(inverse(QMatrix{{1, 2}, {2, 4}}));
    const Gaussian i = Gaussian::i();
    CHECK(is_positive_definite(GMatrix{{Gaussian(2), i}, {-i, Gaussian(2)}}));
    CHECK_FALSE(is_positive_definite(GMatrix{{Gaussian(1), Gaussian(2)}, {Gaussian(2), Gaussian(1)}}));
    CHECK_FALSE(is_positive_definite(GMatrix{{Gaussian(1), i}, {i, Gaussian(1)}}));  // not Hermitian
}

TEST_CASE("matrix shape errors") {
    CHECK_THROWS(QMatrix(2, 3) * QMatrix(2, 3));
    CHECK_THROWS(QMatrix(2, 2) + QMatrix(3, 3));
    CHECK_THROWS(QMatrix(2, 2).at(2, 0));
    CHECK_THROWS((QMatrix{{1, 2}, {3}}));
}
