#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rht/errors.hpp"
#include "rht/qlin.hpp"

#include <random>

using namespace rht;

namespace {

QMatrix from_rows(std::vector<QVector> rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            // mpq_class(n, d) stores the pair raw; gmp arithmetic needs canonical form
            Rational q(num(rng), den(rng));
            q.canonicalize();
            m(i, j) = q;
        }
    return m;
}

} // namespace

TEST_CASE("rational text round trip") {
    CHECK(rational_to_string(rational_from_string("6/4")) == "3/2");
    CHECK(rational_to_string(rational_from_string("-6/4")) == "-3/2");
    CHECK(rational_to_string(rational_from_string("7")) == "7");
    CHECK(rational_from_string("0/5") == 0);
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("a"), Error);
    CHECK_THROWS_AS(rational_from_string(""), Error);
    CHECK_THROWS_AS(rational_from_string("1.5"), Error);
}

TEST_CASE("solve picks the free-variables-zero solution") {
    QMatrix m = from_rows({{1, 1}});
    auto x = solve_any(m, {Rational(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 0);
}

TEST_CASE("solve reports inconsistent systems") {
    QMatrix m = from_rows({{1, 0}, {1, 0}});
    CHECK(!solve_any(m, {Rational(1), Rational(2)}).has_value());
    auto x = solve_any(m, {Rational(3), Rational(3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
}

TEST_CASE("rank plus nullity equals the column count") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
        QMatrix m = random_matrix(rng, r, c);
        CHECK(rank(m) + kernel_basis(m).dim() == c);
        CHECK(column_space(m).dim() == rank(m));
    }
}

TEST_CASE("kernel vectors are annihilated") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix m = random_matrix(rng, 3, 5);
        Subspace K = kernel_basis(m);
        for (const auto& v : K.basis()) {
            for (const auto& y : m.apply(v)) CHECK(y == 0);
        }
    }
}

TEST_CASE("subspace equality is independent of the spanning set") {
    auto s1 = Subspace::span(3, {{Rational(1), Rational(1), Rational(0)},
                                 {Rational(0), Rational(1), Rational(1)}});
    auto s2 = Subspace::span(3, {{Rational(2), Rational(3), Rational(1)},
                                 {Rational(1), Rational(2), Rational(1)},
                                 {Rational(3), Rational(5), Rational(2)}});
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    auto s3 = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}});
    CHECK(s1 != s3);
}

TEST_CASE("reduce is idempotent and detects membership") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto s = Subspace::span(4, {{Rational(1), Rational(2), Rational(0), Rational(1)},
                                {Rational(0), Rational(0), Rational(1), Rational(2)}});
    for (int trial = 0; trial < 20; ++trial) {
        QVector v(4);
        for (auto& x : v) x = coeff(rng);
        QVector r = s.reduce(v);
        CHECK(s.reduce(r) == r);
        bool zero = true;
        for (const auto& x : r) zero = zero && x == 0;
        CHECK(zero == s.contains(v));
        // v - reduce(v) always lies in the subspace
        QVector diff(4);
        for (std::size_t i = 0; i < 4; ++i) diff[i] = v[i] - r[i];
        CHECK(s.contains(diff));
    }
}

TEST_CASE("sum of subspaces") {
    auto a = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}});
    auto b = Subspace::span(3, {{Rational(0), Rational(1), Rational(0)}});
    auto c = a.sum(b);
    CHECK(c.dim() == 2);
    CHECK(c.contains({Rational(2), Rational(-3), Rational(0)}));
    CHECK(!c.contains({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("determinant and inverse") {
    QMatrix m = from_rows({{1, 2}, {3, 4}});
    CHECK(determinant(m) == -2);
    QMatrix inv = inverse(m);
    CHECK(m.multiply(inv) == QMatrix::identity(2));
    CHECK(inv.multiply(m) == QMatrix::identity(2));

    QMatrix sing = from_rows({{1, 2}, {2, 4}});
    CHECK(determinant(sing) == 0);
    CHECK_THROWS_AS(inverse(sing), Error);

    // empty matrix: the determinant of the unique 0x0 matrix is 1
    CHECK(determinant(QMatrix(0, 0)) == 1);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
        CHECK(determinant(a.multiply(b)) == determinant(a) * determinant(b));
    }
}
