#include "doctest.h"
#include "graphlink/error.hpp"
#include "graphlink/generators.hpp"
#include "graphlink/gf2_matrix.hpp"
#include "support.hpp"

using namespace graphlink;

TEST_CASE("determinant examples") {
    CHECK(determinant(Gf2Matrix::from_rows({{1}})) == 1);
    CHECK(determinant(Gf2Matrix::from_rows({{0, 1}, {1, 0}})) == 1);
    CHECK(determinant(Gf2Matrix::from_rows({{1, 1}, {1, 1}})) == 0);
    CHECK(determinant(Gf2Matrix(0)) == 1);
    CHECK(corank(Gf2Matrix(0)) == 0);
}

TEST_CASE("corank examples") {
    CHECK(corank(Gf2Matrix(2)) == 2);
    CHECK(corank(Gf2Matrix::identity(4)) == 0);
    CHECK(corank(Gf2Matrix::from_rows({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("inverse examples") {
    const auto p = Gf2Matrix::from_rows({{0, 1}, {1, 0}});
    CHECK(inverse(p) == p);
    const auto m = Gf2Matrix::from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}});
    const auto expected = Gf2Matrix::from_rows({{0, 1, 1}, {1, 1, 1}, {1, 1, 0}});
    CHECK(support::matrix(oracle::adjugate_inverse(support::table(m))) == expected);
    CHECK(oracle::multiply(support::table(m), support::table(expected)) == oracle::identity(3));
    CHECK(inverse(m) == expected);
    CHECK_THROWS_AS(static_cast<void>(inverse(Gf2Matrix::from_rows({{1, 1}, {1, 1}}))), Error);
    try {
        static_cast<void>(inverse(Gf2Matrix::from_rows({{1, 1}, {1, 1}})));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularMatrix);
    }
}

TEST_CASE("delete_rows_cols examples") {
    CHECK(delete_rows_cols(Gf2Matrix::from_rows({{0, 1}, {1, 0}}), {0}) == Gf2Matrix::from_rows({{0}}));
    CHECK(delete_rows_cols(Gf2Matrix::from_rows({{1}}), {0}).size() == 0);
    CHECK(delete_rows_cols(Gf2Matrix::from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}), {1}) ==
          Gf2Matrix::from_rows({{1, 0}, {0, 1}}));
    try {
        static_cast<void>(delete_rows_cols(Gf2Matrix(2), {2}));
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
}

TEST_CASE("flip_diagonal_entry examples") {
    CHECK(flip_diagonal_entry(Gf2Matrix::from_rows({{1}}), 0) == Gf2Matrix::from_rows({{0}}));
    CHECK(flip_diagonal_entry(Gf2Matrix::from_rows({{0, 1}, {1, 0}}), 1) == Gf2Matrix::from_rows({{0, 1}, {1, 1}}));
    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        const auto m = random_symmetric(rng, 1 + k % 9);
        CHECK(flip_diagonal_entry(flip_diagonal_entry(m, 0), 0) == m);
    }
    CHECK_THROWS_AS(static_cast<void>(flip_diagonal_entry(Gf2Matrix(2), 2)), Error);
}

TEST_CASE("from_rows rejects ragged tables") {
    CHECK_THROWS_AS(static_cast<void>(Gf2Matrix::from_rows({{1, 0}, {1}})), Error);
}

TEST_CASE("debug rendering") { CHECK(Gf2Matrix::from_rows({{1, 0}, {0, 1}}).to_string() == "10\n01\n"); }

TEST_CASE("det and rank agree with brute force on all symmetric matrices up to 4x4 and random ones to 5x5") {
    for (std::size_t n = 0; n <= 4; ++n) {
        const std::size_t slots = n * (n + 1) / 2;
        for (std::uint32_t code = 0; code < (1U << slots); ++code) {
            oracle::Table t(n, std::vector<int>(n, 0));
            std::size_t bit = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j, ++bit) t[i][j] = t[j][i] = (code >> bit) & 1U;
            const auto m = support::matrix(t);
            REQUIRE(determinant(m) == (n == 0 ? 1 : oracle::leibniz_det(t)));
            REQUIRE(rank(m) == oracle::symmetric_rank_by_principal_minors(t));
            REQUIRE((determinant(m) == 1) == (corank(m) == 0));
        }
    }
    Rng rng(11);
    for (int k = 0; k < 2000; ++k) {
        const auto m = random_symmetric(rng, 5);
        REQUIRE(rank(m) == oracle::symmetric_rank_by_principal_minors(support::table(m)));
    }
}

TEST_CASE("rank agrees with the minor oracle on general matrices") {
    Rng rng(3);
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = 1 + k % 4;
        oracle::Table t(n, std::vector<int>(n));
        for (auto& row : t)
            for (auto& x : row) x = coin(rng);
        const auto m = support::matrix(t);
        REQUIRE(rank(m) == oracle::rank_by_minors(t));
        REQUIRE(determinant(m) == oracle::leibniz_det(t));
    }
}

TEST_CASE("inverse is an involution and matches the adjugate") {
    Rng rng(5);
    int tested = 0;
    for (int k = 0; k < 3000 && tested < 500; ++k) {
        const auto m = random_symmetric(rng, 1 + k % 7);
        if (determinant(m) != 1) continue;
        ++tested;
        const auto inv = inverse(m);
        REQUIRE(inverse(inv) == m);
        REQUIRE(inv.is_symmetric());
        REQUIRE(m * inv == Gf2Matrix::identity(m.size()));
        REQUIRE(support::table(inv) == oracle::adjugate_inverse(support::table(m)));
    }
    CHECK(tested == 500);
}

TEST_CASE("wide matrices cross the 64-bit word boundary") {
    Rng rng(9);
    for (int k = 0; k < 20; ++k) {
        const auto m = random_symmetric(rng, 70);
        const auto ident = Gf2Matrix::identity(70);
        if (determinant(m) == 1) CHECK(m * inverse(m) == ident);
        CHECK(rank(m + m) == 0);
        CHECK(rank(ident) == 70);
    }
}
