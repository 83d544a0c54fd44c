#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "suicp/field.hpp"

using namespace suicp;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                          unsigned p) {
    std::uniform_int_distribution<unsigned> dist(0, p - 1);
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = static_cast<std::uint8_t>(dist(rng));
    return m;
}

}  // namespace

TEST_CASE("field spec validates the modulus") {
    CHECK_NOTHROW(FieldSpec(2));
    CHECK_NOTHROW(FieldSpec(3));
    CHECK_NOTHROW(FieldSpec(5));
    CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(0), std::invalid_argument);
}

TEST_CASE("field arithmetic round trips through inverses") {
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        FieldSpec f(p);
        for (unsigned a = 1; a < p; ++a)
            CHECK(f.mul(static_cast<std::uint8_t>(a), f.inv(static_cast<std::uint8_t>(a))) == 1);
    }
}

TEST_CASE("rank basics") {
    FieldSpec gf2;
    CHECK(rank(ExactMatrix::identity(3), gf2) == 3);
    CHECK(rank(ExactMatrix(4, 2), gf2) == 0);
    CHECK(rank(ExactMatrix(), gf2) == 0);
    CHECK(rank(fixtures::air_18x12(), gf2) == 12);
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937_64 rng(7);
    for (unsigned p : {2u, 3u, 5u}) {
        FieldSpec f(p);
        for (int i = 0; i < 30; ++i) {
            ExactMatrix m = random_matrix(rng, 1 + i % 8, 1 + (i * 3) % 9, p);
            CHECK(rank(m, f) == rank(m.transpose(), f));
        }
    }
}

TEST_CASE("rank is invariant under row permutation and scaling") {
    std::mt19937_64 rng(11);
    FieldSpec f(5);
    for (int i = 0; i < 20; ++i) {
        ExactMatrix m = random_matrix(rng, 5, 6, 5);
        ExactMatrix shuffled(5, 6);
        std::vector<std::size_t> perm{4, 2, 0, 3, 1};
        std::uniform_int_distribution<unsigned> nz(1, 4);
        for (std::size_t r = 0; r < 5; ++r) {
            std::uint8_t s = static_cast<std::uint8_t>(nz(rng));
            for (std::size_t c = 0; c < 6; ++c)
                shuffled.at(r, c) = f.mul(s, m.at(perm[r], c));
        }
        CHECK(rank(m, f) == rank(shuffled, f));
    }
}

TEST_CASE("in_span basics") {
    FieldSpec gf2;
    ExactMatrix id3 = ExactMatrix::identity(3);

    ExactMatrix rows12(0, 3);
    rows12.append_row(id3.row(1));
    rows12.append_row(id3.row(2));
    CHECK_FALSE(in_span(id3.row(0), rows12, gf2));
    CHECK(in_span({0, 0, 0}, rows12, gf2));

    // row 12 of the 18x12 matrix is e_0 + e_6, the sum of rows 0 and 6
    ExactMatrix air = fixtures::air_18x12();
    ExactMatrix span06(0, 12);
    span06.append_row(air.row(0));
    span06.append_row(air.row(6));
    CHECK(in_span(air.row(12), span06, gf2));

    CHECK_THROWS_AS(in_span({1, 0}, id3, gf2), std::invalid_argument);
}

TEST_CASE("solve_left identity and insoluble cases") {
    FieldSpec gf2;
    auto w = solve_left(ExactMatrix::identity(2), {1, 1}, gf2);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<std::uint8_t>{1, 1});

    ExactMatrix e1(0, 3);
    e1.append_row({0, 1, 0});
    CHECK_FALSE(solve_left(e1, {1, 0, 0}, gf2).has_value());
}

TEST_CASE("solve_left solution verifies by multiplication") {
    ExactMatrix air = fixtures::air_18x12();
    ExactMatrix s(0, 12);
    s.append_row(air.row(0));
    s.append_row(air.row(6));
    s.append_row(air.row(12));
    std::vector<std::uint8_t> e0(12, 0);
    e0[0] = 1;
    FieldSpec gf2;
    auto w = solve_left(s, e0, gf2);
    REQUIRE(w.has_value());
    CHECK(row_times_matrix(*w, s, gf2) == e0);
}

TEST_CASE("in_span implies solve_left succeeds and verifies") {
    std::mt19937_64 rng(23);
    for (unsigned p : {2u, 3u, 5u}) {
        FieldSpec f(p);
        std::uniform_int_distribution<unsigned> dist(0, p - 1);
        for (int i = 0; i < 40; ++i) {
            ExactMatrix s = random_matrix(rng, 2 + i % 5, 4 + i % 4, p);
            // build v as a random combination of the rows, so it is in span
            std::vector<std::uint8_t> coeffs(s.rows());
            for (auto& c : coeffs) c = static_cast<std::uint8_t>(dist(rng));
            std::vector<std::uint8_t> v = row_times_matrix(coeffs, s, f);
            CHECK(in_span(v, s, f));
            auto w = solve_left(s, v, f);
            REQUIRE(w.has_value());
            CHECK(row_times_matrix(*w, s, f) == v);
        }
    }
}

TEST_CASE("solve_left is deterministic") {
    ExactMatrix air = fixtures::air_18x12();
    ExactMatrix s(0, 12);
    for (std::size_t r : {0, 6, 12}) s.append_row(air.row(static_cast<std::size_t>(r)));
    std::vector<std::uint8_t> e0(12, 0);
    e0[0] = 1;
    FieldSpec gf2;
    CHECK(solve_left(s, e0, gf2) == solve_left(s, e0, gf2));
}
