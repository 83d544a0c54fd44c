#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "suicp/codec.hpp"
#include "suicp/oracle.hpp"

using namespace suicp;

TEST_CASE("bruteforce decodability on trivial matrices") {
    SciInstance inst(4, 1, 1, 0);
    CHECK(check_decodable_bruteforce(ExactMatrix::identity(4), inst));
    CHECK_FALSE(check_decodable_bruteforce(ExactMatrix(4, 3), inst));

    // receiver 0 interferes with 1 and 3; give it the same row as receiver 1
    ExactMatrix bad = ExactMatrix::identity(4);
    bad.set_row(0, bad.row(1));
    CHECK_FALSE(check_decodable_bruteforce(bad, inst));

    CHECK_THROWS_AS(check_decodable_bruteforce(ExactMatrix(3, 2), inst),
                    std::invalid_argument);
}

TEST_CASE("minimal scalar code lengths on tiny cycles") {
    // K=4, D=U=1: x_0+x_2 and x_1+x_3 suffice
    auto r = minimal_scalar_code(SciInstance(4, 1, 1, 0), 4);
    REQUIRE(r.has_value());
    CHECK(r->minimal_length == 2);
    CHECK(check_decodable_bruteforce(r->witness, SciInstance(4, 1, 1, 0)));

    // K=3, D=U=1: no side info at all, so nothing shorter than sending each
    // message works
    r = minimal_scalar_code(SciInstance(3, 1, 1, 0), 3);
    REQUIRE(r.has_value());
    CHECK(r->minimal_length == 3);

    // K=5, D=U=2: everyone interferes with everyone else, so all five
    // messages must be sent separately
    r = minimal_scalar_code(SciInstance(5, 2, 2, 0), 5);
    REQUIRE(r.has_value());
    CHECK(r->minimal_length == 5);

    // K=5, D=2, U=1: the minimum sits between the converse D+1 and the
    // constructive length 5, and one symbol less must be infeasible
    r = minimal_scalar_code(SciInstance(5, 2, 1, 0), 5);
    REQUIRE(r.has_value());
    CHECK(r->minimal_length >= 3);
    CHECK(r->minimal_length <= 5);
    CHECK(check_decodable_bruteforce(r->witness, SciInstance(5, 2, 1, 0)));
    CHECK_FALSE(minimal_scalar_code(SciInstance(5, 2, 1, 0), r->minimal_length - 1)
                    .has_value());

    // nothing decodable in 1 symbol when two receivers interfere
    CHECK_FALSE(minimal_scalar_code(SciInstance(4, 1, 1, 0), 1).has_value());
}

TEST_CASE("oracle caps are enforced") {
    CHECK_THROWS_AS(minimal_scalar_code(SciInstance(7, 1, 1, 0), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(minimal_scalar_code(SciInstance(5, 1, 1, 0), 6),
                    std::invalid_argument);
}

TEST_CASE("oracle witness agrees with the elimination-based verifier") {
    auto r = minimal_scalar_code(SciInstance(6, 2, 1, 0), 4);
    REQUIRE(r.has_value());
    FieldSpec gf2;
    CHECK(verify_decodability(r->witness, SciInstance(6, 2, 1, 0), 1, gf2).all_ok());
    // one length shorter must be impossible for the verifier too: every
    // candidate of that length fails (spot-checked by the bruteforce result)
    CHECK(r->minimal_length >= 3);
}

TEST_CASE("bruteforce and elimination verdicts agree on random scalar codes") {
    std::mt19937_64 rng(99);
    FieldSpec gf2;
    SciInstance inst(5, 2, 1, 0);
    std::uniform_int_distribution<unsigned> bit(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        ExactMatrix enc(5, 4);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                enc.at(r, c) = static_cast<std::uint8_t>(bit(rng));
        CHECK(check_decodable_bruteforce(enc, inst) ==
              verify_decodability(enc, inst, 1, gf2).all_ok());
    }
}

TEST_CASE("the reference 18x12 matrix is decodable as a scalar code") {
    // the t=1 view of the 18-receiver code: interference spans 11 ahead and
    // 5 behind once the m-fold window is absorbed
    SciInstance folded(18, 11, 5, 0);
    CHECK(check_decodable_bruteforce(fixtures::air_18x12(), folded));
}
