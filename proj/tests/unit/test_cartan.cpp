#include "crystalcone/cartan.hpp"
#include "crystalcone/index_sequence.hpp"

#include <doctest.h>

using namespace crystalcone;

TEST_SUITE_BEGIN("cartan");

TEST_CASE("built-in families produce the expected matrices") {
    const CartanMatrix a2 = CartanMatrix::type_a(2);
    CHECK(a2.rank() == 2);
    CHECK(a2.at(1, 1) == 2);
    CHECK(a2.at(1, 2) == -1);
    CHECK(a2.at(2, 1) == -1);

    const CartanMatrix r22 = CartanMatrix::rank2(2, 2);
    CHECK(r22.at(1, 2) == -2);
    CHECK(r22.at(2, 1) == -2);

    const CartanMatrix aff3 = CartanMatrix::affine_a(3);
    CHECK(aff3.at(1, 3) == -1);
    CHECK(aff3.at(3, 1) == -1);
    CHECK(aff3.at(1, 2) == -1);
    CHECK(aff3.at(2, 2) == 2);
}

TEST_CASE("family preconditions are enforced") {
    CHECK_THROWS_AS(CartanMatrix::type_a(0), InvalidFamilyParams);
    CHECK_THROWS_AS(CartanMatrix::rank2(0, 1), InvalidFamilyParams);
    CHECK_THROWS_AS(CartanMatrix::rank2(3, 0), InvalidFamilyParams);
    CHECK_THROWS_AS(CartanMatrix::affine_a(2), InvalidFamilyParams);
    CHECK_NOTHROW(CartanMatrix::rank2(0, 0));
}

TEST_CASE("matrix invariants are validated") {
    CHECK_THROWS_AS(CartanMatrix::from_rows({{1, -1}, {-1, 2}}), std::invalid_argument); // diagonal
    CHECK_THROWS_AS(CartanMatrix::from_rows({{2, 1}, {-1, 2}}), std::invalid_argument);  // positive off-diagonal
    CHECK_THROWS_AS(CartanMatrix::from_rows({{2, 0}, {-1, 2}}), std::invalid_argument);  // asymmetric zeros
    CHECK_THROWS_AS(CartanMatrix::from_rows({{2, -1, -1}, {-1, 2}, {0, 0, 2}}), std::invalid_argument);
}

TEST_CASE("symmetrizability accepts the built-ins and rejects a bad cycle") {
    CHECK_NOTHROW(CartanMatrix::type_a(5));
    CHECK_NOTHROW(CartanMatrix::rank2(1, 3));
    CHECK_NOTHROW(CartanMatrix::affine_a(4));

    // A 3-cycle whose pairing products disagree cannot be symmetrized.
    CHECK_THROWS_WITH_AS(CartanMatrix::from_rows({{2, -1, -2}, {-2, 2, -1}, {-1, -1, 2}}),
                         doctest::Contains("not symmetrizable"), std::invalid_argument);

    // Same shape with consistent cycle products is fine: d = (2, 1, 2).
    CHECK_NOTHROW(CartanMatrix::from_rows({{2, -1, -1}, {-2, 2, -2}, {-1, -1, 2}}));
}

TEST_CASE("index access respects prefix and cycle") {
    const IndexSequence periodic = IndexSequence::periodic({1, 2, 3});
    CHECK(periodic.at(1) == 1);
    CHECK(periodic.at(3) == 3);
    CHECK(periodic.at(4) == 1);
    CHECK(periodic.at(302) == 2);

    const IndexSequence mixed = IndexSequence::eventually_periodic({1, 2}, {3, 1, 2});
    CHECK(mixed.at(1) == 1);
    CHECK(mixed.at(2) == 2);
    CHECK(mixed.at(3) == 3);
    CHECK(mixed.at(5) == 2);
    CHECK(mixed.at(6) == 3);
}

TEST_CASE("index sequence invariants") {
    CHECK_THROWS(IndexSequence::periodic({1, 2, 2}));                    // equal neighbors
    CHECK_THROWS(IndexSequence::periodic({2, 3}));                       // color 1 never occurs
    CHECK_THROWS(IndexSequence::eventually_periodic({1, 3}, {3, 1, 2})); // seam repeats 3
    CHECK_THROWS(IndexSequence::eventually_periodic({1}, {2, 3, 2}));    // cycle wrap repeats 2
    CHECK_NOTHROW(IndexSequence::eventually_periodic({2}, {1, 2, 3}));
}

TEST_CASE("next and previous occurrences") {
    const IndexSequence two = IndexSequence::periodic({1, 2});
    CHECK(two.next_occ(1) == 3);
    CHECK(two.prev_occ(1) == 0);

    const IndexSequence three = IndexSequence::periodic({1, 2, 3});
    CHECK(three.next_occ(5) == 8); // one full period later
    CHECK(three.prev_occ(5) == 2);
    CHECK(three.prev_occ(3) == 0);

    const IndexSequence mixed = IndexSequence::eventually_periodic({1, 2}, {3, 1, 2});
    CHECK(mixed.next_occ(1) == 4); // scan the explicit sequence 1,2,3,1,2,...
}

TEST_CASE("occurrence properties hold on a long stretch") {
    const IndexSequence seq = IndexSequence::eventually_periodic({2, 1}, {3, 2, 1, 4, 1, 3, 2, 4});
    for (Int k = 1; k <= 60; ++k) {
        const Int up = seq.next_occ(k);
        CHECK(seq.at(up) == seq.at(k));
        for (Int j = k + 1; j < up; ++j) CHECK(seq.at(j) != seq.at(k));
        CHECK(seq.prev_occ(up) == k);
    }
}

TEST_CASE("periodic sequences advance by exactly one period") {
    const IndexSequence seq = IndexSequence::periodic({3, 1, 2, 4});
    for (Int k = 1; k <= 40; ++k) CHECK(seq.next_occ(k) == k + 4);
}

TEST_CASE("first occurrences") {
    const IndexSequence seq = IndexSequence::eventually_periodic({2, 1}, {3, 2, 1, 4, 1, 3, 2, 4});
    const std::vector<Int> firsts = seq.first_occurrences();
    CHECK(firsts == std::vector<Int>{1, 2, 3, 6});
    for (Int k : firsts) CHECK(seq.first_occurrence(k));
}

TEST_SUITE_END();
