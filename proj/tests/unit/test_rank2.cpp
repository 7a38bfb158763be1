#include "crystalcone/rank2.hpp"

#include "crystalcone/cone_forms.hpp"

#include <doctest.h>

using namespace crystalcone;

namespace {

using Wide = __int128;

Wide wide_p(Int lambda, int k) {
    if (k == -1) return 0;
    Wide prev = 0;
    Wide cur = 1;
    for (int step = 0; step < k; ++step) {
        const Wide next = Wide(lambda) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

TEST_SUITE_BEGIN("rank2");

TEST_CASE("polynomial values from the recursion") {
    CHECK(chebyshev_p(5, 0) == 1);
    CHECK(chebyshev_p(5, 1) == 5);
    CHECK(chebyshev_p(5, 2) == 24);  // lambda^2 - 1
    CHECK(chebyshev_p(5, 3) == 115); // lambda^3 - 2*lambda
    CHECK(chebyshev_p(4, 4) == 209); // 1, 4, 15, 56, 209
    for (int k = 0; k <= 20; ++k) CHECK(chebyshev_p(2, k) == k + 1);
}

TEST_CASE("generating identities for the polynomials") {
    for (Int lambda = -2; lambda <= 6; ++lambda) {
        for (int k = 1; k <= 20; ++k) {
            const Wide pk = wide_p(lambda, k);
            const Wide pk1 = wide_p(lambda, k + 1);
            const Wide pk0 = wide_p(lambda, k - 1);
            CHECK(Wide(lambda + 2) * pk * pk - (pk1 + pk) * (pk + pk0) == 1);
            CHECK((pk + pk0) * (pk + pk0) - Wide(lambda + 2) * pk * pk0 == 1);
            CHECK(wide_p(lambda, k) == Wide(chebyshev_p(lambda, k)));
        }
    }
}

TEST_CASE("coefficient sequences for the small products") {
    const Rank2System zero = Rank2System::make(0, 0, 10);
    CHECK(zero.l_max() == 2);
    CHECK(zero.a(1) == 1);
    CHECK(zero.a(2) == 0);

    const Rank2System ones = Rank2System::make(1, 1, 10);
    CHECK(ones.l_max() == 3);
    CHECK(ones.a(2) == 1);
    CHECK(ones.a(3) == 0);

    const Rank2System mixed = Rank2System::make(3, 1, 10);
    CHECK(mixed.l_max() == 6);
    CHECK(mixed.a(0) == 0);
    CHECK(mixed.a(1) == 1);
    CHECK(mixed.a(2) == 3);
    CHECK(mixed.a(3) == 2);
    CHECK(mixed.a(4) == 3);
    CHECK(mixed.a(5) == 1);
    CHECK(mixed.a(6) == 0);

    const Rank2System affine = Rank2System::make(2, 2, 32);
    CHECK_FALSE(affine.l_max().has_value());
    for (int l = 0; l <= 30; ++l) CHECK(affine.a(l) == l);
}

TEST_CASE("the recursion agrees with the polynomial formula") {
    for (Int c1 = 0; c1 <= 4; ++c1) {
        for (Int c2 = 0; c2 <= 4; ++c2) {
            if ((c1 == 0) != (c2 == 0)) continue;
            const Rank2System sys = Rank2System::make(c1, c2, 24);
            const Int lambda = sys.lambda();
            for (int k = 1; 2 * k + 1 <= 24; ++k) {
                CHECK(Wide(sys.a(2 * k)) == Wide(c1) * wide_p(lambda, k - 1));
                CHECK(Wide(sys.a(2 * k + 1)) == wide_p(lambda, k) + wide_p(lambda, k - 1));
            }
        }
    }
}

TEST_CASE("the determinant identity") {
    for (Int c1 = 0; c1 <= 4; ++c1) {
        for (Int c2 = 0; c2 <= 4; ++c2) {
            if ((c1 == 0) != (c2 == 0)) continue;
            const Rank2System sys = Rank2System::make(c1, c2, 24);
            for (int l = 1; l <= 20; ++l) {
                const Wide det = Wide(sys.a(l)) * sys.a_swapped(l) - Wide(sys.a(l + 1)) * sys.a_swapped(l - 1);
                CHECK(det == 1);
            }
        }
    }
}

TEST_CASE("generator forms and vanishing") {
    const Rank2System affine = Rank2System::make(2, 2, 12);
    const std::vector<LinearForm> forms = affine.generator_forms(5);
    REQUIRE(forms.size() == 5);
    CHECK(forms[0] == LinearForm::from_terms({{1, 1}}));
    CHECK(forms[4] == LinearForm::from_terms({{5, 5}, {6, -4}}));
    CHECK_FALSE(affine.vanish_above().has_value());

    const Rank2System ones = Rank2System::make(1, 1, 12);
    const std::vector<LinearForm> small = ones.generator_forms(8);
    REQUIRE(small.size() == 2);
    CHECK(small[0] == LinearForm::unit(1));
    CHECK(small[1] == LinearForm::from_terms({{2, 1}, {3, -1}}));
    CHECK(ones.vanish_above() == 2 + 1);
}

TEST_CASE("transformation chains reproduce the closed coefficients") {
    for (auto [c1, c2] : std::vector<std::pair<Int, Int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {2, 3}}) {
        const CrystalData cd(CartanMatrix::rank2(c1, c2), IndexSequence::periodic({1, 2}));
        const Rank2System sys = Rank2System::make(c1, c2, 20);
        const int top = sys.l_max() ? *sys.l_max() : 8;
        for (Int k = 1; k <= 5; ++k) {
            LinearForm chain = LinearForm::unit(k);
            for (int l = 0; l < top; ++l) {
                // odd starting positions follow a, even ones the swapped sequence
                const bool odd = (k % 2 == 1);
                const Int high = odd ? sys.a(l + 1) : sys.a_swapped(l + 1);
                const Int low = odd ? sys.a(l) : sys.a_swapped(l);
                CHECK(chain == LinearForm::from_terms({{k + l, high}, {k + l + 1, -low}}));
                chain = s_transform(cd, chain, k + l);
            }
        }
    }
}

TEST_CASE("one transformation undoes the previous one on the chain") {
    const CrystalData cd(CartanMatrix::rank2(1, 2), IndexSequence::periodic({1, 2}));
    const Rank2System sys = Rank2System::make(1, 2, 20);
    for (Int k = 1; k <= 4; ++k) {
        std::vector<LinearForm> chain{LinearForm::unit(k)};
        for (int l = 1; l < *sys.l_max(); ++l) chain.push_back(s_transform(cd, chain.back(), k + l - 1));
        for (size_t l = 1; l < chain.size(); ++l)
            CHECK(s_transform(cd, chain[l], k + static_cast<Int>(l) + 1) == chain[l - 1]);
    }
}

TEST_CASE("the redundancy identity between neighboring chains") {
    // a_{l+1} * form2^(l-1) = a'_l * form1^(l) + x_{l+2} as exact forms
    for (auto [c1, c2] : std::vector<std::pair<Int, Int>>{{1, 1}, {2, 2}, {1, 3}, {3, 2}}) {
        const Rank2System sys = Rank2System::make(c1, c2, 20);
        const int top = sys.l_max() ? *sys.l_max() : 10;
        for (int l = 1; l < top; ++l) {
            LinearForm lhs = LinearForm::from_terms(
                {{l + 1, sys.a_swapped(l)}, {l + 2, -sys.a_swapped(l - 1)}}); // chain from k=2 at step l-1
            LinearForm rhs = LinearForm::from_terms({{l + 1, sys.a(l + 1)}, {l + 2, -sys.a(l)}});
            LinearForm lhs_scaled;
            lhs_scaled.add_scaled(lhs, sys.a(l + 1));
            LinearForm rhs_scaled;
            rhs_scaled.add_scaled(rhs, sys.a_swapped(l));
            rhs_scaled.add_scaled(LinearForm::unit(l + 2), 1);
            CHECK(lhs_scaled == rhs_scaled);
        }
    }
}

TEST_SUITE_END();
