#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pencil/braid.hpp"
#include "pencil/garside.hpp"
#include "test_util.hpp"

using namespace pencil::braid;

TEST_CASE("normal form decides the word problem", "[garside]") {
    // the braid relation
    CHECK(normal_form(BraidWord(3, {1, 2, 1})) == normal_form(BraidWord(3, {2, 1, 2})));
    CHECK(equals(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));

    // distinct generators
    CHECK_FALSE(equals(BraidWord(3, {1}), BraidWord(3, {2})));

    // far commutation
    CHECK(equals(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
    CHECK_FALSE(equals(BraidWord(4, {1, 2}), BraidWord(4, {2, 1})));

    CHECK_THROWS_AS(equals(BraidWord(3), BraidWord(4)), std::invalid_argument);
}

TEST_CASE("the full twist has infimum 2 and no factors", "[garside]") {
    const GarsideNormalForm nf = normal_form(chain_word(3, 3, 3));  // (s1 s2)^3
    CHECK(nf.strands == 3);
    CHECK(nf.infimum == 2);
    CHECK(nf.factors.empty());
    CHECK(nf == normal_form(full_twist_word(3)));
    CHECK(nf.exponent_sum() == 6);
    CHECK(perm_is_identity(nf.permutation()));

    CHECK(normal_form(BraidWord(4)).trivial());
    CHECK(is_trivial(BraidWord(4)));
    CHECK(normal_form(BraidWord(1)).trivial());

    // negative infimum for inverse words
    CHECK(normal_form(invert(delta_word(4))).infimum == -1);
}

TEST_CASE("chain powers read the same in both directions", "[garside]") {
    CHECK(equals(chain_word(3, 3, 3), chain_word(3, 3, 3, true)));          // m = 2
    CHECK(equals(chain_word(4, 4, 4), chain_word(4, 4, 4, true)));          // m = 3
    for (int m = 2; m <= 7; ++m) {
        const int n = m + 1;
        CHECK(equals(chain_word(n, n, n, false), chain_word(n, n, n, true)));
    }
    // ...but a single pass is direction-sensitive
    CHECK_FALSE(equals(chain_word(4, 4, 1, false), chain_word(4, 4, 1, true)));
}

TEST_CASE("normal form is idempotent and constant on classes", "[garside]") {
    std::mt19937 rng(31415);
    for (int t = 0; t < 500; ++t) {
        const BraidWord w = testutil::random_word(rng, 6, 40);
        const GarsideNormalForm nf = normal_form(w);
        const BraidWord back = testutil::word_of_normal_form(nf);
        CHECK(normal_form(back) == nf);
        CHECK(equals(back, w));
        CHECK(nf.exponent_sum() == w.exponent_sum());
        CHECK(nf.permutation() == w.permutation());
    }
}

TEST_CASE("the full twist is central", "[garside]") {
    std::mt19937 rng(271828);
    const BraidWord twist = full_twist_word(6);
    for (int t = 0; t < 1000; ++t) {
        const BraidWord w = testutil::random_word(rng, 6, 30);
        CHECK(normal_form(compose(w, twist)) == normal_form(compose(twist, w)));
    }
    // the half twist is not
    CHECK_FALSE(equals(compose(BraidWord(3, {1}), delta_word(3)),
                       compose(delta_word(3), BraidWord(3, {2, 1, 2, 1}))));
    CHECK(equals(compose(BraidWord(3, {1}), delta_word(3)),
                 compose(delta_word(3), BraidWord(3, {2}))));
}

TEST_CASE("garside factors are left-weighted permutation braids", "[garside]") {
    std::mt19937 rng(13);
    const int n = 5;
    const long long half = static_cast<long long>(n) * (n - 1) / 2;
    for (int t = 0; t < 200; ++t) {
        const GarsideNormalForm nf = normal_form(testutil::random_word(rng, n, 35));
        for (const Perm& p : nf.factors) {
            const long long c = GarsideNormalForm::crossings(p);
            CHECK(c > 0);
            CHECK(c < half);
        }
    }
}
