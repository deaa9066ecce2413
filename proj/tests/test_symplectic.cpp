#include <catch2/catch_amalgamated.hpp>

#include "pencil/factorization.hpp"
#include "pencil/invariants.hpp"
#include "pencil/symplectic.hpp"

using namespace pencil;
using namespace pencil::sp;

TEST_CASE("integer matrices multiply and compare exactly", "[symplectic]") {
    CHECK_THROWS_AS(IntMat(0), std::invalid_argument);
    CHECK_THROWS_AS(IntMat(-2), std::invalid_argument);
    CHECK_THROWS_AS(IntMat(2) * IntMat(3), std::invalid_argument);

    IntMat m = IntMat::identity(4);
    CHECK(m.is_identity());
    CHECK_FALSE(m.is_minus_identity());
    for (int i = 0; i < 4; ++i) m.at(i, i) = -1;
    CHECK(m.is_minus_identity());
    CHECK(m * m == IntMat::identity(4));

    IntMat a(2), b(2);
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(1, 0) = 3; a.at(1, 1) = 4;
    b.at(0, 1) = 1; b.at(1, 0) = -1;
    IntMat ab = a * b;
    CHECK(ab.at(0, 0) == -2);
    CHECK(ab.at(0, 1) == 1);
    CHECK((a * b).transposed() == b.transposed() * a.transposed());
}

TEST_CASE("chain classes intersect like a chain of curves", "[symplectic]") {
    for (int g = 1; g <= 4; ++g) {
        const std::vector<Vec> c = chain_classes(g);
        REQUIRE(c.size() == static_cast<std::size_t>(2 * g + 1));
        for (const Vec& v : c) CHECK(v.size() == static_cast<std::size_t>(2 * g));
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t k = j; k < c.size(); ++k) {
                const mpz_class want = (k == j + 1) ? 1 : 0;
                CHECK(abs(sympl_pairing(c[j], c[k])) == want);
            }
    }
    CHECK_THROWS_AS(chain_classes(0), std::invalid_argument);
    CHECK_THROWS_AS(sympl_pairing(Vec{1, 0}, Vec{1, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(j_times(Vec{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("twists act as symplectic transvections", "[symplectic]") {
    const Vec c{1, 2, 3, 4, 5, 6};
    for (int sign : {1, -1}) {
        const IntMat m = transvection(c, sign);
        CHECK(preserves_form(m));
        // (M - I) has square zero: the twist is unipotent of rank one
        IntMat n(6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) n.at(i, j) = m.at(i, j) - (i == j ? 1 : 0);
        CHECK(n * n == IntMat(6));
    }
    CHECK(transvection(c, 1) * transvection(c, -1) == IntMat::identity(6));
    CHECK_THROWS_AS(transvection(c, 2), std::invalid_argument);
    CHECK_THROWS_AS(transvection(c, 0), std::invalid_argument);

    // non-symplectic matrices are recognized
    IntMat bad = IntMat::identity(2);
    bad.at(1, 1) = 2;
    CHECK_FALSE(preserves_form(bad));
    CHECK_FALSE(preserves_form(IntMat::identity(3)));
}

TEST_CASE("the form-preserving inverse is a two-sided inverse", "[symplectic]") {
    const std::vector<Vec> c = chain_classes(2);
    std::vector<ClassLetter> letters;
    for (int j = 0; j < 3; ++j) letters.push_back({c[static_cast<std::size_t>(j)], 1});
    const IntMat m = sp_image_classes(letters, 2);
    CHECK_FALSE(m.is_identity());
    CHECK(preserves_form(m));
    CHECK(m * sp_inverse(m) == IntMat::identity(4));
    CHECK(sp_inverse(m) * m == IntMat::identity(4));
    CHECK_THROWS_AS(sp_inverse(IntMat(3)), std::invalid_argument);
}

TEST_CASE("relator words act trivially on homology", "[symplectic]") {
    using fact::RelationKind;
    CHECK(inv::sp_image(fact::build_relation(RelationKind::odd_chain, 2)).is_identity());
    CHECK(inv::sp_image(fact::build_relation(RelationKind::hyperelliptic, 1)).is_identity());
    CHECK(inv::sp_image(fact::build_relation(RelationKind::even_chain, 2)).is_identity());

    // the palindromic half of the hyperelliptic word is the hyperelliptic
    // involution, acting as -I on homology
    for (int h = 1; h <= 3; ++h) {
        const std::vector<Vec> c = chain_classes(h);
        std::vector<ClassLetter> palindrome;
        for (int j = 0; j < 2 * h + 1; ++j)
            palindrome.push_back({c[static_cast<std::size_t>(j)], 1});
        for (int j = 2 * h; j >= 0; --j)
            palindrome.push_back({c[static_cast<std::size_t>(j)], 1});
        CHECK(sp_image_classes(palindrome, h).is_minus_identity());

        // the half power of the odd-chain word is a different involution (the
        // half rotation); it only agrees with -I in genus one
        std::vector<ClassLetter> half;
        for (int rep = 0; rep < h + 1; ++rep)
            for (int j = 0; j < 2 * h + 1; ++j) half.push_back({c[static_cast<std::size_t>(j)], 1});
        const IntMat rot = sp_image_classes(half, h);
        CHECK((rot * rot).is_identity());
        CHECK(rot.is_minus_identity() == (h == 1));
    }

    CHECK_THROWS_AS(sp_image_classes({ClassLetter{Vec{1, 0}, 1}}, 2), std::invalid_argument);
}

TEST_CASE("splitting the repeated hyperelliptic word preserves the action", "[symplectic]") {
    for (int h = 1; h <= 3; ++h)
        for (int n = 1; n <= 4; ++n) {
            INFO("h=" << h << " n=" << n);
            const IntMat lhs =
                inv::sp_image(fact::repeat(fact::build_relation(fact::RelationKind::hyperelliptic, h), n));
            const IntMat rhs = inv::sp_image(fact::hyperelliptic_split_form(h, n));
            CHECK(lhs == rhs);
            CHECK(lhs.is_identity());
        }
}
