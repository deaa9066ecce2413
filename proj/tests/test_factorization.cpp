#include <catch2/catch_amalgamated.hpp>

#include "pencil/factorization.hpp"
#include "pencil/garside.hpp"
#include "pencil/invariants.hpp"

using namespace pencil;
using namespace pencil::fact;

TEST_CASE("curve tables refuse conflicts and unknown names", "[factorization]") {
    TwistFactorization f;
    f.ambient = {1, 0, 0};
    f.add_curve(chain_curve(1, 1));
    f.add_curve(chain_curve(1, 1));  // identical redefinition is fine
    CHECK(f.curves.size() == 1);

    CurveSymbol clash = chain_curve(1, 2);
    clash.name = "c1";
    CHECK_THROWS_AS(f.add_curve(clash), std::invalid_argument);

    CHECK_THROWS_AS(f.push_letter("nope"), std::invalid_argument);
    CHECK_THROWS_AS(f.push_letter("c1", 2), std::invalid_argument);
    CHECK_THROWS_AS(f.curve("nope"), std::invalid_argument);
    CHECK_THROWS_AS(chain_curve(1, 4), std::invalid_argument);

    f.push_letter("c1");
    f.push_letter("c1", -1);
    CHECK(f.letter_count() == 2);  // twist words do not freely reduce
}

TEST_CASE("classical relators have the stated letter counts", "[factorization]") {
    const TwistFactorization odd = build_relation(RelationKind::odd_chain, 1);
    CHECK(odd.letter_count() == 12);
    CHECK(odd.ambient == SurfaceSignature{1, 0, 0});
    CHECK(odd.target == TargetKind::identity);

    const TwistFactorization hyp2 = build_relation(RelationKind::hyperelliptic, 2);
    CHECK(hyp2.letter_count() == 20);
    CHECK(inv::euler_from_word(hyp2) == 16);

    CHECK(build_relation(RelationKind::odd_chain, 2).letter_count() == 30);
    CHECK(build_relation(RelationKind::even_chain, 1).letter_count() == 12);
    CHECK(build_relation(RelationKind::even_chain, 2).letter_count() == 40);

    const TwistFactorization lantern = build_relation(RelationKind::lantern);
    CHECK(lantern.letter_count() == 3);
    CHECK(lantern.ambient == SurfaceSignature{0, 4, 0});
    CHECK(lantern.target == TargetKind::boundary_multitwist);

    CHECK_THROWS_AS(build_relation(RelationKind::odd_chain, 0), std::invalid_argument);
}

TEST_CASE("the split form matches the repeated relator letter for letter", "[factorization]") {
    const TwistFactorization split = hyperelliptic_split_form(1, 1);
    const TwistFactorization hyp = build_relation(RelationKind::hyperelliptic, 1);
    CHECK(split.letter_count() == hyp.letter_count());

    // same multiset of letters, different order
    auto names = [](const TwistFactorization& f) {
        std::vector<std::string> out;
        for (const TwistLetter& l : f.letters) out.push_back(l.curve);
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(names(split) == names(hyp));
    CHECK(split.letters != hyp.letters);

    for (int h = 1; h <= 3; ++h)
        for (int r = 1; r <= 3; ++r)
            CHECK(hyperelliptic_split_form(h, r).letter_count() ==
                  repeat(build_relation(RelationKind::hyperelliptic, h), r).letter_count());

    CHECK(hyperelliptic_split_form(2, 0).letter_count() == 0);
    CHECK_THROWS_AS(hyperelliptic_split_form(0, 1), std::invalid_argument);
}

TEST_CASE("pencil words have the closed-form letter count", "[factorization]") {
    const TwistFactorization flagship = build_pencil_word(17, 2, 7);
    CHECK(flagship.letter_count() == 196);
    CHECK(flagship.ambient == SurfaceSignature{17, 16, 0});
    CHECK(flagship.target == TargetKind::boundary_multitwist);

    CHECK(build_pencil_word(3, 1, 0).letter_count() == 46);
    CHECK(build_pencil_word(3, 1, 3).letter_count() == 16);  // r = 0: trailing blocks empty

    for (int g = 2; g <= 12; ++g)
        for (int h = 1; h < g; ++h) {
            const auto [p, r] = inv::pencil_params(g, h);
            for (int i = 0; i <= 2 * p - 1; ++i) {
                INFO("g=" << g << " h=" << h << " i=" << i);
                CHECK(build_pencil_word(g, h, i).letter_count() == pencil_letter_count(g, h, i));
            }
        }

    CHECK_THROWS_WITH(build_pencil_word(3, 3, 0), Catch::Matchers::ContainsSubstring("1 <= h < g"));
    CHECK_THROWS_WITH(build_pencil_word(3, 1, 4), Catch::Matchers::ContainsSubstring("2p-1"));
    CHECK_THROWS_AS(build_pencil_word(3, 1, -1), std::invalid_argument);
}

TEST_CASE("fiber sums concatenate and repeat distributes", "[factorization]") {
    const TwistFactorization hyp1 = build_relation(RelationKind::hyperelliptic, 1);
    CHECK(repeat(hyp1, 2).letter_count() == 24);

    const TwistFactorization odd2 = build_relation(RelationKind::odd_chain, 2);
    const TwistFactorization hyp2 = build_relation(RelationKind::hyperelliptic, 2);
    CHECK(fiber_sum(odd2, repeat(hyp2, 1)).letter_count() == 50);

    CHECK(repeat(hyp1, 5) == fiber_sum(repeat(hyp1, 2), repeat(hyp1, 3)));
    CHECK(repeat(odd2, 3) == fiber_sum(odd2, fiber_sum(odd2, odd2)));

    CHECK_THROWS_AS(fiber_sum(hyp1, hyp2), std::invalid_argument);        // genus mismatch
    CHECK_THROWS_AS(fiber_sum(build_pencil_word(3, 1, 0), build_pencil_word(3, 1, 0)),
                    std::invalid_argument);                               // not closed
    CHECK_THROWS_AS(repeat(hyp1, 0), std::invalid_argument);
}

TEST_CASE("capping closes the surface and merges loop pairs", "[factorization]") {
    const TwistFactorization open = build_pencil_word(3, 1, 1);
    const TwistFactorization capped = cap_boundary(open);
    CHECK(capped.ambient == SurfaceSignature{3, 0, 0});
    CHECK(capped.target == TargetKind::identity);
    CHECK(capped.letter_count() == open.letter_count());

    // a closed word is untouched
    const TwistFactorization odd = build_relation(RelationKind::odd_chain, 1);
    CHECK(cap_boundary(odd) == odd);

    // for i >= 2 the loops around the same branch-point block become one curve
    const TwistFactorization deep = cap_boundary(build_pencil_word(3, 1, 2));
    CHECK(deep.curves.count("x1") == 1);
    CHECK(deep.curves.count("x2") == 0);
    CHECK(deep.curves.count("x3") == 1);  // the trailing block is its own curve
    int x1_letters = 0;
    for (const TwistLetter& l : deep.letters)
        if (l.curve == "x1") ++x1_letters;
    CHECK(x1_letters == 2);
    CHECK(deep.letter_count() == build_pencil_word(3, 1, 2).letter_count());
}

TEST_CASE("projection realizes the hyperelliptic double cover", "[factorization]") {
    using namespace pencil::braid;

    // the genus-1 odd chain projects to (s1 s2 s3)^4 = the full twist in B_4
    const BraidWord odd_down = project_to_braid(build_relation(RelationKind::odd_chain, 1));
    CHECK(odd_down == chain_word(4, 4, 4));
    CHECK(equals(odd_down, full_twist_word(4)));

    // the capped pencil word projects to the full twist in B_{2g+2}
    for (auto [g, h, i] : std::vector<std::array<int, 3>>{{2, 1, 0}, {3, 1, 2}, {3, 2, 1}}) {
        INFO("g=" << g << " h=" << h << " i=" << i);
        const BraidWord down = project_to_braid(cap_boundary(build_pencil_word(g, h, i)));
        CHECK(equals(down, full_twist_word(2 * g + 2)));
    }

    // an unpaired loop letter is rejected
    TwistFactorization bad;
    bad.ambient = {1, 0, 0};
    CurveSymbol x;
    x.name = "x1";
    x.kind = CurveKind::block_loop;
    x.loop_strands = {1, 2, 3, 4};
    bad.add_curve(x);
    bad.push_letter("x1");
    CHECK_THROWS_WITH(project_to_braid(bad), Catch::Matchers::ContainsSubstring("unpaired"));

    // a derived curve with no downstairs word is rejected
    TwistFactorization derived;
    derived.ambient = {1, 0, 0};
    CurveSymbol d;
    d.name = "d1";
    d.kind = CurveKind::derived_band;
    derived.add_curve(d);
    derived.push_letter("d1");
    CHECK_THROWS_WITH(project_to_braid(derived),
                      Catch::Matchers::ContainsSubstring("no downstairs image"));
}

TEST_CASE("unchaining replaces a chain power by its boundary twists", "[factorization]") {
    const TwistFactorization f = build_pencil_word(3, 1, 0);
    // letters: d1..d4 e4..e1 x1 x1' then three chain blocks of 12
    const int at = 2 * 4 + 2 + 1;
    const TwistFactorization once = unchain_substitute(f, at, 1);
    CHECK(once.letter_count() == f.letter_count() - 10);
    CHECK(once.curves.count("a1") == 1);
    CHECK(once.curves.count("a1'") == 1);
    CHECK(once.letters[static_cast<std::size_t>(at - 1)].curve == "a1");
    CHECK(once.letters[static_cast<std::size_t>(at)].curve == "a1'");

    // the capped projection is unchanged: a chain power is the block full twist
    using pencil::braid::equals;
    CHECK(equals(project_to_braid(cap_boundary(once)), project_to_braid(cap_boundary(f))));

    // iterating matches the letter counts of the higher-i builders; each
    // substitution leaves a fresh loop pair in front of the next chain block
    TwistFactorization cur = f;
    for (int k = 1; k <= 3; ++k) {
        cur = unchain_substitute(cur, at + 2 * (k - 1), 1);
        CHECK(cur.letter_count() == build_pencil_word(3, 1, k).letter_count());
        CHECK(cur.curves.count("a" + std::to_string(k)) == 1);
    }
    CHECK(equals(project_to_braid(cap_boundary(cur)), braid::full_twist_word(8)));

    // position 1 is a derived-band letter, not a chain twist
    CHECK_THROWS_WITH(unchain_substitute(f, 1, 1),
                      Catch::Matchers::ContainsSubstring("does not start at a chain twist"));
    // one letter into the block, the cyclic pattern breaks
    CHECK_THROWS_WITH(unchain_substitute(f, at + 1, 1),
                      Catch::Matchers::ContainsSubstring("not the odd chain power"));
    CHECK_THROWS_AS(unchain_substitute(f, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(unchain_substitute(f, f.letter_count(), 1), std::invalid_argument);
    CHECK_THROWS_AS(unchain_substitute(f, at, 0), std::invalid_argument);
}
