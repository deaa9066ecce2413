// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion re-checks an end-to-end guarantee of the library;
// the unit suites cover the same ground in finer grain.

#include <array>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "pencil/block_pass.hpp"
#include "pencil/braid.hpp"
#include "pencil/cover.hpp"
#include "pencil/factorization.hpp"
#include "pencil/garside.hpp"
#include "pencil/hurwitz.hpp"
#include "pencil/invariants.hpp"
#include "pencil/signature.hpp"
#include "pencil/symplectic.hpp"

#include "test_util.hpp"

namespace {

namespace braid = pencil::braid;
namespace fact = pencil::fact;
namespace inv = pencil::inv;
namespace sig = pencil::sig;
namespace sp = pencil::sp;

int failures = 0;

void criterion(const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cerr << "  exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " - " << label << "\n";
    if (!ok) ++failures;
}

// (g, h, i) triples with 1 <= h < g <= g_max and 0 <= i <= 2p - 1.
std::vector<std::array<int, 3>> pencil_grid(int g_max) {
    std::vector<std::array<int, 3>> grid;
    for (int g = 2; g <= g_max; ++g)
        for (int h = 1; h < g; ++h) {
            const auto [p, r] = inv::pencil_params(g, h);
            (void)r;
            for (int i = 0; i <= 2 * p - 1; ++i) grid.push_back({g, h, i});
        }
    return grid;
}

}  // namespace

int main() {
    criterion("master identity equals the full twist (1 <= h < g <= 6)", [] {
        for (int g = 2; g <= 6; ++g)
            for (int h = 1; h < g; ++h) {
                const braid::BlockPassBraids bp = braid::block_pass_braids(g, h);
                if (!braid::equals(braid::master_identity_word(g, h, bp),
                                   braid::full_twist_word(2 * g + 2)))
                    return false;
            }
        return true;
    });

    criterion("capped pencil words project to the full twist (1 <= h < g <= 6, all i)", [] {
        for (const auto& [g, h, i] : pencil_grid(6)) {
            const fact::TwistFactorization f = fact::cap_boundary(fact::build_pencil_word(g, h, i));
            if (!braid::equals(fact::project_to_braid(f), braid::full_twist_word(2 * g + 2)))
                return false;
        }
        return true;
    });

    criterion("chain reversing (2 <= m <= 7) and block full-twist identities (2 <= k <= 8)", [] {
        for (int m = 2; m <= 7; ++m) {
            const int n = m + 1;
            if (!braid::equals(braid::chain_word(n, n, n, false), braid::chain_word(n, n, n, true)))
                return false;
        }
        for (int k = 2; k <= 8; ++k) {
            if (!braid::equals(braid::chain_word(k, k, k), braid::full_twist_word(k))) return false;
            if (!braid::equals(braid::chain_word(k + 1, k, k), braid::block_full_twist_word(k + 1, k)))
                return false;
        }
        return true;
    });

    criterion("letter counts reproduce the closed-form Euler characteristic (h < g <= 12, all i)", [] {
        for (const auto& [g, h, i] : pencil_grid(12)) {
            const fact::TwistFactorization f = fact::cap_boundary(fact::build_pencil_word(g, h, i));
            if (inv::euler_from_word(f, 2 * (i + 1)) != inv::closed_form_invariants(g, h, i).e)
                return false;
        }
        return true;
    });

    criterion("classification invariants match the closed forms (h < g <= 12, all i)", [] {
        for (const auto& [g, h, i] : pencil_grid(12)) {
            const inv::DiffeoType d = inv::classify(g, h, i);
            const inv::ClosedFormInvariants cf = inv::closed_form_invariants(g, h, i);
            if (d.e != cf.e || d.sigma != cf.sigma) return false;
        }
        return true;
    });

    criterion("signature engines reproduce sigma(Z_h) and sigma(H_h) for h <= 3, with fiber-sum additivity", [] {
        if (!(sig::derive_meyer_calibration() == sig::kFrozenMeyer)) return false;
        for (int h = 1; h <= 3; ++h) {
            const fact::TwistFactorization z = fact::build_relation(fact::RelationKind::odd_chain, h);
            const fact::TwistFactorization hh =
                fact::build_relation(fact::RelationKind::hyperelliptic, h);
            const long long sigma_z = -2LL * (h + 1) * (h + 1);  // h = 3 is held out of calibration
            const long long sigma_h = -4LL * (h + 1);
            if (inv::sigma_meyer(z) != sigma_z || inv::sigma_endo_hyperelliptic(z) != sigma_z)
                return false;
            if (inv::sigma_meyer(hh) != sigma_h || inv::sigma_endo_hyperelliptic(hh) != sigma_h)
                return false;
        }
        std::mt19937 rng(20260815);
        for (int t = 0; t < 3; ++t) {
            const int h = 1 + static_cast<int>(rng() % 2);
            const fact::TwistFactorization pool[2] = {
                fact::build_relation(fact::RelationKind::odd_chain, h),
                fact::build_relation(fact::RelationKind::hyperelliptic, h)};
            const fact::TwistFactorization& a = pool[rng() % 2];
            const fact::TwistFactorization& b = pool[rng() % 2];
            if (inv::sigma_meyer(fact::fiber_sum(a, b)) != inv::sigma_meyer(a) + inv::sigma_meyer(b))
                return false;
        }
        return true;
    });

    criterion("the (17, 2, 7) pencil: 196 nodal fibers, 16 base points, e = 116, sigma = -72, H_2(6)", [] {
        const inv::InvariantRecord rec = inv::invariant_record(17, 2, 7);
        return rec.nodal_fibers == 196 && rec.base_points == 16 && rec.e == 116 &&
               rec.sigma == -72 && rec.diffeo_type == "H_2(6)" &&
               fact::build_pencil_word(17, 2, 7).letter_count() == 196;
    });

    criterion("Z_2(1) family base points 4p - 2 never divisible by 4 (p <= 50); doubling orbit of (2, 4)", [] {
        const std::vector<inv::FamilyPoint> family = inv::family_points(2, 1, 0, 50);
        if (family.size() != 49) return false;
        for (const inv::FamilyPoint& pt : family) {
            const int base = 2 * (pt.i + 1);
            if (base != 4 * pt.p - 2 || base % 4 == 0) return false;
            if (inv::classify(pt.g, 2, pt.i).canonical_form() != "Z_2(1)") return false;
        }
        int g = 2, b = 4;
        const int expect[3][2] = {{7, 16}, {29, 64}, {121, 256}};
        for (const auto& step : expect) {
            std::tie(g, b) = inv::degree_double(g, b);
            if (g != step[0] || b != step[1]) return false;
        }
        return true;
    });

    criterion("spin records have signature divisible by 16 (h < g <= 12)", [] {
        int spin_points = 0;
        for (const auto& [g, h, i] : pencil_grid(12)) {
            const inv::InvariantRecord rec = inv::invariant_record(g, h, i);
            if (!rec.spin) continue;
            ++spin_points;
            if (rec.sigma % 16 != 0 || (rec.e + rec.sigma) % 4 != 0) return false;
        }
        return spin_points > 0;
    });

    criterion("cover proof scripts replay with every audit and endpoint check (1 <= h < g <= 6, all i)", [] {
        bool saw_trivial_endpoint = false, saw_hyperelliptic_endpoint = false;
        for (const auto& [g, h, i] : pencil_grid(6)) {
            pencil::cover::run_proof_script(g, h, i);  // throws on any audit failure
            const auto [p, r] = inv::pencil_params(g, h);
            if (i == 2 * p - 1) (r == 0 ? saw_trivial_endpoint : saw_hyperelliptic_endpoint) = true;
        }
        return saw_trivial_endpoint && saw_hyperelliptic_endpoint;
    });

    criterion("property suites: Hurwitz invariance, normal-form idempotence, centrality, Sp images", [] {
        std::mt19937 rng(424242);
        for (int t = 0; t < 1000; ++t) {
            braid::FactoredBraid fb{6, {}};
            const int count = 2 + static_cast<int>(rng() % 4);
            for (int k = 0; k < count; ++k) fb.factors.push_back(testutil::random_word(rng, 6, 10));
            const braid::GarsideNormalForm before = braid::normal_form(fb.product());
            const std::size_t pos = 1 + rng() % (fb.factors.size() - 1);
            const auto dir = (rng() % 2) ? braid::HurwitzDirection::right
                                         : braid::HurwitzDirection::left;
            if (!(braid::normal_form(braid::hurwitz_move(fb, pos, dir).product()) == before))
                return false;
        }
        for (int t = 0; t < 200; ++t) {
            const braid::GarsideNormalForm nf = braid::normal_form(testutil::random_word(rng, 6, 14));
            if (!(braid::normal_form(testutil::word_of_normal_form(nf)) == nf)) return false;
        }
        const braid::BraidWord delta2 = braid::full_twist_word(6);
        for (int t = 0; t < 200; ++t) {
            const braid::BraidWord w = testutil::random_word(rng, 6, 12);
            if (!braid::equals(braid::compose(w, delta2), braid::compose(delta2, w))) return false;
        }
        for (int h = 1; h <= 3; ++h) {
            for (const fact::RelationKind kind : {fact::RelationKind::odd_chain,
                                                  fact::RelationKind::hyperelliptic,
                                                  fact::RelationKind::even_chain})
                if (!inv::sp_image(fact::build_relation(kind, h)).is_identity()) return false;
            for (int n = 1; n <= 4; ++n) {
                const sp::IntMat split = inv::sp_image(fact::hyperelliptic_split_form(h, n));
                const sp::IntMat repeated = inv::sp_image(
                    fact::repeat(fact::build_relation(fact::RelationKind::hyperelliptic, h), n));
                if (!(split == repeated) || !split.is_identity()) return false;
            }
        }
        return true;
    });

    if (failures == 0) {
        std::cout << "acceptance: all 11 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion/criteria FAILED\n";
    return 1;
}
