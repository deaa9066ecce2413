#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencil/factorization.hpp"
#include "pencil/signature.hpp"
#include "pencil/symplectic.hpp"

namespace pencil::inv {

// The Euclidean decomposition 2g+2 = p(2h+2) + 2r with 0 <= r < h+1.
inline std::pair<int, int> pencil_params(int g, int h) {
    if (h < 1 || h >= g) throw std::invalid_argument("pencil_params: need 1 <= h < g");
    return {(g + 1) / (h + 1), (g + 1) % (h + 1)};
}

// A validated pencil parameter triple together with the derived quantities.
struct PencilSpec {
    int g = 0, h = 0, i = 0;
    int p = 0, r = 0;

    int base_points() const { return 2 * (i + 1); }
    int nodal_fibers() const { return fact::pencil_letter_count(g, h, i); }
};

inline PencilSpec pencil_spec(int g, int h, int i) {
    fact::validate_pencil_range(g, h, i);
    const auto [p, r] = pencil_params(g, h);
    return {g, h, i, p, r};
}

// Handle-count Euler characteristic of the Lefschetz pencil/fibration a
// positive relator word of genus g with N twists describes: e = 4 - 4g + N,
// minus one for each of the b base points of a pencil.
inline long long euler_from_word(const fact::TwistFactorization& f, int base_points = 0) {
    if (base_points < 0) throw std::invalid_argument("euler_from_word: negative base point count");
    if (f.ambient.boundary != 0 || f.target != fact::TargetKind::identity)
        throw std::invalid_argument("euler_from_word: word must be a closed-surface relator");
    for (const auto& l : f.letters)
        if (l.power != 1)
            throw std::invalid_argument("euler_from_word: word must be a positive relator");
    return 4LL - 4 * f.ambient.genus + f.letter_count() - base_points;
}

struct ClosedFormInvariants {
    long long e = 0;
    long long sigma = 0;

    friend bool operator==(const ClosedFormInvariants&, const ClosedFormInvariants&) = default;
};

inline ClosedFormInvariants closed_form_invariants(int g, int h, int i) {
    fact::validate_pencil_range(g, h, i);
    const long long e =
        4LL - 4 * h + 2LL * (2 * h + 1) * (2 * g + 2) - static_cast<long long>(i + 1) * (2 * h + 1) * (2 * h + 2);
    const long long sigma =
        -static_cast<long long>(2 * h + 2) * (2 * g + 2) + 2LL * (i + 1) * (h + 1) * (h + 1);
    return {e, sigma};
}

// Invariants of the two hyperelliptic building blocks.
inline long long euler_Z(int h) { return 2LL * (2 * h * h + h + 3); }
inline long long sigma_Z(int h) { return -2LL * (h + 1) * (h + 1); }
inline long long euler_H(int h) { return 4LL * (h + 2); }
inline long long sigma_H(int h) { return -4LL * (h + 1); }

// Invariants of the fiber sum of z copies of the odd-chain fibration and s
// copies of the hyperelliptic one, all of fiber genus h: each gluing
// subtracts 2(2-2h) from e, and signatures add.
inline ClosedFormInvariants fiber_sum_invariants(int h, int z_copies, int h_copies) {
    if (h < 1 || z_copies < 0 || h_copies < 0 || z_copies + h_copies < 1)
        throw std::invalid_argument("fiber_sum_invariants: need h >= 1 and at least one summand");
    const long long summands = z_copies + h_copies;
    const long long e = z_copies * euler_Z(h) + h_copies * euler_H(h) - (summands - 1) * 2 * (2 - 2 * h);
    const long long sigma = z_copies * sigma_Z(h) + h_copies * sigma_H(h);
    return {e, sigma};
}

enum class DiffeoBranch { fiber_sum, pure_hyperelliptic, trivial_bundle };

// The diffeomorphism type of the pencil total space: its classification
// branch, the fiber-sum expression that branch produces, and the canonical
// form obtained by trading pairs of odd-chain summands for h+1 hyperelliptic
// ones, leaving at most one odd-chain summand.
struct DiffeoType {
    DiffeoBranch branch = DiffeoBranch::fiber_sum;
    int h = 0;
    int z_copies = 0, h_copies = 0;        // branch expression (zero for the trivial bundle)
    int canonical_z = 0, canonical_h = 0;  // canonical form, canonical_z <= 1
    long long e = 0, sigma = 0;

    static std::string form_string(int h, int z, int s) {
        const std::string zs = "Z_" + std::to_string(h) + "(" + std::to_string(z) + ")";
        const std::string hs = "H_" + std::to_string(h) + "(" + std::to_string(s) + ")";
        if (z > 0 && s > 0) return zs + " #_f " + hs;
        return z > 0 ? zs : hs;
    }

    bool is_trivial_bundle() const { return branch == DiffeoBranch::trivial_bundle; }

    std::string branch_form() const {
        if (is_trivial_bundle()) return "Σ_" + std::to_string(h) + " × S²";
        return form_string(h, z_copies, h_copies);
    }

    std::string canonical_form() const {
        if (is_trivial_bundle()) return branch_form();
        return form_string(h, canonical_z, canonical_h);
    }

    // A single hyperelliptic summand is a familiar rational surface.
    std::string note() const {
        if (!is_trivial_bundle() && canonical_z == 0 && canonical_h == 1)
            return "CP^2 # " + std::to_string(4 * h + 5) + "(-CP^2)";
        return "";
    }
};

inline DiffeoType classify(int g, int h, int i) {
    const PencilSpec s = pencil_spec(g, h, i);
    DiffeoType d;
    d.h = h;
    if (i == 2 * s.p - 1 && s.r == 0) {
        d.branch = DiffeoBranch::trivial_bundle;
        d.e = 4LL - 4 * h;
        d.sigma = 0;
    } else {
        d.branch = (i == 2 * s.p - 1) ? DiffeoBranch::pure_hyperelliptic : DiffeoBranch::fiber_sum;
        d.z_copies = 2 * s.p - 1 - i;
        d.h_copies = s.r;
        d.canonical_z = d.z_copies % 2;
        d.canonical_h = (d.z_copies / 2) * (h + 1) + s.r;
        const auto inv = fiber_sum_invariants(h, d.z_copies, d.h_copies);
        d.e = inv.e;
        d.sigma = inv.sigma;
        if (!(fiber_sum_invariants(h, d.canonical_z, d.canonical_h) == inv))
            throw std::logic_error("classify: canonical reduction changed (e, sigma)");
    }
    if (!(ClosedFormInvariants{d.e, d.sigma} == closed_form_invariants(g, h, i)))
        throw std::logic_error("classify: fiber-sum invariants disagree with the closed forms");
    return d;
}

// The spin criterion for the simply connected cases (the trivial-bundle case
// is outside its hypothesis). Spin total spaces must obey the signature
// divisibility of closed spin 4-manifolds, which is asserted as an audit.
inline bool spin_predicate(int g, int h, int i) {
    const PencilSpec s = pencil_spec(g, h, i);
    if (i == 2 * s.p - 1 && s.r == 0)
        throw std::domain_error(
            "spin_predicate: the trivial-bundle case (i = 2p-1, r = 0) is outside the criterion's "
            "hypothesis");
    const bool spin = (h % 2 == 1) && ((g - i) % 2 == 0);
    if (spin) {
        const auto inv = closed_form_invariants(g, h, i);
        if (inv.sigma % 16 != 0)
            throw std::logic_error("spin_predicate: spin manifold with signature not divisible by 16");
        if ((inv.e + inv.sigma) % 4 != 0)
            throw std::logic_error("spin_predicate: spin manifold with e + sigma not divisible by 4");
    }
    return spin;
}

// One row of a grid report.
struct InvariantRecord {
    int g = 0, h = 0, i = 0, p = 0, r = 0;
    long long e = 0, sigma = 0;
    int base_points = 0, nodal_fibers = 0;
    bool spin = false;
    std::string diffeo_type;
};

inline InvariantRecord invariant_record(int g, int h, int i) {
    const PencilSpec s = pencil_spec(g, h, i);
    const DiffeoType d = classify(g, h, i);
    InvariantRecord rec{g, h, i, s.p, s.r, d.e, d.sigma, s.base_points(), s.nodal_fibers(), false,
                        d.canonical_form()};
    // The trivial bundle is a product of two spin manifolds; the parity
    // criterion covers every other case.
    rec.spin = d.is_trivial_bundle() ? true : spin_predicate(g, h, i);
    return rec;
}

// The homology action of a factorization whose letters all carry classes.
inline sp::IntMat sp_image(const fact::TwistFactorization& f) {
    std::vector<sp::ClassLetter> letters;
    letters.reserve(f.letters.size());
    for (const auto& l : f.letters) {
        const fact::CurveSymbol& c = f.curve(l.curve);
        if (!c.homology)
            throw std::invalid_argument("sp_image: curve '" + c.name + "' has no homology class");
        letters.push_back({*c.homology, l.power});
    }
    return sp::sp_image_classes(letters, f.ambient.genus);
}

// Signature of the fibration a relator word over fully annotated curves
// describes, by the cocycle evaluation plus local terms.
inline long long sigma_meyer(const fact::TwistFactorization& f,
                             const sig::MeyerCalibration& cal = sig::kFrozenMeyer) {
    if (f.ambient.boundary != 0 || f.target != fact::TargetKind::identity)
        throw std::invalid_argument("sigma_meyer: word must be a closed-surface relator");
    std::vector<sig::SigLetter> letters;
    letters.reserve(f.letters.size());
    for (const auto& l : f.letters) {
        const fact::CurveSymbol& c = f.curve(l.curve);
        if (!c.homology)
            throw std::invalid_argument("sigma_meyer: curve '" + c.name + "' has no homology class");
        if (c.sep == fact::SeparatingType::unset)
            throw std::invalid_argument("sigma_meyer: curve '" + c.name + "' has no separating type");
        letters.push_back(
            {*c.homology, l.power, c.sep == fact::SeparatingType::separating, c.sep_genus});
    }
    return sig::sigma_meyer_classes(letters, f.ambient.genus, cal);
}

// Signature by the fractional local-signature formula for hyperelliptic
// fibrations; exact rational evaluation, integrality enforced.
inline int sigma_endo_hyperelliptic(const fact::TwistFactorization& f) {
    if (f.ambient.boundary != 0)
        throw std::invalid_argument("sigma_endo_hyperelliptic: word must live on a closed surface");
    sig::EndoCounts counts;
    for (const auto& l : f.letters) {
        if (l.power != 1)
            throw std::invalid_argument("sigma_endo_hyperelliptic: word must be a positive relator");
        const fact::CurveSymbol& c = f.curve(l.curve);
        switch (c.sep) {
            case fact::SeparatingType::nonseparating:
                ++counts.nonseparating;
                break;
            case fact::SeparatingType::separating:
                ++counts.separating[c.sep_genus];
                break;
            case fact::SeparatingType::unset:
                throw std::invalid_argument("sigma_endo_hyperelliptic: curve '" + c.name +
                                            "' has no separating type");
        }
    }
    return sig::sigma_endo(f.ambient.genus, counts);
}

// One member of the infinite family of pencils realizing a fixed fiber sum.
struct FamilyPoint {
    int p = 0, g = 0, i = 0;
};

// All p in [max{ceil((q+1)/2), 2}, p_max] with g(p) = p(h+1)+r-1 and
// i(p) = 2p-1-q; every member classifies to the same Z_h(q) #_f H_h(r).
inline std::vector<FamilyPoint> family_points(int h, int q, int r, int p_max) {
    if (h < 1 || q < 0 || r < 0 || r >= h + 1)
        throw std::invalid_argument("family_points: need h >= 1, q >= 0, 0 <= r < h+1");
    const int p_min = std::max((q + 2) / 2, 2);
    std::vector<FamilyPoint> out;
    for (int p = p_min; p <= p_max; ++p) out.push_back({p, p * (h + 1) + r - 1, 2 * p - 1 - q});
    return out;
}

// One step of degree doubling on a pencil of genus g with b base points.
inline std::pair<int, int> degree_double(int g, int b) {
    if (b < 1 || g < 0) throw std::invalid_argument("degree_double: need g >= 0, b >= 1");
    return {2 * g + b - 1, 4 * b};
}

}  // namespace pencil::inv
