#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencil/block_pass.hpp"
#include "pencil/braid.hpp"
#include "pencil/symplectic.hpp"

namespace pencil::fact {

// The ambient surface a factorization lives on.
struct SurfaceSignature {
    int genus = 0;
    int boundary = 0;
    int marked = 0;

    friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

enum class CurveKind { chain, derived_band, block_loop, boundary_parallel };
enum class SeparatingType { unset, nonseparating, separating };

// A named simple closed curve with whatever certified data it carries:
// its downstairs image in the branched-cover picture (a braid generator for
// chain curves, an explicit word for derived curves, a block of strands for
// loops around branch-point groups), its homology class, and its separating
// type. Absent data is absent on purpose: engines refuse rather than guess.
struct CurveSymbol {
    std::string name;
    CurveKind kind = CurveKind::chain;
    int chain_index = 0;                              // chain: downstairs sigma_{chain_index}
    std::optional<braid::BraidWord> downstairs;       // derived_band
    std::vector<int> loop_strands;                    // block_loop: 1-based, contiguous
    int boundary_component = 0;                       // boundary_parallel
    std::optional<sp::Vec> homology;                  // class in the capped closed surface
    SeparatingType sep = SeparatingType::unset;
    int sep_genus = 0;                                // meaningful when sep == separating

    friend bool operator==(const CurveSymbol& a, const CurveSymbol& b) {
        auto down = [](const CurveSymbol& c) {
            return c.downstairs ? c.downstairs->letters() : std::vector<braid::Letter>{};
        };
        return a.name == b.name && a.kind == b.kind && a.chain_index == b.chain_index &&
               a.downstairs.has_value() == b.downstairs.has_value() && down(a) == down(b) &&
               a.loop_strands == b.loop_strands && a.boundary_component == b.boundary_component &&
               a.homology == b.homology && a.sep == b.sep && a.sep_genus == b.sep_genus;
    }
};

// One factor: a right-handed Dehn twist about a named curve (power +1) or its
// inverse (power -1).
struct TwistLetter {
    std::string curve;
    int power = 1;

    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

enum class TargetKind { identity, boundary_multitwist };

// An ordered Dehn-twist factorization together with its curve table and the
// mapping class it is declared to equal. Equality of factorizations is word
// identity over the curve table; mapping-class-level claims are checked
// through projections and representations.
struct TwistFactorization {
    SurfaceSignature ambient;
    std::map<std::string, CurveSymbol> curves;
    std::vector<TwistLetter> letters;
    TargetKind target = TargetKind::identity;

    int letter_count() const { return static_cast<int>(letters.size()); }

    const CurveSymbol& curve(const std::string& name) const {
        auto it = curves.find(name);
        if (it == curves.end())
            throw std::invalid_argument("factorization: unknown curve '" + name + "'");
        return it->second;
    }

    void add_curve(CurveSymbol c) {
        auto it = curves.find(c.name);
        if (it != curves.end()) {
            if (!(it->second == c))
                throw std::invalid_argument("factorization: conflicting redefinition of curve '" + c.name + "'");
            return;
        }
        std::string key = c.name;
        curves.emplace(std::move(key), std::move(c));
    }

    void push_letter(const std::string& name, int power = 1) {
        if (power != 1 && power != -1)
            throw std::invalid_argument("factorization: twist power must be +-1");
        if (curves.find(name) == curves.end())
            throw std::invalid_argument("factorization: letter about unknown curve '" + name + "'");
        letters.push_back({name, power});
    }

    friend bool operator==(const TwistFactorization& a, const TwistFactorization& b) {
        return a.ambient == b.ambient && a.curves == b.curves && a.letters == b.letters &&
               a.target == b.target;
    }
};

// The standard chain curve c_j on a surface whose capped closure has genus g.
inline CurveSymbol chain_curve(int g, int j) {
    if (j < 1 || j > 2 * g + 1)
        throw std::invalid_argument("chain_curve: index out of range 1..2g+1");
    CurveSymbol c;
    c.name = "c" + std::to_string(j);
    c.kind = CurveKind::chain;
    c.chain_index = j;
    c.homology = sp::chain_classes(g)[static_cast<std::size_t>(j - 1)];
    c.sep = SeparatingType::nonseparating;
    return c;
}

namespace detail {

inline void add_chain_curves(TwistFactorization& f, int g, int up_to) {
    for (int j = 1; j <= up_to; ++j) f.add_curve(chain_curve(g, j));
}

inline void push_chain_run(TwistFactorization& f, int lo, int hi, bool reversed) {
    if (!reversed)
        for (int j = lo; j <= hi; ++j) f.push_letter("c" + std::to_string(j));
    else
        for (int j = hi; j >= lo; --j) f.push_letter("c" + std::to_string(j));
}

}  // namespace detail

enum class RelationKind { odd_chain, hyperelliptic, even_chain, lantern };

// The classical relator words on the closed genus-h surface (and the lantern
// on the four-holed sphere): the odd-chain word (c_1..c_{2h+1})^{2h+2}, the
// hyperelliptic word (c_1..c_{2h+1} c_{2h+1}..c_1)^2, the even-chain word
// (c_1..c_{2h})^{4h+2}, and t_x t_y t_z = boundary multitwist.
inline TwistFactorization build_relation(RelationKind kind, int h = 1) {
    TwistFactorization f;
    if (kind == RelationKind::lantern) {
        f.ambient = {0, 4, 0};
        f.target = TargetKind::boundary_multitwist;
        for (const char* name : {"x", "y", "z"}) {
            CurveSymbol c;
            c.name = name;
            c.kind = CurveKind::derived_band;
            f.add_curve(std::move(c));
        }
        for (const char* name : {"x", "y", "z"}) f.push_letter(name);
        return f;
    }
    if (h < 1) throw std::invalid_argument("build_relation: genus must be >= 1");
    f.ambient = {h, 0, 0};
    f.target = TargetKind::identity;
    switch (kind) {
        case RelationKind::odd_chain:
            detail::add_chain_curves(f, h, 2 * h + 1);
            for (int rep = 0; rep < 2 * h + 2; ++rep) detail::push_chain_run(f, 1, 2 * h + 1, false);
            break;
        case RelationKind::hyperelliptic:
            detail::add_chain_curves(f, h, 2 * h + 1);
            for (int rep = 0; rep < 2; ++rep) {
                detail::push_chain_run(f, 1, 2 * h + 1, false);
                detail::push_chain_run(f, 1, 2 * h + 1, true);
            }
            break;
        case RelationKind::even_chain:
            detail::add_chain_curves(f, h, 2 * h);
            for (int rep = 0; rep < 4 * h + 2; ++rep) detail::push_chain_run(f, 1, 2 * h, false);
            break;
        case RelationKind::lantern:
            break;  // handled above
    }
    return f;
}

// The split form (c_1..c_{2h+1})^{2r} (c_{2h+1}..c_1)^{2r} on the closed
// genus-h surface, word-equivalent at the representation level to r copies
// of the hyperelliptic relator.
inline TwistFactorization hyperelliptic_split_form(int h, int r) {
    if (h < 1 || r < 0) throw std::invalid_argument("hyperelliptic_split_form: need h >= 1, r >= 0");
    TwistFactorization f;
    f.ambient = {h, 0, 0};
    f.target = TargetKind::identity;
    detail::add_chain_curves(f, h, 2 * h + 1);
    for (int rep = 0; rep < 2 * r; ++rep) detail::push_chain_run(f, 1, 2 * h + 1, false);
    for (int rep = 0; rep < 2 * r; ++rep) detail::push_chain_run(f, 1, 2 * h + 1, true);
    return f;
}

inline void validate_pencil_range(int g, int h, int i) {
    if (h < 1 || h >= g)
        throw std::invalid_argument("pencil parameters: need 1 <= h < g");
    const int p = (g + 1) / (h + 1);
    if (i < 0 || i > 2 * p - 1)
        throw std::invalid_argument("pencil parameters: need 0 <= i <= 2p-1 where 2g+2 = p(2h+2) + 2r, got i=" +
                                    std::to_string(i) + " with 2p-1=" + std::to_string(2 * p - 1));
}

namespace detail {

inline void add_block_pass_curves(TwistFactorization& f, int g, int h) {
    const auto bp = braid::block_pass_braids(g, h);
    const int m = 2 * g - 2 * h;
    for (int j = 1; j <= m; ++j) {
        CurveSymbol d;
        d.name = "d" + std::to_string(j);
        d.kind = CurveKind::derived_band;
        d.downstairs = bp.t_letters.factors[static_cast<std::size_t>(j - 1)];
        f.add_curve(std::move(d));
        CurveSymbol e;
        e.name = "e" + std::to_string(j);
        e.kind = CurveKind::derived_band;
        // u_letters holds upsilon_m .. upsilon_1 in product order.
        e.downstairs = bp.u_letters.factors[static_cast<std::size_t>(m - j)];
        f.add_curve(std::move(e));
    }
    for (int j = 1; j <= m; ++j) f.push_letter("d" + std::to_string(j));
    for (int j = m; j >= 1; --j) f.push_letter("e" + std::to_string(j));
}

inline CurveSymbol block_loop_curve(std::string name, int lo, int hi) {
    CurveSymbol c;
    c.name = std::move(name);
    c.kind = CurveKind::block_loop;
    for (int s = lo; s <= hi; ++s) c.loop_strands.push_back(s);
    return c;
}

}  // namespace detail

// The boundary-multitwist factorization on the twice-holed genus-g surface:
// D E (c_1..c_{2h+1})^{(2h+2)(2p-1)} (c_{2h+3}..c_{2g+1})^{2g-2h}
//     (c_1..c_{2h+1})^{2r} (c_{2h+1}..c_1)^{2r},
// where D = d_1..d_m and E = e_m..e_1 lift the block-pass braids T and U.
inline TwistFactorization build_master_relation(int g, int h) {
    validate_pencil_range(g, h, 0);
    const int p = (g + 1) / (h + 1), r = (g + 1) % (h + 1);
    TwistFactorization f;
    f.ambient = {g, 2, 0};
    f.target = TargetKind::boundary_multitwist;
    detail::add_chain_curves(f, g, 2 * g + 1);
    detail::add_block_pass_curves(f, g, h);
    for (int rep = 0; rep < (2 * h + 2) * (2 * p - 1); ++rep) detail::push_chain_run(f, 1, 2 * h + 1, false);
    for (int rep = 0; rep < 2 * g - 2 * h; ++rep) detail::push_chain_run(f, 2 * h + 3, 2 * g + 1, false);
    for (int rep = 0; rep < 2 * r; ++rep) detail::push_chain_run(f, 1, 2 * h + 1, false);
    for (int rep = 0; rep < 2 * r; ++rep) detail::push_chain_run(f, 1, 2 * h + 1, true);
    return f;
}

// The genus-g pencil word on the surface with 2(i+1) boundary components:
// D E (x_{i+1}..x_1)(x'_{i+1}..x'_1) (c_1..c_{2h+1})^{(2h+2)(2p-1-i)}
//     (c_1..c_{2h+1})^{2r} (c_{2h+1}..c_1)^{2r}.
// The loops x_1..x_i and their primes encircle the first 2h+2 branch points;
// x_{i+1} and its prime encircle the remaining 2g-2h (they arise from the
// trailing-chain block, whose downstairs image is the full twist on the last
// block of strands).
inline TwistFactorization build_pencil_word(int g, int h, int i) {
    validate_pencil_range(g, h, i);
    const int p = (g + 1) / (h + 1), r = (g + 1) % (h + 1);
    TwistFactorization f;
    f.ambient = {g, 2 * (i + 1), 0};
    f.target = TargetKind::boundary_multitwist;
    detail::add_chain_curves(f, g, 2 * h + 1);
    detail::add_block_pass_curves(f, g, h);
    for (int k = 1; k <= i + 1; ++k) {
        const bool trailing = (k == i + 1);
        const int lo = trailing ? 2 * h + 3 : 1;
        const int hi = trailing ? 2 * g + 2 : 2 * h + 2;
        f.add_curve(detail::block_loop_curve("x" + std::to_string(k), lo, hi));
        f.add_curve(detail::block_loop_curve("x" + std::to_string(k) + "'", lo, hi));
    }
    for (int k = i + 1; k >= 1; --k) f.push_letter("x" + std::to_string(k));
    for (int k = i + 1; k >= 1; --k) f.push_letter("x" + std::to_string(k) + "'");
    for (int rep = 0; rep < (2 * h + 2) * (2 * p - 1 - i); ++rep) detail::push_chain_run(f, 1, 2 * h + 1, false);
    for (int rep = 0; rep < 2 * r; ++rep) detail::push_chain_run(f, 1, 2 * h + 1, false);
    for (int rep = 0; rep < 2 * r; ++rep) detail::push_chain_run(f, 1, 2 * h + 1, true);
    return f;
}

// Replace the odd-chain-power subword starting at 1-based letter position
// `at` — it must read (c_s c_{s+1} .. c_{s+2h'}) repeated 2h'+2 times, all
// powers +1 — by twists about the two boundary curves of the chain
// neighborhood, as freshly named block loops over the corresponding strands.
inline TwistFactorization unchain_substitute(const TwistFactorization& f, int at, int h_chain) {
    if (h_chain < 1) throw std::invalid_argument("unchain_substitute: chain genus must be >= 1");
    const int len = 2 * h_chain + 1;
    const int span = len * (len + 1);
    if (at < 1 || at - 1 + span > f.letter_count())
        throw std::invalid_argument("unchain_substitute: subword out of range");

    const TwistLetter& first = f.letters[static_cast<std::size_t>(at - 1)];
    const CurveSymbol& lead = f.curve(first.curve);
    if (lead.kind != CurveKind::chain || first.power != 1)
        throw std::invalid_argument("unchain_substitute: subword does not start at a chain twist");
    const int s = lead.chain_index;
    for (int t = 0; t < span; ++t) {
        const TwistLetter& l = f.letters[static_cast<std::size_t>(at - 1 + t)];
        const CurveSymbol& c = f.curve(l.curve);
        if (c.kind != CurveKind::chain || l.power != 1 || c.chain_index != s + t % len)
            throw std::invalid_argument("unchain_substitute: subword is not the odd chain power (c_" +
                                        std::to_string(s) + "..c_" + std::to_string(s + len - 1) + ")^" +
                                        std::to_string(len + 1));
    }

    int next = 1;
    while (f.curves.count("a" + std::to_string(next)) || f.curves.count("a" + std::to_string(next) + "'"))
        ++next;
    const std::string base = "a" + std::to_string(next);

    TwistFactorization out = f;
    out.add_curve(detail::block_loop_curve(base, s, s + len));
    out.add_curve(detail::block_loop_curve(base + "'", s, s + len));
    const auto begin = out.letters.begin() + (at - 1);
    out.letters.erase(begin, begin + span);
    out.letters.insert(out.letters.begin() + (at - 1), {TwistLetter{base, 1}, TwistLetter{base + "'", 1}});
    return out;
}

// Untwisted fiber sum: concatenation of relator words on the same closed
// surface. Curve tables merge; conflicting definitions are an error.
inline TwistFactorization fiber_sum(const TwistFactorization& f1, const TwistFactorization& f2) {
    if (!(f1.ambient == f2.ambient) || f1.ambient.boundary != 0)
        throw std::invalid_argument("fiber_sum: ambients must match and be closed");
    if (f1.target != TargetKind::identity || f2.target != TargetKind::identity)
        throw std::invalid_argument("fiber_sum: both words must be relators (identity target)");
    TwistFactorization out = f1;
    for (const auto& [name, c] : f2.curves) out.add_curve(c);
    out.letters.insert(out.letters.end(), f2.letters.begin(), f2.letters.end());
    return out;
}

inline TwistFactorization repeat(const TwistFactorization& f, int copies) {
    if (copies < 1) throw std::invalid_argument("repeat: need at least one copy");
    TwistFactorization out = f;
    for (int t = 1; t < copies; ++t) out = fiber_sum(out, f);
    return out;
}

// Cap all boundary components: boundary-parallel twists are deleted together
// with the boundary multitwist target, and block loops with the same strand
// block and primedness become a common curve (named after the lowest-numbered
// member of the group).
inline TwistFactorization cap_boundary(const TwistFactorization& f) {
    if (f.ambient.boundary == 0) return f;
    TwistFactorization out;
    out.ambient = {f.ambient.genus, 0, f.ambient.marked};
    out.target = TargetKind::identity;

    // Group block loops by (strands, primed); the representative is the
    // first group member in curve-table order.
    std::map<std::pair<std::vector<int>, bool>, std::string> rep;
    std::map<std::string, std::string> rename;
    for (const auto& [name, c] : f.curves) {
        if (c.kind == CurveKind::boundary_parallel) continue;
        if (c.kind != CurveKind::block_loop) {
            out.add_curve(c);
            continue;
        }
        const bool primed = !name.empty() && name.back() == '\'';
        const auto key = std::make_pair(c.loop_strands, primed);
        auto it = rep.find(key);
        if (it == rep.end()) {
            rep.emplace(key, name);
            out.add_curve(c);
            rename[name] = name;
        } else {
            rename[name] = it->second;
        }
    }
    for (const TwistLetter& l : f.letters) {
        const CurveSymbol& c = f.curve(l.curve);
        if (c.kind == CurveKind::boundary_parallel) continue;
        auto it = rename.find(l.curve);
        out.letters.push_back({it == rename.end() ? l.curve : it->second, l.power});
    }
    return out;
}

// Downstairs image in B_{2g+2} under the hyperelliptic branched covering:
// chain twists map to the Artin generators, derived curves carry explicit
// words, and each (loop, primed loop) PAIR maps to ONE full twist on its
// strand block, emitted at the unprimed letter.
inline braid::BraidWord project_to_braid(const TwistFactorization& f) {
    const int n = 2 * f.ambient.genus + 2;
    braid::BraidWord out(n);
    std::map<std::string, int> unprimed_weight, primed_weight;

    for (const TwistLetter& l : f.letters) {
        const CurveSymbol& c = f.curve(l.curve);
        switch (c.kind) {
            case CurveKind::chain:
                if (c.chain_index < 1 || c.chain_index >= n)
                    throw std::invalid_argument("project_to_braid: chain index out of range for B_n");
                out.push(l.power * c.chain_index);
                break;
            case CurveKind::derived_band: {
                if (!c.downstairs)
                    throw std::invalid_argument("project_to_braid: curve '" + c.name +
                                                "' has no downstairs image");
                if (c.downstairs->strands() != n)
                    throw std::invalid_argument("project_to_braid: downstairs word strand mismatch");
                out.append(l.power == 1 ? *c.downstairs : braid::invert(*c.downstairs));
                break;
            }
            case CurveKind::block_loop: {
                const auto& s = c.loop_strands;
                if (s.size() < 2 || s.back() > n || s.front() < 1 ||
                    s.back() - s.front() + 1 != static_cast<int>(s.size()))
                    throw std::invalid_argument("project_to_braid: block loop strands must be a contiguous block");
                const bool primed = !c.name.empty() && c.name.back() == '\'';
                const std::string base = primed ? c.name.substr(0, c.name.size() - 1) : c.name;
                if (primed) {
                    primed_weight[base] += l.power;
                    break;  // the pair's single downstairs twist is emitted at the unprimed letter
                }
                unprimed_weight[base] += l.power;
                const braid::BraidWord theta =
                    braid::chain_span_word(n, s.front(), s.back() - 1, s.back() - s.front() + 1, false);
                out.append(l.power == 1 ? theta : braid::invert(theta));
                break;
            }
            case CurveKind::boundary_parallel:
                throw std::invalid_argument("project_to_braid: boundary-parallel curve '" + c.name +
                                            "' has no downstairs image");
        }
    }
    for (const auto& [base, w] : unprimed_weight) {
        auto it = primed_weight.find(base);
        if (it == primed_weight.end() || it->second != w)
            throw std::invalid_argument("project_to_braid: unpaired block loop letter about '" + base + "'");
    }
    for (const auto& [base, w] : primed_weight) {
        if (unprimed_weight.find(base) == unprimed_weight.end())
            throw std::invalid_argument("project_to_braid: unpaired block loop letter about '" + base + "''");
    }
    return out;
}

// The closed-form letter count of the pencil word.
inline int pencil_letter_count(int g, int h, int i) {
    validate_pencil_range(g, h, i);
    const int p = (g + 1) / (h + 1), r = (g + 1) % (h + 1);
    return 2 * (2 * g - 2 * h) + 2 * (i + 1) + (2 * h + 1) * ((2 * h + 2) * (2 * p - 1 - i) + 4 * r);
}

}  // namespace pencil::fact
