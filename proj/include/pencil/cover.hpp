#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencil/invariants.hpp"

namespace pencil::cover {

// A 2-handle in the base diagram.
struct Handle {
    std::string id;
    int framing = 0;
    bool links_branch = false;
    std::optional<std::string> meridian_of;
};

// A branched-double-cover presentation, tracked as a ledger of counts: the
// base rational surface, the ribbon branch surface Sigma(R,S,T) with its
// long bands and boxed band inventory, the cap disks in the 4-handle, the
// 2-handles, and the cover's audited invariants. Moves edit the counts; the
// audit identities tie base, branch, and cover together at every state.
struct CoverState {
    int g = 0, h = 0, i = 0, p = 0, r = 0;

    // Base: F_<hirzebruch> blown up <blowups> times, (e, sigma) stored
    // explicitly and updated move by move.
    int hirzebruch = 1;
    int blowups = 0;
    long long e_base = 0, sigma_base = 0;

    // Branch surface: R horizontal disks, S-fold linking of the pencil
    // handle, T trivial bands, long bands of length k_len threading the
    // disks from inside and outside, boxed bands, and cap disks.
    int R = 0, S = 0, T = 0;
    int inside = 0, outside = 0;
    int c_boxes = 0;
    bool e_box = false;
    int caps = 0;

    std::vector<Handle> handles;

    // Cover invariants and the branch surface's self-intersection.
    long long e_cover = 0, sigma_cover = 0;
    long long b_squared = 0;

    int k_len() const { return 2 * h + 2; }
    int c_box_bands() const { return (2 * h + 1) * (2 * h + 2); }
    int e_box_bands() const { return 4 * r * (2 * h + 1); }

    long long bands_total() const {
        return static_cast<long long>(inside) + outside + T +
               static_cast<long long>(c_boxes) * c_box_bands() + (e_box ? e_box_bands() : 0);
    }

    long long branch_euler() const { return static_cast<long long>(R) + caps - bands_total(); }

    Handle& handle(const std::string& id) {
        for (auto& hd : handles)
            if (hd.id == id) return hd;
        throw std::logic_error("cover: no handle '" + id + "'");
    }

    // The two double-cover identities every state must satisfy.
    bool audit_ok() const {
        return e_cover == 2 * e_base - branch_euler() &&
               b_squared % 2 == 0 &&
               sigma_cover == 2 * sigma_base - b_squared / 2 &&
               R >= 0 && S >= 0 && T >= 0 && inside >= 0 && outside >= 0 && caps >= 0 &&
               blowups >= 0;
    }
};

enum class MoveKind {
    band_dive,
    two_handle_band_dive,
    band_slide,
    handle_slide,
    isotopy_lemma_step,
    blow_down,
    cancel_trivial_bands
};

inline const char* move_name(MoveKind k) {
    switch (k) {
        case MoveKind::band_dive: return "band_dive";
        case MoveKind::two_handle_band_dive: return "two_handle_band_dive";
        case MoveKind::band_slide: return "band_slide";
        case MoveKind::handle_slide: return "handle_slide";
        case MoveKind::isotopy_lemma_step: return "isotopy_lemma_step";
        case MoveKind::blow_down: return "blow_down";
        case MoveKind::cancel_trivial_bands: return "cancel_trivial_bands";
    }
    return "?";
}

inline MoveKind move_kind_from_name(const std::string& name) {
    for (MoveKind k : {MoveKind::band_dive, MoveKind::two_handle_band_dive, MoveKind::band_slide,
                       MoveKind::handle_slide, MoveKind::isotopy_lemma_step, MoveKind::blow_down,
                       MoveKind::cancel_trivial_bands})
        if (name == move_name(k)) return k;
    throw std::invalid_argument("cover: unknown move kind '" + name + "'");
}

// One scripted move. A band dive either repositions bands (no count change)
// or cancels one bottom disk against an inside band while an outside band
// becomes trivial; a handle slide carries its framing/linking deltas; a
// blow-down removes one base exceptional sphere, which is covered by two
// section spheres of the fibration upstairs.
struct Move {
    MoveKind kind = MoveKind::band_slide;
    bool cancels_disk = false;  // band_dive
    int framing_delta = 0;      // handle_slide, blow_down
    int s_delta = 0;            // handle_slide
    int count = 0;              // cancel_trivial_bands
};

inline CoverState init_state(int g, int h, int i) {
    const inv::PencilSpec spec = inv::pencil_spec(g, h, i);
    CoverState s;
    s.g = g;
    s.h = h;
    s.i = i;
    s.p = spec.p;
    s.r = spec.r;

    s.hirzebruch = 1;
    s.blowups = i + 1;
    s.e_base = 4 + s.blowups;
    s.sigma_base = -s.blowups;

    s.R = 2 * g + 2;
    s.S = 0;
    s.T = 0;
    s.inside = s.outside = 2 * g - 2 * h;
    s.c_boxes = 2 * spec.p - 1 - i;
    s.e_box = spec.r > 0;
    s.caps = 2 * g + 2;

    s.handles.push_back({"pencil", -1, false, std::nullopt});
    s.handles.push_back({"zero", 0, false, std::nullopt});
    for (int k = 1; k <= i + 1; ++k)
        s.handles.push_back({"red" + std::to_string(k), -1, false, std::nullopt});

    const auto cf = inv::closed_form_invariants(g, h, i);
    s.e_cover = cf.e + 2 * (i + 1);
    s.sigma_cover = cf.sigma - 2 * (i + 1);
    s.b_squared = 4 * s.sigma_base - 2 * s.sigma_cover;

    if (!s.audit_ok()) throw std::logic_error("init_state: audit identities fail");
    return s;
}

inline CoverState apply_move(CoverState s, const Move& m) {
    switch (m.kind) {
        case MoveKind::band_slide:
            break;  // repositioning only
        case MoveKind::band_dive:
            if (m.cancels_disk) {
                if (s.R < 1 || s.inside < 1 || s.outside < 1)
                    throw std::invalid_argument("band_dive: no disk/band pair left to cancel");
                s.R -= 1;
                s.inside -= 1;
                s.outside -= 1;
                s.T += 1;
            }
            break;
        case MoveKind::two_handle_band_dive:
            s.S += 1;
            s.handle("pencil").links_branch = true;
            break;
        case MoveKind::handle_slide: {
            if (s.S + m.s_delta < 0)
                throw std::invalid_argument("handle_slide: linking count would go negative");
            s.S += m.s_delta;
            Handle& pencil = s.handle("pencil");
            pencil.framing += m.framing_delta;
            pencil.links_branch = s.S > 0;
            break;
        }
        case MoveKind::isotopy_lemma_step: {
            const int k = s.k_len();
            if (s.R < 2 * k)
                throw std::invalid_argument("isotopy_lemma_step: requires R >= 2k, have R = " +
                                            std::to_string(s.R) + ", k = " + std::to_string(k));
            if (s.inside < k || s.outside < k)
                throw std::invalid_argument("isotopy_lemma_step: not enough long bands");
            s.R -= k;
            s.S += 1;
            s.T += k;
            s.inside -= k;
            s.outside -= k;
            s.handle("pencil").links_branch = true;
            break;
        }
        case MoveKind::blow_down: {
            if (s.blowups < 1) throw std::invalid_argument("blow_down: base has no exceptional sphere");
            s.blowups -= 1;
            s.e_base -= 1;
            s.sigma_base += 1;
            s.handle("pencil").framing += m.framing_delta;
            for (auto it = s.handles.begin(); it != s.handles.end(); ++it)
                if (it->id.rfind("red", 0) == 0) {
                    s.handles.erase(it);
                    break;
                }
            // The base sphere is covered by two disjoint section spheres.
            s.e_cover -= 2;
            s.sigma_cover += 2;
            break;
        }
        case MoveKind::cancel_trivial_bands:
            if (m.count < 0 || s.T < m.count || s.caps < m.count)
                throw std::invalid_argument("cancel_trivial_bands: not enough trivial bands or caps");
            s.T -= m.count;
            s.caps -= m.count;
            break;
    }
    if (s.blowups == 0) s.hirzebruch = std::abs(s.handle("pencil").framing);
    return s;
}

// One audit-log line.
struct AuditRecord {
    int step = 0;
    std::string move;
    int R = 0, S = 0, T = 0;
    int hirzebruch = 0, blowups = 0;
    long long e_cover = 0, sigma_cover = 0;
    bool ok = false;
};

inline AuditRecord audit_record(int step, const std::string& move, const CoverState& s) {
    return {step,        move,      s.R,       s.S, s.T, s.hirzebruch, s.blowups,
            s.e_cover,   s.sigma_cover, s.audit_ok()};
}

// The move sequence of the diffeomorphism proof for (g, h, i): repositioning
// slides, base blow-downs (the first crosses the slid sphere twice), p-1
// lemma applications, the bottom-disk phase when r > 0, trivial-band
// cancellation, and the final p slides over the 0-framed handle.
inline std::vector<Move> proof_script(int g, int h, int i) {
    const inv::PencilSpec spec = inv::pencil_spec(g, h, i);
    std::vector<Move> moves;
    for (int k = 0; k < i; ++k) moves.push_back({MoveKind::handle_slide});
    moves.push_back({MoveKind::handle_slide});
    moves.push_back({MoveKind::handle_slide});
    for (int k = 0; k <= i; ++k) {
        Move m{MoveKind::blow_down};
        m.framing_delta = (k == 0) ? 2 : 1;
        moves.push_back(m);
    }
    for (int k = 1; k < spec.p; ++k) moves.push_back({MoveKind::isotopy_lemma_step});
    if (spec.r > 0) {
        moves.push_back({MoveKind::two_handle_band_dive});
        for (int k = 0; k < 2 * spec.r; ++k) {
            moves.push_back({MoveKind::band_slide});
            Move dive{MoveKind::band_dive};
            dive.cancels_disk = true;
            moves.push_back(dive);
        }
    }
    Move cancel{MoveKind::cancel_trivial_bands};
    cancel.count = 2 * g - 2 * h;
    moves.push_back(cancel);
    for (int k = 0; k < spec.p; ++k) {
        Move slide{MoveKind::handle_slide};
        slide.framing_delta = -2;
        // With r = 0 the linking count is p-1, so the last slide passes over
        // an already-unlinked handle.
        slide.s_delta = (spec.r == 0 && k == spec.p - 1) ? 0 : -1;
        moves.push_back(slide);
    }
    return moves;
}

struct ProofRun {
    CoverState final_state;
    std::vector<AuditRecord> log;
};

// Replay a move list from a given state, auditing after every move.
inline ProofRun run_script(CoverState s, const std::vector<Move>& moves) {
    ProofRun run;
    run.log.push_back(audit_record(0, "init", s));
    if (!run.log.back().ok) throw std::logic_error("cover audit failed at init");
    int step = 0;
    for (const Move& m : moves) {
        s = apply_move(s, m);
        run.log.push_back(audit_record(++step, move_name(m.kind), s));
        if (!run.log.back().ok)
            throw std::logic_error("cover audit failed at step " + std::to_string(step) + " (" +
                                   move_name(m.kind) + ")");
    }
    run.final_state = s;
    return run;
}

// Full replay of the proof for (g, h, i), with endpoint checks: the branch
// surface must be the standard fiber-sum picture and the audited cover
// invariants must equal the classification target's.
inline ProofRun run_proof_script(int g, int h, int i) {
    ProofRun run = run_script(init_state(g, h, i), proof_script(g, h, i));
    const CoverState& s = run.final_state;
    const inv::PencilSpec spec = inv::pencil_spec(g, h, i);

    auto endpoint_fail = [&](const std::string& what) {
        throw std::logic_error("run_proof_script(" + std::to_string(g) + "," + std::to_string(h) +
                               "," + std::to_string(i) + "): endpoint check failed: " + what);
    };
    if (s.R != 2 * h + 2 || s.S != 0 || s.T != 0) endpoint_fail("Sigma(R,S,T) is not Sigma(2h+2,0,0)");
    if (s.inside != 0 || s.outside != 0) endpoint_fail("long bands remain");
    if (s.caps != 2 * h + 2) endpoint_fail("cap disk count");
    if (s.blowups != 0) endpoint_fail("base still blown up");
    if (s.c_boxes != 2 * spec.p - 1 - i) endpoint_fail("boxed band inventory");
    const int expected_framing = (i + 1) - 2 * spec.p;
    if (run.final_state.handle("pencil").framing != expected_framing)
        endpoint_fail("pencil handle framing");
    if (s.hirzebruch != 2 * spec.p - 1 - i) endpoint_fail("base Hirzebruch index");

    const inv::DiffeoType target = inv::classify(g, h, i);
    if (s.e_cover != target.e || s.sigma_cover != target.sigma)
        endpoint_fail("audited cover invariants differ from the classification target");
    return run;
}

// Solve the double-cover relations for the branch surface data.
struct BranchClass {
    long long b_squared = 0;
    long long e_branch = 0;
};

inline BranchClass branch_class_solve(long long e_base, long long sigma_base, long long e_cover,
                                      long long sigma_cover) {
    BranchClass b;
    b.b_squared = 4 * sigma_base - 2 * sigma_cover;
    b.e_branch = 2 * e_base - e_cover;
    if (b.b_squared % 2 != 0) throw std::domain_error("branch_class_solve: odd self-intersection");
    return b;
}

inline BranchClass branch_class_solve(const CoverState& s) {
    const BranchClass b = branch_class_solve(s.e_base, s.sigma_base, s.e_cover, s.sigma_cover);
    if (b.b_squared != s.b_squared)
        throw std::domain_error("branch_class_solve: state self-intersection data inconsistent");
    if (b.e_branch != s.branch_euler())
        throw std::domain_error("branch_class_solve: branch Euler characteristic inconsistent");
    return b;
}

}  // namespace pencil::cover
