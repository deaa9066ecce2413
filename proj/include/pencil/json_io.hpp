#pragma once

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencil/braid.hpp"
#include "pencil/config.hpp"
#include "pencil/cover.hpp"
#include "pencil/digest.hpp"
#include "pencil/factorization.hpp"
#include "pencil/garside.hpp"
#include "pencil/invariants.hpp"
#include "pencil/toml.hpp"

namespace pencil::io {

// ordered_json keeps insertion order, so every writer below emits a canonical
// key order and round-trips bit for bit.
using json = nlohmann::ordered_json;

// --- braid words -----------------------------------------------------------

inline json braid_to_json(const braid::BraidWord& w) {
    return json{{"strands", w.strands()}, {"letters", w.letters()}};
}

inline braid::BraidWord braid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("strands") || !j.contains("letters"))
        throw std::invalid_argument("braid json: expected an object with 'strands' and 'letters'");
    return braid::BraidWord(j.at("strands").get<int>(),
                            j.at("letters").get<std::vector<braid::Letter>>());
}

// --- Garside normal forms --------------------------------------------------

namespace json_detail {

inline json normal_form_body(const braid::GarsideNormalForm& nf) {
    return json{{"strands", nf.strands}, {"infimum", nf.infimum}, {"factors", nf.factors}};
}

}  // namespace json_detail

// Content digest of a normal form: SHA-256 of its canonical serialization.
// Two braid words are equal iff their normal-form digests agree.
inline std::string normal_form_digest(const braid::GarsideNormalForm& nf) {
    return sha256_hex(json_detail::normal_form_body(nf).dump());
}

inline json normal_form_to_json(const braid::GarsideNormalForm& nf) {
    json j = json_detail::normal_form_body(nf);
    j["digest"] = normal_form_digest(nf);
    return j;
}

inline braid::GarsideNormalForm normal_form_from_json(const json& j) {
    braid::GarsideNormalForm nf;
    nf.strands = j.at("strands").get<int>();
    nf.infimum = j.at("infimum").get<int>();
    nf.factors = j.at("factors").get<std::vector<braid::Perm>>();
    if (j.contains("digest") && j.at("digest").get<std::string>() != normal_form_digest(nf))
        throw std::invalid_argument("normal form json: digest does not match content");
    return nf;
}

// --- verification certificates ----------------------------------------------

// Portable record of one checked braid identity. 'verified' is the whole
// claim: the normal form of the word equals the normal form of the target.
struct Certificate {
    std::string claim;
    int strands = 0;
    std::string word_digest;
    std::string normal_form_digest;
    bool verified = false;
    std::string timestamp;
    std::string engine_version = kEngineVersion;
};

inline Certificate make_certificate(const std::string& claim, const braid::BraidWord& word,
                                    const braid::BraidWord& target) {
    if (word.strands() != target.strands())
        throw std::invalid_argument("certificate: word and target live in different braid groups");
    const braid::GarsideNormalForm lhs = braid::normal_form(word);
    const braid::GarsideNormalForm rhs = braid::normal_form(target);
    Certificate cert;
    cert.claim = claim;
    cert.strands = word.strands();
    cert.word_digest = normal_form_digest(lhs);
    cert.normal_form_digest = normal_form_digest(rhs);
    cert.verified = lhs == rhs;
    cert.timestamp = certificate_timestamp();
    return cert;
}

inline json certificate_to_json(const Certificate& c) {
    return json{{"claim", c.claim},
                {"strands", c.strands},
                {"word_digest", c.word_digest},
                {"normal_form_digest", c.normal_form_digest},
                {"verified", c.verified},
                {"timestamp", c.timestamp},
                {"engine_version", c.engine_version}};
}

// --- twist factorizations ----------------------------------------------------

inline const char* curve_kind_name(fact::CurveKind k) {
    switch (k) {
        case fact::CurveKind::chain: return "chain";
        case fact::CurveKind::derived_band: return "derived_band";
        case fact::CurveKind::block_loop: return "block_loop";
        case fact::CurveKind::boundary_parallel: return "boundary_parallel";
    }
    return "?";
}

inline fact::CurveKind curve_kind_from_name(const std::string& name) {
    for (fact::CurveKind k : {fact::CurveKind::chain, fact::CurveKind::derived_band,
                              fact::CurveKind::block_loop, fact::CurveKind::boundary_parallel})
        if (name == curve_kind_name(k)) return k;
    throw std::invalid_argument("factorization json: unknown curve kind '" + name + "'");
}

inline const char* target_kind_name(fact::TargetKind t) {
    return t == fact::TargetKind::identity ? "identity" : "boundary_multitwist";
}

inline fact::TargetKind target_kind_from_name(const std::string& name) {
    if (name == "identity") return fact::TargetKind::identity;
    if (name == "boundary_multitwist") return fact::TargetKind::boundary_multitwist;
    throw std::invalid_argument("factorization json: unknown target '" + name + "'");
}

namespace json_detail {

inline json homology_to_json(const sp::Vec& v) {
    json arr = json::array();
    for (const mpz_class& x : v) {
        if (!x.fits_slong_p())
            throw std::out_of_range("factorization json: homology entry exceeds 64-bit range");
        arr.push_back(static_cast<long long>(x.get_si()));
    }
    return arr;
}

inline sp::Vec homology_from_json(const json& arr) {
    sp::Vec v;
    for (const json& x : arr) v.emplace_back(static_cast<long>(x.get<long long>()));
    return v;
}

}  // namespace json_detail

inline json curve_to_json(const fact::CurveSymbol& c) {
    json j{{"kind", curve_kind_name(c.kind)}};
    switch (c.kind) {
        case fact::CurveKind::chain: j["chain_index"] = c.chain_index; break;
        case fact::CurveKind::derived_band:
            if (c.downstairs) j["downstairs"] = braid_to_json(*c.downstairs);
            break;
        case fact::CurveKind::block_loop: j["loop_strands"] = c.loop_strands; break;
        case fact::CurveKind::boundary_parallel:
            j["boundary_component"] = c.boundary_component;
            break;
    }
    if (c.homology) j["homology"] = json_detail::homology_to_json(*c.homology);
    if (c.sep != fact::SeparatingType::unset) {
        j["separating"] = c.sep == fact::SeparatingType::separating;
        if (c.sep == fact::SeparatingType::separating) j["sep_genus"] = c.sep_genus;
    }
    return j;
}

inline fact::CurveSymbol curve_from_json(const std::string& name, const json& j) {
    fact::CurveSymbol c;
    c.name = name;
    c.kind = curve_kind_from_name(j.at("kind").get<std::string>());
    switch (c.kind) {
        case fact::CurveKind::chain: c.chain_index = j.at("chain_index").get<int>(); break;
        case fact::CurveKind::derived_band:
            if (j.contains("downstairs")) c.downstairs = braid_from_json(j.at("downstairs"));
            break;
        case fact::CurveKind::block_loop:
            c.loop_strands = j.at("loop_strands").get<std::vector<int>>();
            break;
        case fact::CurveKind::boundary_parallel:
            c.boundary_component = j.at("boundary_component").get<int>();
            break;
    }
    if (j.contains("homology")) c.homology = json_detail::homology_from_json(j.at("homology"));
    if (j.contains("separating")) {
        c.sep = j.at("separating").get<bool>() ? fact::SeparatingType::separating
                                               : fact::SeparatingType::nonseparating;
        if (c.sep == fact::SeparatingType::separating && j.contains("sep_genus"))
            c.sep_genus = j.at("sep_genus").get<int>();
    }
    return c;
}

inline json factorization_to_json(const fact::TwistFactorization& f) {
    json curves = json::object();
    for (const auto& [name, c] : f.curves) curves[name] = curve_to_json(c);
    json letters = json::array();
    for (const fact::TwistLetter& l : f.letters)
        letters.push_back(json{{"curve", l.curve}, {"power", l.power}});
    return json{{"surface",
                 {{"genus", f.ambient.genus},
                  {"boundary", f.ambient.boundary},
                  {"marked", f.ambient.marked}}},
                {"curves", std::move(curves)},
                {"letters", std::move(letters)},
                {"target", target_kind_name(f.target)}};
}

inline fact::TwistFactorization factorization_from_json(const json& j) {
    fact::TwistFactorization f;
    const json& s = j.at("surface");
    f.ambient = {s.at("genus").get<int>(), s.at("boundary").get<int>(), s.at("marked").get<int>()};
    for (const auto& [name, cj] : j.at("curves").items()) f.add_curve(curve_from_json(name, cj));
    for (const json& lj : j.at("letters"))
        f.push_letter(lj.at("curve").get<std::string>(), lj.at("power").get<int>());
    f.target = target_kind_from_name(j.at("target").get<std::string>());
    return f;
}

// --- invariant records -------------------------------------------------------

inline json invariant_record_to_json(const inv::InvariantRecord& rec) {
    return json{{"g", rec.g},
                {"h", rec.h},
                {"i", rec.i},
                {"p", rec.p},
                {"r", rec.r},
                {"e", rec.e},
                {"sigma", rec.sigma},
                {"base_points", rec.base_points},
                {"nodal_fibers", rec.nodal_fibers},
                {"spin", rec.spin},
                {"diffeo_type", rec.diffeo_type}};
}

inline std::string invariant_csv_header() {
    return "g,h,i,p,r,e,sigma,base_points,nodal_fibers,spin,diffeo_type";
}

inline std::string invariant_csv_row(const inv::InvariantRecord& rec) {
    std::ostringstream out;
    out << rec.g << ',' << rec.h << ',' << rec.i << ',' << rec.p << ',' << rec.r << ',' << rec.e
        << ',' << rec.sigma << ',' << rec.base_points << ',' << rec.nodal_fibers << ','
        << (rec.spin ? "true" : "false") << ',' << rec.diffeo_type;
    return out.str();
}

// --- cover audit logs --------------------------------------------------------

inline json audit_record_to_json(const cover::AuditRecord& a) {
    return json{{"step", a.step},
                {"move", a.move},
                {"R", a.R},
                {"S", a.S},
                {"T", a.T},
                {"base", {{"hirzebruch", a.hirzebruch}, {"blowups", a.blowups}}},
                {"e_cover", a.e_cover},
                {"sigma_cover", a.sigma_cover},
                {"ok", a.ok}};
}

// One JSON object per line, one line per audited step.
inline std::string audit_jsonl(const std::vector<cover::AuditRecord>& log) {
    std::string out;
    for (const cover::AuditRecord& a : log) {
        out += audit_record_to_json(a).dump();
        out += '\n';
    }
    return out;
}

// --- move scripts (TOML) -------------------------------------------------------

inline std::string moves_to_toml(const std::vector<cover::Move>& moves) {
    std::ostringstream out;
    out << "# cover calculus script: " << moves.size() << " moves\n";
    for (const cover::Move& m : moves) {
        out << "\n[[move]]\n";
        out << "kind = \"" << cover::move_name(m.kind) << "\"\n";
        if (m.cancels_disk) out << "cancels_disk = true\n";
        if (m.framing_delta != 0) out << "framing_delta = " << m.framing_delta << "\n";
        if (m.s_delta != 0) out << "s_delta = " << m.s_delta << "\n";
        if (m.count != 0) out << "count = " << m.count << "\n";
    }
    return out.str();
}

inline std::vector<cover::Move> moves_from_toml(const TomlDocument& doc) {
    std::vector<cover::Move> moves;
    if (!doc.has_table_array("move")) return moves;
    for (const TomlTable& t : doc.table_array("move")) {
        cover::Move m;
        m.kind = cover::move_kind_from_name(t.at("kind").as_string());
        m.cancels_disk = t.boolean_or("cancels_disk", false);
        m.framing_delta = static_cast<int>(t.integer_or("framing_delta", 0));
        m.s_delta = static_cast<int>(t.integer_or("s_delta", 0));
        m.count = static_cast<int>(t.integer_or("count", 0));
        moves.push_back(m);
    }
    return moves;
}

inline std::vector<cover::Move> moves_parse_toml(const std::string& text) {
    return moves_from_toml(toml_parse(text));
}

}  // namespace pencil::io
