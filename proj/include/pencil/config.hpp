#pragma once

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pencil/block_pass.hpp"
#include "pencil/signature.hpp"
#include "pencil/toml.hpp"

namespace pencil::io {

inline constexpr const char* kEngineVersion = "0.1.0";

// Runtime configuration: the frozen block-pass and cocycle conventions (the
// shipped defaults are the calibrated winners) plus execution settings.
struct Config {
    braid::BlockPassConvention block_pass = braid::kFrozenBlockPass;
    sig::MeyerCalibration meyer = sig::kFrozenMeyer;
    int jobs = 1;
};

namespace config_detail {

inline braid::ChainSide side_from_string(const std::string& s) {
    if (s == "before") return braid::ChainSide::before;
    if (s == "after") return braid::ChainSide::after;
    throw std::invalid_argument("config: chain side must be 'before' or 'after', got '" + s + "'");
}

inline braid::ChainOrder order_from_string(const std::string& s) {
    if (s == "ascending") return braid::ChainOrder::ascending;
    if (s == "descending") return braid::ChainOrder::descending;
    throw std::invalid_argument("config: chain order must be 'ascending' or 'descending', got '" + s +
                                "'");
}

inline const char* side_to_string(braid::ChainSide s) {
    return s == braid::ChainSide::before ? "before" : "after";
}

inline const char* order_to_string(braid::ChainOrder o) {
    return o == braid::ChainOrder::ascending ? "ascending" : "descending";
}

inline int sign_value(long long v, const char* what) {
    if (v != 1 && v != -1) throw std::invalid_argument(std::string("config: ") + what + " must be +-1");
    return static_cast<int>(v);
}

}  // namespace config_detail

inline Config config_from_toml(const TomlDocument& doc) {
    using namespace config_detail;
    Config cfg;
    if (doc.has_table("block_pass")) {
        const TomlTable& t = doc.table("block_pass");
        cfg.block_pass.t_side = side_from_string(t.string_or("t_side", side_to_string(cfg.block_pass.t_side)));
        cfg.block_pass.t_order =
            order_from_string(t.string_or("t_order", order_to_string(cfg.block_pass.t_order)));
        cfg.block_pass.t_sign = sign_value(t.integer_or("t_sign", cfg.block_pass.t_sign), "t_sign");
        cfg.block_pass.u_side = side_from_string(t.string_or("u_side", side_to_string(cfg.block_pass.u_side)));
        cfg.block_pass.u_order =
            order_from_string(t.string_or("u_order", order_to_string(cfg.block_pass.u_order)));
        cfg.block_pass.u_sign = sign_value(t.integer_or("u_sign", cfg.block_pass.u_sign), "u_sign");
    }
    if (doc.has_table("meyer")) {
        const TomlTable& t = doc.table("meyer");
        cfg.meyer.global_sign =
            sign_value(t.integer_or("global_sign", cfg.meyer.global_sign), "global_sign");
        const long long local = t.integer_or("separating_local", cfg.meyer.separating_local);
        if (local < -1 || local > 1)
            throw std::invalid_argument("config: separating_local must be -1, 0, or +1");
        cfg.meyer.separating_local = static_cast<int>(local);
    }
    if (doc.has_table("engine")) {
        const long long jobs = doc.table("engine").integer_or("jobs", cfg.jobs);
        if (jobs < 1) throw std::invalid_argument("config: jobs must be >= 1");
        cfg.jobs = static_cast<int>(jobs);
    }
    return cfg;
}

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_toml(toml_parse(buf.str()));
}

// UTC timestamp for certificates; reproducible builds pin it through
// SOURCE_DATE_EPOCH.
inline std::string certificate_timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace pencil::io
