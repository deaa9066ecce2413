#pragma once

// A deliberately small TOML reader/writer covering what the configuration
// files and move scripts use: bare keys, integer/boolean/string values,
// [tables], [[arrays of tables]], comments, and blank lines. Anything
// outside that subset is rejected loudly rather than half-parsed.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pencil::io {

struct TomlValue {
    enum class Kind { integer, boolean, string };
    Kind kind = Kind::integer;
    long long integer = 0;
    bool boolean = false;
    std::string string;

    long long as_integer() const {
        if (kind != Kind::integer) throw std::invalid_argument("toml: value is not an integer");
        return integer;
    }
    bool as_boolean() const {
        if (kind != Kind::boolean) throw std::invalid_argument("toml: value is not a boolean");
        return boolean;
    }
    const std::string& as_string() const {
        if (kind != Kind::string) throw std::invalid_argument("toml: value is not a string");
        return string;
    }
};

struct TomlTable {
    std::map<std::string, TomlValue> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }

    const TomlValue& at(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) throw std::invalid_argument("toml: missing key '" + key + "'");
        return it->second;
    }

    long long integer_or(const std::string& key, long long fallback) const {
        return has(key) ? at(key).as_integer() : fallback;
    }
    bool boolean_or(const std::string& key, bool fallback) const {
        return has(key) ? at(key).as_boolean() : fallback;
    }
    std::string string_or(const std::string& key, const std::string& fallback) const {
        return has(key) ? at(key).as_string() : fallback;
    }
};

struct TomlDocument {
    TomlTable root;
    std::map<std::string, TomlTable> tables;
    std::map<std::string, std::vector<TomlTable>> table_arrays;

    const TomlTable& table(const std::string& name) const {
        auto it = tables.find(name);
        if (it == tables.end()) throw std::invalid_argument("toml: missing table [" + name + "]");
        return it->second;
    }
    bool has_table(const std::string& name) const { return tables.count(name) != 0; }

    const std::vector<TomlTable>& table_array(const std::string& name) const {
        auto it = table_arrays.find(name);
        if (it == table_arrays.end())
            throw std::invalid_argument("toml: missing array of tables [[" + name + "]]");
        return it->second;
    }
    bool has_table_array(const std::string& name) const { return table_arrays.count(name) != 0; }
};

namespace toml_detail {

inline std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Remove a trailing comment that is not inside a quoted string.
inline std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] == '"') in_string = !in_string;
        if (line[k] == '#' && !in_string) return line.substr(0, k);
    }
    return line;
}

inline bool valid_bare_key(const std::string& key) {
    if (key.empty()) return false;
    for (char c : key)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

inline TomlValue parse_value(const std::string& text, int line_no) {
    TomlValue v;
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
        v.kind = TomlValue::Kind::string;
        const std::string body = text.substr(1, text.size() - 2);
        for (std::size_t k = 0; k < body.size(); ++k) {
            if (body[k] == '"')
                throw std::invalid_argument("toml line " + std::to_string(line_no) +
                                            ": unsupported quote inside string");
            if (body[k] == '\\')
                throw std::invalid_argument("toml line " + std::to_string(line_no) +
                                            ": escape sequences are not supported");
        }
        v.string = body;
        return v;
    }
    if (text == "true" || text == "false") {
        v.kind = TomlValue::Kind::boolean;
        v.boolean = (text == "true");
        return v;
    }
    try {
        std::size_t used = 0;
        v.kind = TomlValue::Kind::integer;
        v.integer = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("toml line " + std::to_string(line_no) + ": cannot parse value '" +
                                    text + "'");
    }
    return v;
}

}  // namespace toml_detail

inline TomlDocument toml_parse(const std::string& text) {
    using namespace toml_detail;
    TomlDocument doc;
    TomlTable* current = &doc.root;

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        line = strip(strip_comment(line));
        if (line.empty()) continue;

        if (line.size() >= 4 && line.substr(0, 2) == "[[" && line.substr(line.size() - 2) == "]]") {
            const std::string name = strip(line.substr(2, line.size() - 4));
            if (!valid_bare_key(name))
                throw std::invalid_argument("toml line " + std::to_string(line_no) +
                                            ": bad array-of-tables name");
            doc.table_arrays[name].emplace_back();
            current = &doc.table_arrays[name].back();
            continue;
        }
        if (line.front() == '[' && line.back() == ']') {
            const std::string name = strip(line.substr(1, line.size() - 2));
            if (!valid_bare_key(name))
                throw std::invalid_argument("toml line " + std::to_string(line_no) + ": bad table name");
            current = &doc.tables[name];
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("toml line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (!valid_bare_key(key))
            throw std::invalid_argument("toml line " + std::to_string(line_no) + ": bad key '" + key + "'");
        if (current->values.count(key))
            throw std::invalid_argument("toml line " + std::to_string(line_no) + ": duplicate key '" +
                                        key + "'");
        current->values[key] = parse_value(value, line_no);
    }
    return doc;
}

inline std::string toml_value_text(const TomlValue& v) {
    switch (v.kind) {
        case TomlValue::Kind::integer: return std::to_string(v.integer);
        case TomlValue::Kind::boolean: return v.boolean ? "true" : "false";
        case TomlValue::Kind::string: return "\"" + v.string + "\"";
    }
    return "";
}

}  // namespace pencil::io
