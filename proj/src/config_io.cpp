#include "wordruin/config_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace wordruin {

namespace {

using nlohmann::json;

double finite_number(const json& v, const std::string& where) {
    if (!v.is_number()) {
        throw Error("SCHEMA_ERROR", where + " must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw Error("SCHEMA_ERROR", where + " must be finite");
    }
    return x;
}

int positive_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) {
        throw Error("SCHEMA_ERROR", where + " must be an integer");
    }
    const auto x = v.get<long long>();
    if (x < 1 || x > 1000000) {
        throw Error("SCHEMA_ERROR", where + " must be in 1..1000000");
    }
    return static_cast<int>(x);
}

Word parse_word(const json& v, const Alphabet& alphabet, const std::string& where) {
    if (!v.is_array() || v.empty()) {
        throw Error("SCHEMA_ERROR", where + " must be a non-empty array of symbols");
    }
    Word w;
    for (const auto& item : v) {
        if (!item.is_string()) {
            throw Error("SCHEMA_ERROR", where + " entries must be strings");
        }
        const auto idx = alphabet.index_of(item.get<std::string>());
        if (!idx) {
            throw Error("UNKNOWN_SYMBOL",
                        where + " uses symbol '" + item.get<std::string>() +
                            "' not in the alphabet");
        }
        w.letters.push_back(*idx);
    }
    return w;
}

}  // namespace

GameConfig parse_config_text(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error("PARSE_ERROR", e.what());
    }
    if (!root.is_object()) {
        throw Error("SCHEMA_ERROR", "top-level value must be an object");
    }

    static const std::set<std::string> keys = {
        "alphabet", "initial", "transition", "word_u", "word_d", "a", "b"};
    for (const auto& [key, value] : root.items()) {
        (void)value;
        if (keys.find(key) == keys.end()) {
            throw Error("SCHEMA_ERROR", "unknown key '" + key + "'");
        }
    }
    for (const auto& key : keys) {
        if (!root.contains(key)) {
            throw Error("SCHEMA_ERROR", "missing key '" + key + "'");
        }
    }

    GameConfig config;

    const json& alphabet = root["alphabet"];
    if (!alphabet.is_array() || alphabet.size() < 2) {
        throw Error("SCHEMA_ERROR", "alphabet must be an array of >= 2 symbols");
    }
    std::set<std::string> seen;
    for (const auto& sym : alphabet) {
        if (!sym.is_string() || sym.get<std::string>().empty()) {
            throw Error("SCHEMA_ERROR", "alphabet symbols must be non-empty strings");
        }
        if (!seen.insert(sym.get<std::string>()).second) {
            throw Error("SCHEMA_ERROR",
                        "duplicate alphabet symbol '" + sym.get<std::string>() + "'");
        }
        config.chain.alphabet.symbols.push_back(sym.get<std::string>());
    }
    const int n = config.chain.alphabet.size();

    const json& initial = root["initial"];
    if (!initial.is_array() || static_cast<int>(initial.size()) != n) {
        throw Error("SCHEMA_ERROR", "initial must have one entry per symbol");
    }
    config.chain.pi.resize(n);
    for (int i = 0; i < n; ++i) {
        config.chain.pi(i) = finite_number(initial[i], "initial[" + std::to_string(i) + "]");
    }

    const json& transition = root["transition"];
    if (!transition.is_array() || static_cast<int>(transition.size()) != n) {
        throw Error("SCHEMA_ERROR", "transition must have one row per symbol");
    }
    config.chain.trans.resize(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = transition[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw Error("SCHEMA_ERROR",
                        "transition row " + std::to_string(i) + " must have " +
                            std::to_string(n) + " entries");
        }
        for (int j = 0; j < n; ++j) {
            config.chain.trans(i, j) = finite_number(
                row[j], "transition[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    }

    config.spec.word_u = parse_word(root["word_u"], config.chain.alphabet, "word_u");
    config.spec.word_d = parse_word(root["word_d"], config.chain.alphabet, "word_d");
    config.spec.a_target = positive_int(root["a"], "a");
    config.spec.b_limit = positive_int(root["b"], "b");

    return config;
}

GameConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("PARSE_ERROR", "cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace wordruin
