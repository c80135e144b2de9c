#pragma once

#include <string>

#include "wordruin/chain_model.hpp"

namespace wordruin {

struct GameConfig {
    LetterChain chain;
    GameSpec spec;
};

// Strict JSON config parsing: exactly the keys alphabet, initial, transition,
// word_u, word_d, a, b; consistent dimensions; all word symbols drawn from
// the alphabet. Throws Error with code PARSE_ERROR, SCHEMA_ERROR or
// UNKNOWN_SYMBOL.
GameConfig parse_config_text(const std::string& json_text);
GameConfig parse_config(const std::string& path);

}  // namespace wordruin
