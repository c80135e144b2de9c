#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "wordruin/errors.hpp"

namespace wordruin {

// Ordered list of distinct symbol tokens. The input order is canonical and
// fixes all downstream indexing.
struct Alphabet {
    std::vector<std::string> symbols;

    int size() const { return static_cast<int>(symbols.size()); }
    std::optional<int> index_of(const std::string& symbol) const;
};

// Letter-level Markov chain: initial distribution pi over the alphabet and a
// row-stochastic transition matrix trans(from, to).
struct LetterChain {
    Alphabet alphabet;
    Eigen::VectorXd pi;
    Eigen::MatrixXd trans;
};

// A word as a sequence of alphabet indices.
struct Word {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const Word&) const = default;
};

struct GameSpec {
    Word word_u;        // gains a point per occurrence
    Word word_d;        // loses a point per occurrence
    int a_target = 1;   // points to win
    int b_limit = 1;    // points to lose
};

// Stochasticity tolerance. Inputs off by more are rejected, never repaired.
inline constexpr double kStochasticTol = 1e-12;

// Failure codes: ALPHABET, DIMENSION, NON_STOCHASTIC_ROW, BAD_INITIAL,
// REDUCIBLE.
ValidationReport validate_letter_chain(const LetterChain& chain);

// P(Y_1 = w_1, ..., Y_n = w_n) = pi(w_1) * prod_i trans(w_i, w_{i+1}).
double word_path_probability(const LetterChain& chain, const Word& w);

// Failure codes: BAD_WORD, BAD_TARGET, WORDS_EQUAL, SUBWORD,
// ZERO_TRANSITION_PATH. Warning: CONDITION1_VIOLATED when a word's only
// obstruction is zero initial mass on its first letter.
ValidationReport validate_game(const LetterChain& chain, const GameSpec& spec);

// True iff needle occurs as a contiguous block of haystack.
bool is_contiguous_subword(const Word& needle, const Word& haystack);

}  // namespace wordruin
