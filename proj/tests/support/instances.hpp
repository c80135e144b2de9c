#pragma once

// Shared builders for test instances.

#include <random>
#include <string>
#include <vector>

#include "wordruin/chain_model.hpp"

namespace testsupport {

using wordruin::GameSpec;
using wordruin::LetterChain;
using wordruin::Word;

// i.i.d. letters over {"0","1"} with P("1") = p_one.
inline LetterChain binary_iid_chain(double p_one) {
    LetterChain chain;
    chain.alphabet.symbols = {"0", "1"};
    chain.pi.resize(2);
    chain.pi << 1.0 - p_one, p_one;
    chain.trans.resize(2, 2);
    chain.trans << 1.0 - p_one, p_one, 1.0 - p_one, p_one;
    return chain;
}

inline LetterChain coin_chain() { return binary_iid_chain(0.5); }

inline Word word(std::initializer_list<int> letters) { return Word{letters}; }

// Word "11" vs "01" with the given targets: the worked fair-coin game.
inline GameSpec coin_game(int a_target, int b_limit) {
    return GameSpec{word({1, 1}), word({0, 1}), a_target, b_limit};
}

// Strictly positive random chain; every entry is at least floor/(n*1).
inline LetterChain random_positive_chain(std::mt19937_64& rng, int n_letters,
                                         double floor = 0.05) {
    std::uniform_real_distribution<double> unif(floor, 1.0);
    LetterChain chain;
    for (int i = 0; i < n_letters; ++i) {
        chain.alphabet.symbols.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    chain.pi.resize(n_letters);
    chain.trans.resize(n_letters, n_letters);
    for (int i = 0; i < n_letters; ++i) chain.pi(i) = unif(rng);
    chain.pi /= chain.pi.sum();
    for (int i = 0; i < n_letters; ++i) {
        for (int j = 0; j < n_letters; ++j) chain.trans(i, j) = unif(rng);
        chain.trans.row(i) /= chain.trans.row(i).sum();
    }
    return chain;
}

inline Word random_word(std::mt19937_64& rng, int n_letters, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> letter(0, n_letters - 1);
    Word w;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) w.letters.push_back(letter(rng));
    return w;
}

// Rejection-samples a word pair passing validate_game, plus random targets.
inline GameSpec random_game(std::mt19937_64& rng, const LetterChain& chain,
                            int max_len, int max_ab) {
    std::uniform_int_distribution<int> ab(1, max_ab);
    for (;;) {
        GameSpec spec;
        spec.word_u = random_word(rng, chain.alphabet.size(), max_len);
        spec.word_d = random_word(rng, chain.alphabet.size(), max_len);
        spec.a_target = ab(rng);
        spec.b_limit = ab(rng);
        if (wordruin::validate_game(chain, spec).ok()) return spec;
    }
}

// Every word with length in [1, max_len], shortest first.
inline std::vector<Word> all_words(int n_letters, int max_len) {
    std::vector<Word> words;
    std::vector<Word> layer;
    for (int c = 0; c < n_letters; ++c) layer.push_back(Word{{c}});
    for (int len = 1; len <= max_len; ++len) {
        words.insert(words.end(), layer.begin(), layer.end());
        if (len == max_len) break;
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (int c = 0; c < n_letters; ++c) {
                Word ext = w;
                ext.letters.push_back(c);
                next.push_back(std::move(ext));
            }
        }
        layer = std::move(next);
    }
    return words;
}

}  // namespace testsupport
