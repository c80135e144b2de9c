#pragma once

#include <cstdint>
#include <vector>

#include "wordruin/chain_model.hpp"

namespace wordruin {

struct SimConfig {
    long long trials = 100000;
    long long max_steps = 1000000;  // censoring horizon in letter steps
    std::uint64_t base_seed = 1;
};

enum class TrialResult { Win, Lose, Censored };

struct TrialOutcome {
    TrialResult result = TrialResult::Censored;
    long long steps = 0;  // letter steps at absorption; 0 when censored
};

struct SimReport {
    double alpha_hat = 0.0;
    double alpha_se = 0.0;
    double tau_hat = 0.0;  // over non-censored trials
    double tau_se = 0.0;
    long long wins = 0;
    long long losses = 0;
    long long censored = 0;
    long long trials = 0;
    std::uint64_t base_seed = 0;
};

// Streaming single-word matcher: a prefix automaton with failure transitions
// folded in, so every letter is one table lookup. Overlapping occurrences
// restart from the longest proper border.
class WordMatcher {
public:
    WordMatcher(const Word& w, int alphabet_size);

    void step(int letter) { state_ = next_[state_ * n_letters_ + letter]; }
    bool matched() const { return state_ == length_; }
    void reset() { state_ = 0; }

private:
    int length_;
    int n_letters_;
    int state_ = 0;
    std::vector<int> next_;  // (length_+1) x n_letters_
};

// Cumulative scores S_1..S_n by the direct definition: +1 where u ends,
// -1 where d ends, overlapping occurrences counted.
std::vector<long long> score_prefix(const std::vector<int>& text, const Word& u,
                                    const Word& d);

// Per-trial seed derivation: SplitMix64 finalizer applied to
// base_seed + (index+1) * 0x9E3779B97F4A7C15. Stable across runs and
// independent of trial execution order.
std::uint64_t mix_seed(std::uint64_t base_seed, long long trial_index);

// One seeded game: sample letters, score with rolling matchers, stop at +A,
// -B, or the step horizon. Deterministic given the seed.
TrialOutcome run_trial(const LetterChain& chain, const GameSpec& spec,
                       std::uint64_t seed, long long max_steps);

// cfg.trials independent trials; censored trials are excluded from tau_hat
// and reported separately. Throws Error("ALL_CENSORED") if nothing absorbed.
SimReport estimate(const LetterChain& chain, const GameSpec& spec,
                   const SimConfig& cfg);

}  // namespace wordruin
