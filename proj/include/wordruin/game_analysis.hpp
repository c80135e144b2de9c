#pragma once

#include <optional>

#include "wordruin/embedded_walk.hpp"

namespace wordruin {

enum class GameStatus {
    Ok,                // duration almost surely finite, all values computed
    PeriodicInfinite,  // events alternate and a target exceeds 1
    PeriodicTrivial,   // events alternate but A = B = 1: first event decides
};

const char* to_string(GameStatus status);

struct GameAnalysis {
    GameStatus status = GameStatus::Ok;
    std::optional<double> alpha;  // P(game ends at +A)
    std::optional<double> e_t;    // expected number of scoring events
    std::optional<double> e_tau;  // expected duration in letter steps
    XChainParams params;
    GammaMoments moments;
};

struct RuinResult {
    double alpha = 0.0;
    double e_t = 0.0;
};

// Ruin problem for the correlated +-1 event walk: reach +A before -B.
// Solved as an absorbing first-step system over (score, last step); requires
// an aperiodic walk, else throws Error("SINGULAR_WALK").
RuinResult ruin_correlated(const XChainParams& params, int a_target, int b_limit);

// Duration from event-level results:
// e_gamma1 + a [(A+B-2) alpha - (B-1)] + b [e_t - 1].
double expected_tau(const GammaMoments& m, double alpha, double e_t,
                    int a_target, int b_limit);

// Full pipeline: validate, build the look-back chain, reduce to the event
// walk, solve. Throws ValidationError on bad input.
GameAnalysis analyze(const LetterChain& chain, const GameSpec& spec);

struct DirectResult {
    double alpha = 0.0;
    double e_tau = 0.0;
};

// Independent cross-check: one absorbing solve on the product
// (look-back state, score) chain, bypassing the event-walk reduction.
// Throws Error("PERIODIC") when the duration is not almost surely finite.
DirectResult analyze_direct(const LetterChain& chain, const GameSpec& spec);

}  // namespace wordruin
