#pragma once

#include <Eigen/Dense>

#include "wordruin/pattern_automaton.hpp"

namespace wordruin {

// Two-state chain over scoring events: q1 = P(first event is a win),
// t11 = P(next event wins | last event won), tm1 = P(next wins | last lost).
struct XChainParams {
    double q1 = 0.0;
    double t11 = 0.0;
    double tm1 = 0.0;
};

// Letter-step moments of the gaps between scoring events. Always
// b - |a| = min(e2_plus, e2_minus) >= 1.
struct GammaMoments {
    double e_gamma1 = 0.0;  // expected time of the first event
    double e2_plus = 0.0;   // expected gap after a win
    double e2_minus = 0.0;  // expected gap after a loss
    double a = 0.0;         // (e2_plus - e2_minus) / 2
    double b = 0.0;         // (e2_plus + e2_minus) / 2
};

// p[z] = P(the next scoring event is a win | chain at z), for every state.
Eigen::VectorXd hitting_probabilities(const ZChain& zc);

// e[z] = expected absolute index of the next event given the chain sits at z
// at time 1; always >= 2.
Eigen::VectorXd expected_hitting_times(const ZChain& zc);

XChainParams x_chain_params(const ZChain& zc, const Eigen::VectorXd& p);

GammaMoments gamma_moments(const ZChain& zc, const Eigen::VectorXd& e);

// Structural aperiodicity of the event chain: false only under perfect
// win/loss alternation. Equivalent to the game duration being almost surely
// finite. Decided by graph reachability, no floating-point thresholds.
bool is_aperiodic(const ZChain& zc);

// Combinatorial classifier over a two-letter alphabet: true iff
// {u, d} = {y^t o^s, o^s y^t} with o the other letter, t,s >= 1 and
// (s == 1 or t == 1). Exactly these pairs alternate in every text.
// Throws Error("NOT_BINARY") unless alphabet_size == 2.
bool classify_binary_alternating(int alphabet_size, const Word& u, const Word& d);

}  // namespace wordruin
