#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wordruin/chain_model.hpp"

namespace wordruin {

// One look-back state: a single letter, or a prefix (length >= 2) of one of
// the two tracked words.
struct ZState {
    std::vector<int> text;

    int length() const { return static_cast<int>(text.size()); }
    bool operator==(const ZState&) const = default;
};

// Embedded look-back chain over the tracked words. States are in canonical
// order: single letters in alphabet order, then prefixes of U by increasing
// length, then prefixes of D, duplicates kept once.
struct ZChain {
    std::vector<ZState> states;
    int idx_u = -1;
    int idx_d = -1;
    Eigen::VectorXd pi_z;     // supported on single-letter states only
    Eigen::MatrixXd trans_z;  // row-stochastic

    int size() const { return static_cast<int>(states.size()); }
};

struct RecurrenceReport {
    int closed_class_count = 0;
    bool class_of_u_and_d_shared = false;
};

std::vector<ZState> build_state_space(const Alphabet& alphabet, const Word& u,
                                      const Word& d);

// Longest element of state_set that is a suffix of z.text + c. Well defined
// because every single letter is a state.
ZState longest_suffix_state(const ZState& z, int c,
                            const std::vector<ZState>& state_set);

ZChain build_z_chain(const LetterChain& chain, const Word& u, const Word& d);

// True iff target is reachable from start along strictly positive transitions
// whose intermediate states avoid {target, blocker}. Paths have length >= 1,
// so start == target is not trivially true. Exact: positivity means the
// stored entry is > 0, no tolerance.
bool hits_before(const ZChain& zc, int start, int target, int blocker);

// Communicating-class structure of the positive-transition digraph.
RecurrenceReport recurrence_structure(const ZChain& zc);

}  // namespace wordruin
