#include "wordruin/pattern_automaton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wordruin/digraph.hpp"

namespace wordruin {

namespace {

bool ends_with(const std::vector<int>& text, const std::vector<int>& suffix) {
    if (suffix.size() > text.size()) return false;
    return std::equal(suffix.rbegin(), suffix.rend(), text.rbegin());
}

std::vector<std::vector<int>> positive_adjacency(const ZChain& zc) {
    std::vector<std::vector<int>> adj(zc.size());
    for (int i = 0; i < zc.size(); ++i) {
        for (int j = 0; j < zc.size(); ++j) {
            if (zc.trans_z(i, j) > 0.0) adj[i].push_back(j);
        }
    }
    return adj;
}

}  // namespace

std::vector<ZState> build_state_space(const Alphabet& alphabet, const Word& u,
                                      const Word& d) {
    std::vector<ZState> states;
    states.reserve(alphabet.size() + u.length() + d.length());
    for (int c = 0; c < alphabet.size(); ++c) {
        states.push_back(ZState{{c}});
    }
    const auto add_prefixes = [&states](const Word& w) {
        for (int len = 2; len <= w.length(); ++len) {
            ZState prefix{{w.letters.begin(), w.letters.begin() + len}};
            if (std::find(states.begin(), states.end(), prefix) == states.end()) {
                states.push_back(std::move(prefix));
            }
        }
    };
    add_prefixes(u);
    add_prefixes(d);
    return states;
}

ZState longest_suffix_state(const ZState& z, int c,
                            const std::vector<ZState>& state_set) {
    std::vector<int> ext = z.text;
    ext.push_back(c);
    const ZState* best = nullptr;
    for (const auto& s : state_set) {
        if ((best == nullptr || s.length() > best->length()) &&
            ends_with(ext, s.text)) {
            best = &s;
        }
    }
    return *best;  // the single letter c always matches
}

ZChain build_z_chain(const LetterChain& chain, const Word& u, const Word& d) {
    ZChain zc;
    zc.states = build_state_space(chain.alphabet, u, d);
    const int m = zc.size();
    const int n = chain.alphabet.size();

    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < m; ++i) index_of[zc.states[i].text] = i;
    zc.idx_u = index_of.at(u.letters);
    zc.idx_d = index_of.at(d.letters);

    // Only single-letter states can be the first state; they come first in
    // canonical order and inherit the letter distribution.
    zc.pi_z = Eigen::VectorXd::Zero(m);
    for (int c = 0; c < n; ++c) zc.pi_z(c) = chain.pi(c);

    zc.trans_z = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        const int last = zc.states[i].text.back();
        for (int c = 0; c < n; ++c) {
            const int j = index_of.at(longest_suffix_state(zc.states[i], c, zc.states).text);
            zc.trans_z(i, j) += chain.trans(last, c);
        }
    }
    return zc;
}

bool hits_before(const ZChain& zc, int start, int target, int blocker) {
    if (target == blocker) {
        throw std::invalid_argument("hits_before: target == blocker");
    }
    // BFS over positive transitions; expanding a vertex is only allowed for
    // non-terminal states, so the start (which may equal the target) is
    // expanded but never counted as a hit at step 0.
    std::vector<bool> queued(zc.size(), false);
    std::vector<int> frontier = {start};
    while (!frontier.empty()) {
        const int v = frontier.back();
        frontier.pop_back();
        for (int w = 0; w < zc.size(); ++w) {
            if (zc.trans_z(v, w) <= 0.0) continue;
            if (w == target) return true;
            if (w == blocker || queued[w]) continue;
            queued[w] = true;
            frontier.push_back(w);
        }
    }
    return false;
}

RecurrenceReport recurrence_structure(const ZChain& zc) {
    const auto adj = positive_adjacency(zc);
    const SccResult scc = strongly_connected_components(adj);
    const auto closed = closed_components(adj, scc);

    RecurrenceReport report;
    for (const bool c : closed) {
        if (c) ++report.closed_class_count;
    }
    const int cu = scc.component[zc.idx_u];
    const int cd = scc.component[zc.idx_d];
    report.class_of_u_and_d_shared = (cu == cd) && closed[cu];
    return report;
}

}  // namespace wordruin
