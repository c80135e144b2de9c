#include "wordruin/digraph.hpp"

#include <algorithm>

namespace wordruin {

// Iterative Tarjan; component ids come out in reverse topological order of
// the condensation.
SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    SccResult res;
    res.component.assign(n, -1);

    std::vector<int> index(n, -1);
    std::vector<int> low(n, 0);
    std::vector<int> stack;
    std::vector<bool> on_stack(n, false);
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t edge;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        frames.push_back({root, 0});

        while (!frames.empty()) {
            Frame& top = frames.back();
            const int v = top.v;
            if (top.edge < adj[v].size()) {
                const int w = adj[v][top.edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        res.component[w] = res.count;
                    } while (w != v);
                    ++res.count;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                }
            }
        }
    }
    return res;
}

std::vector<bool> closed_components(const std::vector<std::vector<int>>& adj,
                                    const SccResult& scc) {
    std::vector<bool> closed(scc.count, true);
    for (std::size_t v = 0; v < adj.size(); ++v) {
        for (const int w : adj[v]) {
            if (scc.component[v] != scc.component[w]) {
                closed[scc.component[v]] = false;
            }
        }
    }
    return closed;
}

}  // namespace wordruin
