#pragma once

#include <vector>

namespace wordruin {

// Strongly connected components of a digraph given by adjacency lists.
struct SccResult {
    std::vector<int> component;  // vertex -> dense 0-based component id
    int count = 0;
};

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj);

// closed[c] is true iff component c has no edge into another component.
std::vector<bool> closed_components(const std::vector<std::vector<int>>& adj,
                                    const SccResult& scc);

}  // namespace wordruin
