#pragma once

// Cycle classification and shortest non-contractible cycle search on
// embedded graphs. Contractibility is decided by surgery: cut along the
// cycle and inspect components and genera of the pieces.

#include <optional>
#include <vector>

#include "surfcol/embedding.hpp"

namespace surfcol {

enum class CycleClass {
    Contractible,
    TwoSidedSeparating,
    TwoSidedNonseparating,
    OneSided,
};

const char* to_string(CycleClass c);

// Breadth-first shortest path as a vertex list from u to w, with lowest-id
// predecessor tie-breaking so results are reproducible. u == w gives the
// single-vertex path. Throws when u and w are in different components.
std::vector<int> shortest_path(const Graph& g, int u, int w);

// Multi-source variant between two non-empty vertex sets. If the sets
// intersect, the path is the single smallest common vertex.
std::vector<int> shortest_path_between_sets(const Graph& g, const std::vector<int>& from,
                                            const std::vector<int>& to);

CycleClass classify_cycle(const EmbeddedGraph& g, const CycleWalk& c);
bool is_contractible(const EmbeddedGraph& g, const CycleWalk& c);

// None iff the embedding has Euler genus 0. Otherwise a minimum-length
// non-contractible cycle; ties break to the lexicographically smallest
// canonical vertex sequence. Requires a connected embedding.
std::optional<CycleWalk> shortest_noncontractible_cycle(const EmbeddedGraph& g);

// Rotates/reflects a simple cycle to start at its smallest vertex in the
// lexicographically smaller direction. Exposed for deterministic reporting.
std::vector<int> canonical_cycle(const std::vector<int>& vs);

}  // namespace surfcol
