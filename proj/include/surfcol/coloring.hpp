#pragma once

// Defective colorings. A (d1,...,dk)-coloring assigns each vertex a color in
// 1..k so that color class i induces a subgraph of maximum degree at most
// d_i. This header covers verification, an exact backtracking solver, the
// two constructive recoloring procedures, the planarize-and-lift pipelines
// for embedded graphs, and the genus-threshold formulas.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcol/embedding.hpp"
#include "surfcol/graph.hpp"

namespace surfcol {

// Defect vector (d1,...,dk). When the leading defects share a value K that
// strictly dominates the rest, jk() exposes (j, K); the recoloring
// procedures need that shape.
struct DefectVector {
    std::vector<int> d;

    DefectVector() = default;
    DefectVector(std::initializer_list<int> ds) : d(ds) {}
    explicit DefectVector(std::vector<int> ds) : d(std::move(ds)) {}

    int k() const { return static_cast<int>(d.size()); }
    // (j, K) with d1=...=dj=K and K > max(d_{j+1},...,dk); nullopt when the
    // pattern does not hold (in particular when j would equal k).
    std::optional<std::pair<int, int>> jk() const;
};

// color[v] in 1..k; 0 marks an unassigned vertex in partial colorings.
struct Coloring {
    std::vector<int> color;
    std::vector<int> defect_count;  // same-colored neighbors per vertex
};

// Fills defect_count from the color map (unassigned vertices count nowhere).
Coloring make_coloring(const Graph& g, std::vector<int> color);

struct Violation {
    int vertex = -1;
    int color = 0;
    int defect = 0;   // same-colored neighbors of `vertex`
    int allowed = 0;  // the defect bound of its color
};

// Empty result iff `coloring` is a (d1,...,dk)-coloring of g. The coloring
// must be total; colors outside 1..k are a precondition error.
std::vector<Violation> verify_coloring(const Graph& g, const DefectVector& defects,
                                       const Coloring& coloring);

// ---------------------------------------------------------------------------
// Exact solver.

using PinList = std::vector<std::pair<int, int>>;  // (vertex, color in 1..k)

struct SolveOptions {
    // Optional per-vertex ceiling on defect_count, on top of the color's
    // defect bound (used to demand e.g. zero same-colored neighbors at one
    // vertex). Empty = unconstrained.
    std::vector<int> defect_caps;
    int jobs = 1;
    bool deterministic = true;
};

struct SolveStats {
    long long nodes = 0;
    std::string reason;  // set when pins are rejected as contradictory
};

// Complete backtracking search over vertices in descending-degree order
// (ties by id), with forced-assignment propagation, saturation-aware forward
// checking and symmetry breaking among unpinned colors of equal defect.
// Returns a valid coloring extending the pins, or nullopt after exhausting
// the space. Contradictory pins give nullopt immediately with stats->reason
// set. With jobs > 1 the first branch point is explored in parallel; the
// answer never changes, and with `deterministic` the witness matches the
// sequential one.
std::optional<Coloring> solve_exact(const Graph& g, const DefectVector& defects,
                                    const PinList& pinned = {}, const SolveOptions& opts = {},
                                    SolveStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Constructive recoloring procedures. Both require defects with (j, K).

// Extends a valid coloring of g - v to all of g: recolors neighbors of v
// into colors j+1..k where possible, uses a color missing around v if one
// exists, otherwise picks a color l <= j unused by high neighbors (degree
// >= K+k), un-saturates the saturated l-colored neighbors and colors v with
// l. Returns nullopt when the steps do not go through; success is guaranteed
// when deg(v) <= K+k-1 and v has at most j-1 high neighbors.
std::optional<Coloring> extend_to_vertex(const Graph& g, const DefectVector& defects,
                                         const Coloring& partial, int v);

struct HighPartitionResult {
    Coloring coloring;
    std::vector<int> high;  // the vertices of degree >= K+k, ascending
    bool strict = false;    // valid for (d1,...,dk) itself, not just d1+1
};

// Requires |high| <= sum_{i>=2} (d_i + 1). Spreads the high vertices over
// color classes 2..k (at most d_i+1 each), then colors the rest greedily: a
// color in 2..k missing around the vertex if any, else color 1. The output
// is always valid for (d1+1, d2, ..., dk); `strict` reports whether the
// unrelaxed vector happens to hold as well.
HighPartitionResult color_via_high_partition(const Graph& g, const DefectVector& defects);

// ---------------------------------------------------------------------------
// Planarize-and-lift pipelines, defined for Euler genus g > 0.

struct PipelineResult {
    Coloring coloring;
    DefectVector defects;          // the vector the output was verified against
    std::vector<int> h_vertices;   // contracted subgraph, sorted
};

// Finds a planarizing subgraph H rooted at vertex 0, 4-colors the planar
// quotient properly with the merged vertex pinned to color 4, and lifts with
// all of H colored 4. Output vector: (0,0,0,9g-4).
PipelineResult color_000_9g4(const EmbeddedGraph& g);

// Same shape with a (2,2,2)-coloring of the quotient in which the merged
// vertex is additionally required to have no same-colored neighbor; H lifts
// to color 3. Output vector: (2,2,9g-4).
PipelineResult color_22_9g4(const EmbeddedGraph& g);

// ---------------------------------------------------------------------------
// Threshold formulas K(g).

enum class ThresholdFamily {
    Linear,        // 9g-4, the (0,0,0,K) and (2,2,K) bound, g >= 1
    TwoKK,         // 38 + sqrt(84g + 1682), the (2,K,K) bound
    ZeroZeroKK,    // 20 + sqrt(48g + 481), the (0,0,K,K) bound
    TriangleFree,  // ceil((10g+32)/3), the triangle-free (0,0,K) bound
    Girth7,        // 5 + ceil(sqrt(14g+22)), the girth-7 (0,K) bound
};

const char* to_string(ThresholdFamily family);
std::optional<ThresholdFamily> threshold_family_from_name(const std::string& name);

struct Threshold {
    ThresholdFamily family = ThresholdFamily::Linear;
    int genus = 0;
    double value = 0.0;
    bool integral = false;  // value is an exact integer (then ivalue holds it)
    long long ivalue = 0;
    // Contradiction-identity residual: K^2-76K-84g-237 for TwoKK and
    // K^2-40K-48g-80 for ZeroZeroKK (both exactly 1 by construction), and
    // the integer K^2-10K+4-14g >= 1 for Girth7. Unset otherwise.
    std::optional<double> residual;
};

Threshold threshold(ThresholdFamily family, int g);

}  // namespace surfcol
