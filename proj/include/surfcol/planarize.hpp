#pragma once

// Planarizing subgraphs: given an embedded graph of positive Euler genus g
// and a root vertex, find a connected subgraph H containing the root such
// that G/H is planar and every vertex of G has at most 9g-4 neighbors in H.
// The two-point variant guarantees max{3, 9g-2} and also works at genus 0,
// where H is just a shortest path. Every recursion level asserts its own
// postconditions (connectivity, planar quotient, neighbor bound).

#include <vector>

#include "surfcol/embedding.hpp"
#include "surfcol/graph.hpp"

namespace surfcol {

bool is_planar(const Graph& g);

struct QuotientGraph {
    Graph graph;
    std::vector<int> vertex_map;  // old id -> new id
    int merged = -1;              // image of the contracted set
};

// Contracts a vertex set of an abstract graph to one vertex and simplifies.
// The set need not be connected here (callers that require connectivity
// check it themselves). Kept vertices stay in ascending-id order.
QuotientGraph quotient_graph(const Graph& g, const std::vector<int>& merge_set);

struct PlanarizeResult {
    std::vector<int> h_vertices;  // sorted
    Graph quotient;               // G/H, simple
    std::vector<int> vertex_map;  // G vertex -> quotient vertex
    int h_image = -1;             // quotient vertex holding H
    int max_neighbors_in_h = 0;
    int bound = 0;
};

// Requires euler_genus > 0 and a connected embedding; bound 9g-4.
PlanarizeResult planarizing_subgraph(const EmbeddedGraph& g, int v);

// Works at any genus; H contains u and w; bound max{3, 9g-2}.
PlanarizeResult planarizing_subgraph_2pt(const EmbeddedGraph& g, int u, int w);

}  // namespace surfcol
