#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace surfcol {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted ascending; edges are stored normalized (u < v) in insertion order.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    // Bulk constructor. With validate=false the caller guarantees the edge
    // list is loop-free and duplicate-free (used by large generators).
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list, bool validate = true);

    int add_vertex();
    void add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool connected() const;
    std::vector<int> component_ids(int* count = nullptr) const;
    std::vector<int> bfs_dist(int src) const;
    // Length of a shortest cycle; nullopt for forests.
    std::optional<int> girth() const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);

}  // namespace surfcol
