#include "surfcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "surfcol/error.hpp"

namespace surfcol {

void Graph::check_vertex(int v) const {
    require(v >= 0 && v < vertex_count(), ErrorKind::Precondition,
            "vertex id out of range: " + std::to_string(v));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list, bool validate) {
    require(n >= 0, ErrorKind::Precondition, "negative vertex count");
    adj_.resize(n);
    edges_.reserve(edge_list.size());
    if (validate) {
        for (auto [u, v] : edge_list) add_edge(u, v);
        return;
    }
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edge_list) {
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < n; ++v) adj_[v].reserve(deg[v]);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, ErrorKind::Precondition, "loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    require(it == adj_[u].end() || *it != v, ErrorKind::Precondition,
            "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    edges_.emplace_back(u, v);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::component_ids(int* count) const {
    std::vector<int> comp(vertex_count(), -1);
    int next = 0;
    std::deque<int> queue;
    for (int s = 0; s < vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        queue.push_back(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = next;
                    queue.push_back(w);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

bool Graph::connected() const {
    if (vertex_count() == 0) return true;
    int count = 0;
    component_ids(&count);
    return count == 1;
}

std::vector<int> Graph::bfs_dist(int src) const {
    check_vertex(src);
    std::vector<int> dist(vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<int> Graph::girth() const {
    // BFS from every vertex; a non-tree edge closing at depth d gives a cycle
    // of length dist[u]+dist[v]+1. The minimum over all roots is exact.
    int best = std::numeric_limits<int>::max();
    int n = vertex_count();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (2 * dist[v] >= best) break;
            for (int w : adj_[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v] && dist[w] >= dist[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, ErrorKind::Precondition, "cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

}  // namespace surfcol
