#include "surfcol/topology.hpp"

#include <algorithm>
#include <climits>

#include "surfcol/error.hpp"

namespace surfcol {

namespace {

void check_vertex(const Graph& g, int v) {
    require(v >= 0 && v < g.vertex_count(), ErrorKind::Precondition, "vertex id out of range");
}

// BFS distances from a source set; parents are chosen afterwards as the
// lowest-id neighbor one layer closer, which pins the reconstructed paths.
std::vector<int> bfs_layers(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue;
    for (int s : sources)
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<int> walk_back(const Graph& g, const std::vector<int>& dist, int target) {
    std::vector<int> path{target};
    int v = target;
    while (dist[v] > 0) {
        int next = -1;
        for (int w : g.neighbors(v))
            if (dist[w] == dist[v] - 1) {
                next = w;
                break;  // neighbors are sorted, so this is the lowest id
            }
        require(next >= 0, ErrorKind::Invariant, "broken bfs layering");
        path.push_back(next);
        v = next;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

const char* to_string(CycleClass c) {
    switch (c) {
        case CycleClass::Contractible: return "contractible";
        case CycleClass::TwoSidedSeparating: return "two_sided_separating";
        case CycleClass::TwoSidedNonseparating: return "two_sided_nonseparating";
        case CycleClass::OneSided: return "one_sided";
    }
    return "?";
}

std::vector<int> shortest_path(const Graph& g, int u, int w) {
    check_vertex(g, u);
    check_vertex(g, w);
    auto dist = bfs_layers(g, {u});
    require(dist[w] >= 0, ErrorKind::Precondition, "vertices lie in different components");
    return walk_back(g, dist, w);
}

std::vector<int> shortest_path_between_sets(const Graph& g, const std::vector<int>& from,
                                            const std::vector<int>& to) {
    require(!from.empty() && !to.empty(), ErrorKind::Precondition, "empty endpoint set");
    for (int v : from) check_vertex(g, v);
    for (int v : to) check_vertex(g, v);
    std::vector<char> in_from(g.vertex_count(), 0);
    for (int v : from) in_from[v] = 1;
    int common = INT_MAX;
    for (int v : to)
        if (in_from[v]) common = std::min(common, v);
    if (common != INT_MAX) return {common};

    std::vector<int> sorted_from = from;
    std::sort(sorted_from.begin(), sorted_from.end());
    auto dist = bfs_layers(g, sorted_from);
    int target = -1;
    for (int v : to)
        if (dist[v] >= 0 && (target < 0 || dist[v] < dist[target] ||
                             (dist[v] == dist[target] && v < target)))
            target = v;
    require(target >= 0, ErrorKind::Precondition, "endpoint sets lie in different components");
    return walk_back(g, dist, target);
}

CycleClass classify_cycle(const EmbeddedGraph& g, const CycleWalk& c) {
    require(g.connected(), ErrorKind::Precondition, "classification needs a connected embedding");
    int sign = 1;
    for (int d : c.darts) sign *= g.sign(dart_edge(d));
    if (sign < 0) return CycleClass::OneSided;
    auto cut = cut_along_cycle(g, c);
    auto pieces = split_components(cut.graph);
    if (pieces.size() == 2) {
        int low = std::min(pieces[0].graph.euler_genus(), pieces[1].graph.euler_genus());
        return low == 0 ? CycleClass::Contractible : CycleClass::TwoSidedSeparating;
    }
    require(pieces.size() == 1, ErrorKind::Invariant, "cut along a cycle made over two pieces");
    return CycleClass::TwoSidedNonseparating;
}

bool is_contractible(const EmbeddedGraph& g, const CycleWalk& c) {
    return classify_cycle(g, c) == CycleClass::Contractible;
}

std::vector<int> canonical_cycle(const std::vector<int>& vs) {
    int k = static_cast<int>(vs.size());
    int at = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    std::vector<int> fwd(k), bwd(k);
    for (int i = 0; i < k; ++i) {
        fwd[i] = vs[(at + i) % k];
        bwd[i] = vs[(at - i % k + k) % k];
    }
    return std::min(fwd, bwd);
}

std::optional<CycleWalk> shortest_noncontractible_cycle(const EmbeddedGraph& g) {
    require(g.connected(), ErrorKind::Precondition, "search needs a connected embedding");
    if (g.euler_genus() == 0) return std::nullopt;
    const Graph& gr = g.graph();
    int n = gr.vertex_count();

    int best_len = INT_MAX;
    std::vector<int> best_canon;
    std::optional<CycleWalk> best;

    // BFS-tree sweep from every root: candidate cycles are tree paths to the
    // ends of a non-tree edge when the paths share only the root. A shortest
    // non-contractible cycle always appears among these by the 3-Path
    // Property.
    for (int r = 0; r < n; ++r) {
        auto dist = bfs_layers(gr, {r});
        std::vector<int> parent(n, -1);
        for (int v = 0; v < n; ++v) {
            if (dist[v] <= 0) continue;
            for (int w : gr.neighbors(v))
                if (dist[w] == dist[v] - 1) {
                    parent[v] = w;
                    break;
                }
        }
        for (auto [a, b] : gr.edges()) {
            if (parent[a] == b || parent[b] == a) continue;
            if (dist[a] + dist[b] + 1 > best_len) continue;
            std::vector<int> pa{a}, pb{b};
            while (pa.back() != r) pa.push_back(parent[pa.back()]);
            while (pb.back() != r) pb.push_back(parent[pb.back()]);
            std::vector<char> on_a(n, 0);
            for (int v : pa) on_a[v] = 1;
            bool disjoint = true;
            for (int v : pb)
                if (v != r && on_a[v]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            // Cycle r .. a, b .. (child of r).
            std::vector<int> vs(pa.rbegin(), pa.rend());
            vs.insert(vs.end(), pb.begin(), pb.end() - 1);
            int len = static_cast<int>(vs.size());
            auto canon = canonical_cycle(vs);
            if (len > best_len || (len == best_len && !(canon < best_canon))) continue;
            auto cw = CycleWalk::from_vertices(g, vs);
            if (classify_cycle(g, cw) == CycleClass::Contractible) continue;
            best_len = len;
            best_canon = std::move(canon);
            best = std::move(cw);
        }
    }
    require(best.has_value(), ErrorKind::Invariant,
            "positive genus but no non-contractible candidate found");
    return best;
}

}  // namespace surfcol
