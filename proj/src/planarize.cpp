#include "surfcol/planarize.hpp"

#include <algorithm>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "surfcol/error.hpp"
#include "surfcol/topology.hpp"

namespace surfcol {

bool is_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.vertex_count());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

QuotientGraph quotient_graph(const Graph& g, const std::vector<int>& merge_set) {
    require(!merge_set.empty(), ErrorKind::Precondition, "empty merge set");
    int n = g.vertex_count();
    std::vector<char> in_set(n, 0);
    for (int v : merge_set) {
        require(v >= 0 && v < n, ErrorKind::Precondition, "merge vertex out of range");
        require(!in_set[v], ErrorKind::Precondition, "repeated merge vertex");
        in_set[v] = 1;
    }
    int rep = *std::min_element(merge_set.begin(), merge_set.end());
    QuotientGraph out;
    out.vertex_map.assign(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!in_set[v] || v == rep) out.vertex_map[v] = next++;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) out.vertex_map[v] = out.vertex_map[rep];
    out.merged = out.vertex_map[rep];
    out.graph = Graph(next);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges()) {
        int a = out.vertex_map[u], b = out.vertex_map[v];
        if (a == b) continue;
        if (seen.insert(std::minmax(a, b)).second) out.graph.add_edge(a, b);
    }
    return out;
}

namespace {

std::vector<int> h_for_root(const EmbeddedGraph& g, int root);
std::vector<int> h_for_pair(const EmbeddedGraph& g, int u, int w);

std::vector<int> h_any_root(const EmbeddedGraph& g, int root) {
    if (g.euler_genus() == 0) return {root};
    return h_for_root(g, root);
}

int max_neighbors_in(const Graph& g, const std::vector<char>& in_h) {
    int mx = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int cnt = 0;
        for (int w : g.neighbors(v)) cnt += in_h[w];
        mx = std::max(mx, cnt);
    }
    return mx;
}

// Level postconditions; fires at the level that broke them.
void assert_level(const EmbeddedGraph& g, const std::vector<int>& h, int a, int b, int bound) {
    int n = g.vertex_count();
    std::vector<char> in_h(n, 0);
    for (int v : h) in_h[v] = 1;
    require(in_h[a] && in_h[b], ErrorKind::Invariant, "planarizing subgraph misses its root");
    std::vector<int> queue{h[0]};
    std::vector<char> vis(n, 0);
    vis[h[0]] = 1;
    size_t reached = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : g.graph().neighbors(queue[qi]))
            if (in_h[w] && !vis[w]) {
                vis[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    require(reached == h.size(), ErrorKind::Invariant, "planarizing subgraph not connected");
    require(max_neighbors_in(g.graph(), in_h) <= bound, ErrorKind::Invariant,
            "planarizing neighbor bound violated");
    require(is_planar(quotient_graph(g.graph(), h).graph), ErrorKind::Invariant,
            "planarizing quotient is not planar");
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Refined induction: H contains both endpoints, every vertex keeps at most
// max{3, 9g-2} neighbors in it. Valid at genus 0, where H is the path.
std::vector<int> h_for_pair(const EmbeddedGraph& g, int u, int w) {
    int gp = g.euler_genus();
    auto path = shortest_path(g.graph(), u, w);
    {
        std::vector<char> on_p(g.vertex_count(), 0);
        for (int v : path) on_p[v] = 1;
        require(max_neighbors_in(g.graph(), on_p) <= 3, ErrorKind::Invariant,
                "shortest path with a 4-neighbor vertex");
    }
    auto q = contract_subgraph(g, path);
    require(q.graph.euler_genus() <= gp, ErrorKind::Invariant, "contraction raised genus");
    int vstar = q.vertex_map[u];
    auto hstar = h_any_root(q.graph, vstar);
    std::vector<char> in_hstar(q.graph.vertex_count(), 0);
    for (int v : hstar) in_hstar[v] = 1;
    std::vector<int> h = path;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_hstar[q.vertex_map[v]]) h.push_back(v);
    h = sorted_unique(h);
    assert_level(g, h, u, w, std::max(3, 9 * gp - 2));
    return h;
}

std::vector<int> h_for_root(const EmbeddedGraph& g, int root) {
    int gg = g.euler_genus();
    require(gg > 0, ErrorKind::Precondition, "embedding is already planar");
    auto c = shortest_noncontractible_cycle(g);
    require(c.has_value(), ErrorKind::Invariant, "positive genus without non-contractible cycle");
    auto cls = classify_cycle(g, *c);
    auto cut = cut_along_cycle(g, *c);
    int n = g.vertex_count();
    std::vector<char> on_c(n, 0);
    for (int v : c->vertices) on_c[v] = 1;
    std::vector<int> h = c->vertices;

    if (cls == CycleClass::OneSided) {
        require(cut.graph.connected(), ErrorKind::Invariant, "one-sided cut disconnected");
        int gq = cut.graph.euler_genus();
        require(gq == gg - 1, ErrorKind::Invariant, "one-sided cut genus drop != 1");
        require(std::max(3, 9 * gq - 2) <= 9 * gg - 6, ErrorKind::Invariant,
                "one-sided bound arithmetic");
        auto q = contract_subgraph(cut.graph, cut.marked_faces[0]);
        auto hstar = h_for_pair(q.graph, q.vertex_map[root], q.vertex_map[cut.marked_faces[0][0]]);
        std::vector<char> in_hstar(q.graph.vertex_count(), 0);
        for (int v : hstar) in_hstar[v] = 1;
        for (int x = 0; x < n; ++x)
            if (!on_c[x] && in_hstar[q.vertex_map[x]]) h.push_back(x);
    } else if (cls == CycleClass::TwoSidedNonseparating) {
        require(cut.graph.connected(), ErrorKind::Invariant, "non-separating cut disconnected");
        int gq = cut.graph.euler_genus();
        require(gq <= gg - 2, ErrorKind::Invariant, "non-separating cut genus drop < 2");
        require(9 * gq + 8 <= 9 * gg - 10, ErrorKind::Invariant, "non-separating bound arithmetic");
        auto bridge =
            shortest_path_between_sets(cut.graph.graph(), cut.marked_faces[0], cut.marked_faces[1]);
        std::vector<int> s = cut.marked_faces[0];
        s.insert(s.end(), cut.marked_faces[1].begin(), cut.marked_faces[1].end());
        s.insert(s.end(), bridge.begin(), bridge.end());
        s = sorted_unique(s);
        auto q = contract_subgraph(cut.graph, s);
        auto hstar = h_for_pair(q.graph, q.vertex_map[root], q.vertex_map[s[0]]);
        std::vector<char> in_hstar(q.graph.vertex_count(), 0);
        for (int v : hstar) in_hstar[v] = 1;
        for (int x : bridge) h.push_back(cut.parent[x]);
        for (int x = 0; x < n; ++x)
            if (!on_c[x] && in_hstar[q.vertex_map[x]]) h.push_back(x);
    } else {
        require(cls == CycleClass::TwoSidedSeparating, ErrorKind::Invariant,
                "contractible shortest non-contractible cycle");
        auto pieces = split_components(cut.graph);
        require(pieces.size() == 2, ErrorKind::Invariant, "separating cut piece count");
        int nc = cut.graph.vertex_count();
        std::vector<int> piece_of(nc, -1), local_of(nc, -1);
        for (int p = 0; p < 2; ++p)
            for (int l = 0; l < static_cast<int>(pieces[p].orig_vertex.size()); ++l) {
                piece_of[pieces[p].orig_vertex[l]] = p;
                local_of[pieces[p].orig_vertex[l]] = l;
            }
        int side1 = piece_of[root];  // the root keeps its id across the cut
        int side2 = 1 - side1;
        int fa = piece_of[cut.marked_faces[0][0]];
        require(fa != piece_of[cut.marked_faces[1][0]], ErrorKind::Invariant,
                "marked faces in one piece of a separating cut");
        const auto& f1 = cut.marked_faces[fa == side1 ? 0 : 1];
        const auto& f2 = cut.marked_faces[fa == side1 ? 1 : 0];
        int g1 = pieces[side1].graph.euler_genus();
        int g2 = pieces[side2].graph.euler_genus();
        require(g1 > 0 && g2 > 0 && g1 + g2 == gg, ErrorKind::Invariant,
                "separating cut genus split");
        require((9 * g1 - 2) + (9 * g2 - 4) + 2 == 9 * gg - 4, ErrorKind::Invariant,
                "separating bound arithmetic");
        std::vector<int> f1_local, f2_local;
        for (int v : f1) f1_local.push_back(local_of[v]);
        for (int v : f2) f2_local.push_back(local_of[v]);
        auto q1 = contract_subgraph(pieces[side1].graph, f1_local);
        auto q2 = contract_subgraph(pieces[side2].graph, f2_local);
        auto h1 = h_for_pair(q1.graph, q1.vertex_map[local_of[root]], q1.vertex_map[f1_local[0]]);
        auto h2 = h_any_root(q2.graph, q2.vertex_map[f2_local[0]]);
        std::vector<char> in_h1(q1.graph.vertex_count(), 0), in_h2(q2.graph.vertex_count(), 0);
        for (int v : h1) in_h1[v] = 1;
        for (int v : h2) in_h2[v] = 1;
        for (int x = 0; x < n; ++x) {
            if (on_c[x]) continue;
            if (piece_of[x] == side1 && in_h1[q1.vertex_map[local_of[x]]]) h.push_back(x);
            if (piece_of[x] == side2 && in_h2[q2.vertex_map[local_of[x]]]) h.push_back(x);
        }
    }
    h = sorted_unique(h);
    assert_level(g, h, root, root, 9 * gg - 4);
    return h;
}

PlanarizeResult package(const EmbeddedGraph& g, std::vector<int> h, int bound) {
    PlanarizeResult out;
    out.h_vertices = std::move(h);
    auto q = quotient_graph(g.graph(), out.h_vertices);
    out.quotient = std::move(q.graph);
    out.vertex_map = std::move(q.vertex_map);
    out.h_image = q.merged;
    std::vector<char> in_h(g.vertex_count(), 0);
    for (int v : out.h_vertices) in_h[v] = 1;
    out.max_neighbors_in_h = max_neighbors_in(g.graph(), in_h);
    out.bound = bound;
    return out;
}

}  // namespace

PlanarizeResult planarizing_subgraph(const EmbeddedGraph& g, int v) {
    require(g.connected(), ErrorKind::Precondition, "needs a connected embedding");
    require(v >= 0 && v < g.vertex_count(), ErrorKind::Precondition, "root out of range");
    int gg = g.euler_genus();
    require(gg > 0, ErrorKind::Precondition, "embedding is already planar");
    return package(g, h_for_root(g, v), 9 * gg - 4);
}

PlanarizeResult planarizing_subgraph_2pt(const EmbeddedGraph& g, int u, int w) {
    require(g.connected(), ErrorKind::Precondition, "needs a connected embedding");
    require(u >= 0 && u < g.vertex_count() && w >= 0 && w < g.vertex_count(),
            ErrorKind::Precondition, "vertex out of range");
    return package(g, h_for_pair(g, u, w), std::max(3, 9 * g.euler_genus() - 2));
}

}  // namespace surfcol
