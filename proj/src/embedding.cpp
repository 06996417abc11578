#include "surfcol/embedding.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "surfcol/error.hpp"

namespace surfcol {

namespace {

std::string dart_str(int d) { return std::to_string(d); }

// Mutable working form used by the surgeries. Vertex and edge slots may die;
// finalize() compacts the survivors into a validated EmbeddedGraph.
struct Raw {
    std::vector<std::array<int, 2>> ends;  // tail of dart 2e, tail of dart 2e+1
    std::vector<int> sign;
    std::vector<std::vector<int>> rot;
    std::vector<char> vertex_alive;

    static Raw of(const EmbeddedGraph& g) {
        Raw r;
        r.ends.reserve(g.edge_count());
        r.sign.reserve(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge_ends(e);
            r.ends.push_back({u, v});
            r.sign.push_back(g.sign(e));
        }
        r.rot.reserve(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) r.rot.push_back(g.rotation(v));
        r.vertex_alive.assign(g.vertex_count(), 1);
        return r;
    }

    bool edge_alive(int e) const { return ends[e][0] >= 0; }

    void flip_vertex(int v) {
        std::reverse(rot[v].begin(), rot[v].end());
        // Loops at v get negated twice, i.e. keep their sign.
        for (int d : rot[v]) sign[d >> 1] = -sign[d >> 1];
    }

    int find_pos(int v, int d) const {
        auto it = std::find(rot[v].begin(), rot[v].end(), d);
        require(it != rot[v].end(), ErrorKind::Invariant, "dart not in rotation");
        return static_cast<int>(it - rot[v].begin());
    }

    // Merges the head of e into its tail, splicing the rotation at the
    // vanished darts. Keeps the Euler genus of every component.
    void contract_edge(int e) {
        int u = ends[e][0], v = ends[e][1];
        require(u != v, ErrorKind::Precondition, "cannot contract a loop");
        if (sign[e] < 0) flip_vertex(v);
        int du = 2 * e, dv = 2 * e + 1;
        int iu = find_pos(u, du), iv = find_pos(v, dv);
        int dv_count = static_cast<int>(rot[v].size());
        std::vector<int> merged;
        merged.reserve(rot[u].size() + rot[v].size() - 2);
        for (int t = 0; t < iu; ++t) merged.push_back(rot[u][t]);
        for (int s = 1; s < dv_count; ++s) merged.push_back(rot[v][(iv + s) % dv_count]);
        for (int t = iu + 1; t < static_cast<int>(rot[u].size()); ++t) merged.push_back(rot[u][t]);
        for (int d : rot[v])
            if (d != dv) ends[d >> 1][d & 1] = u;
        rot[u] = std::move(merged);
        rot[v].clear();
        vertex_alive[v] = 0;
        ends[e] = {-1, -1};
    }

    void delete_edge(int e) {
        for (int s = 0; s < 2; ++s) {
            int d = 2 * e + s;
            auto& r = rot[ends[e][s]];
            r.erase(std::find(r.begin(), r.end(), d));
        }
        ends[e] = {-1, -1};
    }

    // Drops loops at z and keeps only the lowest-id edge to each neighbor.
    void simplify_at(int z) {
        std::vector<int> loops;
        std::map<int, int> keeper;
        for (int d : rot[z]) {
            int e = d >> 1;
            int other = ends[e][(d & 1) ^ 1];
            if (other == z) {
                loops.push_back(e);
                continue;
            }
            auto [it, fresh] = keeper.try_emplace(other, e);
            if (!fresh && e < it->second) it->second = e;
        }
        std::sort(loops.begin(), loops.end());
        loops.erase(std::unique(loops.begin(), loops.end()), loops.end());
        for (int e : loops) delete_edge(e);
        std::vector<int> dead;
        for (int d : rot[z]) {
            int e = d >> 1;
            int other = ends[e][(d & 1) ^ 1];
            if (keeper[other] != e) dead.push_back(e);
        }
        std::sort(dead.begin(), dead.end());
        dead.erase(std::unique(dead.begin(), dead.end()), dead.end());
        for (int e : dead) delete_edge(e);
    }

    EmbeddedGraph finalize(std::vector<int>* vertex_map_out) const {
        std::vector<int> vmap(rot.size(), -1);
        int nv = 0;
        for (size_t v = 0; v < rot.size(); ++v)
            if (vertex_alive[v]) vmap[v] = nv++;
        std::vector<int> emap(ends.size(), -1);
        int ne = 0;
        for (size_t e = 0; e < ends.size(); ++e)
            if (edge_alive(static_cast<int>(e))) emap[e] = ne++;
        std::vector<std::vector<int>> new_rot(nv);
        for (size_t v = 0; v < rot.size(); ++v) {
            if (!vertex_alive[v]) continue;
            auto& out = new_rot[vmap[v]];
            out.reserve(rot[v].size());
            for (int d : rot[v]) out.push_back(2 * emap[d >> 1] + (d & 1));
        }
        std::vector<int> new_sign(ne);
        for (size_t e = 0; e < ends.size(); ++e)
            if (emap[e] >= 0) new_sign[emap[e]] = sign[e];
        if (vertex_map_out) *vertex_map_out = std::move(vmap);
        return EmbeddedGraph::build(new_rot, new_sign);
    }
};

}  // namespace

EmbeddedGraph EmbeddedGraph::build(const std::vector<std::vector<int>>& rotation,
                                   const std::vector<int>& signs) {
    EmbeddedGraph g;
    int n = static_cast<int>(rotation.size());
    int m = static_cast<int>(signs.size());
    for (int e = 0; e < m; ++e)
        require(signs[e] == 1 || signs[e] == -1, ErrorKind::Precondition,
                "sign of edge " + std::to_string(e) + " must be +1 or -1");

    std::vector<int> tail(2 * m, -1);
    for (int v = 0; v < n; ++v) {
        for (int d : rotation[v]) {
            require(d >= 0 && d < 2 * m, ErrorKind::Precondition,
                    "dart id out of range: " + dart_str(d));
            require(tail[d] < 0, ErrorKind::Precondition, "duplicate dart " + dart_str(d));
            tail[d] = v;
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        require(tail[d] >= 0, ErrorKind::Precondition, "missing dart " + dart_str(d));

    g.rotation_ = rotation;
    g.signs_ = signs;
    g.ends_.resize(m);
    std::map<std::pair<int, int>, int> seen;
    std::vector<std::pair<int, int>> edge_list;
    edge_list.reserve(m);
    for (int e = 0; e < m; ++e) {
        int u = tail[2 * e], v = tail[2 * e + 1];
        require(u != v, ErrorKind::Precondition, "loop edge " + std::to_string(e));
        auto key = std::minmax(u, v);
        auto [it, fresh] = seen.try_emplace({key.first, key.second}, e);
        require(fresh, ErrorKind::Precondition,
                "parallel edges " + std::to_string(it->second) + "," + std::to_string(e));
        g.ends_[e] = {u, v};
        edge_list.emplace_back(u, v);
    }
    g.graph_ = Graph(n, edge_list);
    g.pos_.assign(2 * m, -1);
    for (int v = 0; v < n; ++v)
        for (size_t i = 0; i < rotation[v].size(); ++i) g.pos_[rotation[v][i]] = static_cast<int>(i);

    g.connected_ = g.graph_.connected();
    g.trace_faces_internal();
    if (g.connected_) {
        int chi = n - m + g.face_count();
        g.euler_genus_ = 2 - chi;
        require(g.euler_genus_ >= 0, ErrorKind::Invariant, "negative euler genus");
        g.compute_orientable();
        require(!(g.euler_genus_ % 2 == 1 && g.orientable_), ErrorKind::Invariant,
                "odd euler genus on an orientable embedding");
    }
    return g;
}

void EmbeddedGraph::trace_faces_internal() {
    // State encoding: 2*dart + o with o=0 for orientation +, o=1 for -.
    int m = edge_count();
    int nstates = 4 * m;
    auto next = [&](int s) {
        int d = s >> 1, o = s & 1;
        int e = d >> 1;
        int od = dart_opposite(d);
        int w = dart_tail(od);
        int o2 = o ^ (signs_[e] < 0 ? 1 : 0);
        const auto& r = rotation_[w];
        int deg = static_cast<int>(r.size());
        int p = pos_[od];
        int q = o2 == 0 ? (p + 1) % deg : (p + deg - 1) % deg;
        return 2 * r[q] + o2;
    };
    auto reverse_state = [&](int s) {
        int d = s >> 1, o = s & 1;
        int e = d >> 1;
        int o2 = signs_[e] < 0 ? o : o ^ 1;
        return 2 * dart_opposite(d) + o2;
    };

    std::vector<int> orbit_of(nstates, -1);
    std::vector<std::vector<int>> orbits;
    for (int s0 = 0; s0 < nstates; ++s0) {
        if (orbit_of[s0] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<int> orbit;
        int s = s0;
        do {
            orbit_of[s] = id;
            orbit.push_back(s);
            s = next(s);
        } while (s != s0);
        orbits.push_back(std::move(orbit));
    }
    // Orbits pair up as mutual reverses; keep the one with the smaller
    // minimal state from each pair.
    std::vector<char> taken(orbits.size(), 0);
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (taken[i]) continue;
        int twin = orbit_of[reverse_state(orbits[i][0])];
        require(twin != static_cast<int>(i), ErrorKind::Invariant, "self-paired face walk");
        require(!taken[twin], ErrorKind::Invariant, "face walk pairing broken");
        taken[i] = taken[twin] = 1;
        FaceWalk f;
        f.darts.reserve(orbits[i].size());
        for (int s : orbits[i]) f.darts.push_back(s >> 1);
        faces_.push_back(std::move(f));
    }
    // An isolated vertex sits inside one disk face of its own.
    for (int v = 0; v < vertex_count(); ++v)
        if (rotation_[v].empty()) faces_.push_back(FaceWalk{});
}

void EmbeddedGraph::compute_orientable() {
    // Orientable iff vertex flips can make every sign positive: assign +-1
    // potentials over a spanning tree and check the co-tree edges.
    int n = vertex_count();
    if (n == 0) {
        orientable_ = true;
        return;
    }
    std::vector<int> pot(n, 0);
    std::vector<int> stack{0};
    pot[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : rotation_[v]) {
            int e = d >> 1;
            int w = dart_head(d);
            if (pot[w] == 0) {
                pot[w] = pot[v] * signs_[e];
                stack.push_back(w);
            }
        }
    }
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edge_ends(e);
        if (signs_[e] * pot[u] * pot[v] != 1) {
            orientable_ = false;
            return;
        }
    }
    orientable_ = true;
}

int EmbeddedGraph::edge_between(int u, int v) const {
    for (int d : rotation_[u])
        if (dart_head(d) == v) return d >> 1;
    fail(ErrorKind::Precondition,
         "no edge between " + std::to_string(u) + " and " + std::to_string(v));
}

std::vector<int> EmbeddedGraph::face_vertices(const FaceWalk& f) const {
    std::vector<int> vs;
    vs.reserve(f.darts.size());
    for (int d : f.darts) vs.push_back(dart_tail(d));
    return vs;
}

int EmbeddedGraph::euler_genus() const {
    require(connected_, ErrorKind::Precondition, "euler genus needs a connected embedding");
    return euler_genus_;
}

bool EmbeddedGraph::orientable() const {
    require(connected_, ErrorKind::Precondition, "orientability needs a connected embedding");
    return orientable_;
}

EmbeddedGraph build_embedding(const std::vector<std::vector<int>>& rotation,
                              const std::vector<int>& signs) {
    return EmbeddedGraph::build(rotation, signs);
}

const std::vector<FaceWalk>& trace_faces(const EmbeddedGraph& g) { return g.faces(); }

int euler_genus(const EmbeddedGraph& g) { return g.euler_genus(); }

bool is_orientable(const EmbeddedGraph& g) { return g.orientable(); }

EmbeddedGraph embedding_from_neighbor_rotations(
    const std::vector<std::vector<int>>& nbr_order,
    const std::vector<std::pair<std::pair<int, int>, int>>& signs) {
    int n = static_cast<int>(nbr_order.size());
    std::map<std::pair<int, int>, int> edge_id;
    for (int v = 0; v < n; ++v)
        for (int w : nbr_order[v]) {
            require(w >= 0 && w < n, ErrorKind::Precondition, "neighbor id out of range");
            auto key = std::minmax(v, w);
            edge_id.try_emplace({key.first, key.second}, 0);
        }
    int m = 0;
    for (auto& [key, id] : edge_id) id = m++;
    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v)
        for (int w : nbr_order[v]) {
            auto key = std::minmax(v, w);
            int e = edge_id[{key.first, key.second}];
            rotation[v].push_back(2 * e + (v == key.first ? 0 : 1));
        }
    std::vector<int> sgn(m, 1);
    for (auto [pair, s] : signs) {
        auto key = std::minmax(pair.first, pair.second);
        auto it = edge_id.find({key.first, key.second});
        require(it != edge_id.end(), ErrorKind::Precondition, "sign given for a missing edge");
        sgn[it->second] = s;
    }
    return EmbeddedGraph::build(rotation, sgn);
}

CycleWalk CycleWalk::from_vertices(const EmbeddedGraph& g, const std::vector<int>& vs) {
    int k = static_cast<int>(vs.size());
    require(k >= 3, ErrorKind::Precondition, "cycle needs at least 3 vertices");
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : vs) {
        require(v >= 0 && v < g.vertex_count(), ErrorKind::Precondition, "cycle vertex out of range");
        require(!seen[v], ErrorKind::Precondition, "repeated cycle vertex " + std::to_string(v));
        seen[v] = 1;
    }
    CycleWalk c;
    c.vertices = vs;
    c.darts.reserve(k);
    for (int i = 0; i < k; ++i) {
        int u = vs[i], v = vs[(i + 1) % k];
        int e = g.edge_between(u, v);  // throws if non-adjacent
        c.darts.push_back(2 * e + (g.dart_tail(2 * e) == u ? 0 : 1));
    }
    return c;
}

ContractResult contract_subgraph(const EmbeddedGraph& g, const std::vector<int>& h) {
    require(!h.empty(), ErrorKind::Precondition, "empty contraction set");
    std::vector<char> in_h(g.vertex_count(), 0);
    for (int v : h) {
        require(v >= 0 && v < g.vertex_count(), ErrorKind::Precondition, "vertex out of range");
        require(!in_h[v], ErrorKind::Precondition, "repeated vertex in contraction set");
        in_h[v] = 1;
    }

    // BFS spanning tree of G[h] from the smallest member; also proves G[h]
    // is connected.
    std::vector<int> sorted_h(h);
    std::sort(sorted_h.begin(), sorted_h.end());
    int root = sorted_h[0];
    std::vector<char> reached(g.vertex_count(), 0);
    std::vector<int> tree_edges;
    std::vector<int> queue{root};
    reached[root] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w : g.graph().neighbors(v)) {
            if (!in_h[w] || reached[w]) continue;
            reached[w] = 1;
            tree_edges.push_back(g.edge_between(v, w));
            queue.push_back(w);
        }
    }
    require(queue.size() == sorted_h.size(), ErrorKind::Precondition,
            "contraction set is not connected");

    Raw raw = Raw::of(g);
    for (int e : tree_edges) raw.contract_edge(e);
    int rep = -1;
    for (int v : sorted_h)
        if (raw.vertex_alive[v]) {
            require(rep < 0, ErrorKind::Invariant, "contraction left several representatives");
            rep = v;
        }
    require(rep >= 0, ErrorKind::Invariant, "contraction lost the representative");
    raw.simplify_at(rep);

    std::vector<int> vmap;
    ContractResult res{raw.finalize(&vmap), {}};
    res.vertex_map.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        res.vertex_map[v] = in_h[v] ? vmap[rep] : vmap[v];
    return res;
}

CutResult cut_along_cycle(const EmbeddedGraph& g, const CycleWalk& c) {
    int k = c.length();
    int n = g.vertex_count();
    int m = g.edge_count();
    require(k >= 3 && static_cast<int>(c.darts.size()) == k, ErrorKind::Precondition,
            "malformed cycle walk");
    for (int i = 0; i < k; ++i) {
        int e = c.darts[i] >> 1;
        require(e >= 0 && e < m, ErrorKind::Precondition, "cycle dart out of range");
        auto [a, b] = g.edge_ends(e);
        int u = c.vertices[i], v = c.vertices[(i + 1) % k];
        require((a == u && b == v) || (a == v && b == u), ErrorKind::Precondition,
                "cycle walk does not match the graph");
    }

    Raw raw = Raw::of(g);
    // Normalize: flip vertices along the walk so internal cycle edges are
    // positive; the closing edge then carries the cycle's sidedness.
    for (int i = 1; i < k; ++i) {
        int e = c.darts[i - 1] >> 1;
        if (raw.sign[e] < 0) raw.flip_vertex(c.vertices[i]);
    }

    std::vector<int> cyc_index(n, -1);
    for (int i = 0; i < k; ++i) cyc_index[c.vertices[i]] = i;
    auto out_dart = [&](int i) {
        int e = c.darts[i] >> 1;
        return 2 * e + (raw.ends[e][0] == c.vertices[i] ? 0 : 1);
    };
    auto in_dart = [&](int i) {
        int e = c.darts[(i + k - 1) % k] >> 1;
        return 2 * e + (raw.ends[e][0] == c.vertices[i] ? 0 : 1);
    };

    // Copy A of cycle vertex i keeps the original id, copy B gets n+i. The
    // copy of cycle edge e_i out of A_i keeps id e_i, the one out of B_i gets
    // m+i; a negative edge crosses over to the other side's copy.
    int new_n = n + k;
    int new_m = m + k;
    std::vector<std::array<int, 2>> ends(new_m, {-1, -1});
    std::vector<int> sign(new_m, 1);
    for (int e = 0; e < m; ++e) {
        ends[e] = raw.ends[e];
        sign[e] = raw.sign[e];
    }
    std::vector<std::vector<int>> rot(new_n);
    for (int v = 0; v < n; ++v)
        if (cyc_index[v] < 0) rot[v] = raw.rot[v];

    auto a_id = [&](int i) { return c.vertices[i]; };
    auto b_id = [&](int i) { return n + i; };
    for (int i = 0; i < k; ++i) {
        int e = c.darts[i] >> 1;
        int j = (i + 1) % k;
        int eb = m + i;
        sign[eb] = raw.sign[e];
        if (raw.sign[e] > 0) {
            ends[e] = {a_id(i), a_id(j)};
            ends[eb] = {b_id(i), b_id(j)};
        } else {
            ends[e] = {a_id(i), b_id(j)};
            ends[eb] = {b_id(i), a_id(j)};
        }
    }
    auto copy_dart_at = [&](int i, bool outgoing, bool side_a) -> int {
        // Dart of the relevant copy edge whose tail (outgoing) or head
        // (incoming) sits on the requested side of cycle position i.
        int e = (outgoing ? c.darts[i] : c.darts[(i + k - 1) % k]) >> 1;
        int pos = outgoing ? i : (i + k - 1) % k;
        int want = side_a ? a_id(i) : b_id(i);
        for (int cand : {e, m + pos}) {
            if (ends[cand][0] == want) return 2 * cand;
            if (ends[cand][1] == want) return 2 * cand + 1;
        }
        fail(ErrorKind::Invariant, "cut copy edge lookup failed");
    };

    for (int i = 0; i < k; ++i) {
        int v = c.vertices[i];
        const auto& r = raw.rot[v];
        int deg = static_cast<int>(r.size());
        int po = raw.find_pos(v, out_dart(i));
        int pi = raw.find_pos(v, in_dart(i));
        std::vector<int> arc_a, arc_b;
        for (int t = (po + 1) % deg; t != pi; t = (t + 1) % deg) arc_a.push_back(r[t]);
        for (int t = (pi + 1) % deg; t != po; t = (t + 1) % deg) arc_b.push_back(r[t]);
        auto& ra = rot[a_id(i)];
        ra.push_back(copy_dart_at(i, true, true));
        for (int d : arc_a) ra.push_back(d);
        ra.push_back(copy_dart_at(i, false, true));
        auto& rb = rot[b_id(i)];
        rb.push_back(copy_dart_at(i, false, false));
        for (int d : arc_b) {
            rb.push_back(d);
            ends[d >> 1][d & 1] = b_id(i);
        }
        rb.push_back(copy_dart_at(i, true, false));
    }

    // Rebuild with the final dart numbering implied by `ends`.
    std::vector<std::vector<int>> rotation(new_n);
    for (int v = 0; v < new_n; ++v) {
        rotation[v].reserve(rot[v].size());
        for (int d : rot[v]) {
            int e = d >> 1;
            // Non-copy darts kept their ids; copy darts were synthesized
            // against `ends` already.
            require(ends[e][d & 1] == v, ErrorKind::Invariant, "cut dart ownership broken");
            rotation[v].push_back(d);
        }
    }

    CutResult res{EmbeddedGraph::build(rotation, sign), {}, {}};
    res.parent.resize(new_n);
    std::iota(res.parent.begin(), res.parent.end(), 0);
    for (int i = 0; i < k; ++i) res.parent[b_id(i)] = c.vertices[i];

    int s = 1;
    for (int d : c.darts) s *= raw.sign[d >> 1];
    if (s > 0) {
        std::vector<int> fa, fb;
        for (int i = 0; i < k; ++i) fa.push_back(a_id(i));
        for (int i = 0; i < k; ++i) fb.push_back(b_id(i));
        res.marked_faces = {fa, fb};
    } else {
        std::vector<int> f;
        for (int i = 0; i < k; ++i) f.push_back(a_id(i));
        for (int i = 0; i < k; ++i) f.push_back(b_id(i));
        res.marked_faces = {f};
    }
    return res;
}

namespace {

int genus_sum(const EmbeddedGraph& g) {
    if (g.connected()) return g.euler_genus();
    int total = 0;
    for (const auto& piece : split_components(g)) total += piece.graph.euler_genus();
    return total;
}

}  // namespace

IdentifyResult identify_vertices(const EmbeddedGraph& g, int u, int w) {
    require(u >= 0 && u < g.vertex_count() && w >= 0 && w < g.vertex_count(),
            ErrorKind::Precondition, "vertex out of range");
    require(u != w, ErrorKind::Precondition, "identify needs two distinct vertices");
    require(!g.graph().has_edge(u, w), ErrorKind::Precondition,
            "identify needs non-adjacent vertices");

    int before = genus_sum(g);
    int du = std::max(1, static_cast<int>(g.rotation(u).size()));
    int dw = std::max(1, static_cast<int>(g.rotation(w).size()));

    std::optional<IdentifyResult> best;
    std::tuple<int, int, int, int> best_key{std::numeric_limits<int>::max(), 0, 0, 0};
    for (int flip = 0; flip < 2; ++flip) {
        for (int cu = 0; cu < du; ++cu) {
            for (int cw = 0; cw < dw; ++cw) {
                Raw raw = Raw::of(g);
                if (flip) raw.flip_vertex(w);
                std::vector<int> spliced;
                const auto& ru = raw.rot[u];
                const auto& rw = raw.rot[w];
                for (size_t t = 0; t < ru.size(); ++t) spliced.push_back(ru[(cu + t) % ru.size()]);
                for (size_t t = 0; t < rw.size(); ++t) spliced.push_back(rw[(cw + t) % rw.size()]);
                for (int d : rw) raw.ends[d >> 1][d & 1] = u;
                raw.rot[u] = std::move(spliced);
                raw.rot[w].clear();
                raw.vertex_alive[w] = 0;
                raw.simplify_at(u);
                std::vector<int> vmap;
                EmbeddedGraph merged = raw.finalize(&vmap);
                int score = genus_sum(merged);
                int dart_u = g.rotation(u).empty() ? -1 : g.rotation(u)[cu];
                int dart_w = g.rotation(w).empty() ? -1 : g.rotation(w)[cw];
                std::tuple<int, int, int, int> key{score, dart_u, dart_w, flip};
                if (!best || key < best_key) {
                    best_key = key;
                    vmap[w] = vmap[u];
                    best = IdentifyResult{std::move(merged), std::move(vmap), before, score};
                }
            }
        }
    }
    return std::move(*best);
}

std::vector<EmbeddedPiece> split_components(const EmbeddedGraph& g) {
    int count = 0;
    std::vector<int> comp = g.graph().component_ids(&count);
    std::vector<EmbeddedPiece> pieces;
    for (int ci = 0; ci < count; ++ci) {
        std::vector<int> vmap(g.vertex_count(), -1);
        std::vector<int> orig;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[v] == ci) {
                vmap[v] = static_cast<int>(orig.size());
                orig.push_back(v);
            }
        std::vector<int> emap(g.edge_count(), -1);
        std::vector<int> signs;
        for (int e = 0; e < g.edge_count(); ++e)
            if (comp[g.edge_ends(e).first] == ci) {
                emap[e] = static_cast<int>(signs.size());
                signs.push_back(g.sign(e));
            }
        std::vector<std::vector<int>> rotation(orig.size());
        for (size_t i = 0; i < orig.size(); ++i) {
            for (int d : g.rotation(orig[i])) rotation[i].push_back(2 * emap[d >> 1] + (d & 1));
        }
        pieces.push_back({EmbeddedGraph::build(rotation, signs), std::move(orig)});
    }
    return pieces;
}

}  // namespace surfcol
