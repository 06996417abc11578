#pragma once

// Shared embedded-graph fixtures. Each one is derived at runtime by a small
// deterministic search or an explicit scheme, then pinned by assertions in
// the tests that use it.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "surfcol/embedding.hpp"
#include "surfcol/graph.hpp"

namespace fixtures {

// K4 in the plane: first genus-0 embedding found by the exhaustive search.
inline const surfcol::EmbeddedGraph& planar_k4() {
    static const surfcol::EmbeddedGraph g = [] {
        auto r = oracle::exhaustive_min_genus(surfcol::complete_graph(4), 1000000, 0);
        if (!r || r->genus != 0) throw std::logic_error("fixture: planar K4 search failed");
        return oracle::materialize(r->sys);
    }();
    return g;
}

// K7 triangulating the torus: rotation at vertex i is i + sigma for a fixed
// difference sequence sigma, found by scanning the 720 candidates.
inline const surfcol::EmbeddedGraph& toroidal_k7() {
    static const surfcol::EmbeddedGraph g = [] {
        std::vector<int> sigma{1, 2, 3, 4, 5, 6};
        do {
            oracle::RotSys rs;
            rs.rot.assign(7, {});
            for (int i = 0; i < 7; ++i)
                for (int s : sigma) rs.rot[i].push_back((i + s) % 7);
            if (oracle::count_faces(rs) == 14) return oracle::materialize(rs);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        throw std::logic_error("fixture: no cyclic K7 scheme with 14 faces");
    }();
    return g;
}

// Quadrangulated grid on the torus: identical north/east/south/west rotation
// at every vertex, all signs positive. Vertex (r, c) is cols*r + c.
inline surfcol::EmbeddedGraph torus_grid(int rows, int cols) {
    std::vector<std::vector<int>> rot(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            rot[cols * r + c] = {cols * ((r + rows - 1) % rows) + c,
                                 cols * r + (c + 1) % cols,
                                 cols * ((r + 1) % rows) + c,
                                 cols * r + (c + cols - 1) % cols};
        }
    return surfcol::embedding_from_neighbor_rotations(rot, {});
}

inline const surfcol::EmbeddedGraph& torus_grid_c3c3() {
    static const surfcol::EmbeddedGraph g = torus_grid(3, 3);
    return g;
}

// K5 in the projective plane: global minimum over all signed rotation
// systems (about half a million candidates).
inline const surfcol::EmbeddedGraph& projective_k5() {
    static const surfcol::EmbeddedGraph g = [] {
        auto r = oracle::exhaustive_min_genus(surfcol::complete_graph(5), 40000000);
        if (!r || r->genus != 1) throw std::logic_error("fixture: K5 minimum genus != 1");
        return oracle::materialize(r->sys);
    }();
    return g;
}

// Glues two all-positive embeddings across one face of each: traces the
// faces from the given darts (successor rule), then adds one connector edge
// per walk corner so the two faces become a ring of quads. Both walks must
// have the same length and distinct vertices.
inline surfcol::EmbeddedGraph join_faces(const surfcol::EmbeddedGraph& a, int da0,
                                         const surfcol::EmbeddedGraph& b, int db0) {
    using surfcol::dart_opposite;
    for (int e = 0; e < a.edge_count(); ++e)
        if (a.sign(e) != 1) throw std::logic_error("join_faces: negative sign");
    for (int e = 0; e < b.edge_count(); ++e)
        if (b.sign(e) != 1) throw std::logic_error("join_faces: negative sign");
    auto trace = [](const surfcol::EmbeddedGraph& g, int d0) {
        std::vector<int> walk;
        int d = d0;
        do {
            walk.push_back(d);
            int od = dart_opposite(d);
            int v = g.dart_head(d);
            const auto& rot = g.rotation(v);
            size_t i = std::find(rot.begin(), rot.end(), od) - rot.begin();
            d = rot[(i + 1) % rot.size()];
        } while (d != d0);
        return walk;
    };
    auto wa = trace(a, da0), wb = trace(b, db0);
    if (wa.size() != wb.size()) throw std::logic_error("join_faces: face degrees differ");
    int k = static_cast<int>(wa.size());
    int na = a.vertex_count(), ma = a.edge_count(), mb = b.edge_count();

    std::vector<std::vector<int>> rot(na + b.vertex_count());
    for (int v = 0; v < na; ++v) rot[v] = a.rotation(v);
    for (int v = 0; v < b.vertex_count(); ++v) {
        rot[na + v] = b.rotation(v);
        for (int& d : rot[na + v]) d += 2 * ma;
    }
    // Corner t sits at the head of walk dart t-1, right after the opposite
    // of that dart in the rotation. The B walk is taken in reverse so the
    // boundaries glue with opposite orientations and the ring closes into k
    // quads; same-direction matching would twist the annulus instead.
    for (int t = 0; t < k; ++t) {
        int prev = (t + k - 1) % k;
        int prev_b = (2 * k - t - 1) % k;
        int ea = ma + mb + t;
        int va = a.dart_head(wa[prev]);
        int vb = na + b.dart_head(wb[prev_b]);
        auto& ra = rot[va];
        ra.insert(ra.begin() + (std::find(ra.begin(), ra.end(), dart_opposite(wa[prev])) -
                                ra.begin()) + 1,
                  2 * ea);
        auto& rb = rot[vb];
        rb.insert(rb.begin() +
                      (std::find(rb.begin(), rb.end(), dart_opposite(wb[prev_b]) + 2 * ma) -
                       rb.begin()) + 1,
                  2 * ea + 1);
    }
    return surfcol::EmbeddedGraph::build(rot, std::vector<int>(ma + mb + k, 1));
}

// Two torus grids joined across a quad face each: an orientable Euler genus
// 4 surface whose "neck" quad is a two-sided separating cycle.
inline const surfcol::EmbeddedGraph& double_torus_grids() {
    static const surfcol::EmbeddedGraph g =
        join_faces(torus_grid_c3c3(), 0, torus_grid_c3c3(), 0);
    return g;
}

// Splits the face traced from d0 (all signs must be +1) by a chord between
// the corners at walk positions 0 and 2. The face must be a quad with four
// distinct vertices; it becomes two triangles.
inline surfcol::EmbeddedGraph chord_through_face(const surfcol::EmbeddedGraph& g, int d0) {
    using surfcol::dart_opposite;
    std::vector<int> walk;
    int d = d0;
    do {
        walk.push_back(d);
        int od = dart_opposite(d);
        const auto& rot = g.rotation(g.dart_head(d));
        size_t i = std::find(rot.begin(), rot.end(), od) - rot.begin();
        d = rot[(i + 1) % rot.size()];
    } while (d != d0);
    if (walk.size() != 4) throw std::logic_error("chord_through_face: need a quad");
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) rot[v] = g.rotation(v);
    int e = g.edge_count();
    for (int t : {0, 2}) {
        int prev = (t + 3) % 4;
        auto& rv = rot[g.dart_head(walk[prev])];
        rv.insert(rv.begin() +
                      (std::find(rv.begin(), rv.end(), dart_opposite(walk[prev])) - rv.begin()) +
                      1,
                  2 * e + (t == 0 ? 0 : 1));
    }
    std::vector<int> signs(e + 1, 1);
    for (int i = 0; i < e; ++i) signs[i] = g.sign(i);
    return surfcol::EmbeddedGraph::build(rot, signs);
}

// Two 4x4 torus grids, each with one face split into triangles, glued along
// those triangles. Every within-grid non-contractible cycle has length >= 4,
// so the length-3 neck is the unique shortest non-contractible cycle and it
// is two-sided separating (each side is a capped torus).
inline const surfcol::EmbeddedGraph& triangle_neck_genus4() {
    static const surfcol::EmbeddedGraph g = [] {
        auto piece = chord_through_face(torus_grid(4, 4), 0);
        int d0 = 2 * (piece.edge_count() - 1);  // a dart of the new chord
        return join_faces(piece, d0, piece, d0);
    }();
    return g;
}

// Wheel on four rim vertices (0..3) plus hub 4, drawn in the plane.
inline const surfcol::EmbeddedGraph& planar_wheel4() {
    static const surfcol::EmbeddedGraph g = [] {
        std::vector<std::vector<int>> rot(5);
        for (int i = 0; i < 4; ++i) rot[i] = {(i + 1) % 4, 4, (i + 3) % 4};
        rot[4] = {0, 1, 2, 3};
        return surfcol::embedding_from_neighbor_rotations(rot, {});
    }();
    return g;
}

}  // namespace fixtures
