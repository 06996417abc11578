#pragma once

#include <array>
#include <utility>
#include <vector>

#include "surfcol/graph.hpp"

namespace surfcol {

// A cellular embedding given as a signed rotation system. Edge e owns the
// two darts 2e and 2e+1; each dart belongs to the rotation (cyclic dart
// order) of its tail vertex, and each edge carries a sign in {+1,-1}.
//
// Face tracing follows the standard rule for embedding schemes. A walk
// state is (dart, orientation). Traversing dart d of edge e flips the
// orientation iff sign(e) = -1; the walk then continues with the rotation
// successor (orientation +) or predecessor (orientation -) of the opposite
// dart at the head vertex. The 4m states split into closed orbits which
// pair up as mutual reverses; each pair is one face, and the face degree
// equals the orbit length (edges seen twice by a walk count twice).

constexpr int dart_edge(int d) { return d >> 1; }
constexpr int dart_opposite(int d) { return d ^ 1; }

struct FaceWalk {
    std::vector<int> darts;  // in walk order, starting at the minimal state
    int degree() const { return static_cast<int>(darts.size()); }
};

class EmbeddedGraph {
public:
    // rotation[v] lists the darts with tail v in cyclic order; signs has one
    // entry per edge. Rejects duplicate or missing darts, loops, parallels.
    static EmbeddedGraph build(const std::vector<std::vector<int>>& rotation,
                               const std::vector<int>& signs);

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return static_cast<int>(ends_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const Graph& graph() const { return graph_; }
    std::pair<int, int> edge_ends(int e) const { return {ends_[e][0], ends_[e][1]}; }
    int sign(int e) const { return signs_[e]; }
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    int dart_tail(int d) const { return ends_[d >> 1][d & 1]; }
    int dart_head(int d) const { return dart_tail(dart_opposite(d)); }
    // Edge id between adjacent u,v.
    int edge_between(int u, int v) const;

    const std::vector<FaceWalk>& faces() const { return faces_; }
    std::vector<int> face_vertices(const FaceWalk& f) const;

    bool connected() const { return connected_; }
    // Both require a connected embedding.
    int euler_genus() const;
    bool orientable() const;

private:
    EmbeddedGraph() = default;
    void trace_faces_internal();
    void compute_orientable();

    std::vector<std::vector<int>> rotation_;
    std::vector<std::array<int, 2>> ends_;
    std::vector<int> signs_;
    std::vector<int> pos_;  // index of each dart inside its tail's rotation
    std::vector<FaceWalk> faces_;
    Graph graph_;
    bool connected_ = false;
    bool orientable_ = false;
    int euler_genus_ = -1;
};

EmbeddedGraph build_embedding(const std::vector<std::vector<int>>& rotation,
                              const std::vector<int>& signs);
const std::vector<FaceWalk>& trace_faces(const EmbeddedGraph& g);
int euler_genus(const EmbeddedGraph& g);
bool is_orientable(const EmbeddedGraph& g);

// Convenience builder: per-vertex cyclic order of neighbor ids. Edge ids are
// assigned in sorted endpoint order; signs default to +1 and may be
// overridden per normalized (u,v) pair.
EmbeddedGraph embedding_from_neighbor_rotations(
    const std::vector<std::vector<int>>& nbr_order,
    const std::vector<std::pair<std::pair<int, int>, int>>& signs = {});

// A simple cycle in an embedded graph, stored with traversal darts:
// darts[i] runs vertices[i] -> vertices[i+1 mod k].
struct CycleWalk {
    std::vector<int> vertices;
    std::vector<int> darts;
    int length() const { return static_cast<int>(vertices.size()); }
    static CycleWalk from_vertices(const EmbeddedGraph& g, const std::vector<int>& vs);
};

struct ContractResult {
    EmbeddedGraph graph;
    std::vector<int> vertex_map;  // old id -> new id
};

// Contracts a connected vertex set to one vertex and simplifies (drops
// loops, keeps the lowest-id edge of each parallel class). Never increases
// the Euler genus.
ContractResult contract_subgraph(const EmbeddedGraph& g, const std::vector<int>& h);

struct CutResult {
    EmbeddedGraph graph;                         // possibly disconnected
    std::vector<std::vector<int>> marked_faces;  // vertex walks of the new faces
    std::vector<int> parent;                     // new vertex id -> original id
};

// Cuts the surface along a cycle. Two-sided cycles yield two boundary faces
// (two components iff the cycle separates); one-sided cycles yield a single
// boundary face of twice the cycle length.
CutResult cut_along_cycle(const EmbeddedGraph& g, const CycleWalk& c);

struct IdentifyResult {
    EmbeddedGraph graph;
    std::vector<int> vertex_map;
    int genus_before = 0;
    int genus_after = 0;  // sum over components
};

// Identifies two distinct non-adjacent vertices, splicing rotations at the
// corner pair (trying both chiralities) that minimizes the resulting genus;
// ties break to the lowest dart ids. Parallel edges are merged.
IdentifyResult identify_vertices(const EmbeddedGraph& g, int u, int w);

struct EmbeddedPiece {
    EmbeddedGraph graph;
    std::vector<int> orig_vertex;  // new id -> id in the original graph
};

std::vector<EmbeddedPiece> split_components(const EmbeddedGraph& g);

}  // namespace surfcol
