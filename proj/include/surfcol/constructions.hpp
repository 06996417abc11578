#pragma once

#include <cstdint>
#include <string>

#include "surfcol/graph.hpp"

namespace surfcol {

// Provenance and size contract carried by every generator output.  The
// generators self-check: `vertices`/`edges` always equal the built graph's
// actual counts (closed-form arithmetic is asserted at construction time),
// `girth_claim` is a lower bound the family guarantees (0 = no claim), and
// `target` names the defect vector the family is built to defeat ("" = no
// claim).  `genus_bound` is the cheap upper bound m - n + 2.
struct GenMeta {
    std::string family;
    long long parameter = 0;
    long long vertices = 0;
    long long edges = 0;
    int girth_claim = 0;
    std::string target;
    long long genus_bound = 0;
    int root = -1;            // distinguished vertex (gadget apex), -1 if none
    bool sampled = false;     // true when only part of the family was built
    long long sample_size = 0;
    std::uint64_t seed = 0;
};

struct GeneratedGraph {
    Graph graph;
    GenMeta meta;
};

// Basic copy of `basic` plus, for every basic vertex, k new disjoint copies
// fully joined to that vertex.  n + k n^2 vertices, m + k n (n + m) edges.
GeneratedGraph sprout(const Graph& basic, int k);

// Basic K4, k+1 satellite K4s fully joined to the basic one (these joins are
// the support edges), and 2k+1 fresh K4s joined to both ends of every support
// edge.  128k^2+196k+72 vertices, 448k^2+694k+252 edges; defeats (2,k,k).
GeneratedGraph gk_2kk(int k);

// Adds 2k+1 paths on 3 vertices, every new vertex adjacent to both x and y.
// Requires xy to be an edge.  In any (1,k,k)-coloring of the result the
// endpoints never wear the two high colors simultaneously.
GeneratedGraph thicken_edge(const Graph& g, int x, int y, int k);

// Wheel-like gadget: cycle on 3k+1 vertices, apex adjacent to all of them,
// every spoke thickened with parameter k.  In any (1,k,k)-coloring the apex
// (meta.root) wears color 1.  Planar.  Requires k >= 1.
GeneratedGraph hv_gadget(int k);

// Triangle whose three corners are the apexes of three hv_gadget(k) copies;
// not (1,k,k)-colorable at all.  Planar.  Requires k >= 1.
GeneratedGraph not_1kk(int k);

// Girth-6 family: seven disjoint 7-cycles, and for each choice of one vertex
// per cycle ("a 7-set"), a fresh C7 matched onto the set, repeated 7k+1
// times.  Full size is closed-form only:
long long descartes_vertices(int k);  // 7^8 (7k+1) + 49
long long descartes_edges(int k);     // 2 * 7^8 (7k+1) + 49

struct DescartesOptions {
    bool all = false;          // materialize every 7-set (huge; guarded)
    int sample = 0;            // when !all: number of 7-sets to materialize
    std::uint64_t seed = 1;    // sampling PRNG seed, recorded in meta
    bool allow_huge = false;   // override the 4M-edge materialization guard
};

// Materializes the family.  `all` mode refuses to build more than 4M edges
// unless allow_huge is set.  Sample mode draws one random 7-set and mutates
// a single coordinate for each further set, so any two sampled sets share
// six coordinates; that forces a 6-cycle between their added C7s, keeping
// the sampled girth at exactly 6 (independent draws would miss it).  The
// pairwise-distance >= 3 precondition of each C7 addition is checked by BFS
// in sample mode and structurally in all mode.
GeneratedGraph descartes_girth6(int k, const DescartesOptions& opt);

// Girth-7 family: two 2-stars with 3K+2 leaves each, all leaf pairs inside a
// copy joined by paths on 3 edges, centers joined.  27K^2+39K+15 edges;
// defeats (0,K).
GeneratedGraph two_star_girth7(int K);

}  // namespace surfcol
