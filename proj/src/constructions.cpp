#include "surfcol/constructions.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "surfcol/error.hpp"

namespace surfcol {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

std::string kk(int k) { return std::to_string(k) + "," + std::to_string(k); }

GenMeta finish_meta(GenMeta meta, const Graph& g) {
    meta.vertices = g.vertex_count();
    meta.edges = g.edge_count();
    meta.genus_bound = meta.edges - meta.vertices + 2;
    return meta;
}

void check_counts(const GeneratedGraph& out, long long nv, long long ne) {
    require(out.meta.vertices == nv && out.meta.edges == ne, ErrorKind::Invariant,
            out.meta.family + " size self-check failed");
}

// Appends 2k+1 paths on 3 vertices, all new vertices joined to x and y.
// Shared by thicken_edge and hv_gadget.
void thicken_into(EdgeList& edges, int& next_id, int x, int y, int k) {
    for (int p = 0; p < 2 * k + 1; ++p) {
        int a = next_id++, b = next_id++, c = next_id++;
        edges.push_back({a, b});
        edges.push_back({b, c});
        for (int w : {a, b, c}) {
            edges.push_back({x, w});
            edges.push_back({y, w});
        }
    }
}

}  // namespace

GeneratedGraph sprout(const Graph& basic, int k) {
    require(k >= 0, ErrorKind::Precondition, "sprout needs k >= 0");
    long long n = basic.vertex_count(), m = basic.edge_count();
    long long nv = n + k * n * n;
    require(nv < (1LL << 31) - 1, ErrorKind::Precondition, "sprout output too large");

    EdgeList edges(basic.edges());
    int next = static_cast<int>(n);
    for (int u = 0; u < n; ++u) {
        for (int j = 0; j < k; ++j) {
            int base = next;
            next += static_cast<int>(n);
            for (auto [a, b] : basic.edges()) edges.push_back({base + a, base + b});
            for (int w = base; w < next; ++w) edges.push_back({u, w});
        }
    }
    GeneratedGraph out{Graph(static_cast<int>(nv), edges, /*validate=*/false), {}};
    out.meta.family = "sprout";
    out.meta.parameter = k;
    out.meta = finish_meta(out.meta, out.graph);
    check_counts(out, nv, m + k * n * (n + m));
    return out;
}

GeneratedGraph gk_2kk(int k) {
    require(k >= 0, ErrorKind::Precondition, "gk_2kk needs k >= 0");
    EdgeList edges;
    auto add_k4 = [&edges](int base) {
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) edges.push_back({base + a, base + b});
    };
    add_k4(0);
    int next = 4;
    EdgeList support;
    for (int c = 0; c < k + 1; ++c) {
        int base = next;
        next += 4;
        add_k4(base);
        for (int u = 0; u < 4; ++u)
            for (int w = base; w < base + 4; ++w) support.push_back({u, w});
    }
    edges.insert(edges.end(), support.begin(), support.end());
    for (auto [u, w] : support) {
        for (int c = 0; c < 2 * k + 1; ++c) {
            int base = next;
            next += 4;
            add_k4(base);
            for (int z = base; z < base + 4; ++z) {
                edges.push_back({u, z});
                edges.push_back({w, z});
            }
        }
    }
    GeneratedGraph out{Graph(next, edges, /*validate=*/false), {}};
    out.meta.family = "gk";
    out.meta.parameter = k;
    out.meta.girth_claim = 3;
    out.meta.target = "(2," + kk(k) + ")";
    out.meta = finish_meta(out.meta, out.graph);
    long long K = k;
    check_counts(out, 128 * K * K + 196 * K + 72, 448 * K * K + 694 * K + 252);
    return out;
}

GeneratedGraph thicken_edge(const Graph& g, int x, int y, int k) {
    require(k >= 0, ErrorKind::Precondition, "thicken_edge needs k >= 0");
    require(g.has_edge(x, y), ErrorKind::Precondition, "thicken_edge: xy is not an edge");
    EdgeList edges(g.edges());
    int next = g.vertex_count();
    thicken_into(edges, next, x, y, k);
    GeneratedGraph out{Graph(next, edges, /*validate=*/false), {}};
    out.meta.family = "thicken";
    out.meta.parameter = k;
    out.meta.girth_claim = 3;
    out.meta.target = "(1," + kk(k) + ") never puts both high colors on the endpoints";
    out.meta = finish_meta(out.meta, out.graph);
    check_counts(out, g.vertex_count() + 3LL * (2 * k + 1), g.edge_count() + 8LL * (2 * k + 1));
    return out;
}

GeneratedGraph hv_gadget(int k) {
    require(k >= 1, ErrorKind::Precondition, "hv_gadget needs k >= 1");
    int c = 3 * k + 1;  // cycle length
    int apex = c;
    EdgeList edges;
    for (int i = 0; i < c; ++i) {
        edges.push_back({i, (i + 1) % c});
        edges.push_back({apex, i});
    }
    int next = c + 1;
    for (int i = 0; i < c; ++i) thicken_into(edges, next, apex, i, k);
    GeneratedGraph out{Graph(next, edges, /*validate=*/false), {}};
    out.meta.family = "hv";
    out.meta.parameter = k;
    out.meta.girth_claim = 3;
    out.meta.target = "(1," + kk(k) + ") forces color 1 at the apex";
    out.meta.root = apex;
    out.meta = finish_meta(out.meta, out.graph);
    long long cl = c;
    check_counts(out, cl + 1 + 3 * cl * (2 * k + 1), cl * (16LL * k + 10));
    return out;
}

GeneratedGraph not_1kk(int k) {
    GeneratedGraph h = hv_gadget(k);
    int nh = h.graph.vertex_count();
    EdgeList edges;
    for (int copy = 0; copy < 3; ++copy)
        for (auto [a, b] : h.graph.edges()) edges.push_back({copy * nh + a, copy * nh + b});
    int apex = h.meta.root;
    edges.push_back({apex, nh + apex});
    edges.push_back({nh + apex, 2 * nh + apex});
    edges.push_back({apex, 2 * nh + apex});
    GeneratedGraph out{Graph(3 * nh, edges, /*validate=*/false), {}};
    out.meta.family = "not1kk";
    out.meta.parameter = k;
    out.meta.girth_claim = 3;
    out.meta.target = "(1," + kk(k) + ")";
    out.meta = finish_meta(out.meta, out.graph);
    check_counts(out, 3LL * nh, 3LL * h.graph.edge_count() + 3);
    return out;
}

long long descartes_vertices(int k) {
    long long p8 = 5764801;  // 7^8
    return p8 * (7 * k + 1) + 49;
}

long long descartes_edges(int k) {
    long long p8 = 5764801;
    return 2 * p8 * (7 * k + 1) + 49;
}

namespace {

using Set7 = std::array<int, 7>;  // vertex index 0..6 inside each base cycle

int set_vertex(const Set7& s, int i) { return 7 * i + s[i]; }

// Distance >= 3 between a and b: not adjacent and no common neighbor.
// Only used at sample scale where adjacency lists stay short.
bool dist_ge3(const Graph& g, int a, int b) {
    if (a == b || g.has_edge(a, b)) return false;
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    std::vector<int> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(common));
    return common.empty();
}

}  // namespace

GeneratedGraph descartes_girth6(int k, const DescartesOptions& opt) {
    require(k >= 0, ErrorKind::Precondition, "descartes_girth6 needs k >= 0");
    long long sets = opt.all ? 823543LL /* 7^7 */ : opt.sample;
    require(sets > 0, ErrorKind::Precondition,
            "descartes_girth6 needs all mode or a positive sample size");
    require(!opt.all || opt.allow_huge, ErrorKind::Precondition,
            "descartes_girth6: full materialization is " +
                std::to_string(descartes_edges(k)) +
                " edges; pass allow_huge to confirm");

    long long reps = 7LL * k + 1;
    long long nv = 49 + 7 * sets * reps;
    require(nv < (1LL << 31) - 1, ErrorKind::Precondition, "descartes output too large");

    // Pick the 7-sets. A random base plus single-coordinate mutations keeps
    // every sampled pair overlapping in six coordinates, which is what makes
    // small samples reproduce the full family's 6-cycles.
    std::vector<Set7> chosen;
    if (opt.all) {
        Set7 s{};
        for (long long t = 0; t < sets; ++t) {
            chosen.push_back(s);
            for (int i = 6; i >= 0; --i) {
                if (++s[i] < 7) break;
                s[i] = 0;
            }
        }
    } else {
        require(opt.sample <= 823543, ErrorKind::Precondition,
                "descartes_girth6: at most 7^7 distinct 7-sets exist");
        std::mt19937_64 rng(opt.seed);
        auto rnd7 = [&rng]() { return static_cast<int>(rng() % 7); };
        Set7 base;
        for (int i = 0; i < 7; ++i) base[i] = rnd7();
        chosen.push_back(base);
        while (static_cast<int>(chosen.size()) < opt.sample) {
            Set7 s = base;
            int coord = rnd7();
            int v = rnd7();
            while (v == base[coord]) v = rnd7();
            s[coord] = v;
            if (std::find(chosen.begin(), chosen.end(), s) == chosen.end())
                chosen.push_back(s);
        }
    }

    if (opt.all) {
        // Incremental adjacency is unaffordable here; build the edge list
        // raw. Distance >= 3 holds structurally: base cycles never gain
        // edges between each other, and every added vertex touches exactly
        // one base vertex, so two base vertices in distinct cycles can share
        // no neighbor. The per-addition check degenerates to that shape.
        EdgeList edges;
        edges.reserve(static_cast<size_t>(descartes_edges(k)));
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) edges.push_back({7 * i + j, 7 * i + (j + 1) % 7});
        int next = 49;
        for (const Set7& s : chosen) {
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j)
                    require(set_vertex(s, i) / 7 != set_vertex(s, j) / 7,
                            ErrorKind::Invariant, "descartes 7-set collides inside a cycle");
            for (long long r = 0; r < reps; ++r) {
                int base = next;
                next += 7;
                for (int t = 0; t < 7; ++t) {
                    edges.push_back({base + t, base + (t + 1) % 7});
                    edges.push_back({base + t, set_vertex(s, t)});
                }
            }
        }
        GeneratedGraph out{Graph(next, edges, /*validate=*/false), {}};
        out.meta.family = "descartes6";
        out.meta.parameter = k;
        out.meta.girth_claim = 6;
        out.meta.target = "(0,0," + std::to_string(k) + ")";
        out.meta = finish_meta(out.meta, out.graph);
        check_counts(out, descartes_vertices(k), descartes_edges(k));
        return out;
    }

    Graph g(static_cast<int>(nv));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) g.add_edge(7 * i + j, 7 * i + (j + 1) % 7);
    int next = 49;
    for (const Set7& s : chosen) {
        for (long long r = 0; r < reps; ++r) {
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j)
                    require(dist_ge3(g, set_vertex(s, i), set_vertex(s, j)),
                            ErrorKind::Invariant, "descartes 7-set not spread out");
            int base = next;
            next += 7;
            for (int t = 0; t < 7; ++t) {
                g.add_edge(base + t, base + (t + 1) % 7);
                g.add_edge(base + t, set_vertex(s, t));
            }
        }
    }
    GeneratedGraph out{std::move(g), {}};
    out.meta.family = "descartes6";
    out.meta.parameter = k;
    out.meta.girth_claim = 6;
    out.meta.target = "(0,0," + std::to_string(k) + ")";
    out.meta.sampled = true;
    out.meta.sample_size = sets;
    out.meta.seed = opt.seed;
    out.meta = finish_meta(out.meta, out.graph);
    check_counts(out, nv, 49 + 14 * sets * reps);
    return out;
}

GeneratedGraph two_star_girth7(int K) {
    require(K >= 0, ErrorKind::Precondition, "two_star_girth7 needs K >= 0");
    int leaves = 3 * K + 2;
    int nv1 = 1 + 2 * leaves + (3 * K + 2) * (3 * K + 1);  // one copy
    EdgeList edges;
    int next = 0;
    auto build_copy = [&]() {
        int center = next++;
        std::vector<int> leaf(leaves);
        for (int i = 0; i < leaves; ++i) {
            int mid = next++;
            leaf[i] = next++;
            edges.push_back({center, mid});
            edges.push_back({mid, leaf[i]});
        }
        for (int i = 0; i < leaves; ++i) {
            for (int j = i + 1; j < leaves; ++j) {
                int p = next++, q = next++;
                edges.push_back({leaf[i], p});
                edges.push_back({p, q});
                edges.push_back({q, leaf[j]});
            }
        }
        return center;
    };
    int c1 = build_copy();
    int c2 = build_copy();
    edges.push_back({c1, c2});
    GeneratedGraph out{Graph(next, edges, /*validate=*/false), {}};
    out.meta.family = "twostar7";
    out.meta.parameter = K;
    out.meta.girth_claim = 7;
    out.meta.target = "(0," + std::to_string(K) + ")";
    out.meta = finish_meta(out.meta, out.graph);
    long long KK = K;
    check_counts(out, 2LL * nv1, 27 * KK * KK + 39 * KK + 15);
    return out;
}

}  // namespace surfcol
