// Acceptance gate: ten end-to-end checks, one line of output each.
// Exit code 0 iff every check passes inside its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "surfcol/coloring.hpp"
#include "surfcol/constructions.hpp"
#include "surfcol/discharging.hpp"
#include "surfcol/embedding.hpp"
#include "surfcol/graph.hpp"
#include "surfcol/planarize.hpp"
#include "surfcol/topology.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace surfcol;

namespace {

struct Check {
    const char* name;
    double budget_s;
    bool (*fn)(std::string&);
};

bool expect(bool cond, std::string& why, const std::string& msg) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

int neighbors_in(const Graph& g, int v, const std::set<int>& s) {
    int c = 0;
    for (int w : g.neighbors(v)) c += s.count(w) ? 1 : 0;
    return c;
}

// --- 1: Euler identity on fixtures and random signed rotation systems -------

bool c_euler(std::string& why) {
    struct Item {
        const EmbeddedGraph* g;
        int eg;
    };
    const Item fixtures[] = {{&fixtures::planar_k4(), 0},
                             {&fixtures::toroidal_k7(), 2},
                             {&fixtures::torus_grid_c3c3(), 2},
                             {&fixtures::projective_k5(), 1}};
    for (const auto& [g, eg] : fixtures) {
        int lhs = g->vertex_count() - g->edge_count() + g->face_count();
        if (!expect(g->euler_genus() == eg, why, "fixture genus off")) return false;
        if (!expect(lhs == 2 - eg, why, "fixture identity off")) return false;
    }
    std::mt19937_64 rng(101);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + oracle::rnd_below(rng, 9);
        int m = n - 1 + oracle::rnd_below(rng, n);
        Graph g = oracle::random_connected_graph(rng, n, m);
        oracle::RotSys rs;
        rs.rot.resize(n);
        for (int v = 0; v < n; ++v) {
            rs.rot[v] = g.neighbors(v);
            for (int i = static_cast<int>(rs.rot[v].size()) - 1; i > 0; --i)
                std::swap(rs.rot[v][i], rs.rot[v][oracle::rnd_below(rng, i + 1)]);
        }
        if (t % 2 == 0)
            for (auto [u, v] : g.edges())
                if (rng() & 1) rs.sign[{u, v}] = -1;
        EmbeddedGraph eg = oracle::materialize(rs);
        int oracle_faces = oracle::count_faces(rs);
        if (!expect(eg.face_count() == oracle_faces, why, "face tracer disagrees with oracle"))
            return false;
        int genus = eg.euler_genus();
        if (!expect(genus >= 0, why, "negative genus")) return false;
        if (!expect(eg.vertex_count() - eg.edge_count() + eg.face_count() == 2 - genus, why,
                    "identity violated"))
            return false;
    }
    return true;
}

// --- 2: shortest non-contractible cycles: induced, 3-neighbor bound, length -

bool c_ncc(std::string& why) {
    std::mt19937_64 rng(202);
    int done = 0, attempts = 0;
    while (done < 200 && attempts < 4000) {
        ++attempts;
        int n = 4 + oracle::rnd_below(rng, 5);
        int m = n + oracle::rnd_below(rng, n);
        Graph g = oracle::random_connected_graph(rng, n, m);
        EmbeddedGraph eg = oracle::random_embedding(rng, g, attempts % 2 == 0);
        if (eg.euler_genus() == 0) continue;
        ++done;
        auto c = shortest_noncontractible_cycle(eg);
        if (!expect(c.has_value(), why, "no cycle found at positive genus")) return false;
        std::set<int> on_c(c->vertices.begin(), c->vertices.end());
        // Induced: any edge between cycle vertices must be a cycle edge.
        int len = c->length();
        std::set<std::pair<int, int>> cyc_edges;
        for (int i = 0; i < len; ++i) {
            int a = c->vertices[i], b = c->vertices[(i + 1) % len];
            cyc_edges.insert({std::min(a, b), std::max(a, b)});
        }
        for (auto [u, v] : g.edges())
            if (on_c.count(u) && on_c.count(v))
                if (!expect(cyc_edges.count({u, v}) > 0, why, "cycle has a chord")) return false;
        for (int v = 0; v < n; ++v) {
            int nb = neighbors_in(g, v, on_c);
            if (!expect(nb <= 3, why,
                        "vertex " + std::to_string(v) + " has " + std::to_string(nb) +
                            " neighbors on the cycle"))
                return false;
        }
        // Brute-force length match.
        int best = -1;
        for (const auto& vs : oracle::all_cycles(g, n)) {
            if (best >= 0 && static_cast<int>(vs.size()) >= best) continue;
            CycleWalk w = CycleWalk::from_vertices(eg, vs);
            if (!is_contractible(eg, w)) best = static_cast<int>(vs.size());
        }
        if (!expect(best == len, why,
                    "length " + std::to_string(len) + " but brute force finds " +
                        std::to_string(best)))
            return false;
    }
    return expect(done == 200, why, "could not collect 200 positive-genus instances");
}

// --- 3: planarizing subgraph postconditions ---------------------------------

bool check_planarize(const EmbeddedGraph& eg, int root, std::string& why) {
    int g = eg.euler_genus();
    PlanarizeResult r = planarizing_subgraph(eg, root);
    std::set<int> h(r.h_vertices.begin(), r.h_vertices.end());
    if (!expect(h.count(root) > 0, why, "root not in H")) return false;
    // Connectivity of the induced subgraph.
    std::vector<int> stack{*h.begin()};
    std::set<int> seen{*h.begin()};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : eg.graph().neighbors(v))
            if (h.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    if (!expect(seen.size() == h.size(), why, "H not connected")) return false;
    if (!expect(is_planar(r.quotient), why, "quotient not planar")) return false;
    int bound = 9 * g - 4;
    for (int v = 0; v < eg.vertex_count(); ++v) {
        int nb = neighbors_in(eg.graph(), v, h);
        if (!expect(nb <= bound, why,
                    "vertex with " + std::to_string(nb) + " neighbors in H at genus " +
                        std::to_string(g)))
            return false;
    }
    return true;
}

bool c_planarize(std::string& why) {
    const EmbeddedGraph* fixtures[] = {&fixtures::toroidal_k7(), &fixtures::torus_grid_c3c3(),
                                       &fixtures::projective_k5(),
                                       &fixtures::double_torus_grids(),
                                       &fixtures::triangle_neck_genus4()};
    for (const EmbeddedGraph* eg : fixtures)
        for (int root : {0, eg->vertex_count() / 2})
            if (!check_planarize(*eg, root, why)) return false;
    std::mt19937_64 rng(303);
    int done = 0, attempts = 0;
    while (done < 50 && attempts < 2000) {
        ++attempts;
        int n = 4 + oracle::rnd_below(rng, 5);
        int m = n + oracle::rnd_below(rng, n - 2);
        Graph g = oracle::random_connected_graph(rng, n, m);
        EmbeddedGraph eg = oracle::random_embedding(rng, g, attempts % 2 == 0);
        int genus = eg.euler_genus();
        if (genus < 1 || genus > 2) continue;
        ++done;
        if (!check_planarize(eg, oracle::rnd_below(rng, n), why)) return false;
    }
    return expect(done == 50, why, "could not collect 50 genus-1/2 instances");
}

// --- 4: planarize-and-lift pipelines end to end ------------------------------

bool c_pipelines(std::string& why) {
    const EmbeddedGraph* fixtures[] = {&fixtures::toroidal_k7(), &fixtures::projective_k5(),
                                       &fixtures::torus_grid_c3c3()};
    for (const EmbeddedGraph* eg : fixtures) {
        int g = eg->euler_genus();
        int K = 9 * g - 4;
        PipelineResult a = color_000_9g4(*eg);
        if (!expect(a.defects.d == std::vector<int>{0, 0, 0, K}, why, "wrong 000 vector"))
            return false;
        if (!expect(verify_coloring(eg->graph(), a.defects, a.coloring).empty(), why,
                    "000 coloring rejected"))
            return false;
        PipelineResult b = color_22_9g4(*eg);
        if (!expect(b.defects.d == std::vector<int>{2, 2, K}, why, "wrong 22 vector"))
            return false;
        if (!expect(verify_coloring(eg->graph(), b.defects, b.coloring).empty(), why,
                    "22 coloring rejected"))
            return false;
    }
    return true;
}

// --- 5: threshold identities --------------------------------------------------

bool c_thresholds(std::string& why) {
    for (int g = 1; g <= 100; ++g) {
        Threshold a = threshold(ThresholdFamily::TwoKK, g);
        if (!expect(a.residual && std::fabs(*a.residual - 1.0) < 1e-9, why,
                    "2kk residual off at genus " + std::to_string(g)))
            return false;
        Threshold b = threshold(ThresholdFamily::ZeroZeroKK, g);
        if (!expect(b.residual && std::fabs(*b.residual - 1.0) < 1e-9, why,
                    "00kk residual off at genus " + std::to_string(g)))
            return false;
        Threshold c = threshold(ThresholdFamily::Girth7, g);
        if (!expect(c.integral && c.residual, why, "girth7 threshold not integral")) return false;
        double r = *c.residual;
        if (!expect(r >= 1.0 && r == std::floor(r), why,
                    "girth7 residual not an integer >= 1 at genus " + std::to_string(g)))
            return false;
    }
    Threshold t = threshold(ThresholdFamily::TriangleFree, 1);
    return expect(t.integral && t.ivalue == 14, why, "trianglefree value at genus 1 not 14");
}

// --- 6: construction counts ----------------------------------------------------

bool c_counts(std::string& why) {
    for (long long k = 0; k <= 5; ++k) {
        auto a = sprout(complete_graph(4), static_cast<int>(k) + 1);
        if (!expect(a.meta.edges == 40 * k + 46, why, "sprouted K4 edge count off")) return false;
        auto b = sprout(complete_graph(7), static_cast<int>(k) + 1);
        if (!expect(b.meta.edges == 196 * k + 217, why, "sprouted K7 edge count off"))
            return false;
    }
    for (long long k = 0; k <= 3; ++k) {
        auto g = gk_2kk(static_cast<int>(k));
        if (!expect(g.meta.vertices == 128 * k * k + 196 * k + 72, why, "gk vertex count off"))
            return false;
        if (!expect(g.meta.edges == 448 * k * k + 694 * k + 252, why, "gk edge count off"))
            return false;
        long long hk = 2LL * 5764801 * (7 * k + 1) + 49;
        if (!expect(descartes_edges(static_cast<int>(k)) == hk, why, "descartes edge count off"))
            return false;
    }
    for (long long K = 0; K <= 5; ++K) {
        auto t = two_star_girth7(static_cast<int>(K));
        if (!expect(t.meta.edges == 27 * K * K + 39 * K + 15, why, "two-star edge count off"))
            return false;
    }
    return true;
}

// --- 7: unsatisfiable instances ------------------------------------------------

bool c_unsat(std::string& why) {
    struct Item {
        const char* label;
        Graph graph;
        DefectVector defects;
        PinList pins;
    };
    std::vector<Item> items;
    items.push_back({"sprouted K4 under 0,0,0,0", sprout(complete_graph(4), 1).graph,
                     DefectVector{0, 0, 0, 0}, {}});
    items.push_back({"thickened edge under 1,1,1 with split pins",
                     thicken_edge(Graph(2, {{0, 1}}), 0, 1, 1).graph, DefectVector{1, 1, 1},
                     PinList{{0, 2}, {1, 3}}});
    items.push_back({"two-star under 0,1", two_star_girth7(1).graph, DefectVector{0, 1}, {}});
    items.push_back({"7-cycle under 0,0", cycle_graph(7), DefectVector{0, 0}, {}});
    for (const Item& it : items) {
        auto t0 = std::chrono::steady_clock::now();
        auto res = solve_exact(it.graph, it.defects, it.pins);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!expect(!res.has_value(), why, std::string(it.label) + ": expected UNSAT"))
            return false;
        if (!expect(dt < 60.0, why, std::string(it.label) + ": refutation over 60s")) return false;
    }
    return true;
}

// --- 8: solver agrees with exhaustive enumeration -------------------------------

bool c_solver_oracle(std::string& why) {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + oracle::rnd_below(rng, 7);
        int m = n - 1 + oracle::rnd_below(rng, n);
        Graph g = oracle::random_connected_graph(rng, n, m);
        int k = 1 + oracle::rnd_below(rng, 3);
        std::vector<int> d(k);
        for (int& x : d) x = oracle::rnd_below(rng, 3);
        DefectVector defects(d);
        bool lib = solve_exact(g, defects).has_value();
        bool oracle_says = oracle::colorable_by_enumeration(g, d);
        if (!expect(lib == oracle_says, why,
                    "disagreement at trial " + std::to_string(t) + " (solver says " +
                        (lib ? "SAT" : "UNSAT") + ")"))
            return false;
    }
    return true;
}

// --- 9: discharging totals and conservation -------------------------------------

bool c_discharging(std::string& why) {
    auto identity = [](ChargeScheme s, long long g) {
        switch (s) {
            case ChargeScheme::S34:
            case ChargeScheme::S35: return Charge(6 * g - 12);
            case ChargeScheme::S41: return Charge(4 * g - 8);
            case ChargeScheme::S51: return Charge(14 * g - 28);
        }
        return Charge(0);
    };
    const ChargeScheme schemes[] = {ChargeScheme::S34, ChargeScheme::S35, ChargeScheme::S41,
                                    ChargeScheme::S51};
    const EmbeddedGraph* fixtures[] = {
        &fixtures::planar_k4(),        &fixtures::toroidal_k7(),
        &fixtures::torus_grid_c3c3(),  &fixtures::projective_k5(),
        &fixtures::planar_wheel4(),    &fixtures::double_torus_grids(),
        &fixtures::triangle_neck_genus4()};
    auto check = [&](const EmbeddedGraph& eg, int K) {
        long long g = eg.euler_genus();
        for (ChargeScheme s : schemes) {
            ChargeLedger led = apply_rules(eg, s, K);
            if (!expect(led.initial_total() == identity(s, g), why, "initial total off"))
                return false;
            if (!expect(led.final_total() == led.initial_total(), why, "total not conserved"))
                return false;
        }
        return true;
    };
    for (const EmbeddedGraph* eg : fixtures)
        for (int K : {1, 4})
            if (!check(*eg, K)) return false;
    std::mt19937_64 rng(909);
    for (int t = 0; t < 100; ++t) {
        int n = 3 + oracle::rnd_below(rng, 8);
        int m = n - 1 + oracle::rnd_below(rng, 2 * n);
        Graph g = oracle::random_connected_graph(rng, n, m);
        EmbeddedGraph eg = oracle::random_embedding(rng, g, t % 2 == 0);
        if (!check(eg, oracle::rnd_below(rng, 7))) return false;
    }
    return true;
}

// --- 10: girth claims -------------------------------------------------------------

bool c_girth(std::string& why) {
    struct S {
        int k, sample;
        std::uint64_t seed;
    };
    for (const S s : {S{0, 1, 1}, S{0, 3, 11}, S{0, 4, 5}, S{1, 2, 7}}) {
        DescartesOptions opt;
        opt.sample = s.sample;
        opt.seed = s.seed;
        auto d = descartes_girth6(s.k, opt);
        auto girth = oracle::girth_by_edge_removal(d.graph);
        if (!expect(girth && *girth >= 6, why,
                    "descartes sample girth below 6 (k=" + std::to_string(s.k) + ")"))
            return false;
    }
    for (int K : {0, 1, 2}) {
        auto t = two_star_girth7(K);
        auto girth = oracle::girth_by_edge_removal(t.graph);
        if (!expect(girth && *girth >= 7, why,
                    "two-star girth below 7 (K=" + std::to_string(K) + ")"))
            return false;
    }
    return true;
}

}  // namespace

int main() {
    const Check checks[] = {
        {"euler-identity", 5, c_euler},
        {"ncc-properties", 120, c_ncc},
        {"planarize-postconditions", 120, c_planarize},
        {"pipeline-colorings", 60, c_pipelines},
        {"threshold-identities", 5, c_thresholds},
        {"construction-counts", 5, c_counts},
        {"unsat-instances", 240, c_unsat},
        {"solver-vs-enumeration", 120, c_solver_oracle},
        {"charge-conservation", 60, c_discharging},
        {"girth-claims", 30, c_girth},
    };
    int failures = 0;
    for (const Check& c : checks) {
        std::string why;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.fn(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && dt > c.budget_s) {
            ok = false;
            why = "over the " + std::to_string(c.budget_s) + "s budget";
        }
        if (ok)
            std::printf("PASS %-26s %6.2fs\n", c.name, dt);
        else
            std::printf("FAIL %-26s %6.2fs  %s\n", c.name, dt, why.c_str());
        failures += ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
