#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "surfcol/error.hpp"
#include "surfcol/topology.hpp"

using namespace surfcol;

namespace {

// Exhaustive reference: minimum-length non-contractible cycle by classifying
// every simple cycle, ties broken on the canonical vertex sequence.
std::optional<std::vector<int>> brute_shortest_noncontractible(const EmbeddedGraph& g) {
    std::optional<std::vector<int>> best;
    for (const auto& vs : oracle::all_cycles(g.graph(), g.vertex_count())) {
        if (best && vs.size() > best->size()) continue;
        auto canon = canonical_cycle(vs);
        if (best && vs.size() == best->size() && !(canon < *best)) continue;
        if (classify_cycle(g, CycleWalk::from_vertices(g, vs)) != CycleClass::Contractible)
            best = canon;
    }
    return best;
}

std::vector<int> face_cycle_from_dart(const EmbeddedGraph& g, int d0) {
    std::vector<int> vs;
    int d = d0;
    do {
        vs.push_back(g.dart_head(d));
        int od = dart_opposite(d);
        const auto& rot = g.rotation(g.dart_head(d));
        size_t i = std::find(rot.begin(), rot.end(), od) - rot.begin();
        d = rot[(i + 1) % rot.size()];
    } while (d != d0);
    return vs;
}

}  // namespace

TEST_CASE("shortest_path basics") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(shortest_path(c4, 2, 2) == std::vector<int>{2});
    CHECK(shortest_path(c4, 0, 2) == std::vector<int>{0, 1, 2});

    Graph split(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(shortest_path(split, 0, 3), Error);
}

TEST_CASE("every vertex has at most 3 neighbors on a shortest path") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 100; ++it) {
        int n = 4 + oracle::rnd_below(rng, 7);
        auto g = oracle::random_connected_graph(rng, n, n + oracle::rnd_below(rng, 2 * n));
        int u = oracle::rnd_below(rng, n), w = oracle::rnd_below(rng, n);
        auto p = shortest_path(g, u, w);
        std::set<int> on(p.begin(), p.end());
        CHECK(static_cast<int>(p.size()) == g.bfs_dist(u)[w] + 1);
        for (int x = 0; x < n; ++x) {
            int cnt = 0;
            for (int y : g.neighbors(x)) cnt += on.count(y) ? 1 : 0;
            CHECK(cnt <= 3);
        }
    }
}

TEST_CASE("shortest_path_between_sets") {
    Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(shortest_path_between_sets(c6, {0}, {3}) == std::vector<int>{0, 1, 2, 3});
    CHECK(shortest_path_between_sets(c6, {0, 4}, {4, 2}) == std::vector<int>{4});
    CHECK(shortest_path_between_sets(c6, {5, 1}, {3}) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(shortest_path_between_sets(c6, {}, {3}), Error);
}

TEST_CASE("classify fixture cycles") {
    const auto& k4 = fixtures::planar_k4();
    auto face = k4.face_vertices(k4.faces()[0]);
    CHECK(classify_cycle(k4, CycleWalk::from_vertices(k4, face)) == CycleClass::Contractible);
    CHECK(is_contractible(k4, CycleWalk::from_vertices(k4, face)));

    const auto& grid = fixtures::torus_grid_c3c3();
    auto meridian = CycleWalk::from_vertices(grid, {0, 1, 2});
    CHECK(classify_cycle(grid, meridian) == CycleClass::TwoSidedNonseparating);
    CHECK_FALSE(is_contractible(grid, meridian));

    const auto& k5 = fixtures::projective_k5();
    std::optional<CycleClass> one_sided_seen;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) {
                int sp = k5.sign(k5.edge_between(a, b)) * k5.sign(k5.edge_between(b, c)) *
                         k5.sign(k5.edge_between(a, c));
                if (sp < 0 && !one_sided_seen)
                    one_sided_seen = classify_cycle(k5, CycleWalk::from_vertices(k5, {a, b, c}));
            }
    REQUIRE(one_sided_seen.has_value());
    CHECK(*one_sided_seen == CycleClass::OneSided);
}

TEST_CASE("neck of two glued tori is two-sided separating") {
    const auto& g = fixtures::double_torus_grids();
    CHECK(g.vertex_count() == 18);
    CHECK(g.edge_count() == 40);
    CHECK(g.euler_genus() == 4);
    CHECK(g.orientable());
    auto neck = face_cycle_from_dart(fixtures::torus_grid_c3c3(), 0);
    REQUIRE(neck.size() == 4);
    CHECK(classify_cycle(g, CycleWalk::from_vertices(g, neck)) ==
          CycleClass::TwoSidedSeparating);
}

TEST_CASE("one_sided never appears on orientable embeddings") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 25; ++it) {
        int n = 4 + oracle::rnd_below(rng, 4);
        auto g = oracle::random_embedding(
            rng, oracle::random_connected_graph(rng, n, n + 1 + oracle::rnd_below(rng, n)),
            false);
        for (const auto& vs : oracle::all_cycles(g.graph(), 5))
            CHECK(classify_cycle(g, CycleWalk::from_vertices(g, vs)) != CycleClass::OneSided);
    }
}

TEST_CASE("shortest non-contractible cycle on fixtures") {
    CHECK_FALSE(shortest_noncontractible_cycle(fixtures::planar_k4()).has_value());
    CHECK_FALSE(shortest_noncontractible_cycle(fixtures::planar_wheel4()).has_value());

    auto grid = shortest_noncontractible_cycle(fixtures::torus_grid_c3c3());
    REQUIRE(grid.has_value());
    CHECK(grid->length() == 3);

    auto k7 = shortest_noncontractible_cycle(fixtures::toroidal_k7());
    REQUIRE(k7.has_value());
    CHECK(k7->length() == 3);
    // A non-contractible triangle is never facial: in a triangulation a
    // facial triangle bounds a disk.
    const auto& emb = fixtures::toroidal_k7();
    for (const auto& f : emb.faces()) {
        auto fv = emb.face_vertices(f);
        CHECK(canonical_cycle(fv) != canonical_cycle(k7->vertices));
    }

    auto k5 = shortest_noncontractible_cycle(fixtures::projective_k5());
    REQUIRE(k5.has_value());
    CHECK(k5->length() == 3);
}

TEST_CASE("sweep agrees with brute force and breaks ties canonically") {
    std::mt19937_64 rng(2718);
    int positive = 0;
    for (int it = 0; it < 40; ++it) {
        int n = 4 + oracle::rnd_below(rng, 6);
        auto g = oracle::random_embedding(
            rng, oracle::random_connected_graph(rng, n, n + oracle::rnd_below(rng, n)));
        auto got = shortest_noncontractible_cycle(g);
        auto want = brute_shortest_noncontractible(g);
        REQUIRE(got.has_value() == want.has_value());
        if (!got) {
            CHECK(g.euler_genus() == 0);
            continue;
        }
        ++positive;
        CHECK(canonical_cycle(got->vertices) == *want);
        CHECK(got->length() == static_cast<int>(want->size()));
    }
    CHECK(positive >= 20);  // the sample genuinely exercises positive genus
}

TEST_CASE("shortest non-contractible cycles are induced, <=3 neighbors") {
    std::mt19937_64 rng(1618);
    int checked = 0;
    for (int attempt = 0; attempt < 500 && checked < 30; ++attempt) {
        int n = 5 + oracle::rnd_below(rng, 6);
        auto g = oracle::random_embedding(
            rng, oracle::random_connected_graph(rng, n, n + oracle::rnd_below(rng, n)));
        auto c = shortest_noncontractible_cycle(g);
        if (!c) continue;
        ++checked;
        std::set<int> on(c->vertices.begin(), c->vertices.end());
        for (int x = 0; x < g.vertex_count(); ++x) {
            int cnt = 0;
            for (int y : g.graph().neighbors(x)) cnt += on.count(y) ? 1 : 0;
            CHECK(cnt <= 3);
            if (on.count(x)) CHECK(cnt == 2);  // induced cycle
        }
    }
    CHECK(checked == 30);
}

TEST_CASE("3-path property spot check") {
    std::mt19937_64 rng(777);
    int checked = 0;
    for (int attempt = 0; attempt < 400 && checked < 25; ++attempt) {
        int n = 5 + oracle::rnd_below(rng, 4);
        auto g = oracle::random_embedding(
            rng, oracle::random_connected_graph(rng, n, n + 2 + oracle::rnd_below(rng, n)));
        if (g.euler_genus() == 0) continue;
        int u = oracle::rnd_below(rng, n), w = oracle::rnd_below(rng, n);
        if (u == w) continue;
        // All simple u-w paths of length <= 4, as vertex sequences.
        std::vector<std::vector<int>> paths;
        std::vector<int> cur{u};
        std::vector<char> used(n, 0);
        used[u] = 1;
        std::function<void(int)> dfs = [&](int v) {
            if (v == w) {
                paths.push_back(cur);
                return;
            }
            if (cur.size() > 4) return;
            for (int x : g.graph().neighbors(v)) {
                if (used[x]) continue;
                used[x] = 1;
                cur.push_back(x);
                dfs(x);
                cur.pop_back();
                used[x] = 0;
            }
        };
        dfs(u);
        auto internally_disjoint = [&](const std::vector<int>& p, const std::vector<int>& q) {
            std::set<int> inner(p.begin() + 1, p.end() - 1);
            for (size_t i = 1; i + 1 < q.size(); ++i)
                if (inner.count(q[i])) return false;
            return true;
        };
        auto cycle_of = [&](const std::vector<int>& p, const std::vector<int>& q) {
            std::vector<int> vs(p.begin(), p.end() - 1);
            for (size_t i = q.size() - 1; i >= 1; --i) vs.push_back(q[i]);
            return vs;
        };
        bool done_one = false;
        for (size_t i = 0; i < paths.size() && !done_one; ++i)
            for (size_t j = i + 1; j < paths.size() && !done_one; ++j) {
                if (!internally_disjoint(paths[i], paths[j])) continue;
                if (paths[i].size() + paths[j].size() < 5) continue;  // cycle length >= 3
                auto c12 = cycle_of(paths[i], paths[j]);
                if (classify_cycle(g, CycleWalk::from_vertices(g, c12)) ==
                    CycleClass::Contractible)
                    continue;
                for (size_t l = 0; l < paths.size() && !done_one; ++l) {
                    if (l == i || l == j) continue;
                    if (!internally_disjoint(paths[i], paths[l]) ||
                        !internally_disjoint(paths[j], paths[l]))
                        continue;
                    if (paths[i].size() + paths[l].size() < 5) continue;
                    if (paths[j].size() + paths[l].size() < 5) continue;
                    bool a = classify_cycle(g, CycleWalk::from_vertices(
                                                   g, cycle_of(paths[i], paths[l]))) !=
                             CycleClass::Contractible;
                    bool b = classify_cycle(g, CycleWalk::from_vertices(
                                                   g, cycle_of(paths[j], paths[l]))) !=
                             CycleClass::Contractible;
                    CHECK((a || b));
                    ++checked;
                    done_one = true;
                }
            }
    }
    CHECK(checked >= 10);
}

TEST_CASE("canonical_cycle") {
    CHECK(canonical_cycle({3, 1, 2}) == std::vector<int>{1, 2, 3});
    CHECK(canonical_cycle({3, 2, 1}) == std::vector<int>{1, 2, 3});
    CHECK(canonical_cycle({5, 4, 0, 9}) == std::vector<int>{0, 4, 5, 9});
}
