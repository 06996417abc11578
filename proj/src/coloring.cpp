#include "surfcol/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <numeric>
#include <thread>

#include "surfcol/error.hpp"
#include "surfcol/planarize.hpp"

namespace surfcol {

namespace {

void check_defects(const DefectVector& defects) {
    require(defects.k() >= 1, ErrorKind::Precondition, "defect vector must have k >= 1");
    for (int di : defects.d)
        require(di >= 0, ErrorKind::Precondition, "defects must be nonnegative");
}

}  // namespace

std::optional<std::pair<int, int>> DefectVector::jk() const {
    if (d.empty()) return std::nullopt;
    int K = d[0];
    int j = 1;
    while (j < k() && d[j] == K) ++j;
    if (j == k()) return std::nullopt;
    for (int i = j; i < k(); ++i)
        if (d[i] >= K) return std::nullopt;
    return std::make_pair(j, K);
}

Coloring make_coloring(const Graph& g, std::vector<int> color) {
    require(static_cast<int>(color.size()) == g.vertex_count(), ErrorKind::Precondition,
            "color map size mismatch");
    Coloring c;
    c.color = std::move(color);
    c.defect_count.assign(g.vertex_count(), 0);
    for (auto [u, v] : g.edges())
        if (c.color[u] != 0 && c.color[u] == c.color[v]) {
            ++c.defect_count[u];
            ++c.defect_count[v];
        }
    return c;
}

std::vector<Violation> verify_coloring(const Graph& g, const DefectVector& defects,
                                       const Coloring& coloring) {
    check_defects(defects);
    int n = g.vertex_count();
    require(static_cast<int>(coloring.color.size()) == n, ErrorKind::Precondition,
            "coloring size mismatch");
    for (int v = 0; v < n; ++v) {
        require(coloring.color[v] != 0, ErrorKind::Precondition,
                "coloring must be total (vertex " + std::to_string(v) + " unassigned)");
        require(coloring.color[v] >= 1 && coloring.color[v] <= defects.k(),
                ErrorKind::Precondition,
                "color index out of range at vertex " + std::to_string(v));
    }
    // Recount; the caller's defect_count may be stale.
    Coloring counted = make_coloring(g, coloring.color);
    std::vector<Violation> out;
    for (int v = 0; v < n; ++v) {
        int c = counted.color[v];
        if (counted.defect_count[v] > defects.d[c - 1])
            out.push_back({v, c, counted.defect_count[v], defects.d[c - 1]});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact solver.

namespace {

struct Searcher {
    const Graph* g = nullptr;
    int n = 0;
    int k = 0;
    std::vector<int> dv;             // defect bound per color (index c-1)
    std::vector<int> cap;            // per-vertex extra cap
    std::vector<char> pinned_color;  // colors mentioned by a pin, size k
    std::vector<int> order;          // branch order: degree desc, id asc

    std::vector<int> color;  // 0 = unassigned
    std::vector<int> cnt;    // n*k colored-neighbor counts
    std::vector<int> usage;  // vertices currently holding each color
    std::vector<int> trail;
    std::vector<int> work;
    std::vector<char> in_work;
    long long nodes = 0;

    // Parallel mode: workers abort once a lower-indexed sibling succeeded.
    const std::atomic<int>* winner = nullptr;
    int branch_index = INT_MAX;
    bool aborted = false;

    int& cnt_at(int v, int c) { return cnt[static_cast<size_t>(v) * k + (c - 1)]; }
    int allowed(int v, int c) const { return std::min(dv[c - 1], cap[v]); }

    void init(const Graph& graph, const DefectVector& defects, const SolveOptions& opts) {
        g = &graph;
        n = graph.vertex_count();
        k = defects.k();
        dv = defects.d;
        if (opts.defect_caps.empty())
            cap.assign(n, INT_MAX);
        else
            cap = opts.defect_caps;
        pinned_color.assign(k, 0);
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (graph.degree(a) != graph.degree(b)) return graph.degree(a) > graph.degree(b);
            return a < b;
        });
        color.assign(n, 0);
        cnt.assign(static_cast<size_t>(n) * k, 0);
        usage.assign(k, 0);
        in_work.assign(n, 0);
    }

    // Unused colors interchangeable with a lower-indexed unused color of the
    // same defect are skipped everywhere; any solution can be permuted into
    // one that respects this order.
    bool blocked(int c) const {
        if (pinned_color[c - 1] || usage[c - 1] != 0) return false;
        for (int c2 = 1; c2 < c; ++c2)
            if (!pinned_color[c2 - 1] && dv[c2 - 1] == dv[c - 1] && usage[c2 - 1] == 0)
                return true;
        return false;
    }

    bool feasible(int v, int c) {
        if (blocked(c)) return false;
        if (cnt_at(v, c) > allowed(v, c)) return false;
        for (int u : g->neighbors(v))
            if (color[u] == c && cnt_at(u, c) + 1 > allowed(u, c)) return false;
        return true;
    }

    void push_work(int v) {
        if (!in_work[v]) {
            in_work[v] = 1;
            work.push_back(v);
        }
    }

    void assign_and_enqueue(int v, int c) {
        color[v] = c;
        ++usage[c - 1];
        trail.push_back(v);
        for (int u : g->neighbors(v)) {
            ++cnt_at(u, c);
            if (color[u] == 0) {
                push_work(u);
            } else if (color[u] == c && cnt_at(u, c) == allowed(u, c)) {
                // u just saturated; its open neighborhood loses color c.
                for (int w : g->neighbors(u))
                    if (color[w] == 0) push_work(w);
            }
        }
    }

    void clear_work() {
        for (int v : work) in_work[v] = 0;
        work.clear();
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            int c = color[v];
            for (int u : g->neighbors(v)) --cnt_at(u, c);
            --usage[c - 1];
            color[v] = 0;
        }
    }

    // Drains the work queue, assigning forced vertices; false on wipeout.
    bool propagate() {
        while (!work.empty()) {
            int v = work.back();
            work.pop_back();
            in_work[v] = 0;
            if (color[v] != 0) continue;
            int found = 0, pick = 0;
            for (int c = 1; c <= k; ++c)
                if (feasible(v, c)) {
                    ++found;
                    pick = c;
                    if (found > 1) break;
                }
            if (found == 0) {
                clear_work();
                return false;
            }
            if (found == 1) assign_and_enqueue(v, pick);
        }
        return true;
    }

    bool canceled() const {
        return winner != nullptr && winner->load(std::memory_order_relaxed) < branch_index;
    }

    bool solve(int from) {
        if ((++nodes & 1023) == 0 && canceled()) {
            aborted = true;
            return false;
        }
        int v = -1;
        while (from < n) {
            if (color[order[from]] == 0) {
                v = order[from];
                break;
            }
            ++from;
        }
        if (v == -1) return true;
        for (int c = 1; c <= k; ++c) {
            if (!feasible(v, c)) continue;
            size_t mark = trail.size();
            assign_and_enqueue(v, c);
            if (propagate() && solve(from + 1)) return true;
            undo_to(mark);
            if (aborted) return false;
        }
        return false;
    }

    // Applies one pin; distinguishes a contradiction from success.
    bool apply_pin(int v, int c, std::string* reason) {
        if (color[v] == c) return true;
        if (color[v] != 0) {
            if (reason)
                *reason = "contradictory pins: vertex " + std::to_string(v) +
                          " pinned to both " + std::to_string(color[v]) + " and " +
                          std::to_string(c);
            return false;
        }
        if (!feasible(v, c)) {
            if (reason)
                *reason = "contradictory pins: vertex " + std::to_string(v) + " cannot take " +
                          std::to_string(c);
            return false;
        }
        assign_and_enqueue(v, c);
        return true;
    }
};

}  // namespace

std::optional<Coloring> solve_exact(const Graph& g, const DefectVector& defects,
                                    const PinList& pinned, const SolveOptions& opts,
                                    SolveStats* stats) {
    check_defects(defects);
    int n = g.vertex_count();
    int k = defects.k();
    require(opts.defect_caps.empty() || static_cast<int>(opts.defect_caps.size()) == n,
            ErrorKind::Precondition, "defect_caps size mismatch");
    for (int c : opts.defect_caps)
        require(c >= 0, ErrorKind::Precondition, "defect_caps must be nonnegative");
    require(opts.jobs >= 1, ErrorKind::Precondition, "jobs must be >= 1");
    for (auto [v, c] : pinned) {
        require(v >= 0 && v < n, ErrorKind::Precondition,
                "pin vertex " + std::to_string(v) + " out of range");
        require(c >= 1 && c <= k, ErrorKind::Precondition,
                "pin color " + std::to_string(c) + " out of range");
    }
    if (stats) *stats = SolveStats{};

    Searcher base;
    base.init(g, defects, opts);
    for (auto [v, c] : pinned) base.pinned_color[c - 1] = 1;
    for (auto [v, c] : pinned) {
        std::string reason;
        if (!base.apply_pin(v, c, &reason)) {
            if (stats) stats->reason = reason;
            return std::nullopt;
        }
    }
    if (!base.propagate()) {
        if (stats) stats->nodes = base.nodes;
        return std::nullopt;
    }

    auto finish = [&](const Searcher& s) { return make_coloring(g, s.color); };

    int at = 0;
    int v0 = -1;
    while (at < n) {
        if (base.color[base.order[at]] == 0) {
            v0 = base.order[at];
            break;
        }
        ++at;
    }
    if (v0 == -1) {
        if (stats) stats->nodes = base.nodes;
        return finish(base);
    }

    std::vector<int> candidates;
    for (int c = 1; c <= k; ++c)
        if (base.feasible(v0, c)) candidates.push_back(c);

    if (opts.jobs <= 1 || candidates.size() <= 1) {
        bool ok = base.solve(at);
        if (stats) stats->nodes = base.nodes;
        if (!ok) return std::nullopt;
        return finish(base);
    }

    // Parallel split on the first branch point. Each worker owns a full copy
    // of the search state; `winner` carries the lowest successful candidate
    // index so higher-indexed workers stop early. With the deterministic
    // flag, lower-indexed workers always run to completion, so the witness
    // is the sequential one; without it the first success cancels everyone.
    std::atomic<int> winner(INT_MAX);
    std::vector<Searcher> workers(candidates.size());
    std::vector<char> success(candidates.size(), 0);
    std::vector<std::thread> threads;
    std::atomic<int> next(0);
    int lanes = std::min<int>(opts.jobs, static_cast<int>(candidates.size()));
    for (int lane = 0; lane < lanes; ++lane) {
        threads.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < static_cast<int>(candidates.size());
                 i = next.fetch_add(1)) {
                Searcher& s = workers[i];
                s = base;
                s.winner = &winner;
                s.branch_index = opts.deterministic ? i : INT_MAX - 1;
                if (s.canceled()) continue;
                size_t mark = s.trail.size();
                s.assign_and_enqueue(v0, candidates[i]);
                bool ok = s.propagate() && s.solve(at);
                if (ok) {
                    int cur = winner.load();
                    int mine = opts.deterministic ? i : -1;
                    while (mine < cur && !winner.compare_exchange_weak(cur, mine)) {
                    }
                    success[i] = 1;
                } else {
                    s.undo_to(mark);
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    long long total_nodes = base.nodes;
    for (const Searcher& s : workers) total_nodes += s.nodes;
    if (stats) stats->nodes = total_nodes;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (success[i]) return finish(workers[i]);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Recoloring procedures.

std::optional<Coloring> extend_to_vertex(const Graph& g, const DefectVector& defects,
                                         const Coloring& partial, int v) {
    check_defects(defects);
    auto shape = defects.jk();
    require(shape.has_value(), ErrorKind::Precondition, "defect vector lacks the (j, K) shape");
    auto [j, K] = *shape;
    int n = g.vertex_count();
    int k = defects.k();
    require(v >= 0 && v < n, ErrorKind::Precondition, "vertex out of range");
    require(static_cast<int>(partial.color.size()) == n, ErrorKind::Precondition,
            "coloring size mismatch");
    require(partial.color[v] == 0, ErrorKind::Precondition,
            "vertex " + std::to_string(v) + " is already colored");
    std::vector<int> col = partial.color;
    for (int u = 0; u < n; ++u)
        require(u == v || (col[u] >= 1 && col[u] <= k), ErrorKind::Precondition,
                "every vertex but the target must be colored");

    std::vector<int> cnt(static_cast<size_t>(n) * k, 0);
    auto cnt_at = [&](int x, int c) -> int& { return cnt[static_cast<size_t>(x) * k + (c - 1)]; };
    for (auto [a, b] : g.edges()) {
        if (col[a] != 0) ++cnt_at(b, col[a]);
        if (col[b] != 0) ++cnt_at(a, col[b]);
    }
    for (int u = 0; u < n; ++u)
        require(u == v || cnt_at(u, col[u]) <= defects.d[col[u] - 1], ErrorKind::Precondition,
                "partial coloring is invalid away from the target vertex");

    auto movable = [&](int u, int c) {
        if (cnt_at(u, c) > defects.d[c - 1]) return false;
        for (int w : g.neighbors(u))
            if (col[w] == c && cnt_at(w, c) + 1 > defects.d[c - 1]) return false;
        return true;
    };
    auto move = [&](int u, int c) {
        int old = col[u];
        for (int w : g.neighbors(u)) {
            --cnt_at(w, old);
            ++cnt_at(w, c);
        }
        col[u] = c;
    };
    auto finish = [&](int c) -> std::optional<Coloring> {
        col[v] = c;
        Coloring out = make_coloring(g, col);
        if (!verify_coloring(g, defects, out).empty()) return std::nullopt;
        return out;
    };

    // Push neighbors of v out of the leading classes where possible.
    for (int u : g.neighbors(v)) {
        if (col[u] > j) continue;
        for (int c = j + 1; c <= k; ++c)
            if (movable(u, c)) {
                move(u, c);
                break;
            }
    }
    // A color missing around v wins outright.
    for (int c = 1; c <= k; ++c)
        if (cnt_at(v, c) == 0) return finish(c);
    // Otherwise a leading color no high neighbor wears...
    int high_deg = K + k;
    int l = 0;
    for (int c = 1; c <= j && l == 0; ++c) {
        bool on_high = false;
        for (int u : g.neighbors(v))
            if (col[u] == c && g.degree(u) >= high_deg) {
                on_high = true;
                break;
            }
        if (!on_high) l = c;
    }
    if (l == 0) return std::nullopt;
    // ...after recoloring its saturated wearers next to v out of the way.
    for (int u : g.neighbors(v)) {
        if (col[u] != l || cnt_at(u, l) < K) continue;
        int open = 0;
        for (int c = 1; c <= k && open == 0; ++c)
            if (c != l && cnt_at(u, c) == 0) open = c;
        if (open == 0) return std::nullopt;
        move(u, open);
    }
    return finish(l);
}

HighPartitionResult color_via_high_partition(const Graph& g, const DefectVector& defects) {
    check_defects(defects);
    auto shape = defects.jk();
    require(shape.has_value(), ErrorKind::Precondition, "defect vector lacks the (j, K) shape");
    int K = shape->second;
    int n = g.vertex_count();
    int k = defects.k();
    int high_deg = K + k;

    std::vector<int> high;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= high_deg) high.push_back(v);
    long long capacity = 0;
    for (int i = 2; i <= k; ++i) capacity += defects.d[i - 1] + 1;
    require(static_cast<long long>(high.size()) <= capacity, ErrorKind::Precondition,
            std::to_string(high.size()) + " high vertices exceed the class capacity " +
                std::to_string(capacity));

    std::vector<int> col(n, 0);
    int c = 2, filled = 0;
    for (int h : high) {
        while (filled == defects.d[c - 1] + 1) {
            ++c;
            filled = 0;
        }
        col[h] = c;
        ++filled;
    }
    std::vector<char> seen(k + 1, 0);
    for (int v = 0; v < n; ++v) {
        if (col[v] != 0) continue;
        std::fill(seen.begin(), seen.end(), 0);
        for (int u : g.neighbors(v))
            if (col[u] != 0) seen[col[u]] = 1;
        int pick = 1;
        for (int c2 = 2; c2 <= k; ++c2)
            if (!seen[c2]) {
                pick = c2;
                break;
            }
        col[v] = pick;
    }

    HighPartitionResult out;
    out.coloring = make_coloring(g, std::move(col));
    out.high = std::move(high);
    DefectVector relaxed = defects;
    relaxed.d[0] += 1;
    require(verify_coloring(g, relaxed, out.coloring).empty(), ErrorKind::Invariant,
            "greedy extension broke the relaxed defect guarantee");
    out.strict = verify_coloring(g, defects, out.coloring).empty();
    return out;
}

// ---------------------------------------------------------------------------
// Pipelines.

namespace {

PipelineResult run_pipeline(const EmbeddedGraph& g, bool proper4) {
    require(g.connected(), ErrorKind::Precondition, "pipeline needs a connected embedding");
    require(g.euler_genus() > 0, ErrorKind::Precondition,
            "pipeline needs positive Euler genus (planar input)");
    int eg = g.euler_genus();
    PlanarizeResult pr = planarizing_subgraph(g, 0);
    const Graph& q = pr.quotient;

    std::optional<Coloring> qcol;
    int hcolor;
    if (proper4) {
        hcolor = 4;
        qcol = solve_exact(q, DefectVector{0, 0, 0, 0}, {{pr.h_image, hcolor}});
        require(qcol.has_value(), ErrorKind::Invariant,
                "planar quotient admits no pinned proper 4-coloring");
    } else {
        hcolor = 3;
        SolveOptions opts;
        opts.defect_caps.assign(q.vertex_count(), INT_MAX);
        opts.defect_caps[pr.h_image] = 0;
        qcol = solve_exact(q, DefectVector{2, 2, 2}, {{pr.h_image, hcolor}}, opts);
        require(qcol.has_value(), ErrorKind::Invariant,
                "planar quotient admits no (2,2,2)-coloring isolating the merged vertex");
    }

    std::vector<char> in_h(g.vertex_count(), 0);
    for (int h : pr.h_vertices) in_h[h] = 1;
    std::vector<int> col(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        col[v] = in_h[v] ? hcolor : qcol->color[pr.vertex_map[v]];

    PipelineResult out;
    out.defects = proper4 ? DefectVector{0, 0, 0, 9 * eg - 4} : DefectVector{2, 2, 9 * eg - 4};
    out.coloring = make_coloring(g.graph(), std::move(col));
    out.h_vertices = pr.h_vertices;
    require(verify_coloring(g.graph(), out.defects, out.coloring).empty(), ErrorKind::Invariant,
            "lifted coloring failed verification");
    return out;
}

}  // namespace

PipelineResult color_000_9g4(const EmbeddedGraph& g) { return run_pipeline(g, true); }

PipelineResult color_22_9g4(const EmbeddedGraph& g) { return run_pipeline(g, false); }

// ---------------------------------------------------------------------------
// Thresholds.

const char* to_string(ThresholdFamily family) {
    switch (family) {
        case ThresholdFamily::Linear: return "linear";
        case ThresholdFamily::TwoKK: return "2kk";
        case ThresholdFamily::ZeroZeroKK: return "00kk";
        case ThresholdFamily::TriangleFree: return "trianglefree";
        case ThresholdFamily::Girth7: return "girth7";
    }
    return "?";
}

std::optional<ThresholdFamily> threshold_family_from_name(const std::string& name) {
    for (ThresholdFamily f : {ThresholdFamily::Linear, ThresholdFamily::TwoKK,
                              ThresholdFamily::ZeroZeroKK, ThresholdFamily::TriangleFree,
                              ThresholdFamily::Girth7})
        if (name == to_string(f)) return f;
    return std::nullopt;
}

Threshold threshold(ThresholdFamily family, int g) {
    require(g >= 0, ErrorKind::Precondition, "genus must be nonnegative");
    Threshold t;
    t.family = family;
    t.genus = g;
    switch (family) {
        case ThresholdFamily::Linear:
            require(g >= 1, ErrorKind::Precondition, "linear threshold needs g >= 1");
            t.ivalue = 9LL * g - 4;
            break;
        case ThresholdFamily::TwoKK: {
            double K = 38.0 + std::sqrt(84.0 * g + 1682.0);
            t.value = K;
            t.residual = K * K - 76.0 * K - 84.0 * g - 237.0;
            return t;
        }
        case ThresholdFamily::ZeroZeroKK: {
            double K = 20.0 + std::sqrt(48.0 * g + 481.0);
            t.value = K;
            t.residual = K * K - 40.0 * K - 48.0 * g - 80.0;
            return t;
        }
        case ThresholdFamily::TriangleFree:
            t.ivalue = (10LL * g + 34) / 3;  // ceil((10g+32)/3)
            break;
        case ThresholdFamily::Girth7: {
            long long target = 14LL * g + 22;
            long long c = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(target))));
            while (c * c < target) ++c;
            while (c >= 1 && (c - 1) * (c - 1) >= target) --c;
            long long K = 5 + c;
            t.ivalue = K;
            t.residual = static_cast<double>(K * K - 10 * K + 4 - 14LL * g);
            break;
        }
    }
    t.integral = true;
    t.value = static_cast<double>(t.ivalue);
    return t;
}

}  // namespace surfcol
