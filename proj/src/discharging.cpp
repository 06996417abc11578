#include "surfcol/discharging.hpp"

#include <algorithm>
#include <numeric>

#include "surfcol/error.hpp"

namespace surfcol {

std::string to_string(ChargeScheme s) {
    switch (s) {
        case ChargeScheme::S34: return "s34";
        case ChargeScheme::S35: return "s35";
        case ChargeScheme::S41: return "s41";
        case ChargeScheme::S51: return "s51";
    }
    fail(ErrorKind::Invariant, "unknown scheme");
}

ChargeScheme charge_scheme_from_name(const std::string& name) {
    if (name == "s34") return ChargeScheme::S34;
    if (name == "s35") return ChargeScheme::S35;
    if (name == "s41") return ChargeScheme::S41;
    if (name == "s51") return ChargeScheme::S51;
    fail(ErrorKind::Precondition, "unknown charge scheme: " + name);
}

int high_threshold(ChargeScheme s, int K) {
    switch (s) {
        case ChargeScheme::S34: return K + 3;
        case ChargeScheme::S35: return K + 4;
        case ChargeScheme::S41: return K + 3;
        case ChargeScheme::S51: return K + 2;
    }
    fail(ErrorKind::Invariant, "unknown scheme");
}

namespace {

Charge sum(const std::vector<Charge>& xs) {
    return std::accumulate(xs.begin(), xs.end(), Charge(0));
}

// Vertices the scheme's surrounding analysis assumes as minimum degree.
int min_degree_context(ChargeScheme s) {
    switch (s) {
        case ChargeScheme::S34: return 3;
        case ChargeScheme::S35: return 4;
        case ChargeScheme::S41: return 3;
        case ChargeScheme::S51: return 2;
    }
    return 0;
}

struct Run {
    ChargeLedger led;

    void send(Element from, Element to, Charge amount, const char* rule) {
        // Compare against Charge, never a bare int: boost 1.74's heterogeneous
        // rational operator== self-recurses under C++20 rewritten candidates.
        if (amount == Charge(0)) return;
        (from.face ? led.face_final : led.vertex_final)[from.id] -= amount;
        (to.face ? led.face_final : led.vertex_final)[to.id] += amount;
        led.log.push_back({from, to, amount, rule});
    }
    void send_vv(int u, int v, Charge amount, const char* rule) {
        send({false, u}, {false, v}, amount, rule);
    }
    void send_fv(int f, int v, Charge amount, const char* rule) {
        send({true, f}, {false, v}, amount, rule);
    }
};

}  // namespace

Charge ChargeLedger::initial_total() const {
    return sum(vertex_initial) + sum(face_initial);
}

Charge ChargeLedger::final_total() const {
    return sum(vertex_final) + sum(face_final);
}

ChargeLedger initial_charges(const EmbeddedGraph& g, ChargeScheme s) {
    ChargeLedger led;
    const Graph& gr = g.graph();
    led.vertex_initial.reserve(gr.vertex_count());
    for (int v = 0; v < gr.vertex_count(); ++v) {
        long long d = gr.degree(v);
        led.vertex_initial.push_back(s == ChargeScheme::S41  ? Charge(d - 4)
                                     : s == ChargeScheme::S51 ? Charge(5 * d - 14)
                                                              : Charge(d - 6));
    }
    led.face_initial.reserve(g.face_count());
    for (const FaceWalk& f : g.faces()) {
        long long d = f.degree();
        led.face_initial.push_back(s == ChargeScheme::S41  ? Charge(d - 4)
                                   : s == ChargeScheme::S51 ? Charge(2 * d - 14)
                                                            : Charge(2 * d - 6));
    }
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;
    return led;
}

ChargeLedger apply_rules(const EmbeddedGraph& eg, ChargeScheme s, int K) {
    const Graph& g = eg.graph();
    Run run{initial_charges(eg, s)};
    int hi = high_threshold(s, K);
    auto high = [&](int v) { return g.degree(v) >= hi; };

    // Face rules first (R1 in S34/S35, R3 in S41): incidences are the tails
    // along the boundary walk, a repeated vertex counted once per pass.
    const auto& faces = eg.faces();
    if (s == ChargeScheme::S34) {
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            std::vector<int> cubic;
            for (int d : faces[f].darts)
                if (g.degree(eg.dart_tail(d)) == 3) cubic.push_back(eg.dart_tail(d));
            if (cubic.empty()) continue;
            Charge share = run.led.face_initial[f] / static_cast<long long>(cubic.size());
            for (int v : cubic) run.send_fv(f, v, share, "R1");
        }
    } else if (s == ChargeScheme::S35) {
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (faces[f].degree() < 4) continue;
            for (int d : faces[f].darts)
                if (g.degree(eg.dart_tail(d)) == 4)
                    run.send_fv(f, eg.dart_tail(d), Charge(1, 4), "R1");
        }
    }

    if (s == ChargeScheme::S34 || s == ChargeScheme::S35) {
        Charge to_low = s == ChargeScheme::S34 ? Charge(13, 14) : Charge(7, 8);
        Charge wing = s == ChargeScheme::S34 ? Charge(13, 28) : Charge(7, 16);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!high(v)) continue;
            for (int u : g.neighbors(v))
                if (!high(u)) run.send_vv(v, u, to_low, "R2");
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!high(v)) continue;
            const auto& rot = eg.rotation(v);
            int d = static_cast<int>(rot.size());
            if (d < 3) continue;  // no consecutive triple exists
            for (int i = 0; i < d; ++i) {
                if (!high(eg.dart_head(rot[(i + 1) % d]))) continue;
                run.send_vv(v, eg.dart_head(rot[i]), wing, "R3");
                run.send_vv(v, eg.dart_head(rot[(i + 2) % d]), wing, "R3");
            }
        }
        Charge drip = s == ChargeScheme::S34 ? Charge(3, 14) : Charge(1, 4);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (high(v) || g.degree(v) < 5) continue;
            for (int u : g.neighbors(v)) {
                bool hit = s == ChargeScheme::S34 ? g.degree(u) <= 4 : g.degree(u) == 4;
                if (hit) run.send_vv(v, u, drip, "R4");
            }
        }
    } else if (s == ChargeScheme::S41) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!high(v)) continue;
            for (int u : g.neighbors(v)) run.send_vv(v, u, Charge(4, 5), "R1");
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (high(v) || g.degree(v) < 4) continue;
            for (int u : g.neighbors(v))
                if (g.degree(u) == 3) run.send_vv(v, u, Charge(1, 5), "R2");
        }
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (faces[f].degree() < 5) continue;
            for (int d : faces[f].darts)
                if (g.degree(eg.dart_tail(d)) == 3)
                    run.send_fv(f, eg.dart_tail(d), Charge(1, 5), "R3");
        }
    } else {  // S51
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!high(v)) continue;
            for (int u : g.neighbors(v)) run.send_vv(v, u, Charge(4), "R1");
        }
    }

    require(run.led.initial_total() == run.led.final_total(), ErrorKind::Invariant,
            "charge not conserved");
    return std::move(run.led);
}

AuditReport audit(const EmbeddedGraph& g, ChargeScheme s, int K) {
    AuditReport rep;
    rep.scheme = s;
    rep.K = K;
    rep.ledger = apply_rules(g, s, K);

    const Graph& gr = g.graph();
    auto girth = gr.girth();
    if (girth)
        rep.notes.push_back("girth " + std::to_string(*girth));
    else
        rep.notes.push_back("acyclic");
    if (girth == 3) {
        std::string n = "graph contains triangles";
        if (s == ChargeScheme::S41) n += " (scheme context expects triangle-free input)";
        rep.notes.push_back(n);
    }
    if (s == ChargeScheme::S51 && (!girth || *girth < 7))
        rep.notes.push_back("girth below the scheme's girth-7 context");

    int ctx = min_degree_context(s);
    int below = 0;
    for (int v = 0; v < gr.vertex_count(); ++v)
        if (gr.degree(v) < ctx) ++below;
    if (below > 0)
        rep.notes.push_back(std::to_string(below) + " vertices below the scheme's minimum degree " +
                            std::to_string(ctx));

    if (s == ChargeScheme::S34) {
        // A 3-vertex can sit on a face walk more than once; each pass earns a
        // share. Surface the situation since the even split is per incidence.
        for (int f = 0; f < g.face_count(); ++f) {
            std::vector<int> cubic;
            for (int d : g.faces()[f].darts)
                if (gr.degree(g.dart_tail(d)) == 3) cubic.push_back(g.dart_tail(d));
            std::sort(cubic.begin(), cubic.end());
            if (std::adjacent_find(cubic.begin(), cubic.end()) != cubic.end()) {
                rep.notes.push_back("face " + std::to_string(f) +
                                    " meets a degree-3 vertex more than once; each pass counts");
                break;
            }
        }
    }

    int neg = 0;
    for (const Charge& c : rep.ledger.vertex_final)
        if (c < Charge(0)) ++neg;
    for (const Charge& c : rep.ledger.face_final)
        if (c < Charge(0)) ++neg;
    if (neg > 0)
        rep.notes.push_back(std::to_string(neg) +
                            " elements end negative (the nonnegativity analyses assume a minimal "
                            "counterexample)");
    return rep;
}

}  // namespace surfcol
