#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfcol/coloring.hpp"
#include "surfcol/constructions.hpp"
#include "surfcol/discharging.hpp"
#include "surfcol/error.hpp"
#include "surfcol/io.hpp"
#include "surfcol/planarize.hpp"
#include "surfcol/topology.hpp"

namespace surfcol::cli {

namespace {

const char* kUsage =
    "usage: surfcol <command> [flags]\n"
    "  genus      --in <embedding>                        print the Euler genus\n"
    "  faces      --in <embedding>                        print the face walks\n"
    "  ncc        --in <embedding>                        shortest non-contractible cycle\n"
    "  classify   --in <embedding> --cycle v0,v1,...      classify a cycle\n"
    "  planarize  --in <embedding> [--root v] [--out f]   planarizing subgraph + quotient\n"
    "  color      --in <graph> --defects d1,d2,...        exact defective coloring\n"
    "             [--pin v=c]... [--jobs n] [--out f]\n"
    "  color      --in <embedding> --pipeline 000|22      planarize-and-lift pipelines\n"
    "             [--out f]\n"
    "  verify     --in <graph> --coloring <file>          check a coloring file\n"
    "  threshold  --family <name> --genus <g>             threshold K(g); families:\n"
    "             linear 2kk 00kk trianglefree girth7\n"
    "  generate   --family <name> --k <n> [--out f]       build a construction; families:\n"
    "             sprout g1 g2 gk not1kk descartes6 twostar7\n"
    "             (sprout also wants --in; descartes6 wants --sample s [--seed x],\n"
    "              --all --allow-huge, or --count-only)\n"
    "  audit      --in <embedding> --scheme <s> --K <n>   run a discharging scheme;\n"
    "             [--log] schemes: s34 s35 s41 s51\n";

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void usage_fail(const std::string& msg) { throw Usage(msg); }

struct Args {
    std::string command;
    std::map<std::string, std::string> value;
    std::vector<std::string> pins;
    std::set<std::string> flags;
};

const std::set<std::string> kValueFlags = {
    "--in",     "--out",  "--defects", "--family",   "--genus", "--k",    "--K",
    "--scheme", "--root", "--cycle",   "--coloring", "--pin",   "--jobs", "--sample",
    "--seed",   "--pipeline"};
const std::set<std::string> kBoolFlags = {"--count-only", "--all", "--allow-huge", "--log"};

Args parse_args(const std::vector<std::string>& argv) {
    if (argv.empty()) usage_fail("missing command");
    Args a;
    a.command = argv[0];
    for (size_t i = 1; i < argv.size(); ++i) {
        const std::string& f = argv[i];
        if (kBoolFlags.count(f)) {
            a.flags.insert(f);
        } else if (kValueFlags.count(f)) {
            if (i + 1 >= argv.size()) usage_fail(f + " wants a value");
            if (f == "--pin")
                a.pins.push_back(argv[++i]);
            else if (!a.value.insert({f, argv[++i]}).second)
                usage_fail(f + " given twice");
        } else {
            usage_fail("unknown flag `" + f + "`");
        }
    }
    return a;
}

void allow_flags(const Args& a, const std::set<std::string>& allowed) {
    for (const auto& [f, v] : a.value)
        if (!allowed.count(f)) usage_fail(a.command + " does not take " + f);
    for (const auto& f : a.flags)
        if (!allowed.count(f)) usage_fail(a.command + " does not take " + f);
    if (!a.pins.empty() && !allowed.count("--pin"))
        usage_fail(a.command + " does not take --pin");
}

std::string need(const Args& a, const std::string& flag) {
    auto it = a.value.find(flag);
    if (it == a.value.end()) usage_fail(a.command + " wants " + flag);
    return it->second;
}

std::optional<std::string> opt(const Args& a, const std::string& flag) {
    auto it = a.value.find(flag);
    if (it == a.value.end()) return std::nullopt;
    return it->second;
}

long long parse_ll(const std::string& flag, const std::string& tok) {
    long long v;
    const char* b = tok.data();
    auto [p, ec] = std::from_chars(b, b + tok.size(), v);
    if (ec != std::errc() || p != b + tok.size())
        usage_fail(flag + " wants an integer, got `" + tok + "`");
    return v;
}

int parse_int(const std::string& flag, const std::string& tok) {
    return static_cast<int>(parse_ll(flag, tok));
}

std::vector<int> parse_csv(const std::string& flag, const std::string& tok) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= tok.size()) {
        size_t comma = tok.find(',', start);
        size_t end = comma == std::string::npos ? tok.size() : comma;
        if (end == start) usage_fail(flag + " wants a comma-separated integer list");
        out.push_back(parse_int(flag, tok.substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

EmbeddedGraph need_embedding(const Args& a) {
    GraphInput gi = read_graph_input_file(need(a, "--in"));
    require(gi.embedding.has_value(), ErrorKind::Precondition,
            a.command + " needs an embedding input, but the file is an edge list");
    return *std::move(gi.embedding);
}

std::string charge_str(const Charge& c) {
    std::string s = std::to_string(c.numerator());
    if (c.denominator() != 1) s += "/" + std::to_string(c.denominator());
    return s;
}

std::string text_of_graph(const Graph& g, const std::string& header_comment) {
    std::ostringstream out;
    if (!header_comment.empty()) out << "c " << header_comment << '\n';
    write_edge_list(out, g);
    return out.str();
}

// ---------------------------------------------------------------------------

int cmd_genus(const Args& a, std::ostream& out) {
    allow_flags(a, {"--in"});
    out << "eg " << need_embedding(a).euler_genus() << '\n';
    return 0;
}

int cmd_faces(const Args& a, std::ostream& out) {
    allow_flags(a, {"--in"});
    EmbeddedGraph g = need_embedding(a);
    out << "faces " << g.face_count() << '\n';
    for (const FaceWalk& f : g.faces()) {
        out << "f " << f.degree() << ':';
        for (int v : g.face_vertices(f)) out << ' ' << v;
        out << '\n';
    }
    return 0;
}

int cmd_ncc(const Args& a, std::ostream& out) {
    allow_flags(a, {"--in"});
    EmbeddedGraph g = need_embedding(a);
    auto c = shortest_noncontractible_cycle(g);
    if (!c) {
        out << "none\n";
        return 1;
    }
    out << "cycle";
    for (int v : c->vertices) out << ' ' << v;
    out << '\n';
    out << "length " << c->length() << '\n';
    out << "class " << to_string(classify_cycle(g, *c)) << '\n';
    return 0;
}

int cmd_classify(const Args& a, std::ostream& out) {
    allow_flags(a, {"--in", "--cycle"});
    std::vector<int> vs = parse_csv("--cycle", need(a, "--cycle"));
    EmbeddedGraph g = need_embedding(a);
    CycleWalk c = CycleWalk::from_vertices(g, vs);
    out << "class " << to_string(classify_cycle(g, c)) << '\n';
    return 0;
}

int cmd_planarize(const Args& a, std::ostream& out) {
    allow_flags(a, {"--in", "--root", "--out"});
    int root = opt(a, "--root") ? parse_int("--root", *opt(a, "--root")) : 0;
    EmbeddedGraph g = need_embedding(a);
    PlanarizeResult r = planarizing_subgraph(g, root);
    out << "bound " << r.bound << '\n';
    out << "max_neighbors " << r.max_neighbors_in_h << '\n';
    out << "h";
    for (int v : r.h_vertices) out << ' ' << v;
    out << '\n';
    out << "h_image " << r.h_image << '\n';
    out << "quotient_vertices " << r.quotient.vertex_count() << '\n';
    out << "quotient_edges " << r.quotient.edge_count() << '\n';
    if (auto path = opt(a, "--out"))
        write_text_file(*path, text_of_graph(r.quotient, ""));
    return 0;
}

std::string coloring_text(const DefectVector& d, const std::vector<int>& color) {
    std::ostringstream s;
    write_coloring(s, d, color);
    return s.str();
}

int cmd_color(const Args& a, std::ostream& out) {
    allow_flags(a, {"--in", "--defects", "--pin", "--jobs", "--out", "--pipeline"});
    if (auto pipe = opt(a, "--pipeline")) {
        if (opt(a, "--defects") || !a.pins.empty() || opt(a, "--jobs"))
            usage_fail("--pipeline takes no --defects, --pin or --jobs");
        EmbeddedGraph g = need_embedding(a);
        PipelineResult r;
        if (*pipe == "000")
            r = color_000_9g4(g);
        else if (*pipe == "22")
            r = color_22_9g4(g);
        else
            usage_fail("--pipeline wants 000 or 22");
        out << "SAT\n";
        out << "pipeline " << *pipe << '\n';
        out << "h";
        for (int v : r.h_vertices) out << ' ' << v;
        out << '\n';
        std::string text = coloring_text(r.defects, r.coloring.color);
        out << text;
        if (auto path = opt(a, "--out")) write_text_file(*path, text);
        return 0;
    }

    DefectVector defects(parse_csv("--defects", need(a, "--defects")));
    PinList pins;
    for (const std::string& p : a.pins) {
        size_t eq = p.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == p.size())
            usage_fail("--pin wants v=c, got `" + p + "`");
        pins.push_back({parse_int("--pin", p.substr(0, eq)), parse_int("--pin", p.substr(eq + 1))});
    }
    SolveOptions opts;
    if (auto j = opt(a, "--jobs")) opts.jobs = parse_int("--jobs", *j);
    GraphInput gi = read_graph_input_file(need(a, "--in"));
    SolveStats stats;
    auto res = solve_exact(gi.graph, defects, pins, opts, &stats);
    if (!res) {
        out << "UNSAT\n";
        out << "nodes " << stats.nodes << '\n';
        if (!stats.reason.empty()) out << "reason " << stats.reason << '\n';
        return 1;
    }
    out << "SAT\n";
    out << "nodes " << stats.nodes << '\n';
    std::string text = coloring_text(defects, res->color);
    out << text;
    if (auto path = opt(a, "--out")) write_text_file(*path, text);
    return 0;
}

int cmd_verify(const Args& a, std::ostream& out) {
    allow_flags(a, {"--in", "--coloring"});
    GraphInput gi = read_graph_input_file(need(a, "--in"));
    ColoringFile cf = read_coloring_file(need(a, "--coloring"), gi.graph.vertex_count());
    Coloring col = make_coloring(gi.graph, cf.color);
    auto violations = verify_coloring(gi.graph, cf.defects, col);
    if (violations.empty()) {
        out << "VALID\n";
        return 0;
    }
    out << "INVALID " << violations.size() << " violations\n";
    for (const Violation& v : violations)
        out << "violation " << v.vertex << " color " << v.color << " defect " << v.defect
            << " allowed " << v.allowed << '\n';
    return 1;
}

std::string number_str(double x) {
    long long i = static_cast<long long>(x);
    if (static_cast<double>(i) == x) return std::to_string(i);
    std::ostringstream s;
    s.precision(6);
    s << std::fixed << x;
    return s.str();
}

int cmd_threshold(const Args& a, std::ostream& out) {
    allow_flags(a, {"--family", "--genus"});
    std::string name = need(a, "--family");
    auto fam = threshold_family_from_name(name);
    if (!fam) usage_fail("unknown threshold family `" + name + "`");
    int g = parse_int("--genus", need(a, "--genus"));
    Threshold t = threshold(*fam, g);
    out << "family " << to_string(t.family) << '\n';
    out << "genus " << t.genus << '\n';
    if (t.integral)
        out << "K " << t.ivalue << '\n';
    else
        out << "K " << number_str(t.value) << '\n';
    if (t.residual) out << "residual " << number_str(*t.residual) << '\n';
    return 0;
}

int cmd_generate(const Args& a, std::ostream& out) {
    allow_flags(a, {"--family", "--k", "--in", "--out", "--sample", "--seed", "--count-only",
                    "--all", "--allow-huge"});
    std::string family = need(a, "--family");
    int k = parse_int("--k", need(a, "--k"));
    bool count_only = a.flags.count("--count-only") > 0;

    if (family == "descartes6" && count_only && !opt(a, "--sample") && !a.flags.count("--all")) {
        out << "vertices " << descartes_vertices(k) << '\n';
        out << "edges " << descartes_edges(k) << '\n';
        return 0;
    }

    GeneratedGraph gen;
    if (family == "sprout") {
        Graph basic = read_graph_input_file(need(a, "--in")).graph;
        gen = sprout(basic, k);
    } else if (family == "g1" || family == "g2") {
        gen = sprout(complete_graph(family == "g1" ? 4 : 7), k + 1);
        gen.meta.family = family;
        gen.meta.parameter = k;
        gen.meta.target = family == "g1" ? "(0,0,0," + std::to_string(k) + ")"
                                         : "(2,2," + std::to_string(k) + ")";
    } else if (family == "gk") {
        gen = gk_2kk(k);
    } else if (family == "not1kk") {
        gen = not_1kk(k);
    } else if (family == "descartes6") {
        DescartesOptions o;
        o.all = a.flags.count("--all") > 0;
        o.allow_huge = a.flags.count("--allow-huge") > 0;
        if (auto s = opt(a, "--sample")) o.sample = parse_int("--sample", *s);
        if (auto s = opt(a, "--seed")) o.seed = static_cast<std::uint64_t>(parse_ll("--seed", *s));
        if (!o.all && o.sample <= 0)
            usage_fail("descartes6 wants --sample s, --all --allow-huge, or --count-only");
        gen = descartes_girth6(k, o);
    } else if (family == "twostar7") {
        gen = two_star_girth7(k);
    } else {
        usage_fail("unknown family `" + family + "`");
    }

    if (count_only) {
        out << "vertices " << gen.meta.vertices << '\n';
        out << "edges " << gen.meta.edges << '\n';
        return 0;
    }

    std::string header = "family " + gen.meta.family + " k " + std::to_string(k);
    if (gen.meta.sampled)
        header += " sample " + std::to_string(gen.meta.sample_size) + " seed " +
                  std::to_string(gen.meta.seed);
    std::string text = text_of_graph(gen.graph, header);
    if (auto path = opt(a, "--out")) {
        write_text_file(*path, text);
        std::ostringstream meta;
        write_meta(meta, meta_lines(gen.meta));
        write_text_file(*path + ".meta", meta.str());
        out << "vertices " << gen.meta.vertices << '\n';
        out << "edges " << gen.meta.edges << '\n';
    } else {
        out << text;
    }
    return 0;
}

int cmd_audit(const Args& a, std::ostream& out) {
    allow_flags(a, {"--in", "--scheme", "--K", "--log"});
    ChargeScheme scheme = charge_scheme_from_name(need(a, "--scheme"));
    int K = parse_int("--K", need(a, "--K"));
    EmbeddedGraph g = need_embedding(a);
    AuditReport rep = audit(g, scheme, K);
    out << "scheme " << to_string(scheme) << '\n';
    out << "K " << K << '\n';
    out << "high_threshold " << high_threshold(scheme, K) << '\n';
    out << "initial_total " << charge_str(rep.ledger.initial_total()) << '\n';
    out << "final_total " << charge_str(rep.ledger.final_total()) << '\n';
    out << "transfers " << rep.ledger.log.size() << '\n';
    if (a.flags.count("--log")) {
        for (const Transfer& t : rep.ledger.log)
            out << "t " << (t.source.face ? 'f' : 'v') << t.source.id << " -> "
                << (t.target.face ? 'f' : 'v') << t.target.id << ' ' << charge_str(t.amount)
                << ' ' << t.rule << '\n';
    }
    for (const std::string& n : rep.notes) out << "note " << n << '\n';
    return 0;
}

int dispatch(const Args& a, std::ostream& out) {
    if (a.command == "genus") return cmd_genus(a, out);
    if (a.command == "faces") return cmd_faces(a, out);
    if (a.command == "ncc") return cmd_ncc(a, out);
    if (a.command == "classify") return cmd_classify(a, out);
    if (a.command == "planarize") return cmd_planarize(a, out);
    if (a.command == "color") return cmd_color(a, out);
    if (a.command == "verify") return cmd_verify(a, out);
    if (a.command == "threshold") return cmd_threshold(a, out);
    if (a.command == "generate") return cmd_generate(a, out);
    if (a.command == "audit") return cmd_audit(a, out);
    usage_fail("unknown command `" + a.command + "`");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(parse_args(args), out);
    } catch (const Usage& u) {
        err << "usage error: " << u.what() << '\n' << kUsage;
        return 2;
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::Io: err << "io error: " << e.what() << '\n'; break;
            case ErrorKind::Format: err << "format error: " << e.what() << '\n'; break;
            case ErrorKind::Precondition: err << "precondition failed: " << e.what() << '\n'; break;
            case ErrorKind::Invariant: err << "internal error: " << e.what() << '\n'; break;
        }
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace surfcol::cli
