#include "surfcol/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "surfcol/error.hpp"

namespace surfcol {

namespace {

[[noreturn]] void bad(const char* what, int line, const std::string& why) {
    fail(ErrorKind::Format, std::string("malformed ") + what + ": line " +
                                std::to_string(line) + ": " + why);
}

[[noreturn]] void bad(const char* what, const std::string& why) {
    fail(ErrorKind::Format, std::string("malformed ") + what + ": " + why);
}

bool parse_ll(const std::string& tok, long long& out) {
    const char* b = tok.data();
    const char* e = b + tok.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(std::move(t));
    return toks;
}

long long int_tok(const char* what, int line, const std::vector<std::string>& toks, size_t i) {
    long long v;
    if (i >= toks.size() || !parse_ll(toks[i], v))
        bad(what, line, "expected an integer in field " + std::to_string(i + 1));
    return v;
}

// Comma-separated non-negative integers packed into one token.
std::vector<int> int_csv(const char* what, int line, const std::string& tok) {
    std::vector<int> out;
    size_t start = 0;
    while (start <= tok.size()) {
        size_t comma = tok.find(',', start);
        size_t end = comma == std::string::npos ? tok.size() : comma;
        long long v;
        if (end == start || !parse_ll(tok.substr(start, end - start), v) || v < 0)
            bad(what, line, "expected a comma-separated integer list, got `" + tok + "`");
        out.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    const char* what = "edge list";
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) bad(what, line_no, "repeated `p` header");
            if (toks.size() != 3) bad(what, line_no, "`p` wants exactly `p <n> <m>`");
            n = int_tok(what, line_no, toks, 1);
            m = int_tok(what, line_no, toks, 2);
            if (n < 0 || m < 0) bad(what, line_no, "negative count in `p` header");
            have_header = true;
        } else if (toks[0] == "e") {
            if (!have_header) bad(what, line_no, "`e` before the `p` header");
            if (toks.size() != 3) bad(what, line_no, "`e` wants exactly `e <u> <v>`");
            long long u = int_tok(what, line_no, toks, 1);
            long long v = int_tok(what, line_no, toks, 2);
            if (u < 0 || u >= n || v < 0 || v >= n)
                bad(what, line_no, "vertex out of range [0," + std::to_string(n) + ")");
            if (u == v) bad(what, line_no, "loop at vertex " + std::to_string(u));
            int a = static_cast<int>(u), b = static_cast<int>(v);
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second)
                bad(what, line_no,
                    "repeated edge " + std::to_string(a) + " " + std::to_string(b));
            edges.push_back({a, b});
        } else {
            bad(what, line_no, "unrecognized line type `" + toks[0] + "`");
        }
    }
    if (!have_header) bad(what, "missing `p <n> <m>` header");
    if (static_cast<long long>(edges.size()) != m)
        bad(what, "header promised " + std::to_string(m) + " edges, file has " +
                      std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges, /*validate=*/false);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
}

EmbeddedGraph read_embedding(std::istream& in) {
    const char* what = "embedding";
    std::vector<std::vector<int>> rotation;
    std::vector<bool> seen_vertex;
    std::vector<std::pair<long long, int>> sign_lines;  // (edge, sign)
    long long max_dart = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "v") {
            if (toks.size() < 2) bad(what, line_no, "`v` wants `v <id>: <dart>...`");
            std::string id_tok = toks[1];
            size_t dart_from = 2;
            if (!id_tok.empty() && id_tok.back() == ':') {
                id_tok.pop_back();
            } else {
                if (toks.size() < 3 || toks[2] != ":")
                    bad(what, line_no, "missing `:` after the vertex id");
                dart_from = 3;
            }
            long long id;
            if (!parse_ll(id_tok, id) || id < 0)
                bad(what, line_no, "bad vertex id `" + id_tok + "`");
            if (id >= static_cast<long long>(rotation.size())) {
                rotation.resize(id + 1);
                seen_vertex.resize(id + 1, false);
            }
            if (seen_vertex[id]) bad(what, line_no, "repeated vertex " + std::to_string(id));
            seen_vertex[id] = true;
            for (size_t i = dart_from; i < toks.size(); ++i) {
                long long d;
                if (!parse_ll(toks[i], d) || d < 0)
                    bad(what, line_no, "bad dart `" + toks[i] + "`");
                rotation[id].push_back(static_cast<int>(d));
                max_dart = std::max(max_dart, d);
            }
        } else if (toks[0] == "s") {
            if (toks.size() != 3) bad(what, line_no, "`s` wants exactly `s <edge> +|-`");
            long long e = int_tok(what, line_no, toks, 1);
            if (e < 0) bad(what, line_no, "bad edge id");
            int sgn;
            if (toks[2] == "+")
                sgn = 1;
            else if (toks[2] == "-")
                sgn = -1;
            else
                bad(what, line_no, "sign must be `+` or `-`, got `" + toks[2] + "`");
            sign_lines.push_back({e, sgn});
        } else {
            bad(what, line_no, "unrecognized line type `" + toks[0] + "`");
        }
    }
    for (size_t v = 0; v < seen_vertex.size(); ++v)
        if (!seen_vertex[v]) bad(what, "no `v` line for vertex " + std::to_string(v));
    if (rotation.empty()) bad(what, "no `v` lines");
    long long edge_count = max_dart < 0 ? 0 : max_dart / 2 + 1;
    std::vector<int> signs(edge_count, 1);
    for (auto [e, sgn] : sign_lines) {
        if (e >= edge_count)
            bad(what, "sign for edge " + std::to_string(e) + " but darts only name " +
                          std::to_string(edge_count) + " edges");
        signs[e] = sgn;
    }
    return EmbeddedGraph::build(rotation, signs);
}

void write_embedding(std::ostream& out, const EmbeddedGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "v " << v << ':';
        for (int d : g.rotation(v)) out << ' ' << d;
        out << '\n';
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.sign(e) < 0) out << "s " << e << " -\n";
}

ColoringFile read_coloring(std::istream& in, int vertex_count) {
    const char* what = "coloring";
    require(vertex_count >= 0, ErrorKind::Precondition, "negative vertex count");
    ColoringFile cf;
    cf.color.assign(vertex_count, 0);
    bool have_header = false;
    int k = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "k") {
            if (have_header) bad(what, line_no, "repeated `k` header");
            if (toks.size() != 4 || toks[2] != "d")
                bad(what, line_no, "header wants `k <k> d <d1,...,dk>`");
            long long kk = int_tok(what, line_no, toks, 1);
            if (kk < 1) bad(what, line_no, "need at least one color");
            auto ds = int_csv(what, line_no, toks[3]);
            if (static_cast<long long>(ds.size()) != kk)
                bad(what, line_no, "`k` says " + std::to_string(kk) + " colors but `d` lists " +
                                       std::to_string(ds.size()));
            k = static_cast<int>(kk);
            cf.defects = DefectVector(ds);
            have_header = true;
        } else if (toks[0] == "c") {
            if (!have_header) bad(what, line_no, "`c` before the `k` header");
            if (toks.size() != 3) bad(what, line_no, "`c` wants exactly `c <vertex> <color>`");
            long long v = int_tok(what, line_no, toks, 1);
            long long col = int_tok(what, line_no, toks, 2);
            if (v < 0 || v >= vertex_count)
                bad(what, line_no,
                    "vertex out of range [0," + std::to_string(vertex_count) + ")");
            if (col < 1 || col > k)
                bad(what, line_no, "color out of range [1," + std::to_string(k) + "]");
            if (cf.color[v] != 0) bad(what, line_no, "vertex " + std::to_string(v) +
                                                         " colored twice");
            cf.color[v] = static_cast<int>(col);
        } else {
            bad(what, line_no, "unrecognized line type `" + toks[0] + "`");
        }
    }
    if (!have_header) bad(what, "missing `k <k> d <...>` header");
    return cf;
}

void write_coloring(std::ostream& out, const DefectVector& defects,
                    const std::vector<int>& color) {
    out << "k " << defects.k() << " d ";
    for (int i = 0; i < defects.k(); ++i) {
        if (i) out << ',';
        out << defects.d[i];
    }
    out << '\n';
    for (size_t v = 0; v < color.size(); ++v)
        if (color[v] != 0) out << "c " << v << ' ' << color[v] << '\n';
}

MetaLines meta_lines(const GenMeta& meta) {
    MetaLines out;
    out.push_back({"family", meta.family});
    out.push_back({"parameter", std::to_string(meta.parameter)});
    out.push_back({"vertices", std::to_string(meta.vertices)});
    out.push_back({"edges", std::to_string(meta.edges)});
    if (meta.girth_claim > 0) out.push_back({"girth", std::to_string(meta.girth_claim)});
    if (!meta.target.empty()) out.push_back({"target", meta.target});
    out.push_back({"genus_bound", std::to_string(meta.genus_bound)});
    if (meta.root >= 0) out.push_back({"root", std::to_string(meta.root)});
    if (meta.sampled) {
        out.push_back({"sampled", "1"});
        out.push_back({"sample_size", std::to_string(meta.sample_size)});
        out.push_back({"seed", std::to_string(meta.seed)});
    }
    return out;
}

MetaLines read_meta(std::istream& in) {
    MetaLines out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto sp = line.find(' ');
        if (line.empty()) continue;
        if (sp == std::string::npos || sp == 0 || sp + 1 == line.size())
            bad("meta", line_no, "expected `<key> <value>`");
        out.push_back({line.substr(0, sp), line.substr(sp + 1)});
    }
    return out;
}

void write_meta(std::ostream& out, const MetaLines& lines) {
    for (const auto& [k, v] : lines) out << k << ' ' << v << '\n';
}

GraphInput read_graph_input(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::istringstream sniff(text);
    std::string line, first;
    while (std::getline(sniff, line)) {
        auto toks = tokens_of(line);
        if (!toks.empty()) {
            first = toks[0];
            break;
        }
    }
    if (first.empty()) bad("graph input", "empty input");
    std::istringstream body(text);
    GraphInput gi;
    if (first == "v" || first == "s") {
        gi.embedding = read_embedding(body);
        gi.graph = gi.embedding->graph();
    } else if (first == "p" || first == "c") {
        gi.graph = read_edge_list(body);
    } else {
        bad("graph input", "first line starts with `" + first +
                               "`; expected an edge list (`p`/`c`) or an embedding (`v`)");
    }
    return gi;
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot read file: " + path);
    return in;
}

}  // namespace

Graph read_edge_list_file(const std::string& path) {
    auto in = open_input(path);
    return read_edge_list(in);
}

EmbeddedGraph read_embedding_file(const std::string& path) {
    auto in = open_input(path);
    return read_embedding(in);
}

ColoringFile read_coloring_file(const std::string& path, int vertex_count) {
    auto in = open_input(path);
    return read_coloring(in, vertex_count);
}

GraphInput read_graph_input_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph_input(in);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write file: " + path);
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::Io, "cannot write file: " + path);
}

}  // namespace surfcol
