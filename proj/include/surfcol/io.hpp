#pragma once

// On-disk formats. Readers take istreams; *_file helpers wrap ifstreams and
// raise Io errors for unreadable paths. Writers emit one canonical byte
// form, so parse-then-print is the identity on canonical files.
//
// Edge list      `c <comment>` lines anywhere, one `p <n> <m>` header, then
//                exactly m lines `e <u> <v>` with 0 <= u,v < n, no loops or
//                repeats. Canonical: header first, edges with u < v sorted
//                lexicographically.
// Embedding      `v <id>: <dart> <dart> ...` per vertex in cyclic order;
//                edge e owns darts 2e and 2e+1. `s <edge> -` flags a
//                negative edge (`s <edge> +` is accepted and dropped:
//                positive is the default). Canonical: v lines for 0..n-1 in
//                order, then the negative s lines ascending.
// Coloring       header `k <k> d <d1,...,dk>`, then `c <vertex> <color>`
//                lines, colors 1-based; unassigned vertices have no line.
//                Canonical: c lines ascending by vertex.
// Meta sidecar   `<key> <value>` per line, fixed key order.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcol/coloring.hpp"
#include "surfcol/constructions.hpp"
#include "surfcol/embedding.hpp"
#include "surfcol/graph.hpp"

namespace surfcol {

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

EmbeddedGraph read_embedding(std::istream& in);
void write_embedding(std::ostream& out, const EmbeddedGraph& g);

struct ColoringFile {
    DefectVector defects;
    std::vector<int> color;  // size = vertex count passed to the reader; 0 = unassigned
};

ColoringFile read_coloring(std::istream& in, int vertex_count);
void write_coloring(std::ostream& out, const DefectVector& defects,
                    const std::vector<int>& color);

using MetaLines = std::vector<std::pair<std::string, std::string>>;
MetaLines meta_lines(const GenMeta& meta);
MetaLines read_meta(std::istream& in);
void write_meta(std::ostream& out, const MetaLines& lines);

// A graph input file of either format, sniffed from the first meaningful
// line: `p`/`c` means edge list, `v` means embedding (and then the abstract
// graph is derived from it).
struct GraphInput {
    Graph graph;
    std::optional<EmbeddedGraph> embedding;
};

GraphInput read_graph_input(std::istream& in);

Graph read_edge_list_file(const std::string& path);
EmbeddedGraph read_embedding_file(const std::string& path);
ColoringFile read_coloring_file(const std::string& path, int vertex_count);
GraphInput read_graph_input_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace surfcol
