#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "pgraph/graph.hpp"

namespace pgraph {

enum class GraphFormat { json, tsv };

/// Parse failure with the offending location (JSON pointer-ish path or
/// TSV line/field) embedded in the message.
class GraphParseError : public std::runtime_error {
public:
    explicit GraphParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// JSON schema:
///   {"vertices": [{"id": int, "m": float, "c": float}, ...],
///    "edges":    [{"x": int, "y": int, "b": float}, ...],
///    "interior": [int, ...]}          // optional; default: all vertices
/// Vertex ids must be exactly 0..n-1 (any order).
WeightedGraph load_graph_json(std::istream& in);

/// Tab-separated edge list, one "x<TAB>y<TAB>b" per line. Blank lines and
/// lines starting with '#' are skipped. Vertex count is max id + 1 unless a
/// sidecar stream provides per-vertex "id<TAB>m<TAB>c" rows; vertices absent
/// from the sidecar default to m = 1, c = 0.
WeightedGraph load_graph_tsv(std::istream& edges, std::istream* vertex_sidecar = nullptr);

WeightedGraph load_graph(std::istream& in, GraphFormat format);

/// Loads from a path; format inferred from extension (.json vs anything else
/// = TSV) unless forced. For TSV, "<path>.vertices" is used as sidecar when
/// present.
WeightedGraph load_graph_file(const std::string& path);

}  // namespace pgraph
