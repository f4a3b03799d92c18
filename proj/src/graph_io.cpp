#include "pgraph/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pgraph {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw GraphParseError(msg); }

double number_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) fail(where + ": missing field \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(where + ": field \"" + key + "\" is not a number");
    return v.get<double>();
}

int int_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) fail(where + ": missing field \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(where + ": field \"" + key + "\" is not an integer");
    return v.get<int>();
}

}  // namespace

WeightedGraph load_graph_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(std::string("json: ") + e.what());
    }
    if (!doc.is_object()) fail("json: top level is not an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        fail("json: missing \"vertices\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array()) fail("json: missing \"edges\" array");

    const auto& vs = doc["vertices"];
    const int n = static_cast<int>(vs.size());
    std::vector<double> m(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const std::string where = "json: vertices[" + std::to_string(i) + "]";
        if (!vs[i].is_object()) fail(where + ": not an object");
        const int id = int_field(vs[i], "id", where);
        if (id < 0 || id >= n)
            fail(where + ": id " + std::to_string(id) + " not in 0.." + std::to_string(n - 1));
        if (seen[static_cast<std::size_t>(id)]) fail(where + ": duplicate id " + std::to_string(id));
        seen[static_cast<std::size_t>(id)] = true;
        m[static_cast<std::size_t>(id)] = number_field(vs[i], "m", where);
        c[static_cast<std::size_t>(id)] = number_field(vs[i], "c", where);
    }

    std::vector<EdgeRecord> edges;
    edges.reserve(doc["edges"].size());
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const std::string where = "json: edges[" + std::to_string(i) + "]";
        const json& e = doc["edges"][i];
        if (!e.is_object()) fail(where + ": not an object");
        edges.push_back(EdgeRecord{int_field(e, "x", where), int_field(e, "y", where),
                                   number_field(e, "b", where)});
    }

    std::optional<VertexSet> interior;
    if (doc.contains("interior")) {
        if (!doc["interior"].is_array()) fail("json: \"interior\" is not an array");
        VertexSet set(n);
        for (std::size_t i = 0; i < doc["interior"].size(); ++i) {
            const json& v = doc["interior"][i];
            if (!v.is_number_integer())
                fail("json: interior[" + std::to_string(i) + "] is not an integer");
            const int id = v.get<int>();
            if (id < 0 || id >= n)
                fail("json: interior[" + std::to_string(i) + "]: id " + std::to_string(id) +
                     " not in 0.." + std::to_string(n - 1));
            set.insert(id);
        }
        interior = std::move(set);
    }

    try {
        return WeightedGraph(std::move(m), std::move(c), edges, std::move(interior));
    } catch (const std::invalid_argument& e) {
        fail(std::string("json: ") + e.what());
    }
}

namespace {

struct TsvRow {
    std::vector<std::string> fields;
    int line;
};

std::vector<TsvRow> read_tsv(std::istream& in) {
    std::vector<TsvRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        TsvRow row;
        row.line = lineno;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = line.find('\t', start);
            row.fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double parse_number(const std::string& s, int line, int field) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail("tsv: line " + std::to_string(line) + ", field " + std::to_string(field) +
             ": expected number, got \"" + s + "\"");
    }
}

int parse_id(const std::string& s, int line, int field) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        if (v < 0) throw std::out_of_range(s);
        return v;
    } catch (const std::exception&) {
        fail("tsv: line " + std::to_string(line) + ", field " + std::to_string(field) +
             ": expected nonnegative integer id, got \"" + s + "\"");
    }
}

}  // namespace

WeightedGraph load_graph_tsv(std::istream& edge_stream, std::istream* vertex_sidecar) {
    std::vector<EdgeRecord> edges;
    int max_id = -1;
    for (const TsvRow& row : read_tsv(edge_stream)) {
        if (row.fields.size() != 3)
            fail("tsv: line " + std::to_string(row.line) + ": expected 3 fields x<TAB>y<TAB>b, got " +
                 std::to_string(row.fields.size()));
        EdgeRecord e;
        e.x = parse_id(row.fields[0], row.line, 1);
        e.y = parse_id(row.fields[1], row.line, 2);
        e.b = parse_number(row.fields[2], row.line, 3);
        max_id = std::max({max_id, e.x, e.y});
        edges.push_back(e);
    }

    std::map<int, std::pair<double, double>> vertex_rows;
    if (vertex_sidecar != nullptr) {
        for (const TsvRow& row : read_tsv(*vertex_sidecar)) {
            if (row.fields.size() != 3)
                fail("tsv sidecar: line " + std::to_string(row.line) +
                     ": expected 3 fields id<TAB>m<TAB>c, got " + std::to_string(row.fields.size()));
            const int id = parse_id(row.fields[0], row.line, 1);
            const double m = parse_number(row.fields[1], row.line, 2);
            const double c = parse_number(row.fields[2], row.line, 3);
            if (!vertex_rows.emplace(id, std::make_pair(m, c)).second)
                fail("tsv sidecar: line " + std::to_string(row.line) + ": duplicate vertex id " +
                     std::to_string(id));
            max_id = std::max(max_id, id);
        }
    }

    const int n = max_id + 1;
    if (n == 0) fail("tsv: no vertices (empty edge list and no sidecar)");
    std::vector<double> m(static_cast<std::size_t>(n), 1.0);
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    for (const auto& [id, mc] : vertex_rows) {
        m[static_cast<std::size_t>(id)] = mc.first;
        c[static_cast<std::size_t>(id)] = mc.second;
    }

    try {
        return WeightedGraph(std::move(m), std::move(c), edges);
    } catch (const std::invalid_argument& e) {
        fail(std::string("tsv: ") + e.what());
    }
}

WeightedGraph load_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::json ? load_graph_json(in) : load_graph_tsv(in);
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open graph file: " + path);
    const bool json_ext = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    if (json_ext) return load_graph_json(in);
    std::ifstream sidecar(path + ".vertices");
    return load_graph_tsv(in, sidecar ? &sidecar : nullptr);
}

}  // namespace pgraph
