#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rrgd/drawing.hpp"
#include "rrgd/graph.hpp"
#include "rrgd/optimizer.hpp"

namespace rrgd {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    /// 1-based line of the offending input, 0 when not line-specific.
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// "u v" per line, '#' comments and blank lines ignored. Vertices are
/// 0..max id. Self-loops, duplicates and malformed lines throw ParseError.
Graph parse_edge_list(std::string_view text);

struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // original node id per dense vertex id
};

/// node/edge elements of an undirected GraphML graph; keys, data and other
/// attributes are ignored. Throws ParseError on malformed or directed input.
LabeledGraph parse_graphml_subset(std::string_view xml);

/// Dispatches on extension: .graphml/.xml -> GraphML, anything else -> edge list.
LabeledGraph read_graph_file(const std::filesystem::path& path);

inline constexpr int kDrawingSchemaVersion = 1;

struct DrawingDocument {
    Graph graph;
    Drawing drawing;
    std::vector<std::string> labels;  // empty or one per vertex
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

    friend bool operator==(const DrawingDocument&, const DrawingDocument&) = default;
};

/// JSON text; doubles are written with round-trip precision.
std::string write_drawing(const DrawingDocument& doc);
/// Throws ParseError on schema violations (unknown version, duplicate or
/// dangling ids, positions outside the box).
DrawingDocument read_drawing(std::string_view json_text);

/// One line per edge and one circle per vertex; viewport = expanded box,
/// y axis pointing up.
std::string write_svg(const Graph& g, const Drawing& d);

/// One JSON record per iteration of the run.
std::string write_trace(const RunStats& stats);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace rrgd
