#include "rrgd/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace rrgd {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_id(std::string_view token, VertexId& out) {
    if (token.empty()) return false;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

Graph build_graph(std::size_t n, std::vector<Edge> edges, std::size_t line = 0) {
    try {
        return Graph(n, std::move(edges));
    } catch (const GraphError& e) {
        throw ParseError(e.what(), line);
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::map<std::pair<VertexId, VertexId>, std::size_t> seen;
    std::size_t vertex_count = 0;
    std::size_t line_no = 0;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto split = line.find_first_of(" \t");
        if (split == std::string_view::npos) throw ParseError("expected two vertex ids", line_no);
        const std::string_view first = line.substr(0, split);
        const std::string_view second = trim(line.substr(split));
        VertexId u = 0;
        VertexId v = 0;
        if (!parse_id(first, u) || !parse_id(second, v)) {
            throw ParseError("expected two non-negative integer vertex ids", line_no);
        }
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line_no);
        const auto key = std::minmax(u, v);
        if (auto [it, fresh] = seen.emplace(key, line_no); !fresh) {
            throw ParseError("duplicate edge " + std::to_string(key.first) + " " +
                                 std::to_string(key.second) + " (first on line " +
                                 std::to_string(it->second) + ")",
                             line_no);
        }
        edges.push_back({u, v});
        vertex_count = std::max<std::size_t>(vertex_count, std::max(u, v) + std::size_t{1});
    }
    return build_graph(vertex_count, std::move(edges));
}

LabeledGraph parse_graphml_subset(std::string_view xml) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        std::istringstream in{std::string(xml)};
        pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError("malformed GraphML: " + e.message(), e.line());
    }

    const auto root = tree.get_child_optional("graphml");
    if (!root) throw ParseError("missing <graphml> root element");
    const auto graph = root->get_child_optional("graph");
    if (!graph) throw ParseError("missing <graph> element");
    if (graph->get("<xmlattr>.edgedefault", std::string("undirected")) == "directed") {
        throw ParseError("directed graphs are not supported");
    }

    LabeledGraph out;
    std::unordered_map<std::string, VertexId> index;
    std::vector<Edge> edges;
    for (const auto& [tag, child] : *graph) {
        if (tag != "node") continue;
        const auto id = child.get_optional<std::string>("<xmlattr>.id");
        if (!id) throw ParseError("node without id");
        const auto next = static_cast<VertexId>(out.labels.size());
        if (!index.emplace(*id, next).second) throw ParseError("duplicate node id '" + *id + "'");
        out.labels.push_back(*id);
    }
    for (const auto& [tag, child] : *graph) {
        if (tag != "edge") continue;
        const auto source = child.get_optional<std::string>("<xmlattr>.source");
        const auto target = child.get_optional<std::string>("<xmlattr>.target");
        if (!source || !target) throw ParseError("edge without source or target");
        const auto s = index.find(*source);
        const auto t = index.find(*target);
        if (s == index.end()) throw ParseError("edge references undeclared node '" + *source + "'");
        if (t == index.end()) throw ParseError("edge references undeclared node '" + *target + "'");
        edges.push_back({s->second, t->second});
    }
    out.graph = build_graph(out.labels.size(), std::move(edges));
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("error writing " + path.string());
}

LabeledGraph read_graph_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".graphml" || ext == ".xml") return parse_graphml_subset(text);
    return {parse_edge_list(text), {}};
}

std::string write_drawing(const DrawingDocument& doc) {
    const Drawing& d = doc.drawing;
    Json j;
    j["schema"] = kDrawingSchemaVersion;
    Json nodes = Json::array();
    for (VertexId v = 0; v < d.size(); ++v) {
        Json node;
        node["id"] = v;
        node["x"] = d.position(v).x;
        node["y"] = d.position(v).y;
        if (!doc.labels.empty()) node["label"] = doc.labels[v];
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const Edge& e : doc.graph.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    const BoundingBox& b = d.box();
    j["box"] = {{"min", {b.min.x, b.min.y}}, {"max", {b.max.x, b.max.y}}, {"margin", b.margin}};
    j["metadata"] = doc.metadata;
    return j.dump(2) + "\n";
}

DrawingDocument read_drawing(std::string_view json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed drawing JSON: ") + e.what());
    }
    try {
        if (j.at("schema").get<int>() != kDrawingSchemaVersion) {
            throw ParseError("unsupported drawing schema version");
        }
        DrawingDocument doc;
        std::unordered_map<long long, VertexId> index;
        std::vector<Point> positions;
        for (const auto& node : j.at("nodes")) {
            const auto id = node.at("id").get<long long>();
            const auto next = static_cast<VertexId>(positions.size());
            if (!index.emplace(id, next).second) {
                throw ParseError("duplicate node id " + std::to_string(id));
            }
            positions.push_back({node.at("x").get<double>(), node.at("y").get<double>()});
            if (node.contains("label")) {
                doc.labels.resize(positions.size());
                doc.labels.back() = node.at("label").get<std::string>();
            }
        }
        if (!doc.labels.empty()) doc.labels.resize(positions.size());

        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            const auto a = index.find(e.at(0).get<long long>());
            const auto b = index.find(e.at(1).get<long long>());
            if (a == index.end() || b == index.end()) {
                throw ParseError("edge references a missing node");
            }
            edges.push_back({a->second, b->second});
        }
        doc.graph = build_graph(positions.size(), std::move(edges));

        const auto& box = j.at("box");
        const BoundingBox b{{box.at("min").at(0).get<double>(), box.at("min").at(1).get<double>()},
                            {box.at("max").at(0).get<double>(), box.at("max").at(1).get<double>()},
                            box.at("margin").get<double>()};
        try {
            doc.drawing = Drawing(std::move(positions), b);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        if (j.contains("metadata")) doc.metadata = j.at("metadata");
        return doc;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid drawing document: ") + e.what());
    }
}

std::string write_svg(const Graph& g, const Drawing& d) {
    const BoundingBox& b = d.box();
    const double flip = b.min.y + b.max.y;
    const double radius = 0.005 * b.diagonal();
    const double stroke = 0.0015 * b.diagonal();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(b.min.x) << ' '
        << format_double(b.min.y) << ' ' << format_double(b.width()) << ' '
        << format_double(b.height()) << "\">\n";
    for (const Edge& e : g.edges()) {
        const Point p = d.position(e.u);
        const Point q = d.position(e.v);
        out << "  <line x1=\"" << format_double(p.x) << "\" y1=\"" << format_double(flip - p.y)
            << "\" x2=\"" << format_double(q.x) << "\" y2=\"" << format_double(flip - q.y)
            << "\" stroke=\"black\" stroke-width=\"" << format_double(stroke) << "\"/>\n";
    }
    for (VertexId v = 0; v < d.size(); ++v) {
        const Point p = d.position(v);
        out << "  <circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(flip - p.y)
            << "\" r=\"" << format_double(radius) << "\" fill=\"steelblue\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string write_trace(const RunStats& stats) {
    std::ostringstream out;
    for (const IterationRecord& r : stats.records) {
        Json j;
        j["iteration"] = r.iteration;
        j["moved"] = r.moved ? Json(*r.moved) : Json(nullptr);
        j["cr"] = r.crossings;
        j["energy"] = r.energy;
        out << j.dump() << '\n';
    }
    return out.str();
}

}  // namespace rrgd
