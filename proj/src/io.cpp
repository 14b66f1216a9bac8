#include "kcr/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kcr::io {

using nlohmann::json;

namespace {

template <typename Pairs>
void write_pairs(std::ostream& out, const Pairs& pairs) {
    out << '[';
    bool first = true;
    for (const auto& [a, b] : pairs) {
        out << (first ? "" : ",") << '[' << a << ',' << b << ']';
        first = false;
    }
    out << ']';
}

template <typename Values>
void write_list(std::ostream& out, const Values& values) {
    out << '[';
    bool first = true;
    for (const auto& v : values) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << ']';
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    return obj.at(key);
}

std::uint32_t as_index(const json& value, const char* what) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw FormatError(std::string(what) + " must be a nonnegative integer");
    }
    auto v = value.get<std::uint64_t>();
    if (v > 0xFFFF'FFFEull) throw FormatError(std::string(what) + " is too large");
    return static_cast<std::uint32_t>(v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> as_pairs(const json& value, const char* what) {
    if (!value.is_array()) throw FormatError(std::string(what) + " must be an array of pairs");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (const auto& item : value) {
        if (!item.is_array() || item.size() != 2) throw FormatError(std::string(what) + " entries must be pairs");
        out.emplace_back(as_index(item[0], what), as_index(item[1], what));
    }
    return out;
}

std::vector<std::uint32_t> as_list(const json& value, const char* what) {
    if (!value.is_array()) throw FormatError(std::string(what) + " must be an array");
    std::vector<std::uint32_t> out;
    for (const auto& item : value) out.push_back(as_index(item, what));
    return out;
}

json parse_tagged(std::string_view text, const char* tag) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    const json& format = field(doc, "format");
    if (!format.is_string() || format.get<std::string>() != tag) {
        throw FormatError(std::string("expected format \"") + tag + "\"");
    }
    return doc;
}

const char* kind_name(VertexRole::Kind kind) {
    switch (kind) {
        case VertexRole::Kind::upper_main: return "upper_main";
        case VertexRole::Kind::upper_slot: return "upper_slot";
        case VertexRole::Kind::lower_main: return "lower_main";
        case VertexRole::Kind::lower_slot: return "lower_slot";
        case VertexRole::Kind::edge_source: return "edge_source";
        case VertexRole::Kind::edge_sink: return "edge_sink";
    }
    return "";
}

const char* kind_name(DemandRole::Kind kind) {
    switch (kind) {
        case DemandRole::Kind::vertex: return "vertex";
        case DemandRole::Kind::blocking_upper: return "blocking_upper";
        case DemandRole::Kind::blocking_lower: return "blocking_lower";
        case DemandRole::Kind::edge: return "edge";
    }
    return "";
}

}  // namespace

Instance InstanceFile::instance() const {
    if (!congestion) throw InvalidInput("instance file has no congestion");
    Instance inst{graph, demands, *congestion};
    inst.validate();
    return inst;
}

InstanceFile from_instance(const Instance& inst) { return {inst.graph, inst.demands, inst.congestion}; }

std::string serialize_instance(const InstanceFile& f) {
    std::ostringstream out;
    out << "{\n  \"format\": \"kcr-instance\",\n  \"version\": 1,\n";
    out << "  \"num_vertices\": " << f.graph.num_vertices() << ",\n  \"edges\": ";
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : f.graph.edges()) edges.emplace_back(e.tail, e.head);
    write_pairs(out, edges);
    out << ",\n  \"demands\": ";
    std::vector<std::pair<Vertex, Vertex>> demands;
    for (const Demand& d : f.demands) demands.emplace_back(d.source, d.target);
    write_pairs(out, demands);
    if (f.congestion) out << ",\n  \"congestion\": " << *f.congestion;
    out << "\n}\n";
    return out.str();
}

std::string serialize_witness(const RoutingWitness& w) {
    std::ostringstream out;
    out << "{\n  \"format\": \"kcr-witness\",\n  \"paths\": [";
    for (std::size_t i = 0; i < w.paths.size(); ++i) {
        out << (i == 0 ? "\n    " : ",\n    ");
        write_list(out, w.paths[i].vertices);
    }
    out << (w.paths.empty() ? "]" : "\n  ]") << "\n}\n";
    return out.str();
}

std::string serialize_psi(const PsiInstance& p) {
    std::ostringstream out;
    out << "{\n  \"format\": \"kcr-psi\",\n  \"pattern\": {\n    \"num_vertices\": " << p.pattern_size;
    out << ",\n    \"edges\": ";
    write_pairs(out, p.pattern_edges);
    out << ",\n    \"class_a\": ";
    write_list(out, p.class_a);
    out << ",\n    \"class_b\": ";
    write_list(out, p.class_b);
    out << "\n  },\n  \"host\": {\n    \"classes\": [";
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        out << (i == 0 ? "" : ",");
        write_list(out, p.classes[i]);
    }
    out << "],\n    \"edges\": ";
    write_pairs(out, p.host_edges);
    out << "\n  },\n  \"congestion\": " << p.congestion << "\n}\n";
    return out.str();
}

std::string serialize_hard_map(const HardInstance& hi) {
    std::ostringstream out;
    out << "{\n  \"format\": \"kcr-hard-map\",\n";
    out << "  \"k\": " << hi.k << ",\n  \"h\": " << hi.h << ",\n  \"n\": " << hi.n << ",\n";
    out << "  \"congestion\": " << hi.routing.congestion << ",\n  \"edge_order\": ";
    write_pairs(out, hi.edge_order);
    out << ",\n  \"vertex_roles\": [";
    for (std::size_t v = 0; v < hi.vertex_roles.size(); ++v) {
        const VertexRole& r = hi.vertex_roles[v];
        out << (v == 0 ? "\n    " : ",\n    ") << "{\"role\": \"" << kind_name(r.kind) << "\", \"i\": " << r.pattern_vertex
            << ", \"j\": " << r.segment << ", \"edge\": " << r.edge << '}';
    }
    out << "\n  ],\n  \"demand_roles\": [";
    for (std::size_t d = 0; d < hi.demand_roles.size(); ++d) {
        const DemandRole& r = hi.demand_roles[d];
        out << (d == 0 ? "\n    " : ",\n    ") << "{\"role\": \"" << kind_name(r.kind) << "\", \"index\": " << r.index
            << ", \"copy\": " << r.copy << '}';
    }
    out << (hi.demand_roles.empty() ? "]" : "\n  ]") << "\n}\n";
    return out.str();
}

InstanceFile parse_instance(std::string_view text) {
    json doc = parse_tagged(text, "kcr-instance");
    if (as_index(field(doc, "version"), "version") != 1) throw FormatError("unsupported instance version");
    const std::uint32_t n = as_index(field(doc, "num_vertices"), "num_vertices");
    std::vector<Edge> edges;
    for (auto [u, v] : as_pairs(field(doc, "edges"), "edges")) edges.push_back({u, v});
    InstanceFile f;
    try {
        f.graph = Digraph(n, std::move(edges));
    } catch (const InvalidInput& e) {
        throw FormatError(e.what());
    }
    for (auto [s, t] : as_pairs(field(doc, "demands"), "demands")) {
        if (s >= n || t >= n) throw FormatError("demand endpoint out of range");
        f.demands.push_back({s, t});
    }
    if (doc.contains("congestion")) {
        f.congestion = as_index(doc.at("congestion"), "congestion");
        if (*f.congestion == 0) throw FormatError("congestion must be at least 1");
    }
    return f;
}

RoutingWitness parse_witness(std::string_view text) {
    json doc = parse_tagged(text, "kcr-witness");
    const json& paths = field(doc, "paths");
    if (!paths.is_array()) throw FormatError("paths must be an array");
    RoutingWitness w;
    for (const auto& p : paths) {
        Path path{as_list(p, "path")};
        if (path.vertices.empty()) throw FormatError("empty path");
        w.paths.push_back(std::move(path));
    }
    return w;
}

PsiInstance parse_psi(std::string_view text) {
    json doc = parse_tagged(text, "kcr-psi");
    const json& pattern = field(doc, "pattern");
    const json& host = field(doc, "host");
    PsiInstance p;
    p.pattern_size = as_index(field(pattern, "num_vertices"), "num_vertices");
    p.pattern_edges = as_pairs(field(pattern, "edges"), "pattern edges");
    p.class_a = as_list(field(pattern, "class_a"), "class_a");
    p.class_b = as_list(field(pattern, "class_b"), "class_b");
    const json& classes = field(host, "classes");
    if (!classes.is_array()) throw FormatError("host classes must be an array");
    for (const auto& c : classes) p.classes.push_back(as_list(c, "host class"));
    p.host_edges = as_pairs(field(host, "edges"), "host edges");
    p.congestion = as_index(field(doc, "congestion"), "congestion");
    try {
        p.validate();
    } catch (const InvalidInput& e) {
        throw FormatError(e.what());
    }
    return p;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << contents;
    if (!out) throw InvalidInput("write failed for " + path.string());
}

}  // namespace kcr::io
