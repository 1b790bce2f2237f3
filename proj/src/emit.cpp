#include "zdg/emit.hpp"

#include <sstream>

namespace zdg {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const StarRing& sr, const ZdGraph& g) {
    const FiniteRing& ring = sr.ring();
    std::ostringstream os;
    os << "graph " << quoted(variant_name(g.variant) + " " + sr.describe()) << " {\n";
    for (Elem v : g.vertices) os << "  " << quoted(ring.element_name(v)) << ";\n";
    for (auto [u, v] : g.graph.edges())
        os << "  " << quoted(ring.element_name(g.vertices[u])) << " -- "
           << quoted(ring.element_name(g.vertices[v])) << ";\n";
    os << "}\n";
    return os.str();
}

std::string edges_text(const StarRing& sr, const ZdGraph& g) {
    const FiniteRing& ring = sr.ring();
    std::ostringstream os;
    for (auto [u, v] : g.graph.edges())
        os << ring.element_name(g.vertices[u]) << " -- " << ring.element_name(g.vertices[v])
           << "\n";
    return os.str();
}

nlohmann::ordered_json graph_json(const StarRing& sr, const ZdGraph& g) {
    const FiniteRing& ring = sr.ring();
    nlohmann::ordered_json j;
    j["ring"] = ring.describe();
    j["involution"] = sr.star().name;
    j["variant"] = variant_name(g.variant);
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (Elem v : g.vertices) verts.push_back(ring.element_name(v));
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.graph.edges())
        edges.push_back({ring.element_name(g.vertices[u]), ring.element_name(g.vertices[v])});
    return j;
}

namespace {

nlohmann::ordered_json extnat_json(const ExtNat& e) {
    if (e.is_inf()) return "inf";
    return e.value();
}

}  // namespace

nlohmann::ordered_json report_json(const StarRing& sr, const ZdGraph& g,
                                   const InvariantReport& report) {
    const FiniteRing& ring = sr.ring();
    nlohmann::ordered_json j;
    j["ring"] = ring.describe();
    j["involution"] = sr.star().name;
    j["variant"] = variant_name(g.variant);
    j["vertices"] = report.vertex_count;
    j["edges"] = report.edge_count;
    j["components"] = report.component_count;
    j["diameter"] = report.diameter ? extnat_json(*report.diameter)
                                    : nlohmann::ordered_json(nullptr);
    j["girth"] = extnat_json(report.girth);
    j["is_complete"] = report.is_complete;
    j["is_star"] = report.is_star;
    j["star_center"] = report.star_center
                           ? nlohmann::ordered_json(ring.element_name(g.vertices[*report.star_center]))
                           : nlohmann::ordered_json(nullptr);
    auto& univ = j["universal_vertices"] = nlohmann::ordered_json::array();
    for (int v : report.universal_vertices) univ.push_back(ring.element_name(g.vertices[v]));
    j["degree_sequence"] = report.degree_sequence;
    return j;
}

}  // namespace zdg
