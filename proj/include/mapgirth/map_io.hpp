#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "biorientation.hpp"
#include "plane_map.hpp"

namespace mapgirth {

// A map file bundles the permutation pair with whatever root marks accompany
// it. Corner marks are stored as half-edge ids; the marked corner of id h is
// (h, sigma h). A field value of 0 means the mark is absent.
struct ParsedMap {
    CombinatorialMap m;
    int root_half_edge = 0;
    int inner_root_half_edge = 0;
    int root_corner = 0;
    int inner_root_corner = 0;

    bool is_annular() const { return inner_root_half_edge != 0; }

    PlaneMap plane() const { return make_plane_map(m, root_half_edge); }
    AnnularMap annular() const {
        return make_annular_map(plane(), inner_root_half_edge);
    }
    RootedMap rooted() const { return RootedMap{m, root_corner}; }
};

namespace detail {

using json = nlohmann::ordered_json;

inline long long as_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw validation_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

inline int as_dart(const json& j, int n, const char* what) {
    long long v = as_int(j, what);
    if (v < 1 || v > n)
        throw validation_error(std::string(what) + ": half-edge id out of range");
    return static_cast<int>(v);
}

// Optional root field; 0 when the key is absent.
inline int root_field(const json& j, int n, const char* key) {
    if (!j.contains(key)) return 0;
    long long v = as_int(j.at(key), key);
    if (v < 1 || v > n) throw validation_error("dangling root reference");
    return static_cast<int>(v);
}

}  // namespace detail

// Parses the JSON map format: "half_edges" (2E), "alpha" (list of pairs),
// "sigma" (list of counterclockwise vertex cycles), "root_half_edge", and the
// optional marks "inner_root_half_edge", "root_corner", "inner_root_corner".
// half_edges = 0 with empty permutations denotes the edgeless one-vertex map.
inline ParsedMap parse_map(const std::string& text) {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw validation_error("map file must be a JSON object");
    if (!j.contains("half_edges")) throw validation_error("missing field half_edges");
    long long n_ll = detail::as_int(j.at("half_edges"), "half_edges");
    if (n_ll < 0 || n_ll > 1'000'000)
        throw validation_error("half_edges out of supported range");
    int n = static_cast<int>(n_ll);

    if (n == 0) {
        if ((j.contains("alpha") && !j.at("alpha").empty()) ||
            (j.contains("sigma") && !j.at("sigma").empty()))
            throw validation_error("edgeless map cannot carry alpha or sigma entries");
        ParsedMap out;
        out.m = vertex_map();
        return out;
    }

    if (!j.contains("alpha") || !j.at("alpha").is_array())
        throw validation_error("missing field alpha (list of pairs)");
    if (!j.contains("sigma") || !j.at("sigma").is_array())
        throw validation_error("missing field sigma (list of cycles)");

    std::vector<int> alpha(n + 1, 0);
    for (const auto& pair : j.at("alpha")) {
        if (!pair.is_array() || pair.size() != 2)
            throw validation_error("alpha entries must be pairs of half-edge ids");
        int a = detail::as_dart(pair[0], n, "alpha");
        int b = detail::as_dart(pair[1], n, "alpha");
        if (a == b) throw validation_error("alpha has a fixed point");
        if (alpha[a] != 0 || alpha[b] != 0)
            throw validation_error("alpha is not an involution");
        alpha[a] = b;
        alpha[b] = a;
    }
    for (int d = 1; d <= n; ++d)
        if (alpha[d] == 0) throw validation_error("alpha does not cover every half-edge");

    std::vector<int> sigma(n + 1, 0);
    std::vector<char> placed(n + 1, 0);
    for (const auto& cyc : j.at("sigma")) {
        if (!cyc.is_array() || cyc.empty())
            throw validation_error("sigma entries must be non-empty cycles");
        std::vector<int> c;
        for (const auto& item : cyc) c.push_back(detail::as_dart(item, n, "sigma"));
        for (size_t i = 0; i < c.size(); ++i) {
            int d = c[i];
            if (placed[d]) throw validation_error("sigma is not a permutation");
            placed[d] = 1;
            sigma[d] = c[(i + 1) % c.size()];
        }
    }
    for (int d = 1; d <= n; ++d)
        if (!placed[d]) throw validation_error("sigma does not cover every half-edge");

    ParsedMap out;
    out.m = build_map(std::move(alpha), std::move(sigma));
    out.root_half_edge = detail::root_field(j, n, "root_half_edge");
    out.inner_root_half_edge = detail::root_field(j, n, "inner_root_half_edge");
    out.root_corner = detail::root_field(j, n, "root_corner");
    out.inner_root_corner = detail::root_field(j, n, "inner_root_corner");
    return out;
}

// Deterministic serialization: alpha pairs in edge order (by smaller dart),
// sigma cycles rotated to start at their smallest dart and sorted by it.
// Absent marks are omitted.
inline std::string serialize_map(const ParsedMap& pm) {
    detail::json j;
    int n = pm.m.dart_count();
    j["half_edges"] = n;
    auto alpha = detail::json::array();
    for (int e = 0; e < pm.m.edge_count(); ++e) {
        int d = pm.m.edge_dart(e);
        alpha.push_back({d, pm.m.alpha[d]});
    }
    j["alpha"] = std::move(alpha);
    auto sigma = detail::json::array();
    for (const auto& orbit : pm.m.vertices) sigma.push_back(orbit);
    j["sigma"] = std::move(sigma);
    if (pm.root_half_edge) j["root_half_edge"] = pm.root_half_edge;
    if (pm.inner_root_half_edge) j["inner_root_half_edge"] = pm.inner_root_half_edge;
    if (pm.root_corner) j["root_corner"] = pm.root_corner;
    if (pm.inner_root_corner) j["inner_root_corner"] = pm.inner_root_corner;
    return j.dump(2) + "\n";
}

// Orientation files are a JSON list of records {half_edge, direction, weight},
// one per half-edge, ordered by id. direction is "in" or "out".
inline std::string serialize_orientation(const ZBiorientation& o) {
    detail::json arr = detail::json::array();
    for (int d = 1; d < static_cast<int>(o.weight.size()); ++d) {
        detail::json rec;
        rec["half_edge"] = d;
        rec["direction"] = o.ingoing[d] ? "in" : "out";
        rec["weight"] = o.weight[d];
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

inline ZBiorientation parse_orientation(const std::string& text, int dart_count) {
    detail::json j;
    try {
        j = detail::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw validation_error("orientation file must be a JSON list");
    ZBiorientation o = make_orientation(dart_count);
    std::vector<char> seen(dart_count + 1, 0);
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("half_edge") || !rec.contains("direction") ||
            !rec.contains("weight"))
            throw validation_error("orientation records need half_edge, direction, weight");
        int d = detail::as_dart(rec.at("half_edge"), dart_count, "half_edge");
        if (seen[d]) throw validation_error("duplicate orientation record");
        seen[d] = 1;
        const auto& dir = rec.at("direction");
        if (!dir.is_string() || (dir != "in" && dir != "out"))
            throw validation_error("direction must be \"in\" or \"out\"");
        o.ingoing[d] = (dir == "in");
        long long w = detail::as_int(rec.at("weight"), "weight");
        if (w < -1'000'000 || w > 1'000'000)
            throw validation_error("weight out of supported range");
        if (o.ingoing[d] && w < 0)
            throw validation_error("ingoing half-edge with negative weight");
        if (!o.ingoing[d] && w > 0)
            throw validation_error("outgoing half-edge with positive weight");
        o.weight[d] = static_cast<int>(w);
    }
    for (int d = 1; d <= dart_count; ++d)
        if (!seen[d]) throw validation_error("orientation does not cover every half-edge");
    return o;
}

// Undirected DOT rendering; one line per edge, labelled with its half-edge
// pair. The root dart's edge is drawn bold.
inline std::string map_to_dot(const ParsedMap& pm) {
    std::ostringstream out;
    out << "graph map {\n";
    for (int v = 0; v < pm.m.vertex_count(); ++v) out << "  v" << v << ";\n";
    for (int e = 0; e < pm.m.edge_count(); ++e) {
        int d = pm.m.edge_dart(e);
        out << "  v" << pm.m.vertex_of[d] << " -- v" << pm.m.vertex_of[pm.m.alpha[d]]
            << " [label=\"" << d << "|" << pm.m.alpha[d] << "\"";
        if (pm.root_half_edge && pm.m.edge_of(pm.root_half_edge) == e)
            out << ", style=bold";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

// Directed DOT rendering of an oriented map. 1-way edges point along their
// ingoing half, 2-way edges are double-headed, 0-way edges are bare; labels
// carry the two half-edge weights in dart order.
inline std::string orientation_to_dot(const CombinatorialMap& m, const ZBiorientation& o) {
    std::ostringstream out;
    out << "digraph oriented {\n";
    for (int v = 0; v < m.vertex_count(); ++v) out << "  v" << v << ";\n";
    for (int e = 0; e < m.edge_count(); ++e) {
        int d = m.edge_dart(e);
        int a = m.alpha[d];
        int w = ways(m, o, d);
        int tail = m.vertex_of[d], head = m.vertex_of[a];
        if (w == 1 && o.ingoing[d]) std::swap(tail, head);
        out << "  v" << tail << " -> v" << head << " [label=\"" << o.weight[d] << ","
            << o.weight[a] << "\"";
        if (w == 2) out << ", dir=both";
        if (w == 0) out << ", dir=none";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write file: " + path);
    out << content;
}

}  // namespace mapgirth
