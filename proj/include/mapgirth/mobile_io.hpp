#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mapgirth/mobile.hpp"

namespace mapgirth {

namespace detail {
using mobile_json = nlohmann::ordered_json;
}

// Half-edges are renumbered by rotation scan order on output, so the encoding
// is independent of internal id history. Buds appear as 0 entries in the
// rotation lists; exposed buds are listed as [vertex, rotation index] pairs.
inline std::string serialize_mobile(const Mobile& m) {
    check_mobile_structure(m);
    std::vector<int> newid(m.half_count + 1, 0);
    int next = 1;
    for (int v = 0; v < m.nv; ++v)
        for (int h : m.rot[v])
            if (m.alpha[h] != 0) newid[h] = next++;

    detail::mobile_json out;
    auto& verts = out["vertices"] = detail::mobile_json::array();
    for (int v = 0; v < m.nv; ++v) {
        detail::mobile_json rec;
        rec["id"] = v;
        rec["color"] = m.is_black[v] ? "black" : "white";
        if (v == m.special) rec["special"] = true;
        verts.push_back(rec);
    }
    auto& edges = out["edges"] = detail::mobile_json::array();
    for (int v = 0; v < m.nv; ++v)
        for (int h : m.rot[v]) {
            if (m.alpha[h] == 0 || newid[h] > newid[m.alpha[h]]) continue;
            detail::mobile_json rec;
            rec["half_edges"] = {newid[h], newid[m.alpha[h]]};
            rec["weights"] = {m.weight[h], m.weight[m.alpha[h]]};
            edges.push_back(rec);
        }
    auto& rots = out["rotations"] = detail::mobile_json::array();
    detail::mobile_json exposed = detail::mobile_json::array();
    for (int v = 0; v < m.nv; ++v) {
        detail::mobile_json row = detail::mobile_json::array();
        for (int i = 0; i < m.degree(v); ++i) {
            int h = m.rot[v][i];
            row.push_back(newid[h]);
            if (m.alpha[h] == 0 && m.exposed[h]) exposed.push_back({v, i});
        }
        rots.push_back(row);
    }
    if (!exposed.empty()) out["exposed"] = exposed;
    return out.dump(2) + "\n";
}

inline Mobile parse_mobile(const std::string& text) {
    detail::mobile_json j;
    try {
        j = detail::mobile_json::parse(text);
    } catch (const std::exception& e) {
        throw validation_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw validation_error("mobile file must be a JSON object");
    for (const char* field : {"vertices", "edges", "rotations"})
        if (!j.contains(field) || !j[field].is_array())
            throw validation_error(std::string("missing field ") + field);

    int nv = static_cast<int>(j["vertices"].size());
    if (nv < 1) throw validation_error("mobile needs at least one vertex");
    std::vector<char> black(nv, 0);
    int special = -1;
    int idx = 0;
    for (const auto& rec : j["vertices"]) {
        if (!rec.is_object() || !rec.contains("id") || !rec.contains("color") ||
            !rec["id"].is_number_integer() || !rec["color"].is_string())
            throw validation_error("vertex records need id and color");
        if (rec["id"].get<int>() != idx)
            throw validation_error("vertex ids must be 0..n-1 in order");
        std::string color = rec["color"].get<std::string>();
        if (color == "black")
            black[idx] = 1;
        else if (color != "white")
            throw validation_error("color must be \"black\" or \"white\"");
        if (rec.contains("special") && rec["special"].is_boolean() && rec["special"].get<bool>()) {
            if (special != -1) throw validation_error("more than one special vertex");
            if (!black[idx]) throw validation_error("special vertex must be black");
            special = idx;
        }
        ++idx;
    }

    int ne = static_cast<int>(j["edges"].size());
    std::vector<int> partner(2 * ne + 1, 0);
    std::vector<int> half_weight(2 * ne + 1, 0);
    for (const auto& rec : j["edges"]) {
        if (!rec.is_object() || !rec.contains("half_edges") || !rec.contains("weights") ||
            !rec["half_edges"].is_array() || rec["half_edges"].size() != 2 ||
            !rec["weights"].is_array() || rec["weights"].size() != 2)
            throw validation_error("edge records need half_edges and weights");
        for (int k = 0; k < 2; ++k)
            if (!rec["half_edges"][k].is_number_integer() || !rec["weights"][k].is_number_integer())
                throw validation_error("edge records need half_edges and weights");
        int a = rec["half_edges"][0].get<int>(), b = rec["half_edges"][1].get<int>();
        if (a < 1 || a > 2 * ne || b < 1 || b > 2 * ne || a == b)
            throw validation_error("half-edge ids must be in 1..2E and distinct");
        if (partner[a] != 0 || partner[b] != 0)
            throw validation_error("half-edge listed on two edges");
        partner[a] = b;
        partner[b] = a;
        long long wa = rec["weights"][0].get<long long>(), wb = rec["weights"][1].get<long long>();
        if (wa < -1'000'000 || wa > 1'000'000 || wb < -1'000'000 || wb > 1'000'000)
            throw validation_error("edge weight out of range");
        half_weight[a] = static_cast<int>(wa);
        half_weight[b] = static_cast<int>(wb);
    }
    for (int h = 1; h <= 2 * ne; ++h)
        if (partner[h] == 0) throw validation_error("half-edge appears on no edge");

    if (static_cast<int>(j["rotations"].size()) != nv)
        throw validation_error("rotations must list every vertex");

    // Buds take fresh ids after the 2E edge halves, in rotation scan order.
    Mobile m;
    m.nv = nv;
    m.is_black = black;
    m.special = special;
    m.rot.resize(nv);
    std::vector<std::vector<int>> file_rot(nv);
    int buds = 0;
    for (int v = 0; v < nv; ++v) {
        const auto& row = j["rotations"][v];
        if (!row.is_array()) throw validation_error("rotations must list every vertex");
        for (const auto& cell : row) {
            if (!cell.is_number_integer())
                throw validation_error("rotation entries must be half-edge ids or 0");
            int h = cell.get<int>();
            if (h < 0 || h > 2 * ne)
                throw validation_error("rotation entries must be half-edge ids or 0");
            if (h == 0) ++buds;
            file_rot[v].push_back(h);
        }
    }
    m.half_count = 2 * ne + buds;
    m.alpha.assign(m.half_count + 1, 0);
    m.weight.assign(m.half_count + 1, 0);
    m.exposed.assign(m.half_count + 1, 0);
    m.vertex_of.assign(m.half_count + 1, 0);
    int next_bud = 2 * ne + 1;
    std::vector<std::vector<int>> bud_ids(nv);  // by rotation index
    for (int v = 0; v < nv; ++v) {
        bud_ids[v].assign(file_rot[v].size(), 0);
        for (size_t i = 0; i < file_rot[v].size(); ++i) {
            int h = file_rot[v][i];
            if (h == 0) {
                h = next_bud++;
                bud_ids[v][i] = h;
            } else {
                m.alpha[h] = partner[h];
                m.weight[h] = half_weight[h];
            }
            m.rot[v].push_back(h);
            m.vertex_of[h] = v;
        }
    }
    if (j.contains("exposed")) {
        if (!j["exposed"].is_array())
            throw validation_error("exposed entries must be [vertex, position] of buds");
        for (const auto& rec : j["exposed"]) {
            if (!rec.is_array() || rec.size() != 2 || !rec[0].is_number_integer() ||
                !rec[1].is_number_integer())
                throw validation_error("exposed entries must be [vertex, position] of buds");
            int v = rec[0].get<int>(), i = rec[1].get<int>();
            if (v < 0 || v >= nv || i < 0 || i >= static_cast<int>(bud_ids[v].size()) ||
                bud_ids[v][i] == 0)
                throw validation_error("exposed entries must be [vertex, position] of buds");
            m.exposed[bud_ids[v][i]] = 1;
        }
    }
    check_mobile_structure(m);
    return m;
}

// Black vertices filled, the special vertex doubled, buds as arrows to points.
inline std::string mobile_to_dot(const Mobile& m) {
    check_mobile_structure(m);
    std::string dot = "graph mobile {\n";
    for (int v = 0; v < m.nv; ++v) {
        dot += "  v" + std::to_string(v) + " [shape=circle";
        if (m.is_black[v]) dot += ", style=filled, fillcolor=black, fontcolor=white";
        if (v == m.special) dot += ", peripheries=2";
        dot += "];\n";
    }
    int budn = 0;
    for (int v = 0; v < m.nv; ++v)
        for (int h : m.rot[v]) {
            if (m.alpha[h] == 0) {
                std::string b = "bud" + std::to_string(budn++);
                dot += "  " + b + " [shape=point];\n";
                dot += "  v" + std::to_string(v) + " -- " + b + " [dir=forward";
                if (m.exposed[h]) dot += ", style=bold";
                dot += "];\n";
            } else if (h < m.alpha[h]) {
                dot += "  v" + std::to_string(v) + " -- v" +
                       std::to_string(m.vertex_of[m.alpha[h]]) + " [label=\"" +
                       std::to_string(m.weight[h]) + "," + std::to_string(m.weight[m.alpha[h]]) +
                       "\"];\n";
            }
        }
    dot += "}\n";
    return dot;
}

}  // namespace mapgirth
