#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plane_map.hpp"

namespace mapgirth {

// Weighted biorientation: per-dart direction flag and integer weight.
// Ingoing darts carry weight >= 1 (>= 0 in the d=0 setting), outgoing <= 0.
struct ZBiorientation {
    std::vector<char> ingoing;  // size 2E+1
    std::vector<int> weight;    // size 2E+1
};

inline ZBiorientation make_orientation(int dart_count) {
    ZBiorientation o;
    o.ingoing.assign(dart_count + 1, 0);
    o.weight.assign(dart_count + 1, 0);
    return o;
}

// Number of ingoing half-edges of the edge containing dart d: 0, 1, or 2.
inline int ways(const CombinatorialMap& m, const ZBiorientation& o, int d) {
    return (o.ingoing[d] ? 1 : 0) + (o.ingoing[m.alpha[d]] ? 1 : 0);
}

inline int edge_weight(const CombinatorialMap& m, const ZBiorientation& o, int d) {
    return o.weight[d] + o.weight[m.alpha[d]];
}

// Sum of ingoing half-edge weights at v.
inline int vertex_weight(const CombinatorialMap& m, const ZBiorientation& o, int v) {
    int s = 0;
    for (int d : m.vertices[v])
        if (o.ingoing[d]) s += o.weight[d];
    return s;
}

// Sum of weights of outgoing half-edges having face f on their right; the
// half-edges with f on the right are the alpha-partners of f's orbit.
inline int face_weight(const CombinatorialMap& m, const ZBiorientation& o, int f) {
    int s = 0;
    for (int g : m.faces[f]) {
        int h = m.alpha[g];
        if (!o.ingoing[h]) s += o.weight[h];
    }
    return s;
}

// An edge is traversable from the side of dart t toward the other endpoint
// when the half-edge at the head is ingoing (1-way along its direction, 2-way
// both ways, 0-way never).
inline bool traversable(const CombinatorialMap& m, const ZBiorientation& o, int t) {
    return o.ingoing[m.alpha[t]] != 0;
}

// Directed reachability from vertex s along traversable edges.
inline std::vector<char> reachable_from(const CombinatorialMap& m, const ZBiorientation& o,
                                        int s) {
    std::vector<char> seen(m.vertex_count(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int t : m.vertices[v]) {
            if (!traversable(m, o, t)) continue;
            int u = m.vertex_of[m.alpha[t]];
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return seen;
}

// Counterclockwise circuit: a simple cycle traversable in a direction that
// leaves the root face on its right side.
inline std::optional<std::vector<int>> find_ccw_circuit(const PlaneMap& pm,
                                                        const ZBiorientation& o) {
    const CombinatorialMap& m = pm.m;
    int f0 = pm.root_face();
    for (const auto& cyc : simple_cycles(m)) {
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> travel = cyc;
            if (dir == 1) {
                std::reverse(travel.begin(), travel.end());
                for (int& t : travel) t = m.alpha[t];
            }
            bool ok = true;
            for (int t : travel)
                if (!traversable(m, o, t)) { ok = false; break; }
            if (!ok) continue;
            if (!cycle_left_faces(m, travel)[f0]) return travel;
        }
    }
    return std::nullopt;
}

struct ClassifyResult {
    bool admissible = false;
    bool minimal = false;
    bool accessible = false;
    bool suitable = false;
    std::string detail;  // first failed condition, empty when suitable
};

// Suitability per the root-face conventions: admissible = the root-face
// contour is a simple cycle of 1-way edges with weights 0/1 directed
// clockwise (equivalently: each ingoing contour half lies on the inner side),
// and every non-contour half-edge at an outer vertex is outgoing; minimal =
// no counterclockwise circuit; accessible = every vertex reachable from every
// outer vertex.
inline ClassifyResult classify(const PlaneMap& pm, const ZBiorientation& o) {
    const CombinatorialMap& m = pm.m;
    ClassifyResult r;
    int f0 = pm.root_face();

    r.admissible = true;
    std::vector<char> on_contour(m.dart_count() + 1, 0);
    for (int g : m.faces[f0]) on_contour[g] = on_contour[m.alpha[g]] = 1;
    // Simple cycle: every outer vertex occurs once, and the two contour
    // edges at it are distinct.
    std::vector<int> hits(m.vertex_count(), 0);
    for (int g : m.faces[f0]) ++hits[m.vertex_of[g]];
    for (int g : m.faces[f0]) {
        if (hits[m.vertex_of[g]] != 1) {
            r.admissible = false;
            r.detail = "root-face contour is not a simple cycle";
            break;
        }
        if (m.face_of[m.alpha[g]] == f0) {
            r.admissible = false;
            r.detail = "root-face contour repeats an edge";
            break;
        }
    }
    if (r.admissible) {
        for (int g : m.faces[f0]) {
            int h = m.alpha[g];  // inner-side half of the contour edge
            if (ways(m, o, g) != 1) {
                r.admissible = false;
                r.detail = "contour edge is not 1-way";
                break;
            }
            if (!o.ingoing[h]) {
                r.admissible = false;
                r.detail = "contour directed counterclockwise";
                break;
            }
            if (o.weight[h] != 1 || o.weight[g] != 0) {
                r.admissible = false;
                r.detail = "contour weights are not (0,1)";
                break;
            }
        }
    }
    if (r.admissible) {
        for (int g : m.faces[f0]) {
            for (int d : m.vertices[m.vertex_of[g]]) {
                if (on_contour[d]) continue;
                if (o.ingoing[d]) {
                    r.admissible = false;
                    r.detail = "ingoing inner half-edge at an outer vertex";
                    break;
                }
            }
            if (!r.admissible) break;
        }
    }

    auto ccw = find_ccw_circuit(pm, o);
    r.minimal = !ccw.has_value();
    if (!r.minimal && r.detail.empty()) r.detail = "counterclockwise circuit";

    r.accessible = true;
    std::vector<char> outer_seen(m.vertex_count(), 0);
    for (int g : m.faces[f0]) {
        int v = m.vertex_of[g];
        if (outer_seen[v]) continue;
        outer_seen[v] = 1;
        auto seen = reachable_from(m, o, v);
        for (char c : seen)
            if (!c) { r.accessible = false; break; }
        if (!r.accessible) {
            if (r.detail.empty()) r.detail = "not accessible from every outer vertex";
            break;
        }
    }

    r.suitable = r.admissible && r.minimal && r.accessible;
    return r;
}

// Class parameters for the orientation families.
struct GirthSpec {
    enum Kind { plain, bipartite, annular, annular_bipartite, zero } kind = plain;
    int d = 0;  // plain / annular
    int b = 0;  // bipartite / annular_bipartite
    int p = 0, q = 0;  // annular root-face degrees (outer p, inner q)
    int r = 0, s = 0;  // annular bipartite half-degrees (outer 2r, inner 2s)

    static GirthSpec plain_d(int d) { return {plain, d, 0, 0, 0, 0, 0}; }
    static GirthSpec bipartite_b(int b) { return {bipartite, 0, b, 0, 0, 0, 0}; }
    static GirthSpec annular_dpq(int d, int p, int q) {
        return {annular, d, 0, p, q, 0, 0};
    }
    static GirthSpec annular_brs(int b, int r, int s) {
        return {annular_bipartite, 0, b, 0, 0, r, s};
    }
    static GirthSpec zero_spec() { return {zero, 0, 0, 0, 0, 0, 0}; }
};

struct CheckResult {
    bool ok = true;
    std::string violation;  // first failed condition
};

namespace detail {

inline CheckResult fail(const std::string& msg) { return {false, msg}; }

}  // namespace detail

// Weight conditions (i)-(iii) (and (iv) for annular kinds) of the
// d/(d-2)- and b/(b-1)-orientations, on inner objects only:
//   general d: inner edge weight d-2, inner vertex weight d, inner face
//     degree+weight d, outgoing weights in {0,-1,-2};
//   bipartite b: inner edge weight b-1, inner vertex weight b, inner face
//     degree/2+weight b, outgoing weights in {0,-1};
//   annular variants additionally pin the inner root face's degree and
//     weight (q and p-q, resp. 2s and r-s) instead of condition (iii) there.
inline CheckResult check_constraints(const PlaneMap& pm, const ZBiorientation& o,
                                     const GirthSpec& spec,
                                     int inner_root_face = -1) {
    const CombinatorialMap& m = pm.m;
    int f0 = pm.root_face();
    bool bip = spec.kind == GirthSpec::bipartite || spec.kind == GirthSpec::annular_bipartite;
    int d = bip ? 0 : spec.d;
    int b = bip ? spec.b : 0;
    int lo_out = bip ? -1 : -2;

    for (int dart = 1; dart <= m.dart_count(); ++dart) {
        if (o.ingoing[dart]) {
            if (o.weight[dart] < 1) return detail::fail("ingoing half-edge with weight < 1");
        } else {
            if (o.weight[dart] > 0 || o.weight[dart] < lo_out)
                return detail::fail("outgoing half-edge weight out of range");
        }
    }
    int target_edge = bip ? b - 1 : d - 2;
    for (int e = 0; e < m.edge_count(); ++e) {
        if (is_outer_edge(pm, e)) continue;
        int dd = m.edge_dart(e);
        if (edge_weight(m, o, dd) != target_edge)
            return detail::fail("inner edge weight violates (i)");
    }
    int target_vertex = bip ? b : d;
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (is_outer_vertex(pm, v)) continue;
        if (vertex_weight(m, o, v) != target_vertex)
            return detail::fail("inner vertex weight violates (ii)");
    }
    for (int f = 0; f < m.face_count(); ++f) {
        if (f == f0) continue;
        int deg = m.face_degree(f), w = face_weight(m, o, f);
        if (f == inner_root_face &&
            (spec.kind == GirthSpec::annular || spec.kind == GirthSpec::annular_bipartite)) {
            int want_deg = spec.kind == GirthSpec::annular ? spec.q : 2 * spec.s;
            int want_w = spec.kind == GirthSpec::annular ? spec.p - spec.q : spec.r - spec.s;
            if (deg != want_deg) return detail::fail("inner root-face degree violates (iv)");
            if (w != want_w) return detail::fail("inner root-face weight violates (iv)");
            continue;
        }
        if (bip) {
            if (deg % 2 || deg / 2 + w != b)
                return detail::fail("inner face degree/2+weight violates (iii)");
        } else {
            if (deg + w != d) return detail::fail("inner face degree+weight violates (iii)");
        }
    }
    return {};
}

}  // namespace mapgirth
