#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "mapgirth/biorientation.hpp"
#include "mapgirth/flow.hpp"
#include "mapgirth/transforms.hpp"

namespace mapgirth {

// Reverse counterclockwise circuits until none remains. Pushing a circuit
// moves one weight unit backward along each travel, which preserves the
// vertex and edge weight totals.
inline ZBiorientation make_minimal(const PlaneMap& pm, ZBiorientation o) {
    const CombinatorialMap& m = pm.m;
    long long total = 0;
    for (int d = 1; d <= m.dart_count(); ++d)
        if (o.weight[d] > 0) total += o.weight[d];
    long long cap = 1000 + 4LL * m.edge_count() * m.face_count() * (total + 1);
    if (cap > 10000000) cap = 10000000;
    for (long long step = 0;; ++step) {
        auto circuit = find_ccw_circuit(pm, o);
        if (!circuit) return o;
        if (step >= cap) throw resource_error("minimalization exceeded its push budget");
        for (int t : *circuit) {
            int h = m.alpha[t];
            o.weight[h] -= 1;
            o.weight[t] += 1;
            o.ingoing[h] = o.weight[h] >= 1;
            o.ingoing[t] = o.weight[t] >= 1;
        }
    }
}

// Alpha/beta demands whose solutions are the regular orientations of Q_M:
// outer vertices and edges of M keep the contour values 1, inner M-edges
// carry b-1, inner M-vertices b, spokes 1, and each face-vertex absorbs
// half its degree plus b (plus r instead of b at the special face-vertex).
inline AlphaBetaSpec regular_alpha_beta(const QuadResult& qr, int b, int r) {
    const CombinatorialMap& qm = qr.qm.m;
    AlphaBetaSpec spec;
    spec.alpha.assign(qm.vertex_count(), 0);
    spec.beta.assign(qm.edge_count(), 0);
    std::vector<char> is_face_vertex(qm.vertex_count(), 0);
    for (int f = 0; f < static_cast<int>(qr.face_vertex.size()); ++f)
        if (qr.face_vertex[f] >= 0) is_face_vertex[qr.face_vertex[f]] = 1;
    for (int v = 0; v < qm.vertex_count(); ++v) {
        if (is_face_vertex[v]) {
            int extra = v == qr.special_vertex ? r : b;
            spec.alpha[v] = qm.degree(v) / 2 + extra;
        } else {
            spec.alpha[v] = is_outer_vertex(qr.qm, v) ? 1 : b;
        }
    }
    for (int e = 0; e < qm.edge_count(); ++e) {
        int d = qm.edge_dart(e);
        if (qr.is_spoke_edge(d) || qr.is_spoke_edge(qm.alpha[d]))
            spec.beta[e] = 1;
        else
            spec.beta[e] = is_outer_edge(qr.qm, e) ? 1 : b - 1;
    }
    return spec;
}

// Contract the quadrangulation away: M keeps the restricted weights, except
// that each spoke directed toward its M-endpoint bumps the weights of the
// edge it follows from (b-1, 0) to (b, -1).
inline ZBiorientation sigma_map(const QuadResult& qr, const ZBiorientation& qo, int b) {
    const CombinatorialMap& qm = qr.qm.m;
    if (static_cast<int>(qo.weight.size()) != qm.dart_count() + 1)
        throw validation_error("orientation does not cover Q_M");
    ZBiorientation o = make_orientation(qr.m_darts);
    for (int d = 1; d <= qr.m_darts; ++d) {
        o.weight[d] = qo.weight[d];
        o.ingoing[d] = qo.ingoing[d];
    }
    for (int h = 1; h <= qr.m_darts; ++h) {
        int s = qr.spoke[h];
        if (!s) continue;
        int q = qm.alpha[s];
        if (qo.weight[s] + qo.weight[q] != 1 || ways(qm, qo, s) != 1)
            throw validation_error("spoke is not 1-way with weight 1");
        if (!qo.ingoing[s]) continue;  // directed toward the face-vertex
        if (!qo.ingoing[h] || qo.ingoing[qm.alpha[h]])
            throw validation_error("orientation is not coherent");
        if (is_outer_edge(qr.qm, qm.edge_of(h)))
            throw validation_error("spoke directed into an outer edge");
        o.weight[h] = b;
        o.weight[qm.alpha[h]] = -1;
    }
    return o;
}

// Inverse of sigma_map: bumped edges (weight b against -1) send their spoke
// toward the M-endpoint, all other spokes point at their face-vertex.
inline ZBiorientation sigma_map_inverse(const QuadResult& qr, const ZBiorientation& o,
                                        int b) {
    const CombinatorialMap& qm = qr.qm.m;
    ZBiorientation qo = make_orientation(qm.dart_count());
    for (int d = 1; d <= qr.m_darts; ++d) {
        qo.weight[d] = o.weight[d];
        qo.ingoing[d] = o.ingoing[d];
    }
    for (int h = 1; h <= qr.m_darts; ++h) {
        int s = qr.spoke[h];
        if (!s) continue;
        int q = qm.alpha[s];
        bool bumped = !is_outer_edge(qr.qm, qm.edge_of(h)) && o.weight[h] == b;
        if (bumped) {
            qo.weight[h] = b - 1;
            qo.weight[qm.alpha[h]] = 0;
            qo.ingoing[qm.alpha[h]] = false;
            qo.weight[s] = 1;
            qo.ingoing[s] = true;
            qo.weight[q] = 0;
        } else {
            qo.weight[q] = 1;
            qo.ingoing[q] = true;
            qo.weight[s] = 0;
        }
    }
    for (int d = 1; d <= qr.m_darts; ++d) qo.ingoing[d] = qo.weight[d] >= 1;
    return qo;
}

// Contract the edge-vertices of the subdivided map. Inner edges must show a
// d/(d-1) pattern: weights summing to d-2 with both parts below d, or the
// special pair (-1, d) which contracts to (-2, d).
inline ZBiorientation tau_map(const PlaneMap& pm, const ZBiorientation& o_sub, int d) {
    const CombinatorialMap& m = pm.m;
    if (static_cast<int>(o_sub.weight.size()) < 2 * m.dart_count() + 1)
        throw validation_error("orientation does not cover the subdivision");
    ZBiorientation o = make_orientation(m.dart_count());
    for (int dd = 1; dd <= m.dart_count(); ++dd) {
        o.weight[dd] = o_sub.weight[dd];
        o.ingoing[dd] = o_sub.ingoing[dd];
    }
    for (int e = 0; e < m.edge_count(); ++e) {
        if (is_outer_edge(pm, e)) continue;
        int d1 = m.edge_dart(e), d2 = m.alpha[d1];
        int i = o.weight[d1], j = o.weight[d2];
        if (i == d && j == -1) {
            o.weight[d2] = -2;
        } else if (j == d && i == -1) {
            o.weight[d1] = -2;
        } else if (!(i < d && j < d && i + j == d - 2)) {
            throw validation_error("contracted weights are not a d/(d-1) pattern");
        }
    }
    return o;
}

// Inverse of tau_map onto the subdivided map produced by subdivide().
inline ZBiorientation tau_map_inverse(const PlaneMap& pm, const ZBiorientation& o, int d) {
    const CombinatorialMap& m = pm.m;
    int n = m.dart_count();
    ZBiorientation o_sub = make_orientation(2 * n);
    for (int e = 0; e < m.edge_count(); ++e) {
        int d1 = m.edge_dart(e), d2 = m.alpha[d1];
        int n1 = n + 2 * e + 1, n2 = n + 2 * e + 2;  // partners of d1 and d2
        int i = o.weight[d1], j = o.weight[d2];
        if (!is_outer_edge(pm, e)) {
            if (i == -2) i = -1;
            if (j == -2) j = -1;
            o_sub.weight[n1] = d - 1 - i;
            o_sub.weight[n2] = d - 1 - j;
        } else {
            // Subdivided contour edges are 1-way (0,1) in the same direction.
            o_sub.weight[n1] = 1 - i;
            o_sub.weight[n2] = 1 - j;
        }
        o_sub.weight[d1] = i;
        o_sub.weight[d2] = j;
    }
    for (int dd = 1; dd <= 2 * n; ++dd) o_sub.ingoing[dd] = o_sub.weight[dd] >= 1;
    return o_sub;
}

enum class WeightScale { halve, double_up };

// Switch between the bipartite b/(b-1) weights and the 2b/(2b-2) weights of
// the same map by scaling every inner half-edge weight.
inline ZBiorientation halve_or_double(const PlaneMap& pm, ZBiorientation o,
                                      WeightScale dir) {
    const CombinatorialMap& m = pm.m;
    for (int e = 0; e < m.edge_count(); ++e) {
        if (is_outer_edge(pm, e)) continue;
        int d1 = m.edge_dart(e), d2 = m.alpha[d1];
        for (int dd : {d1, d2}) {
            if (dir == WeightScale::halve) {
                if (o.weight[dd] % 2) throw validation_error("odd inner weight on halving");
                o.weight[dd] /= 2;
            } else {
                o.weight[dd] *= 2;
            }
        }
    }
    return o;
}

namespace detail {

inline ZBiorientation bipartite_lane(const PlaneMap& pm, int b, int inner_root_dart,
                                     int r, int s);

// General-girth lane: subdivide, run the bipartite lane with b = d on the
// subdivision, contract back.
inline ZBiorientation general_lane(const PlaneMap& pm, int d, int inner_root_dart,
                                   int p, int q) {
    PlaneMap sub = subdivide_plane(pm);
    ZBiorientation o_sub = bipartite_lane(sub, d, inner_root_dart, p, q);
    return tau_map(pm, o_sub, d);
}

inline ZBiorientation bipartite_lane(const PlaneMap& pm, int b, int inner_root_dart,
                                     int r, int s) {
    if (b == 1) {
        ZBiorientation o2 = general_lane(pm, 2, inner_root_dart, 2 * r, 2 * s);
        return halve_or_double(pm, std::move(o2), WeightScale::halve);
    }
    int inner_root_face =
        inner_root_dart > 0 ? pm.m.face_of[inner_root_dart] : -1;
    QuadResult qr = inner_quadrangulation(pm, inner_root_face);
    AlphaBetaSpec ab = regular_alpha_beta(qr, b, r);
    FlowResult fr = find_alpha_beta(qr.qm.m, ab);
    if (!fr.feasible) {
        std::string msg = "no suitable orientation exists";
        if (fr.totals_mismatch)
            msg += " (demand totals differ: alpha " + std::to_string(fr.alpha_total) +
                   ", beta " + std::to_string(fr.beta_total) + ")";
        else
            msg += " (a set of " + std::to_string(fr.violating_vertices.size()) +
                   " vertices of Q_M cannot absorb its induced edge weight)";
        throw class_error(msg);
    }
    ZBiorientation minimal = make_minimal(qr.qm, std::move(fr.orientation));
    return sigma_map(qr, minimal, b);
}

}  // namespace detail

// The unique suitable orientation for the requested family, or class_error
// when the map lies outside it.
inline ZBiorientation suitable_orientation(const PlaneMap& pm, const GirthSpec& spec) {
    const CombinatorialMap& m = pm.m;
    int f0 = pm.root_face();
    ZBiorientation o;
    switch (spec.kind) {
        case GirthSpec::plain:
            if (spec.d < 1) throw validation_error("plain girth parameter must be positive");
            if (m.face_degree(f0) != spec.d)
                throw class_error("root-face degree does not match d");
            o = detail::general_lane(pm, spec.d, 0, 0, 0);
            break;
        case GirthSpec::bipartite:
            if (spec.b < 1) throw validation_error("bipartite girth parameter must be positive");
            if (m.face_degree(f0) != 2 * spec.b)
                throw class_error("root-face degree does not match 2b");
            if (!is_bipartite(m)) throw class_error("map is not bipartite");
            o = detail::bipartite_lane(pm, spec.b, 0, spec.b, spec.b);
            break;
        default:
            throw validation_error("spec kind needs an annular map or a marked vertex");
    }
    auto cl = classify(pm, o);
    if (!cl.suitable) throw internal_error("pipeline output not suitable: " + cl.detail);
    auto cc = check_constraints(pm, o, spec);
    if (!cc.ok) throw internal_error("pipeline output fails constraints: " + cc.violation);
    return o;
}

inline ZBiorientation suitable_orientation(const AnnularMap& am, const GirthSpec& spec) {
    const PlaneMap& pm = am.pm;
    const CombinatorialMap& m = pm.m;
    int f0 = pm.root_face(), f1 = am.inner_root_face();
    ZBiorientation o;
    switch (spec.kind) {
        case GirthSpec::annular:
            if (spec.d < 1 || spec.p < 1 || spec.p > spec.q)
                throw validation_error("annular parameters need d >= 1 and 1 <= p <= q");
            if (m.face_degree(f0) != spec.p)
                throw class_error("root-face degree does not match p");
            if (m.face_degree(f1) != spec.q)
                throw class_error("inner root-face degree does not match q");
            o = detail::general_lane(pm, spec.d, am.inner_root, spec.p, spec.q);
            break;
        case GirthSpec::annular_bipartite:
            if (spec.b < 1 || spec.r < 1 || spec.r > spec.s)
                throw validation_error("annular parameters need b >= 1 and 1 <= r <= s");
            if (m.face_degree(f0) != 2 * spec.r)
                throw class_error("root-face degree does not match 2r");
            if (m.face_degree(f1) != 2 * spec.s)
                throw class_error("inner root-face degree does not match 2s");
            if (!is_bipartite(m)) throw class_error("map is not bipartite");
            o = detail::bipartite_lane(pm, spec.b, am.inner_root, spec.r, spec.s);
            break;
        default:
            throw validation_error("non-annular spec given an annular map");
    }
    auto cl = classify(pm, o);
    if (!cl.suitable) throw internal_error("pipeline output not suitable: " + cl.detail);
    auto cc = check_constraints(pm, o, spec, f1);
    if (!cc.ok) throw internal_error("pipeline output fails constraints: " + cc.violation);
    return o;
}

// Root-distances from a vertex, by edge count.
inline std::vector<int> vertex_distances(const CombinatorialMap& m, int v0) {
    std::vector<int> dist(m.vertex_count(), -1);
    std::vector<int> queue{v0};
    dist[v0] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int d : m.vertices[v]) {
            int u = m.vertex_of[m.alpha[d]];
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

// Distance-level edges become 1-way toward the farther endpoint with weights
// (-2, 0); equal-distance edges become 0-way with weights (-1, -1).
inline ZBiorientation geodesic_biorientation(const CombinatorialMap& m, int marked_vertex) {
    std::vector<int> dist = vertex_distances(m, marked_vertex);
    for (int x : dist)
        if (x < 0) throw validation_error("map is not connected");
    ZBiorientation o = make_orientation(m.dart_count());
    for (int e = 0; e < m.edge_count(); ++e) {
        int d1 = m.edge_dart(e), d2 = m.alpha[d1];
        int u = m.vertex_of[d1], v = m.vertex_of[d2];
        if (dist[u] == dist[v]) {
            o.weight[d1] = o.weight[d2] = -1;
        } else {
            int far = dist[u] > dist[v] ? d1 : d2;
            int near = far == d1 ? d2 : d1;
            o.weight[far] = 0;
            o.ingoing[far] = true;
            o.weight[near] = -2;
        }
    }
    return o;
}

// Suitability in the outer-degree-0 sense: all half-edges at the marked
// vertex outgoing; every directed simple cycle keeps the marked vertex
// strictly on its left; every vertex reachable from the marked one.
inline ClassifyResult classify_zero(const CombinatorialMap& m, int marked_vertex,
                                    const ZBiorientation& o) {
    ClassifyResult r;
    for (int d = 1; d <= m.dart_count(); ++d) {
        if (o.ingoing[d] && o.weight[d] < 0)
            throw validation_error("ingoing half-edge with negative weight");
        if (!o.ingoing[d] && (o.weight[d] > -1 || o.weight[d] < -2))
            throw validation_error("outgoing half-edge weight outside {-2,-1}");
    }
    r.admissible = true;
    for (int d : m.vertices[marked_vertex])
        if (o.ingoing[d]) {
            r.admissible = false;
            r.detail = "ingoing half-edge at the marked vertex";
            break;
        }

    r.minimal = true;
    for (const auto& cyc : simple_cycles(m)) {
        for (int dir = 0; dir < 2 && r.minimal; ++dir) {
            std::vector<int> travel = cyc;
            if (dir) {
                for (int& t : travel) t = m.alpha[t];
                std::reverse(travel.begin(), travel.end());
            }
            bool ok = true;
            for (int t : travel)
                if (!traversable(m, o, t)) { ok = false; break; }
            if (!ok) continue;
            bool on_cycle = false;
            for (int t : travel)
                if (m.vertex_of[t] == marked_vertex) { on_cycle = true; break; }
            if (on_cycle) {
                r.minimal = false;
            } else {
                auto left = cycle_left_faces(m, travel);
                if (!left[m.face_of[m.vertices[marked_vertex][0]]]) r.minimal = false;
            }
        }
        if (!r.minimal) break;
    }
    if (!r.minimal && r.detail.empty())
        r.detail = "directed cycle without the marked vertex on its left";

    r.accessible = true;
    auto seen = reachable_from(m, o, marked_vertex);
    for (char c : seen)
        if (!c) {
            r.accessible = false;
            if (r.detail.empty()) r.detail = "not accessible from the marked vertex";
            break;
        }

    r.suitable = r.admissible && r.minimal && r.accessible;
    return r;
}

// Weight conditions of the 0/(-2) reformulation: every edge weighs -2, every
// unmarked vertex 0, every face has degree plus weight 0.
inline CheckResult check_constraints_zero(const CombinatorialMap& m, int marked_vertex,
                                          const ZBiorientation& o) {
    for (int e = 0; e < m.edge_count(); ++e)
        if (edge_weight(m, o, m.edge_dart(e)) != -2)
            return detail::fail("edge weight violates (i)");
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (v == marked_vertex) continue;
        if (vertex_weight(m, o, v) != 0) return detail::fail("vertex weight violates (ii)");
    }
    for (int f = 0; f < m.face_count(); ++f)
        if (m.face_degree(f) + face_weight(m, o, f) != 0)
            return detail::fail("face degree+weight violates (iii)");
    return {};
}

namespace detail {

// Travels along the tree from v up to its ancestor at distance stop_depth.
inline std::vector<int> upward_travels(const std::vector<int>& parent_dart,
                                       const std::vector<int>& parent_of,
                                       const std::vector<int>& dist, int v,
                                       int stop_depth) {
    std::vector<int> out;
    while (dist[v] > stop_depth) {
        out.push_back(parent_dart[v]);
        v = parent_of[v];
    }
    return out;
}

}  // namespace detail

// The suitable 1/(-1)-orientation read off the rightmost BFS-tree: tree
// edges 1-way parent-to-child with weights (-2, 1), other inner edges 0-way
// with the weight 0 on the left half-edge when the endpoint distances agree
// and on the right half-edge otherwise. The tree is found by checking every
// BFS-tree for the defining property (non-tree edges traversed left-to-right
// never step down a level); the matching tree is unique.
inline ZBiorientation rightmost_bfs_orientation(const PlaneMap& pm) {
    const CombinatorialMap& m = pm.m;
    int f0 = pm.root_face();
    if (m.face_degree(f0) != 1) throw class_error("root face must have degree 1");
    int root_vertex = m.vertex_of[pm.root];
    std::vector<int> dist = vertex_distances(m, root_vertex);
    for (int x : dist)
        if (x < 0) throw validation_error("map is not connected");
    int loop_dart = m.faces[f0][0];

    std::vector<std::vector<int>> candidates(m.vertex_count());
    std::vector<int> order;  // non-root vertices
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (v == root_vertex) continue;
        order.push_back(v);
        for (int d : m.vertices[v])
            if (dist[m.vertex_of[m.alpha[d]]] == dist[v] - 1) candidates[v].push_back(d);
        check(!candidates[v].empty(), "no parent candidate on a shortest path");
    }

    std::vector<int> parent_dart(m.vertex_count(), 0), parent_of(m.vertex_count(), -1);

    // Fundamental cycle of a non-tree edge, as travels leaving through its
    // smaller dart and returning along tree paths.
    auto fundamental_travel = [&](int d1) {
        int u = m.vertex_of[d1], v = m.vertex_of[m.alpha[d1]];
        int depth = std::min(dist[u], dist[v]);
        auto up_u = detail::upward_travels(parent_dart, parent_of, dist, u, depth);
        auto up_v = detail::upward_travels(parent_dart, parent_of, dist, v, depth);
        int au = up_u.empty() ? u : m.vertex_of[m.alpha[up_u.back()]];
        int av = up_v.empty() ? v : m.vertex_of[m.alpha[up_v.back()]];
        while (au != av) {
            up_u.push_back(parent_dart[au]);
            up_v.push_back(parent_dart[av]);
            au = parent_of[au];
            av = parent_of[av];
        }
        std::vector<int> travel{d1};
        travel.insert(travel.end(), up_v.begin(), up_v.end());
        for (auto it = up_u.rbegin(); it != up_u.rend(); ++it)
            travel.push_back(m.alpha[*it]);
        return travel;
    };
    // Left-to-right direction of the edge: the one with the root face in the
    // region left of the fundamental cycle. Returns the dart at the tail.
    auto left_to_right_dart = [&](int d1) {
        auto left = cycle_left_faces(m, fundamental_travel(d1));
        return left[f0] ? d1 : m.alpha[d1];
    };

    std::vector<int> found_parent;
    long long tested = 0;
    bool found = false;
    auto tree_is_rightmost = [&]() {
        std::vector<char> in_tree(m.dart_count() + 1, 0);
        for (int v : order) in_tree[parent_dart[v]] = in_tree[m.alpha[parent_dart[v]]] = 1;
        for (int e = 0; e < m.edge_count(); ++e) {
            int d1 = m.edge_dart(e);
            if (in_tree[d1] || is_outer_edge(pm, e)) continue;
            int t = left_to_right_dart(d1);
            if (dist[m.vertex_of[t]] > dist[m.vertex_of[m.alpha[t]]]) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> search = [&](std::size_t i) {
        if (i == order.size()) {
            if (++tested > 1000000)
                throw resource_error("BFS-tree search exceeded its budget");
            if (tree_is_rightmost()) {
                if (found) throw internal_error("rightmost BFS-tree is not unique");
                found = true;
                found_parent = parent_dart;
            }
            return;
        }
        int v = order[i];
        for (int d : candidates[v]) {
            parent_dart[v] = d;
            parent_of[v] = m.vertex_of[m.alpha[d]];
            search(i + 1);
        }
    };
    search(0);
    if (!found) throw internal_error("no rightmost BFS-tree found");
    parent_dart = found_parent;
    for (int v : order) parent_of[v] = m.vertex_of[m.alpha[parent_dart[v]]];

    ZBiorientation o = make_orientation(m.dart_count());
    o.weight[loop_dart] = 0;
    o.weight[m.alpha[loop_dart]] = 1;
    o.ingoing[m.alpha[loop_dart]] = true;
    std::vector<char> in_tree(m.dart_count() + 1, 0);
    for (int v : order) {
        int d = parent_dart[v];
        in_tree[d] = in_tree[m.alpha[d]] = 1;
        o.weight[d] = 1;
        o.ingoing[d] = true;
        o.weight[m.alpha[d]] = -2;
    }
    for (int e = 0; e < m.edge_count(); ++e) {
        int d1 = m.edge_dart(e);
        if (in_tree[d1] || is_outer_edge(pm, e)) continue;
        int t_lr = left_to_right_dart(d1);
        int tail = m.vertex_of[t_lr], head = m.vertex_of[m.alpha[t_lr]];
        if (dist[tail] == dist[head]) {
            o.weight[t_lr] = 0;
            o.weight[m.alpha[t_lr]] = -1;
        } else {
            o.weight[m.alpha[t_lr]] = 0;
            o.weight[t_lr] = -1;
        }
    }
    auto cl = classify(pm, o);
    if (!cl.suitable)
        throw internal_error("rightmost BFS orientation not suitable: " + cl.detail);
    return o;
}

}  // namespace mapgirth
