#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "combinatorial_map.hpp"

namespace mapgirth {

// Plane map: combinatorial map with a distinguished root face, identified by
// any dart whose left face is the root face.
struct PlaneMap {
    CombinatorialMap m;
    int root = 0;  // dart; root face = m.face_of[root]

    int root_face() const { return m.face_of[root]; }
};

inline PlaneMap make_plane_map(CombinatorialMap m, int root_dart) {
    if (root_dart < 1 || root_dart > m.dart_count())
        throw validation_error("root dart out of range");
    return PlaneMap{std::move(m), root_dart};
}

// Annular map: plane map with a second marked (inner) root face.
struct AnnularMap {
    PlaneMap pm;
    int inner_root = 0;  // dart; inner root face = face_of[inner_root]

    int inner_root_face() const { return pm.m.face_of[inner_root]; }
};

inline AnnularMap make_annular_map(PlaneMap pm, int inner_root_dart) {
    if (inner_root_dart < 1 || inner_root_dart > pm.m.dart_count())
        throw validation_error("inner root dart out of range");
    AnnularMap am{std::move(pm), inner_root_dart};
    if (am.inner_root_face() == am.pm.root_face())
        throw validation_error("inner root face equals root face");
    return am;
}

// Rooted map: marked corner (h, sigma h), encoded by h. The map with no edges
// has dart_count 0 and root_corner 0: a single vertex with its full corner.
struct RootedMap {
    CombinatorialMap m;
    int root_corner = 0;
};

// The edgeless single-vertex map (used by root conversions for class C_1).
inline CombinatorialMap vertex_map() {
    CombinatorialMap m;
    m.alpha = {0};
    m.sigma = {0};
    m.sigma_inv = {0};
    m.vertex_of = {0};
    m.face_of = {0};
    m.vertices = {{}};
    m.faces = {{}};
    return m;
}

inline bool is_outer_vertex(const PlaneMap& pm, int v) {
    for (int d : pm.m.vertices[v])
        if (pm.m.face_of[d] == pm.root_face()) return true;
    return false;
}

inline bool is_outer_edge(const PlaneMap& pm, int e) {
    int d = pm.m.edge_dart(e);
    int f0 = pm.root_face();
    return pm.m.face_of[d] == f0 || pm.m.face_of[pm.m.alpha[d]] == f0;
}

inline int map_degree_max(const CombinatorialMap& m) {
    int mx = 0;
    for (const auto& v : m.vertices) mx = std::max<int>(mx, static_cast<int>(v.size()));
    return mx;
}

// True iff every cycle of the underlying graph has even length, i.e. the
// vertices are 2-colorable.
inline bool is_bipartite(const CombinatorialMap& m) {
    std::vector<int> color(m.vertex_count(), -1);
    std::vector<int> stack;
    for (int s = 0; s < m.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : m.vertices[v]) {
                int u = m.vertex_of[m.alpha[d]];
                if (color[u] == -1) {
                    color[u] = color[v] ^ 1;
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Girth of the underlying multigraph: loops give 1, parallel edges 2, else the
// shortest simple-graph cycle by BFS from every vertex. nullopt for forests.
inline std::optional<int> girth(const CombinatorialMap& m) {
    int E = m.edge_count();
    std::vector<std::pair<int, int>> ends(E);
    for (int e = 0; e < E; ++e) {
        int d = m.edge_dart(e);
        int u = m.vertex_of[d], v = m.vertex_of[m.alpha[d]];
        if (u == v) return 1;
        ends[e] = std::minmax(u, v);
    }
    {
        auto sorted = ends;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 2;
    }
    // Simple graph now. adj[v] = (neighbor, edge id).
    int V = m.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(V);
    for (int e = 0; e < E; ++e) {
        adj[ends[e].first].push_back({ends[e].second, e});
        adj[ends[e].second].push_back({ends[e].first, e});
    }
    int best = -1;
    std::vector<int> dist(V), par_edge(V), queue;
    for (int s = 0; s < V; ++s) {
        dist.assign(V, -1);
        par_edge.assign(V, -1);
        queue.assign(1, s);
        dist[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (auto [u, e] : adj[v]) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    par_edge[u] = e;
                    queue.push_back(u);
                }
            }
        }
        for (int e = 0; e < E; ++e) {
            auto [u, v] = ends[e];
            if (par_edge[u] == e || par_edge[v] == e) continue;
            int len = dist[u] + dist[v] + 1;  // closed walk through s; >= girth
            if (best == -1 || len < best) best = len;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

// All simple cycles as sequences of travel darts t_1..t_k, where t_i is based
// at the i-th cycle vertex and alpha(t_i) at the next. Each undirected cycle
// appears exactly once: smallest vertex first, and of the two directions the
// one whose first travel dart is smaller than the reversed direction's.
inline std::vector<std::vector<int>> simple_cycles(const CombinatorialMap& m) {
    std::vector<std::vector<int>> out;
    int V = m.vertex_count();
    std::vector<char> on_path(V, 0);
    std::vector<int> path;

    for (int s = 0; s < V; ++s) {
        // Loops at s, length 1.
        for (int d : m.vertices[s])
            if (m.vertex_of[m.alpha[d]] == s && d < m.alpha[d]) out.push_back({d});

        // Length >= 2: DFS over paths with intermediate vertices > s.
        on_path[s] = 1;
        auto dfs = [&](auto&& self, int v) -> void {
            for (int t : m.vertices[v]) {
                int u = m.vertex_of[m.alpha[t]];
                if (u == s) {
                    if (path.empty()) continue;  // loop at s, handled above
                    if (path.size() == 1 && m.edge_of(t) == m.edge_of(path[0])) continue;
                    path.push_back(t);
                    if (path[0] < m.alpha[path.back()]) out.push_back(path);
                    path.pop_back();
                    continue;
                }
                if (u < s || on_path[u]) continue;
                if (u == v) continue;  // loop at an intermediate vertex
                on_path[u] = 1;
                path.push_back(t);
                self(self, u);
                path.pop_back();
                on_path[u] = 0;
            }
        };
        dfs(dfs, s);
        on_path[s] = 0;
    }
    return out;
}

// Which side of a directed simple cycle each face lies on. Faces left of some
// travel dart seed the left side; flood fill crosses every non-cycle edge.
// Returns per-face flags: true = left of the cycle.
inline std::vector<char> cycle_left_faces(const CombinatorialMap& m,
                                          const std::vector<int>& travel) {
    std::vector<char> on_cycle(m.edge_count(), 0);
    for (int t : travel) on_cycle[m.edge_of(t)] = 1;

    std::vector<char> side(m.face_count(), 0);  // 0 unknown, 1 left, 2 right
    std::vector<int> stack;
    for (int t : travel) {
        int f = m.face_of[t];
        if (!side[f]) {
            side[f] = 1;
            stack.push_back(f);
        }
    }
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int d : m.faces[f]) {
            if (on_cycle[m.edge_of(d)]) continue;
            int g = m.face_of[m.alpha[d]];
            if (!side[g]) {
                side[g] = side[f];
                stack.push_back(g);
            }
        }
    }
    std::vector<char> left(m.face_count(), 0);
    for (int f = 0; f < m.face_count(); ++f) left[f] = (side[f] == 1);
    for (int t : travel)
        check(!left[m.face_of[m.alpha[t]]], "cycle has a face on both sides");
    return left;
}

inline bool cycle_separates(const AnnularMap& am, const std::vector<int>& travel) {
    auto left = cycle_left_faces(am.pm.m, travel);
    return left[am.pm.root_face()] != left[am.inner_root_face()];
}

struct AnnularGirths {
    int separating = 0;                 // always defined
    std::optional<int> non_separating;  // nullopt when every cycle separates
};

inline AnnularGirths annular_girths(const AnnularMap& am) {
    AnnularGirths g;
    int best_sep = -1, best_non = -1;
    for (const auto& cyc : simple_cycles(am.pm.m)) {
        int len = static_cast<int>(cyc.size());
        if (cycle_separates(am, cyc)) {
            if (best_sep == -1 || len < best_sep) best_sep = len;
        } else {
            if (best_non == -1 || len < best_non) best_non = len;
        }
    }
    check(best_sep != -1, "annular map has no separating cycle");
    g.separating = best_sep;
    if (best_non != -1) g.non_separating = best_non;
    return g;
}

}  // namespace mapgirth
