#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "biorientation.hpp"
#include "canonical.hpp"
#include "orientation.hpp"
#include "plane_map.hpp"
#include "transforms.hpp"

// Exhaustive desk-scale generators: two independent rooted-map enumerators
// that must agree, class counters keyed by face-degree profiles, and
// brute-force orientation searches. Ground truth for the counting layers.

namespace mapgirth {

// levels[e] holds one representative per unrooted isomorphism class with e
// edges.
using MapLevels = std::vector<std::vector<CombinatorialMap>>;

namespace detail {

// Every way to add one edge: a chord across a face (equal corners give the
// empty loop) or a pendant to a fresh leaf. Deleting a non-bridge edge or a
// leaf edge inverts one of the two kinds, so iterating from the vertex map
// reaches every planar map.
inline std::vector<CombinatorialMap> one_edge_extensions(const CombinatorialMap& m) {
    std::vector<CombinatorialMap> out;
    int n = m.dart_count();
    if (n == 0) {
        out.push_back(build_map({0, 2, 1}, {0, 2, 1}));
        out.push_back(build_map({0, 2, 1}, {0, 1, 2}));
        return out;
    }
    int x = n + 1, y = n + 2;
    std::vector<int> alpha = m.alpha;
    alpha.resize(n + 3, 0);
    alpha[x] = y;
    alpha[y] = x;
    for (const auto& orb : m.faces) {
        for (size_t i = 0; i < orb.size(); ++i) {
            for (size_t j = i; j < orb.size(); ++j) {
                std::vector<int> sig = m.sigma;
                sig.resize(n + 3, 0);
                int d1 = orb[i], d2 = orb[j];
                if (i == j) {
                    sig[x] = y;
                    sig[y] = m.sigma[d1];
                    sig[d1] = x;
                } else {
                    sig[x] = m.sigma[d1];
                    sig[d1] = x;
                    sig[y] = m.sigma[d2];
                    sig[d2] = y;
                }
                out.push_back(build_map(alpha, sig));
            }
        }
    }
    for (int d = 1; d <= n; ++d) {
        std::vector<int> sig = m.sigma;
        sig.resize(n + 3, 0);
        sig[x] = m.sigma[d];
        sig[d] = x;
        sig[y] = y;
        out.push_back(build_map(alpha, sig));
    }
    return out;
}

}  // namespace detail

inline MapLevels unrooted_maps(int max_edges) {
    if (max_edges < 0 || max_edges > 8)
        throw resource_error("map enumeration capped at 8 edges");
    MapLevels levels(max_edges + 1);
    levels[0].push_back(vertex_map());
    for (int e = 1; e <= max_edges; ++e) {
        std::set<std::vector<int>> seen;
        for (const auto& m : levels[e - 1]) {
            for (auto& ext : detail::one_edge_extensions(m)) {
                if (seen.insert(unrooted_code(ext)).second)
                    levels[e].push_back(std::move(ext));
            }
        }
    }
    return levels;
}

// One root dart per rooted isomorphism class. Automorphisms act freely on
// darts, so distinct rooted codes enumerate the classes exactly.
inline std::vector<int> distinct_roots(const CombinatorialMap& m) {
    std::set<std::vector<int>> seen;
    std::vector<int> roots;
    for (int d = 1; d <= m.dart_count(); ++d)
        if (seen.insert(rooted_code(m, d)).second) roots.push_back(d);
    return roots;
}

// Strategy B: rooted classes grown by edge insertion; index = edge count.
inline std::vector<std::vector<RootedMap>> enumerate_rooted_maps(int max_edges) {
    auto levels = unrooted_maps(max_edges);
    std::vector<std::vector<RootedMap>> out(levels.size());
    out[0].push_back({vertex_map(), 0});
    for (size_t e = 1; e < levels.size(); ++e)
        for (const auto& m : levels[e])
            for (int r : distinct_roots(m)) out[e].push_back({m, r});
    return out;
}

inline std::vector<long long> rooted_counts(const MapLevels& levels) {
    std::vector<long long> out(levels.size(), 0);
    if (!levels.empty()) out[0] = 1;
    for (size_t e = 1; e < levels.size(); ++e)
        for (const auto& m : levels[e])
            out[e] += static_cast<long long>(distinct_roots(m).size());
    return out;
}

// Strategy A: root fixed at dart 1, alpha fixed to (1 2)(3 4)..., every
// vertex permutation filtered to connected genus-0 pairs, deduplicated by
// rooted code. Independent of the insertion generator.
inline std::set<std::vector<int>> rooted_codes_by_permutations(int edges) {
    if (edges < 0 || edges > 5)
        throw resource_error("permutation enumeration capped at 5 edges");
    std::set<std::vector<int>> codes;
    if (edges == 0) {
        codes.insert({});
        return codes;
    }
    int n = 2 * edges;
    std::vector<int> alpha(n + 1, 0);
    for (int d = 1; d <= n; ++d) alpha[d] = ((d - 1) ^ 1) + 1;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<int> sigma(n + 1, 0), sigma_inv(n + 1, 0), mark(n + 1, 0), stack;
    int stamp = 0;
    do {
        for (int d = 1; d <= n; ++d) sigma[d] = perm[d - 1];
        for (int d = 1; d <= n; ++d) sigma_inv[sigma[d]] = d;
        ++stamp;
        int reached = 1;
        mark[1] = stamp;
        stack.assign(1, 1);
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int t : {sigma[d], alpha[d]}) {
                if (mark[t] != stamp) {
                    mark[t] = stamp;
                    ++reached;
                    stack.push_back(t);
                }
            }
        }
        if (reached != n) continue;
        int verts = 0, faces = 0;
        ++stamp;
        for (int d = 1; d <= n; ++d) {
            if (mark[d] == stamp) continue;
            ++verts;
            for (int t = d; mark[t] != stamp; t = sigma[t]) mark[t] = stamp;
        }
        ++stamp;
        for (int d = 1; d <= n; ++d) {
            if (mark[d] == stamp) continue;
            ++faces;
            for (int t = d; mark[t] != stamp; t = sigma_inv[alpha[t]]) mark[t] = stamp;
        }
        if (verts - edges + faces != 2) continue;
        codes.insert(rooted_code(build_map(alpha, sigma), 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return codes;
}

inline std::set<std::vector<int>> rooted_codes_by_insertion(const MapLevels& levels, int edges) {
    std::set<std::vector<int>> codes;
    if (edges == 0) {
        codes.insert({});
        return codes;
    }
    for (const auto& m : levels.at(edges))
        for (int r : distinct_roots(m)) codes.insert(rooted_code(m, r));
    return codes;
}

// ---- class counters ----

inline bool map_has_loop(const CombinatorialMap& m) {
    for (int e = 0; e < m.edge_count(); ++e) {
        int d = m.edge_dart(e);
        if (m.vertex_of[d] == m.vertex_of[m.alpha[d]]) return true;
    }
    return false;
}

inline bool map_is_simple(const CombinatorialMap& m) {
    std::set<std::pair<int, int>> ends;
    for (int e = 0; e < m.edge_count(); ++e) {
        int d = m.edge_dart(e);
        int u = m.vertex_of[d], v = m.vertex_of[m.alpha[d]];
        if (u == v) return false;
        if (!ends.insert({std::min(u, v), std::max(u, v)}).second) return false;
    }
    return true;
}

inline std::vector<int> inner_profile(const CombinatorialMap& m, int root_face) {
    std::vector<int> prof;
    for (int f = 0; f < m.face_count(); ++f)
        if (f != root_face) prof.push_back(m.face_degree(f));
    std::sort(prof.begin(), prof.end());
    return prof;
}

// Girth-class membership of a rooted map: root face degree matching the
// spec's bound, girth exactly that bound, bipartite when asked.
inline bool in_plane_class(const CombinatorialMap& m, int root, const GirthSpec& spec) {
    int want = spec.kind == GirthSpec::bipartite ? 2 * spec.b : spec.d;
    if (m.dart_count() == 0) return false;
    if (m.face_degree(m.face_of[root]) != want) return false;
    if (spec.kind == GirthSpec::bipartite && !is_bipartite(m)) return false;
    auto g = girth(m);
    return g.has_value() && *g == want;
}

// Rooted class count keyed by the sorted inner-face degree profile.
inline std::map<std::vector<int>, long long> count_plane_class(const MapLevels& levels,
                                                               const GirthSpec& spec) {
    std::map<std::vector<int>, long long> table;
    for (const auto& lvl : levels)
        for (const auto& m : lvl)
            for (int r : distinct_roots(m))
                if (in_plane_class(m, r, spec)) ++table[inner_profile(m, m.face_of[r])];
    return table;
}

inline std::vector<PlaneMap> plane_class_members(const MapLevels& levels, const GirthSpec& spec) {
    std::vector<PlaneMap> out;
    for (const auto& lvl : levels)
        for (const auto& m : lvl)
            for (int r : distinct_roots(m))
                if (in_plane_class(m, r, spec)) out.push_back(make_plane_map(m, r));
    return out;
}

inline std::vector<long long> count_loopless_rooted(const MapLevels& levels) {
    std::vector<long long> out(levels.size(), 0);
    if (!levels.empty()) out[0] = 1;
    for (size_t e = 1; e < levels.size(); ++e)
        for (const auto& m : levels[e])
            if (!map_has_loop(m)) out[e] += static_cast<long long>(distinct_roots(m).size());
    return out;
}

// Rooted bipartite (optionally simple) maps keyed by the degree profile of
// every face, root face included.
inline std::map<std::vector<int>, long long> count_bipartite_profiles(const MapLevels& levels,
                                                                      bool simple_only) {
    std::map<std::vector<int>, long long> table;
    for (size_t e = 1; e < levels.size(); ++e) {
        for (const auto& m : levels[e]) {
            if (!is_bipartite(m)) continue;
            if (simple_only && !map_is_simple(m)) continue;
            std::vector<int> prof;
            for (int f = 0; f < m.face_count(); ++f) prof.push_back(m.face_degree(f));
            std::sort(prof.begin(), prof.end());
            table[prof] += static_cast<long long>(distinct_roots(m).size());
        }
    }
    return table;
}

// Doubly corner-rooted annular maps: outer face degree p, inner face degree
// q, non-separating girth >= d, separating girth >= e, and every non-root
// face of degree >= d (part of the class definition; automatic when e >= d,
// since a shorter face would close a cycle violating one of the girth
// bounds); keyed by the degree profile of the remaining faces. Rooted maps
// are rigid, so pairing one canonical root with every inner dart hits each
// class exactly once.
inline std::map<std::vector<int>, long long> count_annular_class(const MapLevels& levels, int d,
                                                                 int e, int p, int q,
                                                                 bool bipartite_only = false) {
    std::map<std::vector<int>, long long> table;
    for (const auto& lvl : levels) {
        for (const auto& m : lvl) {
            if (m.face_count() < 2) continue;
            if (bipartite_only && !is_bipartite(m)) continue;
            bool has_p = false, has_q = false;
            for (int f = 0; f < m.face_count(); ++f) {
                if (m.face_degree(f) == p) has_p = true;
                if (m.face_degree(f) == q) has_q = true;
            }
            if (!has_p || !has_q) continue;
            for (int r : distinct_roots(m)) {
                if (m.face_degree(m.face_of[r]) != p) continue;
                auto pm = make_plane_map(m, r);
                for (int g = 1; g <= m.dart_count(); ++g) {
                    if (m.face_of[g] == m.face_of[r]) continue;
                    if (m.face_degree(m.face_of[g]) != q) continue;
                    AnnularMap am = make_annular_map(pm, g);
                    auto gir = annular_girths(am);
                    if (gir.separating < e) continue;
                    if (gir.non_separating.has_value() && *gir.non_separating < d) continue;
                    std::vector<int> prof;
                    bool short_face = false;
                    for (int f = 0; f < m.face_count(); ++f)
                        if (f != m.face_of[r] && f != m.face_of[g]) {
                            if (m.face_degree(f) < d) short_face = true;
                            prof.push_back(m.face_degree(f));
                        }
                    if (short_face) continue;
                    std::sort(prof.begin(), prof.end());
                    ++table[prof];
                }
            }
        }
    }
    return table;
}

inline std::vector<AnnularMap> annular_class_members(const MapLevels& levels, int d, int e, int p,
                                                     int q) {
    std::vector<AnnularMap> out;
    for (const auto& lvl : levels) {
        for (const auto& m : lvl) {
            if (m.face_count() < 2) continue;
            for (int r : distinct_roots(m)) {
                if (m.face_degree(m.face_of[r]) != p) continue;
                auto pm = make_plane_map(m, r);
                for (int g = 1; g <= m.dart_count(); ++g) {
                    if (m.face_of[g] == m.face_of[r]) continue;
                    if (m.face_degree(m.face_of[g]) != q) continue;
                    AnnularMap am = make_annular_map(pm, g);
                    auto gir = annular_girths(am);
                    if (gir.separating < e) continue;
                    if (gir.non_separating.has_value() && *gir.non_separating < d) continue;
                    bool short_face = false;
                    for (int f = 0; f < m.face_count(); ++f)
                        if (f != m.face_of[r] && f != m.face_of[g] && m.face_degree(f) < d)
                            short_face = true;
                    if (short_face) continue;
                    out.push_back(std::move(am));
                }
            }
        }
    }
    return out;
}

// ---- orientation search ----

struct OrientationSearch {
    std::vector<ZBiorientation> satisfying;
    std::vector<int> suitable;  // indices into satisfying
};

// Exhausts every weight split of the non-contour edges within the family's
// ranges (the admissible root-face normalization pins the contour edges to
// clockwise (0,1), which also makes the search finite). Collects
// admissible constraint-satisfying biorientations and flags the suitable
// ones.
inline OrientationSearch enumerate_orientations(const PlaneMap& pm, const GirthSpec& spec,
                                                int inner_root_face = -1) {
    const auto& m = pm.m;
    if (m.edge_count() > 6) throw resource_error("orientation search capped at 6 edges");
    bool bip = spec.kind == GirthSpec::bipartite || spec.kind == GirthSpec::annular_bipartite;
    int total = bip ? spec.b - 1 : spec.d - 2;
    int lo = bip ? -1 : -2;
    int hi = total - lo;
    OrientationSearch res;
    ZBiorientation o = make_orientation(m.dart_count());
    for (int g : m.faces[pm.root_face()]) {
        int h = m.alpha[g];
        o.ingoing[h] = 1;
        o.weight[h] = 1;
    }
    std::vector<int> free_edges;
    for (int e = 0; e < m.edge_count(); ++e)
        if (!is_outer_edge(pm, e)) free_edges.push_back(e);
    auto sweep = [&](auto&& self, size_t i) -> void {
        if (i == free_edges.size()) {
            if (!check_constraints(pm, o, spec, inner_root_face).ok) return;
            if (!classify(pm, o).admissible) return;
            res.satisfying.push_back(o);
            if (classify(pm, o).suitable)
                res.suitable.push_back(static_cast<int>(res.satisfying.size()) - 1);
            return;
        }
        int d1 = m.edge_dart(free_edges[i]), d2 = m.alpha[d1];
        for (int a = lo; a <= hi; ++a) {
            int b2 = total - a;
            if (b2 < lo || b2 > hi) continue;
            o.weight[d1] = a;
            o.ingoing[d1] = a >= 1 ? 1 : 0;
            o.weight[d2] = b2;
            o.ingoing[d2] = b2 >= 1 ? 1 : 0;
            self(self, i + 1);
        }
    };
    sweep(sweep, 0);
    return res;
}

// Same search for the distance lane: every edge weight -2, both halves
// non-positive, suitability per the marked-vertex classifier.
inline OrientationSearch enumerate_zero_orientations(const CombinatorialMap& m, int marked_vertex) {
    if (m.edge_count() > 6) throw resource_error("orientation search capped at 6 edges");
    OrientationSearch res;
    ZBiorientation o = make_orientation(m.dart_count());
    auto sweep = [&](auto&& self, int e) -> void {
        if (e == m.edge_count()) {
            if (!check_constraints_zero(m, marked_vertex, o).ok) return;
            res.satisfying.push_back(o);
            if (classify_zero(m, marked_vertex, o).suitable)
                res.suitable.push_back(static_cast<int>(res.satisfying.size()) - 1);
            return;
        }
        int d1 = m.edge_dart(e), d2 = m.alpha[d1];
        for (int a = -2; a <= 0; ++a) {
            o.weight[d1] = a;
            o.weight[d2] = -2 - a;
            o.ingoing[d1] = a == 0 ? 1 : 0;
            o.ingoing[d2] = a == -2 ? 1 : 0;
            self(self, e + 1);
        }
    };
    sweep(sweep, 0);
    return res;
}

}  // namespace mapgirth
