#pragma once

#include <utility>
#include <vector>

#include "canonical.hpp"
#include "plane_map.hpp"

namespace mapgirth {

// Planar dual on the same dart set: each dart moves to the vertex that stands
// for its left face, so sigma* = face_next. Applying dual twice returns an
// alpha-conjugate relabeling of the original (isomorphic, checked in tests).
inline CombinatorialMap dual_map(const CombinatorialMap& m) {
    int n = m.dart_count();
    std::vector<int> sig(n + 1, 0);
    for (int d = 1; d <= n; ++d) sig[d] = m.face_next(d);
    return build_map(m.alpha, sig);
}

struct DualMap {
    CombinatorialMap m;
    int marked_vertex;  // dual vertex standing for the primal root face
};

inline DualMap dual(const PlaneMap& pm) {
    DualMap d{dual_map(pm.m), 0};
    d.marked_vertex = d.m.vertex_of[pm.root];
    return d;
}

// Edge subdivision: a new vertex in the middle of every edge. Original dart
// ids are preserved; the two half-segments of old edge e are (d, n1) and
// (d', n2) with n1 = 2E+2e+1, n2 = 2E+2e+2 for darts d < d' of e.
struct SubdivideResult {
    CombinatorialMap m;
    std::vector<int> edge_vertex;  // old edge id -> new vertex id
};

inline SubdivideResult subdivide(const CombinatorialMap& m) {
    int n = m.dart_count(), E = m.edge_count();
    RawMap r(m);
    for (int e = 0; e < E; ++e) {
        int d = m.edge_dart(e), d2 = m.alpha[d];
        int n1 = r.new_dart(), n2 = r.new_dart();
        r.alpha[d] = n1;
        r.alpha[n1] = d;
        r.alpha[d2] = n2;
        r.alpha[n2] = d2;
        r.sigma[n1] = n2;
        r.sigma[n2] = n1;
    }
    SubdivideResult out{std::move(r).build(), {}};
    out.edge_vertex.resize(E);
    for (int e = 0; e < E; ++e) out.edge_vertex[e] = out.m.vertex_of[n + 2 * e + 1];
    return out;
}

inline PlaneMap subdivide_plane(const PlaneMap& pm, std::vector<int>* edge_vertex = nullptr) {
    auto r = subdivide(pm.m);
    if (edge_vertex) *edge_vertex = std::move(r.edge_vertex);
    return PlaneMap{std::move(r.m), pm.root};
}

// Superimposition Q_M: a face-vertex inside every inner face, joined by a
// spoke to each of its corners. Spoke s_h lands in corner (h, sigma h); the
// face-vertex rotation follows the face walk. The M-edge clockwise-next after
// spoke s_h around its M-endpoint is edge(h).
struct QuadResult {
    PlaneMap qm;                  // Q_M, rooted at the original root
    int m_darts = 0;              // darts 1..m_darts are the original map's
    std::vector<int> spoke;       // M-dart h -> spoke dart s_h (0 for outer-face darts)
    std::vector<int> face_vertex; // M-face id -> Q_M vertex id (-1 for the root face)
    int special_vertex = -1;      // face-vertex of the annular inner root face

    bool is_spoke_edge(int dart) const { return dart > m_darts; }
    // For a spoke dart s_h at the M-endpoint, the M-dart h it follows.
    int m_dart_of_spoke(int s) const { return spoke_owner[s - m_darts - 1]; }
    std::vector<int> spoke_owner;  // spoke darts in creation order -> owning M-dart
};

inline QuadResult inner_quadrangulation(const PlaneMap& pm, int inner_root_face = -1) {
    const CombinatorialMap& m = pm.m;
    int f0 = pm.root_face();
    RawMap r(m);
    QuadResult out;
    out.m_darts = m.dart_count();
    out.spoke.assign(m.dart_count() + 1, 0);
    out.face_vertex.assign(m.face_count(), -1);

    std::vector<int> fv_first(m.face_count(), 0);  // first face-vertex dart per face
    for (int f = 0; f < m.face_count(); ++f) {
        if (f == f0) continue;
        int prev_q = 0, first_q = 0;
        for (int h : m.faces[f]) {
            int s = r.new_dart(), q = r.new_dart();
            r.alpha[s] = q;
            r.alpha[q] = s;
            r.insert_after(h, s);
            out.spoke[h] = s;
            out.spoke_owner.push_back(h);
            out.spoke_owner.push_back(0);  // q darts hold no M-dart
            if (!first_q) first_q = q; else r.sigma[prev_q] = q;
            prev_q = q;
        }
        r.sigma[prev_q] = first_q;
        fv_first[f] = first_q;
    }
    out.qm = PlaneMap{std::move(r).build(), pm.root};
    for (int f = 0; f < m.face_count(); ++f)
        if (f != f0) out.face_vertex[f] = out.qm.m.vertex_of[fv_first[f]];
    if (inner_root_face >= 0) out.special_vertex = out.face_vertex[inner_root_face];
    return out;
}

// Q alone: delete the original edges, keeping only spokes. Inner faces of the
// result have degree 4 and correspond to the inner edges of M.
inline CombinatorialMap quad_only(const QuadResult& q) {
    RawMap r(q.qm.m);
    std::vector<char> keep(q.qm.m.dart_count() + 1, 0);
    for (int d = q.m_darts + 1; d <= q.qm.m.dart_count(); ++d) keep[d] = 1;
    compact_map(r, keep);
    return std::move(r).build();
}

// Root conversions between rooted objects and the degree-1 / degree-2
// root-face classes.

// Marked corner (r, sigma r) -> loop added in that corner; the loop's
// degree-1 face becomes the root face.
inline PlaneMap rooted_to_c1(const RootedMap& rm) {
    if (rm.m.dart_count() == 0) {
        return PlaneMap{build_map({0, 2, 1}, {0, 2, 1}), 1};
    }
    RawMap r(rm.m);
    int g = r.new_dart(), g2 = r.new_dart();
    r.alpha[g] = g2;
    r.alpha[g2] = g;
    r.sigma[g2] = r.sigma[rm.root_corner];
    r.sigma[rm.root_corner] = g;
    r.sigma[g] = g2;
    return PlaneMap{std::move(r).build(), g};
}

inline RootedMap c1_to_rooted(const PlaneMap& pm) {
    if (pm.m.face_degree(pm.root_face()) != 1)
        throw class_error("root face degree is not 1");
    int g = pm.m.faces[pm.root_face()][0];
    int g2 = pm.m.alpha[g];
    check(pm.m.sigma[g] == g2, "degree-1 face is not a loop");
    if (pm.m.dart_count() == 2) return RootedMap{vertex_map(), 0};
    int corner = pm.m.sigma_inv[g];  // the corner that hosted the loop
    RawMap r(pm.m);
    std::vector<char> keep(pm.m.dart_count() + 1, 1);
    keep[g] = keep[g2] = 0;
    auto renum = compact_map(r, keep);
    return RootedMap{std::move(r).build(), renum[corner]};
}

struct EdgeMarkedMap {
    CombinatorialMap m;
    int marked_edge = 0;
};

// Adds an edge parallel to the marked edge so that the new digon face
// {g, b} (b = a chosen dart of the marked edge) becomes the root face.
inline PlaneMap marked_to_c2(const EdgeMarkedMap& em) {
    int b = em.m.edge_dart(em.marked_edge);
    RawMap r(em.m);
    int g = r.new_dart(), g2 = r.new_dart();
    r.alpha[g] = g2;
    r.alpha[g2] = g;
    int ab = em.m.alpha[b];
    r.sigma[g] = ab;
    r.sigma[em.m.sigma_inv[ab]] = g;  // also right for a degree-1 endpoint
    r.insert_after(b, g2);
    return PlaneMap{std::move(r).build(), g};
}

inline EdgeMarkedMap c2_to_marked(const PlaneMap& pm) {
    if (pm.m.face_degree(pm.root_face()) != 2)
        throw class_error("root face degree is not 2");
    int x = pm.root, y = pm.m.face_next(x);
    if (pm.m.edge_of(x) == pm.m.edge_of(y))
        throw class_error("root face is a pendant edge, not a digon");
    RawMap r(pm.m);
    std::vector<char> keep(pm.m.dart_count() + 1, 1);
    keep[x] = keep[pm.m.alpha[x]] = 0;
    auto renum = compact_map(r, keep);
    auto m = std::move(r).build();
    int marked = m.edge_of(renum[y]);
    return EdgeMarkedMap{std::move(m), marked};
}

}  // namespace mapgirth
