#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace mapgirth {

// Half-edges (darts) are 1..2E; index 0 is unused.
// alpha is the fixed-point-free involution pairing the two halves of each edge.
// sigma is the counterclockwise successor around the dart's origin vertex.
// Faces lie to the LEFT of their darts and are the orbits of
// face_next(d) = sigma^{-1}(alpha(d)), which walks a face boundary keeping the
// face on the left (inner faces counterclockwise, the outer face clockwise).
struct CombinatorialMap {
    std::vector<int> alpha;      // size 2E+1
    std::vector<int> sigma;      // size 2E+1
    std::vector<int> sigma_inv;  // size 2E+1

    // Orbit indexes, 0-based. vertex_of[d] / face_of[d] give the orbit id of dart d.
    std::vector<int> vertex_of;
    std::vector<int> face_of;
    // vertices[v] lists the darts of vertex v in sigma order starting from its
    // smallest dart; faces[f] lists darts in face-walk order from its smallest.
    std::vector<std::vector<int>> vertices;
    std::vector<std::vector<int>> faces;

    int dart_count() const { return static_cast<int>(alpha.size()) - 1; }
    int edge_count() const { return dart_count() / 2; }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }

    int face_next(int d) const { return sigma_inv[alpha[d]]; }
    int face_prev(int d) const { return alpha[sigma[d]]; }

    int degree(int v) const { return static_cast<int>(vertices[v].size()); }
    int face_degree(int f) const { return static_cast<int>(faces[f].size()); }

    // Edges are numbered 0..E-1 by their smaller dart.
    int edge_of(int d) const { return edge_index_[d]; }
    int edge_dart(int e) const { return edge_dart_[e]; }  // the smaller dart

    std::vector<int> edge_index_;
    std::vector<int> edge_dart_;
};

namespace detail {

inline std::vector<std::vector<int>> collect_orbits(const std::vector<int>& next,
                                                    std::vector<int>& orbit_of) {
    int n = static_cast<int>(next.size()) - 1;
    orbit_of.assign(n + 1, -1);
    std::vector<std::vector<int>> orbits;
    for (int d = 1; d <= n; ++d) {
        if (orbit_of[d] != -1) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<int> cyc;
        for (int e = d; orbit_of[e] == -1; e = next[e]) {
            orbit_of[e] = id;
            cyc.push_back(e);
        }
        orbits.push_back(std::move(cyc));
    }
    return orbits;
}

}  // namespace detail

// Validates the permutation data and computes all orbit tables.
// Requires: alpha a fixed-point-free involution, sigma a permutation, the map
// connected, and Euler characteristic 2 (genus zero).
inline CombinatorialMap build_map(std::vector<int> alpha, std::vector<int> sigma) {
    if (alpha.size() != sigma.size() || alpha.empty())
        throw validation_error("alpha and sigma must have equal size 2E+1");
    int n = static_cast<int>(alpha.size()) - 1;
    if (n == 0) throw validation_error("map must have at least one edge");
    if (n % 2 != 0) throw validation_error("dart count must be even");
    for (int d = 1; d <= n; ++d) {
        if (alpha[d] < 1 || alpha[d] > n || sigma[d] < 1 || sigma[d] > n)
            throw validation_error("dart image out of range");
        if (alpha[d] == d) throw validation_error("alpha has a fixed point");
        if (alpha[alpha[d]] != d) throw validation_error("alpha is not an involution");
    }
    std::vector<int> seen(n + 1, 0);
    for (int d = 1; d <= n; ++d) {
        if (seen[sigma[d]]++) throw validation_error("sigma is not a permutation");
    }

    CombinatorialMap m;
    m.alpha = std::move(alpha);
    m.sigma = std::move(sigma);
    m.sigma_inv.assign(n + 1, 0);
    for (int d = 1; d <= n; ++d) m.sigma_inv[m.sigma[d]] = d;

    m.vertices = detail::collect_orbits(m.sigma, m.vertex_of);
    std::vector<int> fnext(n + 1, 0);
    for (int d = 1; d <= n; ++d) fnext[d] = m.sigma_inv[m.alpha[d]];
    m.faces = detail::collect_orbits(fnext, m.face_of);

    // Connectivity over the group generated by alpha and sigma.
    std::vector<char> reached(n + 1, 0);
    std::vector<int> stack{1};
    reached[1] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {m.alpha[d], m.sigma[d]}) {
            if (!reached[e]) {
                reached[e] = 1;
                ++cnt;
                stack.push_back(e);
            }
        }
    }
    if (cnt != n) throw validation_error("map is not connected");

    int V = m.vertex_count(), E = n / 2, F = m.face_count();
    if (V - E + F != 2) throw validation_error("map is not planar (Euler characteristic != 2)");

    m.edge_index_.assign(n + 1, -1);
    for (int d = 1; d <= n; ++d) {
        if (d < m.alpha[d]) {
            m.edge_index_[d] = m.edge_index_[m.alpha[d]] = static_cast<int>(m.edge_dart_.size());
            m.edge_dart_.push_back(d);
        }
    }
    return m;
}

// Mutable permutation pair for map surgery; rebuild with build_map when done.
// Darts may be appended; new_dart() returns the next free dart id.
struct RawMap {
    std::vector<int> alpha{0};  // index 0 unused
    std::vector<int> sigma{0};

    explicit RawMap() = default;
    explicit RawMap(const CombinatorialMap& m) : alpha(m.alpha), sigma(m.sigma) {}

    int dart_count() const { return static_cast<int>(alpha.size()) - 1; }

    int new_dart() {
        alpha.push_back(0);
        sigma.push_back(0);
        return dart_count();
    }

    // Inserts dart d into the rotation at the corner (at, sigma(at)), so that
    // afterwards sigma(at) = d. 'at' must already be in a rotation.
    void insert_after(int at, int d) {
        sigma[d] = sigma[at];
        sigma[at] = d;
    }

    // Makes d the sole dart of a fresh vertex.
    void isolated(int d) { sigma[d] = d; }

    CombinatorialMap build() && { return build_map(std::move(alpha), std::move(sigma)); }
    CombinatorialMap build() const& { return build_map(alpha, sigma); }
};

// Fresh map from the two-row dart tables of another, dropping darts for which
// keep[d] is false. Kept darts are renumbered 1..2E' preserving order; the
// rotation at each vertex skips removed darts. Removed darts must come in
// alpha-pairs. Returns the renumbering old->new (0 for dropped darts).
inline std::vector<int> compact_map(RawMap& r, const std::vector<char>& keep) {
    int n = r.dart_count();
    std::vector<int> renum(n + 1, 0);
    int next_id = 0;
    for (int d = 1; d <= n; ++d)
        if (keep[d]) renum[d] = ++next_id;
    for (int d = 1; d <= n; ++d) {
        if (!keep[d]) continue;
        if (!keep[r.alpha[d]]) throw internal_error("compact_map: alpha pair split");
    }
    RawMap out;
    out.alpha.resize(next_id + 1);
    out.sigma.resize(next_id + 1);
    for (int d = 1; d <= n; ++d) {
        if (!keep[d]) continue;
        out.alpha[renum[d]] = renum[r.alpha[d]];
        int s = r.sigma[d];
        while (!keep[s]) s = r.sigma[s];  // terminates: d itself is kept
        out.sigma[renum[d]] = renum[s];
    }
    r = std::move(out);
    return renum;
}

}  // namespace mapgirth
