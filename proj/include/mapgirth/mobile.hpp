#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "mapgirth/errors.hpp"

namespace mapgirth {

// Bicolored plane tree. Half-edges are numbered 1..half_count; buds are
// half-edges with alpha == 0, allowed only at black vertices. Rotation lists
// give the counterclockwise order around each vertex.
struct Mobile {
    int half_count = 0;
    int nv = 0;
    std::vector<char> is_black;         // by vertex
    std::vector<std::vector<int>> rot;  // by vertex
    std::vector<int> alpha;             // by half-edge; 0 marks a bud
    std::vector<int> weight;            // by half-edge; buds carry 0
    std::vector<char> exposed;          // by half-edge; only buds may be set
    std::vector<int> vertex_of;         // by half-edge
    int special = -1;                   // special black vertex, or -1

    bool is_bud(int h) const { return alpha[h] == 0; }
    int degree(int v) const { return static_cast<int>(rot[v].size()); }
    int edge_count() const {
        int n = 0;
        for (int h = 1; h <= half_count; ++h)
            if (alpha[h] != 0) ++n;
        return n / 2;
    }
    int bud_count() const {
        int n = 0;
        for (int h = 1; h <= half_count; ++h)
            if (alpha[h] == 0) ++n;
        return n;
    }
};

struct MobileSpec {
    enum class Kind { d_branching, b_dibranching, typed, typed_bipartite, zero_branching };
    Kind kind = Kind::d_branching;
    int d = 0, b = 0, p = 0, q = 0, r = 0, s = 0;

    static MobileSpec d_branching(int d) {
        MobileSpec ms;
        ms.kind = Kind::d_branching;
        ms.d = d;
        return ms;
    }
    static MobileSpec b_dibranching(int b) {
        MobileSpec ms;
        ms.kind = Kind::b_dibranching;
        ms.b = b;
        return ms;
    }
    static MobileSpec typed(int d, int p, int q) {
        MobileSpec ms;
        ms.kind = Kind::typed;
        ms.d = d;
        ms.p = p;
        ms.q = q;
        return ms;
    }
    static MobileSpec typed_bipartite(int b, int r, int s) {
        MobileSpec ms;
        ms.kind = Kind::typed_bipartite;
        ms.b = b;
        ms.r = r;
        ms.s = s;
        return ms;
    }
    static MobileSpec zero_branching() {
        MobileSpec ms;
        ms.kind = Kind::zero_branching;
        return ms;
    }
};

// Incremental assembly: vertices and per-vertex rotation items are declared in
// order; half-edge ids are assigned by scan order at build time, so equal
// construction sequences give identical mobiles.
struct MobileBuilder {
    struct Item {
        int edge = -1;  // -1 marks a bud
        int weight = 0;
        bool exposed = false;
    };
    std::vector<char> black;
    std::vector<std::vector<Item>> items;
    int edge_counter = 0;

    int add_vertex(bool is_black_vertex) {
        black.push_back(is_black_vertex ? 1 : 0);
        items.emplace_back();
        return static_cast<int>(black.size()) - 1;
    }
    int new_edge() { return edge_counter++; }
    void push_bud(int v, bool exposed_flag = false) {
        Item it;
        it.exposed = exposed_flag;
        items[v].push_back(it);
    }
    void push_end(int v, int edge, int weight) {
        Item it;
        it.edge = edge;
        it.weight = weight;
        items[v].push_back(it);
    }

    Mobile build(int special_vertex = -1) const {
        Mobile m;
        m.nv = static_cast<int>(black.size());
        m.is_black.assign(black.begin(), black.end());
        m.rot.resize(m.nv);
        m.special = special_vertex;
        int total = 0;
        for (const auto& list : items) total += static_cast<int>(list.size());
        m.half_count = total;
        m.alpha.assign(total + 1, 0);
        m.weight.assign(total + 1, 0);
        m.exposed.assign(total + 1, 0);
        m.vertex_of.assign(total + 1, 0);
        std::vector<int> first_half(edge_counter, 0);
        int next_id = 1;
        for (int v = 0; v < m.nv; ++v) {
            for (const Item& it : items[v]) {
                int h = next_id++;
                m.rot[v].push_back(h);
                m.vertex_of[h] = v;
                m.weight[h] = it.weight;
                if (it.edge < 0) {
                    if (!black[v]) throw validation_error("bud at a white vertex");
                    m.exposed[h] = it.exposed ? 1 : 0;
                } else {
                    if (it.exposed) throw validation_error("exposed flag on a non-bud half-edge");
                    if (first_half[it.edge] == 0) {
                        first_half[it.edge] = h;
                    } else {
                        if (m.alpha[first_half[it.edge]] != 0)
                            throw validation_error("edge with more than two ends");
                        m.alpha[h] = first_half[it.edge];
                        m.alpha[first_half[it.edge]] = h;
                    }
                }
            }
        }
        for (int e = 0; e < edge_counter; ++e)
            if (first_half[e] == 0 || m.alpha[first_half[e]] == 0)
                throw validation_error("edge with fewer than two ends");
        return m;
    }
};

namespace detail {

inline std::vector<int> mobile_positions(const Mobile& m) {
    std::vector<int> pos(m.half_count + 1, -1);
    for (int v = 0; v < m.nv; ++v)
        for (int i = 0; i < m.degree(v); ++i) pos[m.rot[v][i]] = i;
    return pos;
}

}  // namespace detail

// Checks the representation invariants shared by every mobile family:
// rotations partition the half-edges, alpha is a fixed-point-free involution
// on the non-bud halves, buds sit at black vertices, the graph is a tree, and
// weights have the family-independent signs (white >= 0, black <= 0, buds 0).
inline void check_mobile_structure(const Mobile& m) {
    if (m.nv <= 0) throw validation_error("mobile needs at least one vertex");
    if (static_cast<int>(m.is_black.size()) != m.nv ||
        static_cast<int>(m.rot.size()) != m.nv)
        throw validation_error("mobile vertex tables have inconsistent sizes");
    int n = m.half_count;
    if (static_cast<int>(m.alpha.size()) != n + 1 ||
        static_cast<int>(m.weight.size()) != n + 1 ||
        static_cast<int>(m.exposed.size()) != n + 1 ||
        static_cast<int>(m.vertex_of.size()) != n + 1)
        throw validation_error("mobile half-edge tables have inconsistent sizes");
    std::vector<char> seen(n + 1, 0);
    for (int v = 0; v < m.nv; ++v)
        for (int h : m.rot[v]) {
            if (h < 1 || h > n) throw validation_error("rotation entry out of range");
            if (seen[h]) throw validation_error("half-edge appears twice in rotations");
            seen[h] = 1;
            if (m.vertex_of[h] != v) throw validation_error("vertex_of disagrees with rotations");
        }
    for (int h = 1; h <= n; ++h)
        if (!seen[h]) throw validation_error("half-edge appears in no rotation");
    for (int h = 1; h <= n; ++h) {
        int a = m.alpha[h];
        if (a < 0 || a > n) throw validation_error("alpha entry out of range");
        if (a == 0) {
            if (!m.is_black[m.vertex_of[h]]) throw validation_error("bud at a white vertex");
            if (m.weight[h] != 0) throw validation_error("bud with nonzero weight");
        } else {
            if (a == h || m.alpha[a] != h) throw validation_error("alpha is not an involution");
            if (m.exposed[h]) throw validation_error("exposed flag on a non-bud half-edge");
        }
        if (m.exposed[h] && m.alpha[h] != 0)
            throw validation_error("exposed flag on a non-bud half-edge");
    }
    for (int h = 1; h <= n; ++h) {
        if (m.is_black[m.vertex_of[h]]) {
            if (m.weight[h] > 0) throw validation_error("black half-edge with positive weight");
        } else {
            if (m.weight[h] < 0) throw validation_error("white half-edge with negative weight");
        }
    }
    if (m.special != -1) {
        if (m.special < 0 || m.special >= m.nv || !m.is_black[m.special])
            throw validation_error("special vertex must be an existing black vertex");
    }
    // Tree: connected with edge_count == nv - 1.
    int edges = m.edge_count();
    if (edges != m.nv - 1) throw validation_error("mobile is not a tree");
    std::vector<char> visited(m.nv, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : m.rot[v])
            if (m.alpha[h] != 0) {
                int u = m.vertex_of[m.alpha[h]];
                if (!visited[u]) {
                    visited[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
    }
    if (reached != m.nv) throw validation_error("mobile is not connected");
}

// Half-edges at white vertices minus buds.
inline int mobile_excess(const Mobile& m) {
    int white_halves = 0, buds = 0;
    for (int h = 1; h <= m.half_count; ++h) {
        if (m.alpha[h] == 0)
            ++buds;
        else if (!m.is_black[m.vertex_of[h]])
            ++white_halves;
    }
    return white_halves - buds;
}

struct MobileReport {
    bool ok = true;
    std::string reason;
};

namespace detail {

inline MobileReport mobile_fail(const std::string& why) {
    MobileReport r;
    r.ok = false;
    r.reason = why;
    return r;
}

}  // namespace detail

// Family membership per the mobile spec: weight domains, edge weights (i),
// white vertex weights (ii), black degree/weight balance (iii), the special
// vertex (iv) for typed families, and the implied excess.
inline MobileReport validate_mobile(const Mobile& m, const MobileSpec& spec) {
    using Kind = MobileSpec::Kind;
    check_mobile_structure(m);
    switch (spec.kind) {
        case Kind::d_branching:
            if (spec.d < 1) throw validation_error("branching parameter must be positive");
            break;
        case Kind::b_dibranching:
            if (spec.b < 1) throw validation_error("dibranching parameter must be positive");
            break;
        case Kind::typed:
            if (spec.d < 1 || spec.p < 1 || spec.q < spec.p)
                throw validation_error("typed mobile parameters need d >= 1 and 1 <= p <= q");
            break;
        case Kind::typed_bipartite:
            if (spec.b < 1 || spec.r < 1 || spec.s < spec.r)
                throw validation_error("typed mobile parameters need b >= 1 and 1 <= r <= s");
            break;
        case Kind::zero_branching:
            break;
    }
    bool typed = spec.kind == Kind::typed || spec.kind == Kind::typed_bipartite;
    if (typed && m.special == -1) return detail::mobile_fail("mobile has no special vertex");
    if (!typed && m.special != -1)
        return detail::mobile_fail("mobile has a special vertex but the family has none");

    bool bip = spec.kind == Kind::b_dibranching || spec.kind == Kind::typed_bipartite;
    bool zero = spec.kind == Kind::zero_branching;
    int d = bip ? spec.b : spec.d;  // per-family weight unit
    int edge_weight = zero ? -2 : (bip ? d - 1 : d - 2);
    int white_weight = zero ? 0 : d;

    for (int h = 1; h <= m.half_count; ++h) {
        if (m.alpha[h] == 0) continue;
        int w = m.weight[h];
        if (m.is_black[m.vertex_of[h]]) {
            bool other_black = m.is_black[m.vertex_of[m.alpha[h]]];
            if (zero) {
                int want = other_black ? -1 : -2;
                if (w != want)
                    return detail::mobile_fail("black half-edge weight outside the 0-branching pattern");
            } else if (bip) {
                if (w != 0 && w != -1)
                    return detail::mobile_fail("black half-edge weight outside {0,-1}");
            } else {
                if (w < -2 || w > 0)
                    return detail::mobile_fail("black half-edge weight outside {0,-1,-2}");
            }
        } else {
            if (zero) {
                if (w != 0) return detail::mobile_fail("white half-edge weight must be 0");
            } else if (w < 1) {
                return detail::mobile_fail("white half-edge with weight < 1");
            }
        }
    }
    if (zero) {
        for (int h = 1; h <= m.half_count; ++h)
            if (m.alpha[h] > h && !m.is_black[m.vertex_of[h]] &&
                !m.is_black[m.vertex_of[m.alpha[h]]])
                return detail::mobile_fail("white-white edge in a 0-branching mobile");
    }
    for (int h = 1; h <= m.half_count; ++h) {
        int a = m.alpha[h];
        if (a > h && m.weight[h] + m.weight[a] != edge_weight)
            return detail::mobile_fail("edge weight differs from condition (i)");
    }
    for (int v = 0; v < m.nv; ++v) {
        long long wsum = 0;
        for (int h : m.rot[v]) wsum += m.weight[h];
        if (!m.is_black[v]) {
            if (wsum != white_weight)
                return detail::mobile_fail("white vertex weight differs from condition (ii)");
            continue;
        }
        if (v == m.special) {
            int want_deg = spec.kind == Kind::typed ? spec.q : 2 * spec.s;
            long long want_w = spec.kind == Kind::typed ? spec.p - spec.q
                                                        : static_cast<long long>(spec.r) - spec.s;
            if (m.degree(v) != want_deg)
                return detail::mobile_fail("special vertex degree differs from condition (iv)");
            if (wsum != want_w)
                return detail::mobile_fail("special vertex weight differs from condition (iv)");
            continue;
        }
        long long lhs = bip ? m.degree(v) / 2 + wsum : m.degree(v) + wsum;
        if (bip && m.degree(v) % 2 != 0)
            return detail::mobile_fail("black vertex of odd degree in a dibranching mobile");
        long long target = zero ? 0 : d;
        if (lhs != target) return detail::mobile_fail("black vertex degree/weight differs from condition (iii)");
    }
    int want_excess = 0;
    switch (spec.kind) {
        case Kind::d_branching: want_excess = -spec.d; break;
        case Kind::b_dibranching: want_excess = -2 * spec.b; break;
        case Kind::typed: want_excess = -spec.p; break;
        case Kind::typed_bipartite: want_excess = -2 * spec.r; break;
        case Kind::zero_branching: want_excess = 0; break;
    }
    if (mobile_excess(m) != want_excess) return detail::mobile_fail("excess differs from the family claim");
    return MobileReport{};
}

// Contour successor in the clockwise walk around the tree: traverse the edge,
// then take the rotation predecessor at the far end; buds bounce in place.
inline int contour_next(const Mobile& m, const std::vector<int>& pos, int h) {
    int a = m.alpha[h] == 0 ? h : m.alpha[h];
    int v = m.vertex_of[a];
    int deg = m.degree(v);
    int i = pos[a];
    return m.rot[v][(i + deg - 1) % deg];
}

// Inverse of contour_next.
inline int contour_prev(const Mobile& m, const std::vector<int>& pos, int h) {
    int v = m.vertex_of[h];
    int deg = m.degree(v);
    int s = m.rot[v][(pos[h] + 1) % deg];
    return m.alpha[s] == 0 ? s : m.alpha[s];
}

namespace detail {

inline int mobile_color_token(const Mobile& m, int v) {
    if (!m.is_black[v]) return 0;
    return v == m.special ? 2 : 1;
}

// Rooted contour encoding from one starting half-edge; identical sequences
// are exactly the decorated rooted plane trees. Exposure flags are excluded.
inline std::vector<int> mobile_code_from(const Mobile& m, const std::vector<int>& pos,
                                         int start, int marked) {
    std::vector<int> code;
    code.push_back(mobile_color_token(m, m.vertex_of[start]));
    int h = start;
    for (int step = 0; step < m.half_count; ++step) {
        if (h == marked) code.push_back(9);
        if (m.alpha[h] == 0) {
            code.push_back(1);
        } else {
            code.push_back(2);
            code.push_back(m.weight[h]);
            code.push_back(m.weight[m.alpha[h]]);
            code.push_back(mobile_color_token(m, m.vertex_of[m.alpha[h]]));
        }
        h = contour_next(m, pos, h);
    }
    return code;
}

}  // namespace detail

// Minimum contour code over all starting half-edges. A lone vertex encodes as
// its color token alone.
inline std::vector<int> mobile_code(const Mobile& m, int marked = 0) {
    auto pos = detail::mobile_positions(m);
    if (m.half_count == 0) return {detail::mobile_color_token(m, 0)};
    std::vector<int> best;
    for (int h = 1; h <= m.half_count; ++h) {
        auto code = detail::mobile_code_from(m, pos, h, marked);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

inline bool mobiles_isomorphic(const Mobile& a, const Mobile& b) {
    return mobile_code(a) == mobile_code(b);
}

// Mobile without buds or white-white edges; black-black adjacencies are
// represented by fake white vertices of degree 2, and every white vertex
// carries a label.
struct WellLabelledMobile {
    int half_count = 0;
    int nv = 0;
    std::vector<char> is_black;
    std::vector<char> fake;  // white vertices only
    std::vector<long long> label;
    std::vector<std::vector<int>> rot;
    std::vector<int> alpha;
    std::vector<int> vertex_of;

    int degree(int v) const { return static_cast<int>(rot[v].size()); }
};

inline void check_well_labelled_structure(const WellLabelledMobile& m) {
    if (m.nv <= 0) throw validation_error("mobile needs at least one vertex");
    int n = m.half_count;
    if (static_cast<int>(m.is_black.size()) != m.nv || static_cast<int>(m.fake.size()) != m.nv ||
        static_cast<int>(m.label.size()) != m.nv || static_cast<int>(m.rot.size()) != m.nv ||
        static_cast<int>(m.alpha.size()) != n + 1 || static_cast<int>(m.vertex_of.size()) != n + 1)
        throw validation_error("labelled mobile tables have inconsistent sizes");
    std::vector<char> seen(n + 1, 0);
    for (int v = 0; v < m.nv; ++v)
        for (int h : m.rot[v]) {
            if (h < 1 || h > n) throw validation_error("rotation entry out of range");
            if (seen[h]) throw validation_error("half-edge appears twice in rotations");
            seen[h] = 1;
            if (m.vertex_of[h] != v) throw validation_error("vertex_of disagrees with rotations");
        }
    for (int h = 1; h <= n; ++h) {
        if (!seen[h]) throw validation_error("half-edge appears in no rotation");
        if (m.alpha[h] < 1 || m.alpha[h] > n || m.alpha[h] == h || m.alpha[m.alpha[h]] != h)
            throw validation_error("alpha is not a fixed-point-free involution");
    }
    if (n % 2 != 0 || n / 2 != m.nv - 1) throw validation_error("labelled mobile is not a tree");
    std::vector<char> visited(m.nv, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : m.rot[v]) {
            int u = m.vertex_of[m.alpha[h]];
            if (!visited[u]) {
                visited[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != m.nv) throw validation_error("labelled mobile is not connected");
    for (int h = 1; h <= n; ++h)
        if (m.is_black[m.vertex_of[h]] == m.is_black[m.vertex_of[m.alpha[h]]])
            throw validation_error("labelled mobile edge joins vertices of one color");
    for (int v = 0; v < m.nv; ++v) {
        if (m.is_black[v]) {
            if (m.fake[v]) throw validation_error("fake flag on a black vertex");
            continue;
        }
        if (m.fake[v]) {
            if (m.degree(v) != 2) throw validation_error("fake vertex of degree != 2");
            if (m.label[v] < 0) throw validation_error("fake vertex with negative label");
        } else {
            if (m.label[v] < 1) throw validation_error("white vertex with label < 1");
        }
    }
}

namespace detail {

inline int far_vertex(const WellLabelledMobile& m, int h) { return m.vertex_of[m.alpha[h]]; }

// Jump of the corner (g, sigma g) at a black vertex: the contour walks from
// far(sigma g) to far(g) across this corner.
inline long long jump_at(const WellLabelledMobile& m, int v, int i) {
    int g = m.rot[v][i];
    int gs = m.rot[v][(i + 1) % m.degree(v)];
    int before = far_vertex(m, gs);
    int after = far_vertex(m, g);
    return m.label[before] - m.label[after] + (m.fake[after] ? 0 : 1);
}

}  // namespace detail

// Buds materialize the jumps: delta(c) buds in each black corner; fake white
// vertices dissolve back into black-black edges.
inline Mobile theta(const WellLabelledMobile& L) {
    check_well_labelled_structure(L);
    bool anchored = false;
    for (int v = 0; v < L.nv; ++v)
        if (!L.is_black[v] && ((L.fake[v] && L.label[v] == 0) || (!L.fake[v] && L.label[v] == 1)))
            anchored = true;
    bool has_white = false;
    for (int v = 0; v < L.nv; ++v)
        if (!L.is_black[v]) has_white = true;
    if (has_white && !anchored)
        throw validation_error("no white vertex of label 1 (or fake of label 0)");
    for (int v = 0; v < L.nv; ++v) {
        if (!L.is_black[v]) continue;
        for (int i = 0; i < L.degree(v); ++i)
            if (detail::jump_at(L, v, i) < 0) throw validation_error("negative jump");
    }

    MobileBuilder bld;
    std::vector<int> vmap(L.nv, -1);
    for (int v = 0; v < L.nv; ++v)
        if (L.is_black[v] || !L.fake[v]) vmap[v] = bld.add_vertex(L.is_black[v]);
    // One mobile edge per surviving connection: bw edges keep their identity,
    // each fake white vertex merges its two edges into one black-black edge.
    std::map<int, int> edge_of_half;  // by the half at the black end / white end
    auto edge_for = [&](int h) {
        auto it = edge_of_half.find(h);
        if (it != edge_of_half.end()) return it->second;
        int e = bld.new_edge();
        int far = detail::far_vertex(L, h);
        int partner;
        if (!L.is_black[L.vertex_of[h]] || !L.fake[far]) {
            partner = L.alpha[h];
        } else {
            const auto& fr = L.rot[far];
            int mine = L.alpha[h];
            int other = fr[0] == mine ? fr[1] : fr[0];
            partner = L.alpha[other];
        }
        edge_of_half[h] = e;
        edge_of_half[partner] = e;
        return e;
    };
    for (int v = 0; v < L.nv; ++v) {
        if (vmap[v] < 0) continue;
        if (!L.is_black[v]) {
            for (int h : L.rot[v]) bld.push_end(vmap[v], edge_for(h), 0);
            continue;
        }
        for (int i = 0; i < L.degree(v); ++i) {
            int g = L.rot[v][i];
            int far = detail::far_vertex(L, g);
            bld.push_end(vmap[v], edge_for(g), L.fake[far] ? -1 : -2);
            long long jump = detail::jump_at(L, v, i);
            for (long long k = 0; k < jump; ++k) bld.push_bud(vmap[v]);
        }
    }
    Mobile out = bld.build();
    check_mobile_structure(out);
    return out;
}

// Splits black-black edges with fake whites, reads the jumps off the bud
// counts, and propagates labels around the tree; the global shift is pinned by
// requiring a label-1 real vertex or label-0 fake vertex.
inline WellLabelledMobile theta_inverse(const Mobile& T) {
    auto report = validate_mobile(T, MobileSpec::zero_branching());
    if (!report.ok) throw validation_error("not a 0-branching mobile: " + report.reason);

    WellLabelledMobile L;
    L.nv = T.nv;
    L.is_black.assign(T.is_black.begin(), T.is_black.end());
    L.fake.assign(T.nv, 0);
    L.label.assign(T.nv, 0);
    L.rot.resize(T.nv);
    // Halves survive 1:1 except buds (dropped); each bb edge gains a fake
    // vertex and two new halves.
    std::vector<int> hmap(T.half_count + 1, 0);
    int next = 1;
    for (int v = 0; v < T.nv; ++v)
        for (int h : T.rot[v])
            if (T.alpha[h] != 0) hmap[h] = next++;
    std::vector<std::pair<int, int>> fake_halves;  // paired with (h, alpha h)
    L.alpha.assign(next, 0);
    L.vertex_of.assign(next, 0);
    for (int v = 0; v < T.nv; ++v)
        for (int h : T.rot[v])
            if (T.alpha[h] != 0) {
                L.rot[v].push_back(hmap[h]);
                L.vertex_of[hmap[h]] = v;
            }
    for (int h = 1; h <= T.half_count; ++h) {
        int a = T.alpha[h];
        if (a < h) continue;
        bool bb = T.is_black[T.vertex_of[h]] && T.is_black[T.vertex_of[a]];
        if (!bb) {
            L.alpha[hmap[h]] = hmap[a];
            L.alpha[hmap[a]] = hmap[h];
            continue;
        }
        int f = static_cast<int>(L.is_black.size());
        L.is_black.push_back(0);
        L.fake.push_back(1);
        L.label.push_back(0);
        int x = static_cast<int>(L.alpha.size());
        int y = x + 1;
        L.alpha.push_back(hmap[h]);
        L.alpha.push_back(hmap[a]);
        L.vertex_of.push_back(f);
        L.vertex_of.push_back(f);
        L.alpha[hmap[h]] = x;
        L.alpha[hmap[a]] = y;
        L.rot.push_back({x, y});
        ++L.nv;
        fake_halves.push_back({h, a});
    }
    L.half_count = static_cast<int>(L.alpha.size()) - 1;

    // Label propagation over the tree: each black corner with delta buds
    // relates the labels of its two white neighbors.
    if (L.nv > 1) {
        std::vector<char> labelled(L.nv, 0);
        int first_white = -1;
        for (int v = 0; v < L.nv && first_white < 0; ++v)
            if (!L.is_black[v]) first_white = v;
        labelled[first_white] = 1;
        for (bool progress = true; progress;) {
            progress = false;
            for (int v = 0; v < T.nv; ++v) {
                if (!T.is_black[v]) continue;
                // Edge items around v in T with the bud counts between them.
                std::vector<int> items;
                std::vector<long long> delta;
                for (int h : T.rot[v]) {
                    if (T.alpha[h] == 0) {
                        if (!delta.empty()) ++delta.back();
                    } else {
                        items.push_back(h);
                        delta.push_back(0);
                    }
                }
                int k = static_cast<int>(items.size());
                if (k == 0) continue;
                // Trailing buds precede the first edge item cyclically.
                int lead = 0;
                for (int h : T.rot[v]) {
                    if (T.alpha[h] != 0) break;
                    ++lead;
                }
                delta.back() += lead;
                auto lwhite = [&](int h) {
                    int u = T.vertex_of[T.alpha[h]];
                    if (!T.is_black[u]) return u;
                    int fu = L.vertex_of[L.alpha[hmap[h]]];
                    return fu;  // the fake on this bb edge
                };
                for (int i = 0; i < k; ++i) {
                    int g = items[i];
                    int g2 = items[(i + 1) % k];
                    int va = lwhite(g);
                    int vb = lwhite(g2);
                    long long dj = delta[i];
                    // dj = label(vb) - label(va) + [va non-fake]
                    long long off = dj - (L.fake[va] ? 0 : 1);
                    if (labelled[va] && !labelled[vb]) {
                        L.label[vb] = L.label[va] + off;
                        labelled[vb] = 1;
                        progress = true;
                    } else if (labelled[vb] && !labelled[va]) {
                        L.label[va] = L.label[vb] - off;
                        labelled[va] = 1;
                        progress = true;
                    } else if (labelled[va] && labelled[vb]) {
                        check(L.label[vb] == L.label[va] + off, "inconsistent label propagation");
                    }
                }
            }
        }
        long long shift = 0;
        bool any = false;
        for (int v = 0; v < L.nv; ++v) {
            if (L.is_black[v]) continue;
            long long slack = L.fake[v] ? L.label[v] : L.label[v] - 1;
            if (!any || slack < shift) shift = slack;
            any = true;
        }
        if (any)
            for (int v = 0; v < L.nv; ++v)
                if (!L.is_black[v]) L.label[v] -= shift;
    }
    check_well_labelled_structure(L);
    return L;
}

inline std::vector<long long> well_labelled_code(const WellLabelledMobile& m) {
    // Contour encoding as for mobiles, with labels and fake flags in place of
    // weights; minimized over starting half-edges.
    std::vector<int> pos(m.half_count + 1, -1);
    for (int v = 0; v < m.nv; ++v)
        for (int i = 0; i < m.degree(v); ++i) pos[m.rot[v][i]] = i;
    auto vtoken = [&](int v) -> long long {
        if (m.is_black[v]) return 1;
        return m.fake[v] ? 3 : 0;
    };
    if (m.half_count == 0) return {vtoken(0), m.is_black[0] ? 0 : m.label[0]};
    std::vector<long long> best;
    for (int start = 1; start <= m.half_count; ++start) {
        std::vector<long long> code;
        int v0 = m.vertex_of[start];
        code.push_back(vtoken(v0));
        code.push_back(m.is_black[v0] ? 0 : m.label[v0]);
        int h = start;
        for (int step = 0; step < m.half_count; ++step) {
            int far = m.vertex_of[m.alpha[h]];
            code.push_back(2);
            code.push_back(vtoken(far));
            code.push_back(m.is_black[far] ? 0 : m.label[far]);
            int a = m.alpha[h];
            int dv = m.vertex_of[a];
            int deg = m.degree(dv);
            h = m.rot[dv][(pos[a] + deg - 1) % deg];
        }
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

}  // namespace mapgirth
