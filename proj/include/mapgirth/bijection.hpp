#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "biorientation.hpp"
#include "canonical.hpp"
#include "mobile.hpp"
#include "orientation.hpp"
#include "transforms.hpp"

namespace mapgirth {

// Suitable Z-bioriented plane map to mobile. After reversing the root-face
// contour, inner faces become black vertices and inner vertices white ones.
// Walking each inner face in face order, the corner at dart d receives a
// white edge end when d is the ingoing half of a 1-way edge, a bud when d is
// ingoing on a 2-way edge or outgoing on a 1-way edge, and nothing on a
// 0-way edge; the 0-way edge itself contributes a black-black end right
// after the corner, carrying the weight of the opposite half. White
// rotations scan the vertex in sigma order, ingoing halves only. Buds of
// reversed contour edges are exposed. With special_face set, that face's
// black vertex is the special vertex of the result.
inline Mobile phi(const PlaneMap& pm, const ZBiorientation& o, int special_face = -1) {
    const CombinatorialMap& m = pm.m;
    int n = m.dart_count();
    if (static_cast<int>(o.ingoing.size()) != n + 1 ||
        static_cast<int>(o.weight.size()) != n + 1)
        throw validation_error("orientation tables do not match the map");
    auto cl = classify(pm, o);
    if (!cl.suitable)
        throw validation_error("biorientation is not suitable: " + cl.detail);
    int f0 = pm.root_face();
    if (special_face == f0)
        throw validation_error("special face cannot be the root face");
    if (special_face >= m.face_count())
        throw validation_error("special face does not exist");

    std::vector<char> ing(o.ingoing.begin(), o.ingoing.end());
    std::vector<int> w(o.weight.begin(), o.weight.end());
    for (int g : m.faces[f0]) {
        int h = m.alpha[g];
        std::swap(w[g], w[h]);
        ing[g] = 1;
        ing[h] = 0;
    }

    MobileBuilder b;
    std::vector<int> black_of(m.face_count(), -1);
    for (int f = 0; f < m.face_count(); ++f)
        if (f != f0) black_of[f] = b.add_vertex(true);
    std::vector<int> white_of(m.vertex_count(), -1);
    for (int v = 0; v < m.vertex_count(); ++v)
        if (!is_outer_vertex(pm, v)) white_of[v] = b.add_vertex(false);

    std::vector<int> bw_edge(n + 1, -1);             // keyed by the ingoing dart
    std::vector<int> span_edge(m.edge_count(), -1);  // 0-way and 2-way edges
    auto edge_for = [&](std::vector<int>& tab, int key) {
        if (tab[key] < 0) tab[key] = b.new_edge();
        return tab[key];
    };

    for (int f = 0; f < m.face_count(); ++f) {
        if (f == f0) continue;
        for (int d : m.faces[f]) {
            int a = m.alpha[d];
            if (ing[d]) {
                if (ing[a])
                    b.push_bud(black_of[f]);
                else
                    b.push_end(black_of[f], edge_for(bw_edge, d), w[a]);
            } else if (ing[a]) {
                b.push_bud(black_of[f], m.face_of[a] == f0);
            } else {
                b.push_end(black_of[f], edge_for(span_edge, m.edge_of(d)), w[a]);
            }
        }
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (white_of[v] < 0) continue;
        for (int h : m.vertices[v]) {
            if (!ing[h]) continue;
            int eid = ing[m.alpha[h]] ? edge_for(span_edge, m.edge_of(h))
                                      : edge_for(bw_edge, h);
            b.push_end(white_of[v], eid, w[h]);
        }
    }

    Mobile t;
    try {
        t = b.build(special_face >= 0 ? black_of[special_face] : -1);
        check_mobile_structure(t);
    } catch (const validation_error& e) {
        throw internal_error(std::string("mapping produced a malformed mobile: ") + e.what());
    }
    check(mobile_excess(t) == -m.face_degree(f0),
          "mobile excess does not match the outer degree");
    int exposed_n = 0;
    for (int h = 1; h <= t.half_count; ++h) exposed_n += t.exposed[h] ? 1 : 0;
    check(exposed_n == m.face_degree(f0),
          "exposed bud count does not match the outer degree");
    return t;
}

// Outer-degree-0 variant: no root face and no reversal. Every face becomes a
// black vertex, every vertex except the marked one a white vertex; the local
// rules are those of phi. The output is a 0-branching mobile of excess 0.
inline Mobile phi_zero(const CombinatorialMap& m, int marked_vertex, const ZBiorientation& o) {
    int n = m.dart_count();
    if (static_cast<int>(o.ingoing.size()) != n + 1 ||
        static_cast<int>(o.weight.size()) != n + 1)
        throw validation_error("orientation tables do not match the map");
    auto cl = classify_zero(m, marked_vertex, o);
    if (!cl.suitable)
        throw validation_error("biorientation is not suitable: " + cl.detail);

    MobileBuilder b;
    std::vector<int> black_of(m.face_count(), -1);
    for (int f = 0; f < m.face_count(); ++f) black_of[f] = b.add_vertex(true);
    std::vector<int> white_of(m.vertex_count(), -1);
    for (int v = 0; v < m.vertex_count(); ++v)
        if (v != marked_vertex) white_of[v] = b.add_vertex(false);

    std::vector<int> bw_edge(n + 1, -1);
    std::vector<int> bb_edge(m.edge_count(), -1);
    auto edge_for = [&](std::vector<int>& tab, int key) {
        if (tab[key] < 0) tab[key] = b.new_edge();
        return tab[key];
    };
    for (int f = 0; f < m.face_count(); ++f) {
        for (int d : m.faces[f]) {
            int a = m.alpha[d];
            if (o.ingoing[d])
                b.push_end(black_of[f], edge_for(bw_edge, d), o.weight[a]);
            else if (o.ingoing[a])
                b.push_bud(black_of[f]);
            else
                b.push_end(black_of[f], edge_for(bb_edge, m.edge_of(d)), o.weight[a]);
        }
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (white_of[v] < 0) continue;
        for (int h : m.vertices[v]) {
            if (!o.ingoing[h]) continue;
            check(!o.ingoing[m.alpha[h]], "2-way edge in a geodesic biorientation");
            b.push_end(white_of[v], edge_for(bw_edge, h), o.weight[h]);
        }
    }

    Mobile t;
    try {
        t = b.build();
        check_mobile_structure(t);
    } catch (const validation_error& e) {
        throw internal_error(std::string("mapping produced a malformed mobile: ") + e.what());
    }
    check(mobile_excess(t) == 0, "0-branching image must have excess 0");
    return t;
}

namespace detail {

struct ContourToken {
    int half;
    bool bud;
};

// Bud/stem matching underlying the complete closure. The contour emits a
// token for every bud and for every half-edge whose far endpoint is white;
// buds match stems like parentheses against the contour direction, with a
// second reversed pass closing the cycle. Every stem ends up matched; the
// leftover buds are the exposed ones, listed in contour order from
// half-edge 1.
struct ClosureMatching {
    std::vector<ContourToken> tokens;
    std::vector<int> match_of;
    std::vector<int> exposed;
};

inline ClosureMatching closure_matching(const Mobile& t) {
    auto pos = mobile_positions(t);
    ClosureMatching r;
    r.match_of.assign(t.half_count + 1, 0);
    int x = 1;
    for (int k = 0; k < t.half_count; ++k) {
        if (t.is_bud(x))
            r.tokens.push_back({x, true});
        else if (!t.is_black[t.vertex_of[t.alpha[x]]])
            r.tokens.push_back({x, false});
        x = contour_next(t, pos, x);
    }
    check(x == 1, "contour did not close after visiting every half-edge");

    std::vector<int> stack;
    std::vector<char> in_stack(t.half_count + 1, 0);
    for (int pass = 0; pass < 2; ++pass)
        for (int i = static_cast<int>(r.tokens.size()) - 1; i >= 0; --i) {
            const ContourToken& tk = r.tokens[i];
            if (tk.bud) {
                if (!r.match_of[tk.half] && !in_stack[tk.half]) {
                    stack.push_back(tk.half);
                    in_stack[tk.half] = 1;
                }
            } else if (!r.match_of[tk.half] && !stack.empty()) {
                int bud = stack.back();
                stack.pop_back();
                in_stack[bud] = 0;
                r.match_of[bud] = tk.half;
                r.match_of[tk.half] = bud;
            }
        }
    for (const ContourToken& tk : r.tokens) {
        if (tk.bud) {
            if (!r.match_of[tk.half]) r.exposed.push_back(tk.half);
        } else {
            check(r.match_of[tk.half] != 0, "closure left a stem unmatched");
        }
    }
    return r;
}

}  // namespace detail

// Buds the complete closure leaves unmatched, in contour order.
inline std::vector<int> exposed_buds(const Mobile& t) {
    return detail::closure_matching(t).exposed;
}

// Complete closure of a mobile with negative excess. Stems are taken in each
// corner following a black end of a black-white edge and midway along each
// white-white edge (one per traversal direction); buds match stems like
// parentheses against the contour direction, and the unmatched buds join a
// new root vertex in contour order. The result keeps one direction and one
// weight per dart, from which the inverse mapping reads off the orientation.
struct ClosureResult {
    CombinatorialMap map;
    int root_vertex = -1;
    ZBiorientation orientation;
    int special_vertex = -1;
};

inline ClosureResult psi(const Mobile& t) {
    check_mobile_structure(t);
    int delta = mobile_excess(t);
    if (delta >= 0) throw validation_error("closure needs negative excess");
    for (int h = 1; h <= t.half_count; ++h)
        if (!t.is_bud(h) && !t.is_black[t.vertex_of[h]] && t.weight[h] < 1)
            throw validation_error("closure needs positive weights at white vertices");

    detail::ClosureMatching cm = detail::closure_matching(t);
    const std::vector<detail::ContourToken>& seq = cm.tokens;
    const std::vector<int>& match_of = cm.match_of;
    check(static_cast<int>(cm.exposed.size()) == -delta,
          "unmatched bud count differs from the excess");

    bool any_marks = false;
    for (int h = 1; h <= t.half_count; ++h) any_marks |= t.exposed[h] != 0;
    if (any_marks)
        for (int h = 1; h <= t.half_count; ++h)
            if (t.is_bud(h) && (t.exposed[h] != 0) != (match_of[h] == 0))
                throw validation_error("exposed marks disagree with the closure");

    std::vector<int> alpha(1, 0);
    std::vector<char> ding(1, 0);
    std::vector<int> dw(1, 0);
    auto new_dart = [&](bool in, int wt) {
        alpha.push_back(0);
        ding.push_back(in ? 1 : 0);
        dw.push_back(wt);
        return static_cast<int>(alpha.size()) - 1;
    };
    auto link = [&](int a, int c) {
        alpha[a] = c;
        alpha[c] = a;
    };

    std::vector<int> slot_dart(t.half_count + 1, 0);
    // Black-black tree edges carry over with their weights, both halves
    // outgoing.
    for (int h = 1; h <= t.half_count; ++h) {
        int a = t.alpha[h];
        if (a <= h) continue;
        if (t.is_black[t.vertex_of[h]] && t.is_black[t.vertex_of[a]]) {
            slot_dart[h] = new_dart(false, t.weight[h]);
            slot_dart[a] = new_dart(false, t.weight[a]);
            link(slot_dart[h], slot_dart[a]);
        }
    }
    // Closure edges. A stem at a black vertex rejoins that vertex's slot: the
    // bud side is ingoing with the white half weight, the stem side outgoing
    // with the black half weight. The two mid-edge stems of a white-white
    // edge complete one edge through the erased fake vertex, both halves
    // ingoing, each with the weight of the far white half of its stem.
    std::vector<char> handled(t.half_count + 1, 0);
    for (int h = 1; h <= t.half_count; ++h) {
        if (!t.is_bud(h) || !match_of[h] || handled[h]) continue;
        int s = match_of[h];
        if (t.is_black[t.vertex_of[s]]) {
            slot_dart[h] = new_dart(true, t.weight[t.alpha[s]]);
            slot_dart[s] = new_dart(false, t.weight[s]);
            link(slot_dart[h], slot_dart[s]);
        } else {
            int s2 = t.alpha[s];
            int h2 = match_of[s2];
            check(h2 != 0 && t.is_bud(h2), "white-white stem without a twin match");
            slot_dart[h] = new_dart(true, t.weight[s2]);
            slot_dart[h2] = new_dart(true, t.weight[s]);
            link(slot_dart[h], slot_dart[h2]);
            handled[h2] = 1;
        }
        handled[h] = 1;
    }
    // Unmatched buds join the root vertex in contour order; the root-side
    // half is the ingoing one.
    std::vector<int> v0_rot;
    for (const detail::ContourToken& tk : seq) {
        if (!tk.bud || match_of[tk.half]) continue;
        slot_dart[tk.half] = new_dart(false, 0);
        v0_rot.push_back(new_dart(true, 1));
        link(slot_dart[tk.half], v0_rot.back());
    }

    std::vector<int> sigma(alpha.size(), 0);
    auto close_cycle = [&](const std::vector<int>& darts) {
        for (std::size_t i = 0; i < darts.size(); ++i)
            sigma[darts[i]] = darts[(i + 1) % darts.size()];
    };
    for (int v = 0; v < t.nv; ++v) {
        if (!t.is_black[v]) continue;
        std::vector<int> cyc;
        for (int h : t.rot[v]) {
            check(slot_dart[h] != 0, "black slot without a closure dart");
            cyc.push_back(slot_dart[h]);
        }
        close_cycle(cyc);
    }
    close_cycle(v0_rot);

    ClosureResult r;
    try {
        r.map = build_map(std::move(alpha), std::move(sigma));
    } catch (const validation_error& e) {
        throw internal_error(std::string("closure assembled an invalid map: ") + e.what());
    }
    r.root_vertex = r.map.vertex_of[v0_rot.front()];
    r.orientation.ingoing = std::move(ding);
    r.orientation.weight = std::move(dw);
    if (t.special >= 0) {
        check(!t.rot[t.special].empty(), "special vertex of degree 0");
        r.special_vertex = r.map.vertex_of[slot_dart[t.rot[t.special][0]]];
    }
    return r;
}

// Inverse mapping: dualize the closure at its root vertex. The dual keeps
// the dart set, so each dart's direction and weight carry over verbatim;
// dual faces are the alpha images of primal rotations, so the root face is
// spanned by the partners of the root-vertex darts.
struct InverseResult {
    PlaneMap map;
    ZBiorientation orientation;
    int inner_root = 0;  // dart of the face dual to the special vertex, else 0
};

inline InverseResult phi_inverse(const Mobile& t) {
    ClosureResult c = psi(t);
    int root = c.map.alpha[c.map.vertices[c.root_vertex][0]];
    int inner_root = 0;
    if (c.special_vertex >= 0)
        inner_root = c.map.alpha[c.map.vertices[c.special_vertex][0]];
    InverseResult r{make_plane_map(dual_map(c.map), root), std::move(c.orientation),
                    inner_root};
    auto cl = classify(r.map, r.orientation);
    if (!cl.suitable)
        throw internal_error("inverse mapping produced a non-suitable orientation: " +
                             cl.detail);
    return r;
}

namespace detail {

inline void check_degree_transfer(const PlaneMap& pm, const Mobile& t) {
    std::vector<int> face_degrees, black_degrees;
    for (int f = 0; f < pm.m.face_count(); ++f)
        if (f != pm.root_face()) face_degrees.push_back(pm.m.face_degree(f));
    for (int v = 0; v < t.nv; ++v)
        if (t.is_black[v]) black_degrees.push_back(t.degree(v));
    std::sort(face_degrees.begin(), face_degrees.end());
    std::sort(black_degrees.begin(), black_degrees.end());
    check(face_degrees == black_degrees,
          "inner-face degrees do not transfer to black degrees");
}

}  // namespace detail

// Girth bijections, forward direction: the suitable orientation for the
// spec, then phi, then the family conditions as a self-check.
inline Mobile map_to_mobile(const PlaneMap& pm, const GirthSpec& spec) {
    if (spec.kind != GirthSpec::plain && spec.kind != GirthSpec::bipartite)
        throw validation_error(
            "annular specs need an annular map, outer degree 0 a marked vertex");
    auto o = suitable_orientation(pm, spec);
    Mobile t = phi(pm, o);
    MobileSpec ms = spec.kind == GirthSpec::plain ? MobileSpec::d_branching(spec.d)
                                                  : MobileSpec::b_dibranching(spec.b);
    auto rep = validate_mobile(t, ms);
    check(rep.ok, "image fails the mobile family conditions");
    detail::check_degree_transfer(pm, t);
    return t;
}

inline Mobile map_to_mobile(const AnnularMap& am, const GirthSpec& spec) {
    if (spec.kind != GirthSpec::annular && spec.kind != GirthSpec::annular_bipartite)
        throw validation_error("non-annular spec given an annular map");
    auto o = suitable_orientation(am, spec);
    Mobile t = phi(am.pm, o, am.inner_root_face());
    MobileSpec ms = spec.kind == GirthSpec::annular
                        ? MobileSpec::typed(spec.d, spec.p, spec.q)
                        : MobileSpec::typed_bipartite(spec.b, spec.r, spec.s);
    auto rep = validate_mobile(t, ms);
    check(rep.ok, "image fails the mobile family conditions");
    detail::check_degree_transfer(am.pm, t);
    return t;
}

inline Mobile map_to_mobile(const CombinatorialMap& m, int marked_vertex) {
    auto o = geodesic_biorientation(m, marked_vertex);
    Mobile t = phi_zero(m, marked_vertex, o);
    auto rep = validate_mobile(t, MobileSpec::zero_branching());
    check(rep.ok, "image fails the 0-branching conditions");
    return t;
}

// Inverse direction. Plane output for the d- and b-families.
struct PlaneResult {
    PlaneMap map;
    ZBiorientation orientation;
};

inline PlaneResult mobile_to_map(const Mobile& t, const MobileSpec& spec) {
    if (spec.kind == MobileSpec::Kind::zero_branching)
        throw validation_error("no inverse mapping for 0-branching mobiles");
    if (spec.kind == MobileSpec::Kind::typed || spec.kind == MobileSpec::Kind::typed_bipartite)
        throw validation_error("typed mobiles invert to annular maps");
    auto rep = validate_mobile(t, spec);
    if (!rep.ok) throw class_error("mobile fails the family conditions: " + rep.reason);
    auto inv = phi_inverse(t);
    GirthSpec gs = spec.kind == MobileSpec::Kind::d_branching ? GirthSpec::plain_d(spec.d)
                                                        : GirthSpec::bipartite_b(spec.b);
    auto cc = check_constraints(inv.map, inv.orientation, gs);
    check(cc.ok, "inverse image fails the orientation constraints");
    return {std::move(inv.map), std::move(inv.orientation)};
}

// Annular output for the typed families; the inner root face is the one dual
// to the special vertex.
struct AnnularResult {
    AnnularMap map;
    ZBiorientation orientation;
};

inline AnnularResult mobile_to_annular(const Mobile& t, const MobileSpec& spec) {
    if (spec.kind != MobileSpec::Kind::typed && spec.kind != MobileSpec::Kind::typed_bipartite)
        throw validation_error("only typed mobiles invert to annular maps");
    auto rep = validate_mobile(t, spec);
    if (!rep.ok) throw class_error("mobile fails the family conditions: " + rep.reason);
    auto inv = phi_inverse(t);
    check(inv.inner_root != 0, "typed mobile without an inner root face");
    AnnularMap am = make_annular_map(std::move(inv.map), inv.inner_root);
    GirthSpec gs = spec.kind == MobileSpec::Kind::typed
                       ? GirthSpec::annular_dpq(spec.d, spec.p, spec.q)
                       : GirthSpec::annular_brs(spec.b, spec.r, spec.s);
    auto cc = check_constraints(am.pm, inv.orientation, gs, am.inner_root_face());
    check(cc.ok, "inverse image fails the orientation constraints");
    return {std::move(am), std::move(inv.orientation)};
}

// Canonical code of a plane map together with a biorientation: the rooted
// relabeling extended with each dart's direction and weight, minimized over
// the root-face corners. extra_dart, when nonzero, appends its label (used
// for the annular inner root face).
inline std::vector<int> oriented_code(const PlaneMap& pm, const ZBiorientation& o,
                                      int extra_dart = 0) {
    int n = pm.m.dart_count();
    std::vector<int> best;
    for (int d : pm.m.faces[pm.root_face()]) {
        auto lab = rooted_labels(pm.m, d);
        std::vector<int> by_label(n + 1, 0);
        for (int x = 1; x <= n; ++x) by_label[lab[x]] = x;
        std::vector<int> code;
        code.reserve(4 * n + 1);
        for (int i = 1; i <= n; ++i) {
            int x = by_label[i];
            code.push_back(lab[pm.m.sigma[x]]);
            code.push_back(lab[pm.m.alpha[x]]);
            code.push_back(o.ingoing[x] ? 1 : 0);
            code.push_back(o.weight[x]);
        }
        if (extra_dart) code.push_back(lab[extra_dart]);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

inline std::vector<int> oriented_code(const AnnularMap& am, const ZBiorientation& o) {
    int n = am.pm.m.dart_count();
    std::vector<int> best;
    for (int d : am.pm.m.faces[am.pm.root_face()]) {
        auto lab = rooted_labels(am.pm.m, d);
        std::vector<int> by_label(n + 1, 0);
        for (int x = 1; x <= n; ++x) by_label[lab[x]] = x;
        std::vector<int> code;
        for (int i = 1; i <= n; ++i) {
            int x = by_label[i];
            code.push_back(lab[am.pm.m.sigma[x]]);
            code.push_back(lab[am.pm.m.alpha[x]]);
            code.push_back(o.ingoing[x] ? 1 : 0);
            code.push_back(o.weight[x]);
        }
        int mark = 0;
        for (int g : am.pm.m.faces[am.inner_root_face()])
            if (!mark || lab[g] < mark) mark = lab[g];
        code.push_back(mark);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

// Rooting cardinalities: marking an outer corner of the map against marking
// an exposed bud of its image, and marking a plain bud against marking a
// half-edge at a white vertex. Distinctness is by canonical code.
struct RootingCounts {
    int corner_rooted_maps = 0;
    int exposed_bud_mobiles = 0;
    int plain_bud_mobiles = 0;
    int white_half_mobiles = 0;

    bool consistent() const {
        return corner_rooted_maps == exposed_bud_mobiles &&
               plain_bud_mobiles == white_half_mobiles;
    }
};

inline RootingCounts rooting_counts(const PlaneMap& pm, const Mobile& t) {
    RootingCounts rc;
    std::set<std::vector<int>> maps;
    for (int g : pm.m.faces[pm.root_face()]) maps.insert(rooted_code(pm.m, g));
    rc.corner_rooted_maps = static_cast<int>(maps.size());
    std::set<std::vector<int>> exposed, plain, white;
    for (int h = 1; h <= t.half_count; ++h) {
        if (t.is_bud(h)) {
            if (t.exposed[h])
                exposed.insert(mobile_code(t, h));
            else
                plain.insert(mobile_code(t, h));
        } else if (!t.is_black[t.vertex_of[h]]) {
            white.insert(mobile_code(t, h));
        }
    }
    rc.exposed_bud_mobiles = static_cast<int>(exposed.size());
    rc.plain_bud_mobiles = static_cast<int>(plain.size());
    rc.white_half_mobiles = static_cast<int>(white.size());
    return rc;
}

}  // namespace mapgirth
