#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bijection.hpp"
#include "mobile.hpp"

// Exhaustive generation of the mobile families inside explicit bounds. The
// generator follows the planted decomposition: a subtree hanging off an edge
// is determined by the weight of its entry half, and a marked bud at the
// root linearizes the rotation, so every (mobile, bud) pair arises from
// exactly one sequence of choices and deduplication only collapses the bud
// choices. The 0-branching family, whose members may lack buds, is instead
// rooted at every first rotation slot of a black vertex.

namespace mapgirth {
namespace detail {

struct PlantedSlots {
    bool black = false;
    bool special = false;
    std::vector<int> weight;  // near half weight per slot; buds hold 0
    std::vector<int> child;   // index into kids, -1 for a bud
    std::vector<PlantedSlots> kids;
};

struct PlantedTotals {
    int blacks = 0;
    int whites = 0;
    int specials = 0;
};

struct PlantedOption {
    PlantedSlots tree;
    PlantedTotals totals;
};

struct MobileEnumLane {
    bool bipartite = false;
    bool zero = false;
    bool typed = false;
    int unit = 0;
    int edge_total = 0;
    int black_lo = 0;
    int special_degree = 0;
    int special_weight = 0;
    int max_degree = 0;
};

inline MobileEnumLane mobile_enum_lane(const MobileSpec& spec, int max_black_degree) {
    using Kind = MobileSpec::Kind;
    MobileEnumLane L;
    L.bipartite = spec.kind == Kind::b_dibranching || spec.kind == Kind::typed_bipartite;
    L.zero = spec.kind == Kind::zero_branching;
    L.typed = spec.kind == Kind::typed || spec.kind == Kind::typed_bipartite;
    L.unit = L.zero ? 0 : (L.bipartite ? spec.b : spec.d);
    L.edge_total = L.zero ? -2 : (L.bipartite ? L.unit - 1 : L.unit - 2);
    L.black_lo = L.bipartite ? -1 : -2;
    if (spec.kind == Kind::typed) {
        L.special_degree = spec.q;
        L.special_weight = spec.p - spec.q;
    } else if (spec.kind == Kind::typed_bipartite) {
        L.special_degree = 2 * spec.s;
        L.special_weight = spec.r - spec.s;
    }
    L.max_degree = max_black_degree;
    return L;
}

inline bool white_entry_ok(const MobileEnumLane& L, int w) {
    return L.zero ? w == 0 : w >= 1;
}

inline bool black_entry_ok(const MobileEnumLane& L, int w, bool parent_black) {
    if (L.zero) return w == (parent_black ? -1 : -2);
    return w >= L.black_lo && w <= 0;
}

inline void planted_subtrees(const MobileEnumLane& L, int entry, bool parent_black, int budget,
                             int fuel, bool allow_special, std::vector<PlantedOption>& out);

// Children of a white vertex; rem is the weight its remaining halves must
// absorb. In the 0-branching lane rem stays 0 and every child is black, so
// each extension consumes budget.
inline void extend_white(const MobileEnumLane& L, PlantedSlots& node, PlantedTotals tot, int rem,
                         int budget, int fuel, bool allow_special,
                         std::vector<PlantedOption>& out) {
    if (rem == 0) out.push_back({node, tot});
    int lo_near = L.zero ? 0 : 1;
    int hi_near = L.zero ? (budget >= 1 ? 0 : -1) : rem;
    for (int near = lo_near; near <= hi_near; ++near) {
        std::vector<PlantedOption> subs;
        planted_subtrees(L, L.edge_total - near, false, budget, fuel, allow_special, subs);
        for (const PlantedOption& s : subs) {
            node.weight.push_back(near);
            node.child.push_back(static_cast<int>(node.kids.size()));
            node.kids.push_back(s.tree);
            PlantedTotals t2{tot.blacks + s.totals.blacks, tot.whites + s.totals.whites,
                             tot.specials + s.totals.specials};
            extend_white(L, node, t2, rem - near, budget - s.totals.blacks,
                         fuel - s.totals.whites, allow_special && s.totals.specials == 0, out);
            node.kids.pop_back();
            node.child.pop_back();
            node.weight.pop_back();
        }
    }
}

// Items of a black vertex past the entry half (or past the marked bud at the
// root). A prefix is emitted whenever the vertex condition already holds;
// the reachability window prunes prefixes no item sequence can complete.
inline void extend_black(const MobileEnumLane& L, PlantedSlots& node, PlantedTotals tot, int deg,
                         long long wsum, int budget, int fuel, bool allow_special,
                         std::vector<PlantedOption>& out) {
    int cap = node.special ? L.special_degree : L.max_degree;
    bool done;
    if (node.special)
        done = deg == L.special_degree && wsum == L.special_weight;
    else if (L.bipartite)
        done = deg % 2 == 0 && deg / 2 + wsum == L.unit;
    else
        done = deg + wsum == L.unit;
    if (done) out.push_back({node, tot});
    if (deg >= cap) return;
    int left = cap - deg;
    if (node.special) {
        long long need = L.special_weight - wsum;
        if (need > 0 || need < static_cast<long long>(L.black_lo) * left) return;
    } else {
        long long cur = L.bipartite ? deg + 2 * wsum : deg + wsum;
        long long target = L.bipartite ? 2LL * L.unit : L.unit;
        if (target < cur - left || target > cur + left) return;
    }

    node.weight.push_back(0);
    node.child.push_back(-1);
    extend_black(L, node, tot, deg + 1, wsum, budget, fuel, allow_special, out);
    node.child.pop_back();
    node.weight.pop_back();

    for (int near = L.black_lo; near <= 0; ++near) {
        if (L.zero && near == 0) continue;  // weight-0 black halves are buds only
        std::vector<PlantedOption> subs;
        planted_subtrees(L, L.edge_total - near, true, budget, fuel, allow_special, subs);
        for (const PlantedOption& s : subs) {
            node.weight.push_back(near);
            node.child.push_back(static_cast<int>(node.kids.size()));
            node.kids.push_back(s.tree);
            PlantedTotals t2{tot.blacks + s.totals.blacks, tot.whites + s.totals.whites,
                             tot.specials + s.totals.specials};
            extend_black(L, node, t2, deg + 1, wsum + near, budget - s.totals.blacks,
                         fuel - s.totals.whites, allow_special && s.totals.specials == 0, out);
            node.kids.pop_back();
            node.child.pop_back();
            node.weight.pop_back();
        }
    }
}

inline void planted_subtrees(const MobileEnumLane& L, int entry, bool parent_black, int budget,
                             int fuel, bool allow_special, std::vector<PlantedOption>& out) {
    if (white_entry_ok(L, entry) && entry <= L.unit && fuel >= 1) {
        PlantedSlots node;
        node.black = false;
        extend_white(L, node, PlantedTotals{0, 1, 0}, L.unit - entry, budget, fuel - 1,
                     allow_special, out);
    }
    if (black_entry_ok(L, entry, parent_black) && budget >= 1) {
        PlantedSlots node;
        node.black = true;
        extend_black(L, node, PlantedTotals{1, 0, 0}, 1, entry, budget - 1, fuel, allow_special,
                     out);
        if (L.typed && allow_special) {
            node.special = true;
            extend_black(L, node, PlantedTotals{1, 0, 1}, 1, entry, budget - 1, fuel, false,
                         out);
        }
    }
}

inline void assemble_planted(MobileBuilder& b, const MobileEnumLane& L, const PlantedSlots& node,
                             int v, int& special_v) {
    if (node.special) special_v = v;
    for (std::size_t i = 0; i < node.weight.size(); ++i) {
        if (node.child[i] < 0) {
            b.push_bud(v);
            continue;
        }
        const PlantedSlots& s = node.kids[node.child[i]];
        int e = b.new_edge();
        b.push_end(v, e, node.weight[i]);
        int w = b.add_vertex(s.black);
        b.push_end(w, e, L.edge_total - node.weight[i]);
        assemble_planted(b, L, s, w, special_v);
    }
}

}  // namespace detail

// All mobiles of the family with at most max_black_count black vertices,
// each ordinary black vertex of degree at most max_black_degree (a special
// vertex keeps its fixed degree), up to isomorphism. Ordered by black vertex
// count, then by canonical code.
inline std::vector<Mobile> enumerate_mobiles(const MobileSpec& spec, int max_black_degree,
                                             int max_black_count) {
    using Kind = MobileSpec::Kind;
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
    if (max_black_degree < 0 || max_black_count < 0)
        throw validation_error("enumeration bounds must be nonnegative");

    detail::MobileEnumLane L = detail::mobile_enum_lane(spec, max_black_degree);
    int deg_hi = std::max(L.max_degree, L.special_degree);
    int fuel = max_black_count * deg_hi * (L.unit + 2) + 2;

    std::vector<detail::PlantedOption> roots;
    if (max_black_count >= 1) {
        detail::PlantedSlots node;
        node.black = true;
        if (L.zero) {
            detail::extend_black(L, node, detail::PlantedTotals{1, 0, 0}, 0, 0,
                                 max_black_count - 1, fuel, false, roots);
        } else {
            node.weight.push_back(0);
            node.child.push_back(-1);
            detail::extend_black(L, node, detail::PlantedTotals{1, 0, 0}, 1, 0,
                                 max_black_count - 1, fuel, L.typed, roots);
            if (L.typed) {
                node.special = true;
                detail::extend_black(L, node, detail::PlantedTotals{1, 0, 1}, 1, 0,
                                     max_black_count - 1, fuel, false, roots);
            }
        }
    }

    std::map<std::pair<int, std::vector<int>>, Mobile> seen;
    for (const detail::PlantedOption& r : roots) {
        if (r.totals.specials != (L.typed ? 1 : 0)) continue;
        MobileBuilder b;
        int v0 = b.add_vertex(r.tree.black);
        int special_v = -1;
        detail::assemble_planted(b, L, r.tree, v0, special_v);
        Mobile m = b.build(special_v);
        MobileReport rep = validate_mobile(m, spec);
        check(rep.ok, "generated mobile fails validation");
        seen.emplace(std::make_pair(r.totals.blacks, mobile_code(m)), std::move(m));
    }
    if (L.zero) {
        MobileBuilder b;
        b.add_vertex(false);
        Mobile m = b.build();
        seen.emplace(std::make_pair(0, mobile_code(m)), std::move(m));
    }

    std::vector<Mobile> out;
    out.reserve(seen.size());
    for (auto& kv : seen) out.push_back(std::move(kv.second));
    return out;
}

// Sorted degrees of the ordinary black vertices; under the closure this is
// the inner-face degree profile of the image map.
inline std::vector<int> black_degree_profile(const Mobile& m) {
    std::vector<int> prof;
    for (int v = 0; v < m.nv; ++v)
        if (m.is_black[v] && v != m.special) prof.push_back(m.degree(v));
    std::sort(prof.begin(), prof.end());
    return prof;
}

// Number of inequivalent ways to mark an exposed bud.
inline long long marked_exposure_count(const Mobile& m) {
    std::set<std::vector<int>> codes;
    for (int h : exposed_buds(m)) codes.insert(mobile_code(m, h));
    return static_cast<long long>(codes.size());
}

// Marked-exposed-bud class counts keyed by the ordinary black degree profile.
inline std::map<std::vector<int>, long long> marked_mobile_profile_counts(
    const std::vector<Mobile>& list) {
    std::map<std::vector<int>, long long> table;
    for (const Mobile& m : list) table[black_degree_profile(m)] += marked_exposure_count(m);
    return table;
}

}  // namespace mapgirth
