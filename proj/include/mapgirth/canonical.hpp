#pragma once

#include <vector>

#include "plane_map.hpp"

namespace mapgirth {

// Rooted canonical code: BFS relabeling of darts from the root in (sigma,
// alpha) image order; the code lists relabeled images in label order. Two maps
// with marked darts get equal codes iff a dart-marked isomorphism exists.
inline std::vector<int> rooted_code(const CombinatorialMap& m, int root) {
    int n = m.dart_count();
    if (n == 0) return {};
    std::vector<int> label(n + 1, 0), order;
    order.reserve(n);
    label[root] = 1;
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int e : {m.sigma[d], m.alpha[d]}) {
            if (!label[e]) {
                label[e] = static_cast<int>(order.size()) + 1;
                order.push_back(e);
            }
        }
    }
    std::vector<int> code;
    code.reserve(2 * n);
    for (int d : order) {
        code.push_back(label[m.sigma[d]]);
        code.push_back(label[m.alpha[d]]);
    }
    return code;
}

// Labels assigned by the same BFS, exposed for codes that must name extra
// marks (annular inner face, marked corners).
inline std::vector<int> rooted_labels(const CombinatorialMap& m, int root) {
    int n = m.dart_count();
    std::vector<int> label(n + 1, 0);
    if (n == 0) return label;
    std::vector<int> order{root};
    label[root] = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int e : {m.sigma[d], m.alpha[d]}) {
            if (!label[e]) {
                label[e] = static_cast<int>(order.size()) + 1;
                order.push_back(e);
            }
        }
    }
    return label;
}

// Plane-map code: minimum rooted code over the darts of the root face.
inline std::vector<int> plane_code(const PlaneMap& pm) {
    std::vector<int> best;
    for (int d : pm.m.faces[pm.root_face()]) {
        auto c = rooted_code(pm.m, d);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

// Annular code: plane code extended with the smallest label occurring on the
// inner root face, minimized jointly.
inline std::vector<int> annular_code(const AnnularMap& am) {
    std::vector<int> best;
    for (int d : am.pm.m.faces[am.pm.root_face()]) {
        auto c = rooted_code(am.pm.m, d);
        auto label = rooted_labels(am.pm.m, d);
        int mark = 0;
        for (int g : am.pm.m.faces[am.inner_root_face()])
            if (!mark || label[g] < mark) mark = label[g];
        c.push_back(mark);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

inline std::vector<int> rooted_map_code(const RootedMap& rm) {
    if (rm.m.dart_count() == 0) return {};
    return rooted_code(rm.m, rm.root_corner);
}

inline bool iso_check(const PlaneMap& a, const PlaneMap& b) {
    return plane_code(a) == plane_code(b);
}

inline bool iso_check(const AnnularMap& a, const AnnularMap& b) {
    return annular_code(a) == annular_code(b);
}

// Unrooted canonical code: minimum rooted code over all darts.
inline std::vector<int> unrooted_code(const CombinatorialMap& m) {
    std::vector<int> best;
    for (int d = 1; d <= m.dart_count(); ++d) {
        auto c = rooted_code(m, d);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

inline bool iso_check_unrooted(const CombinatorialMap& a, const CombinatorialMap& b) {
    if (a.dart_count() != b.dart_count()) return false;
    if (a.dart_count() == 0) return true;
    return unrooted_code(a) == unrooted_code(b);
}

}  // namespace mapgirth
