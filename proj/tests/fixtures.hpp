#pragma once

#include "mapgirth/plane_map.hpp"

// Hand-embedded maps reused across the test suites. Dart numbering follows
// the drawings in the comments; sigma lists counterclockwise successors.
namespace fixtures {

using mapgirth::build_map;
using mapgirth::CombinatorialMap;

// Single loop at one vertex: faces {1} and {2}.
inline CombinatorialMap loop_map() {
    return build_map({0, 2, 1}, {0, 2, 1});
}

// Single edge A-B.
inline CombinatorialMap edge_map() {
    return build_map({0, 2, 1}, {0, 1, 2});
}

// Path A-B-C: edges (1,2) and (3,4), B holds darts 2,3.
inline CombinatorialMap path2_map() {
    return build_map({0, 2, 1, 4, 3}, {0, 1, 3, 2, 4});
}

// Triangle on A,B,C: edges AB=(1,2), BC=(3,4), CA=(5,6).
// Inner face {1,3,5} (counterclockwise), outer face {2,4,6}.
inline CombinatorialMap triangle_map() {
    return build_map({0, 2, 1, 4, 3, 6, 5}, {0, 6, 3, 2, 5, 4, 1});
}

// Two parallel edges A-B: upper arc (1,2), lower arc (3,4).
// Faces: outer {1,4}, middle {2,3}.
inline CombinatorialMap doubled_edge_map() {
    return build_map({0, 2, 1, 4, 3}, {0, 3, 4, 1, 2});
}

// Three parallel edges A-B, arcs top to bottom (1,2), (3,4), (5,6).
// Faces: outer {1,6}, then {2,3} and {4,5}.
inline CombinatorialMap triple_edge_map() {
    return build_map({0, 2, 1, 4, 3, 6, 5}, {0, 5, 4, 1, 6, 3, 2});
}

// Square v1v2v3v4: edges (1,2),(3,4),(5,6),(7,8) around the cycle.
// Inner face {1,3,5,7}, outer {2,8,6,4}.
inline CombinatorialMap square_map() {
    return build_map({0, 2, 1, 4, 3, 6, 5, 8, 7}, {0, 8, 3, 2, 5, 4, 7, 6, 1});
}

// Square plus an edge (9,10) parallel to (1,2), drawn outside.
// Faces: square {1,3,5,7}, digon {2,9}, outer {10,8,6,4}.
inline CombinatorialMap square_parallel_map() {
    return build_map({0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9},
                     {0, 8, 10, 2, 5, 4, 7, 6, 9, 1, 3});
}

// Triangle ABC with center vertex D: spokes AD=(7,8), BD=(9,10), CD=(11,12).
// Faces {1,9,8}, {3,11,10}, {5,7,12} inner, {2,6,4} outer.
inline CombinatorialMap tetrahedron_map() {
    return build_map({0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11},
                     {0, 7, 3, 9, 5, 11, 1, 6, 10, 2, 12, 4, 8});
}

// Triangle with the edge AB doubled by (7,8) drawn inside.
// Faces: digon {1,8}, inner triangle {7,3,5}, outer {2,6,4}. Girth 2.
inline CombinatorialMap doubled_triangle_map() {
    return build_map({0, 2, 1, 4, 3, 6, 5, 8, 7}, {0, 7, 3, 8, 5, 4, 1, 6, 2});
}

// Triangle with a loop (7,8) in the corner (1,6) at A; face {7} has degree 1.
// Faces: {7}, {8,1,3,5}, outer {2,6,4}.
inline CombinatorialMap loop_triangle_map() {
    return build_map({0, 2, 1, 4, 3, 6, 5, 8, 7}, {0, 7, 3, 2, 5, 4, 1, 8, 6});
}

// Loop (1,2) at A with a pendant edge (3,4) to B drawn inside the loop.
// sigma_A = (1 3 2); faces {1,3,4} and {2}.
inline CombinatorialMap loop_pendant_map() {
    return build_map({0, 2, 1, 4, 3}, {0, 3, 1, 2, 4});
}

// One vertex, two loops interleaved (rotation a b a' b'): the torus, genus 1.
// Kept as raw tables; build_map must reject them.
struct RawTables {
    std::vector<int> alpha, sigma;
};

inline RawTables torus_tables() {
    return {{0, 2, 1, 4, 3}, {0, 3, 4, 2, 1}};
}

}  // namespace fixtures
