#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "mapgirth/map_io.hpp"
#include "mapgirth/orientation.hpp"
#include "mapgirth/transforms.hpp"

#include "fixtures.hpp"

using namespace mapgirth;

namespace {

struct Half {
    int dart;
    bool in;
    int weight;
};

ZBiorientation expect(int dart_count, std::initializer_list<Half> halves) {
    ZBiorientation o = make_orientation(dart_count);
    for (const auto& h : halves) {
        o.ingoing[h.dart] = h.in;
        o.weight[h.dart] = h.weight;
    }
    return o;
}

bool same(const ZBiorientation& a, const ZBiorientation& b) {
    return a.ingoing == b.ingoing && a.weight == b.weight;
}

}  // namespace

TEST_CASE("find_alpha_beta solves the triangle all-ones demands") {
    auto tri = fixtures::triangle_map();
    AlphaBetaSpec spec{{1, 1, 1}, {1, 1, 1}};
    auto fr = find_alpha_beta(tri, spec);
    REQUIRE(fr.feasible);
    for (int e = 0; e < 3; ++e) CHECK(edge_weight(tri, fr.orientation, tri.edge_dart(e)) == 1);
    for (int v = 0; v < 3; ++v) CHECK(vertex_weight(tri, fr.orientation, v) == 1);
    for (int d = 1; d <= 6; ++d) {
        CHECK(fr.orientation.weight[d] >= 0);
        CHECK(fr.orientation.ingoing[d] == (fr.orientation.weight[d] >= 1));
    }
}

TEST_CASE("find_alpha_beta reports mismatched totals") {
    auto edge = fixtures::edge_map();
    auto fr = find_alpha_beta(edge, AlphaBetaSpec{{2, 0}, {1}});
    CHECK_FALSE(fr.feasible);
    CHECK(fr.totals_mismatch);
    CHECK(fr.alpha_total == 2);
    CHECK(fr.beta_total == 1);
}

TEST_CASE("find_alpha_beta orients a path into its middle vertex") {
    auto path = fixtures::path2_map();
    auto fr = find_alpha_beta(path, AlphaBetaSpec{{0, 2, 0}, {1, 1}});
    REQUIRE(fr.feasible);
    CHECK(same(fr.orientation, expect(4, {{1, false, 0}, {2, true, 1}, {3, true, 1}, {4, false, 0}})));
}

TEST_CASE("find_alpha_beta certifies infeasibility by a violating vertex set") {
    auto path = fixtures::path2_map();
    auto fr = find_alpha_beta(path, AlphaBetaSpec{{2, 0, 0}, {1, 1}});
    CHECK_FALSE(fr.feasible);
    CHECK_FALSE(fr.totals_mismatch);
    // Vertices B, C carry demand 0 but their induced edge set has supply 1.
    CHECK(fr.violating_vertices == std::vector<int>{1, 2});
}

TEST_CASE("classify recognizes the triangle's suitable orientation") {
    auto pm = make_plane_map(fixtures::triangle_map(), 2);
    auto good = expect(6, {{1, true, 1}, {3, true, 1}, {5, true, 1}});
    auto r = classify(pm, good);
    CHECK(r.admissible);
    CHECK(r.minimal);
    CHECK(r.accessible);
    CHECK(r.suitable);
    CHECK(check_constraints(pm, good, GirthSpec::plain_d(3)).ok);
    // Degree precondition fails against d=4.
    CHECK_FALSE(check_constraints(pm, good, GirthSpec::plain_d(4)).ok);
}

TEST_CASE("classify rejects the counterclockwise contour") {
    auto pm = make_plane_map(fixtures::triangle_map(), 2);
    auto bad = expect(6, {{2, true, 1}, {4, true, 1}, {6, true, 1}});
    auto r = classify(pm, bad);
    CHECK_FALSE(r.admissible);
    CHECK_FALSE(r.minimal);
    CHECK_FALSE(r.suitable);
}

TEST_CASE("classify detects inaccessibility") {
    // Both path edges directed into the middle vertex: the endpoints cannot
    // reach each other.
    auto pm = make_plane_map(fixtures::path2_map(), 1);
    auto o = expect(4, {{2, true, 1}, {3, true, 1}});
    auto r = classify(pm, o);
    CHECK_FALSE(r.accessible);
}

TEST_CASE("make_minimal pushes the counterclockwise triangle flat") {
    auto pm = make_plane_map(fixtures::triangle_map(), 2);
    auto ccw = expect(6, {{2, true, 1}, {4, true, 1}, {6, true, 1}});
    auto fixed = make_minimal(pm, ccw);
    CHECK(same(fixed, expect(6, {{1, true, 1}, {3, true, 1}, {5, true, 1}})));
}

TEST_CASE("suitable orientation of the triangle, d=3") {
    auto pm = make_plane_map(fixtures::triangle_map(), 2);
    auto o = suitable_orientation(pm, GirthSpec::plain_d(3));
    CHECK(same(o, expect(6, {{1, true, 1}, {3, true, 1}, {5, true, 1}})));
}

TEST_CASE("suitable orientation of the doubled edge, d=2") {
    auto pm = make_plane_map(fixtures::doubled_edge_map(), 1);
    auto o = suitable_orientation(pm, GirthSpec::plain_d(2));
    CHECK(same(o, expect(4, {{2, true, 1}, {3, true, 1}})));
}

TEST_CASE("suitable orientation of the square, d=4 and b=2") {
    auto pm = make_plane_map(fixtures::square_map(), 2);
    auto want = expect(8, {{1, true, 1}, {3, true, 1}, {5, true, 1}, {7, true, 1}});
    CHECK(same(suitable_orientation(pm, GirthSpec::plain_d(4)), want));
    CHECK(same(suitable_orientation(pm, GirthSpec::bipartite_b(2)), want));
}

TEST_CASE("suitable orientation of the triangulation, d=3") {
    // Inner spokes carry weight 1 into the center; the center's weight is 3.
    auto pm = make_plane_map(fixtures::tetrahedron_map(), 2);
    auto o = suitable_orientation(pm, GirthSpec::plain_d(3));
    auto want = expect(12, {{1, true, 1},
                            {3, true, 1},
                            {5, true, 1},
                            {8, true, 1},
                            {10, true, 1},
                            {12, true, 1}});
    CHECK(same(o, want));
    CHECK(classify(pm, o).suitable);
    CHECK(check_constraints(pm, o, GirthSpec::plain_d(3)).ok);
}

TEST_CASE("suitable orientation of the triple edge, b=1") {
    auto pm = make_plane_map(fixtures::triple_edge_map(), 1);
    auto o = suitable_orientation(pm, GirthSpec::bipartite_b(1));
    CHECK(same(o, expect(6, {{2, true, 1}, {5, true, 1}})));
}

TEST_CASE("class errors") {
    auto tri = make_plane_map(fixtures::triangle_map(), 2);
    CHECK_THROWS_AS(suitable_orientation(tri, GirthSpec::plain_d(4)), class_error);
    CHECK_THROWS_AS(suitable_orientation(tri, GirthSpec::bipartite_b(1)), class_error);
    auto sq = make_plane_map(fixtures::square_map(), 2);
    CHECK_THROWS_AS(suitable_orientation(sq, GirthSpec::bipartite_b(3)), class_error);

    // Root face of degree 3 but girth 2: the flow step has no solution.
    auto dt = make_plane_map(fixtures::doubled_triangle_map(), 2);
    CHECK_THROWS_WITH(suitable_orientation(dt, GirthSpec::plain_d(3)),
                      Catch::Matchers::StartsWith("no suitable orientation exists"));
}

TEST_CASE("annular triple edge agrees with the plain pipeline") {
    auto pm = make_plane_map(fixtures::triple_edge_map(), 1);
    auto am = make_annular_map(pm, 2);
    auto plain = suitable_orientation(pm, GirthSpec::plain_d(2));
    auto ann = suitable_orientation(am, GirthSpec::annular_dpq(2, 2, 2));
    CHECK(same(plain, ann));
    CHECK(same(ann, expect(6, {{2, true, 1}, {5, true, 1}})));
}

TEST_CASE("annular square-with-parallel-edge, d=2, (p,q)=(2,4)") {
    auto am = make_annular_map(make_plane_map(fixtures::square_parallel_map(), 2), 1);
    auto o = suitable_orientation(am, GirthSpec::annular_dpq(2, 2, 4));
    auto want = expect(10, {{1, true, 1},
                            {3, false, -2},
                            {4, true, 2},
                            {7, true, 2},
                            {8, false, -2},
                            {10, true, 1}});
    CHECK(same(o, want));
    CHECK(check_constraints(am.pm, o, GirthSpec::annular_dpq(2, 2, 4), am.inner_root_face()).ok);
}

TEST_CASE("annular bipartite square-with-parallel-edge, b=2, (r,s)=(1,2)") {
    auto am = make_annular_map(make_plane_map(fixtures::square_parallel_map(), 2), 1);
    auto o = suitable_orientation(am, GirthSpec::annular_brs(2, 1, 2));
    auto want = expect(10, {{1, true, 1},
                            {4, true, 1},
                            {5, true, 1},
                            {7, true, 2},
                            {8, false, -1},
                            {10, true, 1}});
    CHECK(same(o, want));
    CHECK(check_constraints(am.pm, o, GirthSpec::annular_brs(2, 1, 2), am.inner_root_face()).ok);
}

TEST_CASE("sigma and tau round-trip inside the d=3 pipeline") {
    auto pm = make_plane_map(fixtures::tetrahedron_map(), 2);
    auto sub = subdivide_plane(pm);
    auto qr = inner_quadrangulation(sub);
    auto ab = regular_alpha_beta(qr, 3, 3);
    auto fr = find_alpha_beta(qr.qm.m, ab);
    REQUIRE(fr.feasible);
    auto minimal = make_minimal(qr.qm, fr.orientation);
    auto so = sigma_map(qr, minimal, 3);
    CHECK(same(sigma_map_inverse(qr, so, 3), minimal));

    auto o = tau_map(pm, so, 3);
    CHECK(same(tau_map_inverse(pm, o, 3), so));
    CHECK(classify(pm, o).suitable);
}

TEST_CASE("halve and double are inverse on inner half-edges") {
    auto pm = make_plane_map(fixtures::triple_edge_map(), 1);
    auto o = suitable_orientation(pm, GirthSpec::plain_d(2));
    auto doubled = halve_or_double(pm, o, WeightScale::double_up);
    CHECK(same(halve_or_double(pm, doubled, WeightScale::halve), o));

    // Odd inner weights cannot be halved.
    auto odd = expect(6, {{2, true, 1}, {5, true, 1}, {3, true, 1}, {4, false, -1}});
    CHECK_THROWS_AS(halve_or_double(pm, odd, WeightScale::halve), validation_error);
}

TEST_CASE("geodesic orientation of the path") {
    auto path = fixtures::path2_map();
    auto o = geodesic_biorientation(path, 0);
    CHECK(same(o, expect(4, {{1, false, -2}, {2, true, 0}, {3, false, -2}, {4, true, 0}})));
    CHECK(classify_zero(path, 0, o).suitable);
    CHECK(check_constraints_zero(path, 0, o).ok);

    auto from_middle = geodesic_biorientation(path, 1);
    CHECK(same(from_middle,
               expect(4, {{1, true, 0}, {2, false, -2}, {3, false, -2}, {4, true, 0}})));
    CHECK(classify_zero(path, 1, from_middle).suitable);
    CHECK(check_constraints_zero(path, 1, from_middle).ok);
}

TEST_CASE("geodesic orientation of the loop and triangle") {
    auto loop = fixtures::loop_map();
    auto lo = geodesic_biorientation(loop, 0);
    CHECK(same(lo, expect(2, {{1, false, -1}, {2, false, -1}})));
    CHECK(classify_zero(loop, 0, lo).suitable);
    CHECK(check_constraints_zero(loop, 0, lo).ok);

    auto tri = fixtures::triangle_map();
    auto to = geodesic_biorientation(tri, 0);
    CHECK(same(to, expect(6, {{1, false, -2},
                              {2, true, 0},
                              {3, false, -1},
                              {4, false, -1},
                              {5, true, 0},
                              {6, false, -2}})));
    CHECK(classify_zero(tri, 0, to).suitable);
    CHECK(check_constraints_zero(tri, 0, to).ok);
}

TEST_CASE("rightmost BFS orientation matches the d=1 pipeline") {
    auto loop = make_plane_map(fixtures::loop_map(), 1);
    auto want_loop = expect(2, {{2, true, 1}});
    CHECK(same(rightmost_bfs_orientation(loop), want_loop));
    CHECK(same(suitable_orientation(loop, GirthSpec::plain_d(1)), want_loop));

    auto lt = make_plane_map(fixtures::loop_triangle_map(), 7);
    auto want = expect(8, {{1, false, -2},
                           {2, true, 1},
                           {4, false, -1},
                           {5, true, 1},
                           {6, false, -2},
                           {8, true, 1}});
    CHECK(same(rightmost_bfs_orientation(lt), want));
    CHECK(same(suitable_orientation(lt, GirthSpec::plain_d(1)), want));
    CHECK(classify(lt, want).suitable);
    CHECK(check_constraints(lt, want, GirthSpec::plain_d(1)).ok);
}

TEST_CASE("orientation files round-trip") {
    auto pm = make_plane_map(fixtures::triangle_map(), 2);
    auto o = suitable_orientation(pm, GirthSpec::plain_d(3));
    auto text = serialize_orientation(o);
    auto re = parse_orientation(text, 6);
    CHECK(same(o, re));
    CHECK(serialize_orientation(re) == text);

    CHECK_THROWS_WITH(parse_orientation("[]", 2),
                      "orientation does not cover every half-edge");
    CHECK_THROWS_WITH(
        parse_orientation(R"([{"half_edge": 1, "direction": "in", "weight": -1},
                              {"half_edge": 2, "direction": "out", "weight": 0}])", 2),
        "ingoing half-edge with negative weight");
}
