#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "mapgirth/canonical.hpp"
#include "mapgirth/map_io.hpp"
#include "mapgirth/plane_map.hpp"
#include "mapgirth/transforms.hpp"

#include "fixtures.hpp"

using namespace mapgirth;

namespace {

std::multiset<int> face_degrees(const CombinatorialMap& m) {
    std::multiset<int> out;
    for (int f = 0; f < m.face_count(); ++f) out.insert(m.face_degree(f));
    return out;
}

}  // namespace

TEST_CASE("build_map validates permutation data") {
    CHECK_THROWS_WITH(build_map({0, 2, 1}, {0, 1}), "alpha and sigma must have equal size 2E+1");
    CHECK_THROWS_WITH(build_map({0}, {0}), "map must have at least one edge");
    CHECK_THROWS_WITH(build_map({0, 2, 1, 3}, {0, 1, 2, 3}), "dart count must be even");
    CHECK_THROWS_WITH(build_map({0, 5, 1}, {0, 1, 2}), "dart image out of range");
    CHECK_THROWS_WITH(build_map({0, 1, 2}, {0, 1, 2}), "alpha has a fixed point");
    CHECK_THROWS_WITH(build_map({0, 2, 3, 1, 4}, {0, 1, 2, 3, 4}), "alpha is not an involution");
    CHECK_THROWS_WITH(build_map({0, 2, 1, 4, 3}, {0, 1, 1, 3, 3}), "sigma is not a permutation");
    CHECK_THROWS_WITH(build_map({0, 2, 1, 4, 3}, {0, 2, 1, 4, 3}), "map is not connected");
    auto torus = fixtures::torus_tables();
    CHECK_THROWS_WITH(build_map(torus.alpha, torus.sigma),
                      "map is not planar (Euler characteristic != 2)");
}

TEST_CASE("orbit structure of the small fixtures") {
    auto loop = fixtures::loop_map();
    CHECK(loop.vertex_count() == 1);
    CHECK(loop.edge_count() == 1);
    CHECK(loop.face_count() == 2);
    CHECK(face_degrees(loop) == std::multiset<int>{1, 1});
    CHECK(loop.degree(0) == 2);

    auto tri = fixtures::triangle_map();
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.face_count() == 2);
    CHECK(tri.face_of[1] == tri.face_of[3]);
    CHECK(tri.face_of[1] == tri.face_of[5]);
    CHECK(tri.face_of[2] == tri.face_of[4]);
    CHECK(tri.face_of[1] != tri.face_of[2]);

    auto dbl = fixtures::doubled_edge_map();
    CHECK(dbl.vertex_count() == 2);
    CHECK(dbl.face_count() == 2);
    CHECK(face_degrees(dbl) == std::multiset<int>{2, 2});

    auto tet = fixtures::tetrahedron_map();
    CHECK(tet.vertex_count() == 4);
    CHECK(tet.edge_count() == 6);
    CHECK(face_degrees(tet) == std::multiset<int>{3, 3, 3, 3});

    // Degree sums: each dart is counted once per side.
    int vsum = 0, fsum = 0;
    for (int v = 0; v < tet.vertex_count(); ++v) vsum += tet.degree(v);
    for (int f = 0; f < tet.face_count(); ++f) fsum += tet.face_degree(f);
    CHECK(vsum == tet.dart_count());
    CHECK(fsum == tet.dart_count());
}

TEST_CASE("girth handles loops, parallel edges, and forests") {
    CHECK(girth(fixtures::loop_map()) == 1);
    CHECK(girth(fixtures::doubled_edge_map()) == 2);
    CHECK(girth(fixtures::triple_edge_map()) == 2);
    CHECK(girth(fixtures::triangle_map()) == 3);
    CHECK(girth(fixtures::tetrahedron_map()) == 3);
    CHECK(girth(fixtures::square_map()) == 4);
    CHECK(girth(fixtures::doubled_triangle_map()) == 2);
    CHECK(girth(fixtures::edge_map()) == std::nullopt);
    CHECK(girth(fixtures::path2_map()) == std::nullopt);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(fixtures::square_map()));
    CHECK(is_bipartite(fixtures::doubled_edge_map()));
    CHECK(is_bipartite(fixtures::triple_edge_map()));
    CHECK(is_bipartite(fixtures::square_parallel_map()));
    CHECK_FALSE(is_bipartite(fixtures::triangle_map()));
    CHECK_FALSE(is_bipartite(fixtures::loop_map()));
}

TEST_CASE("subdivision doubles the girth") {
    auto tri = fixtures::triangle_map();
    auto sub = subdivide(tri);
    CHECK(sub.m.vertex_count() == tri.vertex_count() + tri.edge_count());
    CHECK(sub.m.edge_count() == 2 * tri.edge_count());
    CHECK(girth(sub.m) == 6);
    CHECK(girth(subdivide(fixtures::square_map()).m) == 8);
    CHECK(girth(subdivide(fixtures::loop_map()).m) == 2);

    // Subdivision vertices: degree 2, placed on the old edge.
    for (int e = 0; e < tri.edge_count(); ++e) {
        int v = sub.edge_vertex[e];
        CHECK(sub.m.degree(v) == 2);
    }
}

TEST_CASE("simple cycle enumeration") {
    auto tri_cycles = simple_cycles(fixtures::triangle_map());
    REQUIRE(tri_cycles.size() == 1);
    CHECK(tri_cycles[0] == std::vector<int>{1, 3, 5});

    auto loop_cycles = simple_cycles(fixtures::loop_map());
    REQUIRE(loop_cycles.size() == 1);
    CHECK(loop_cycles[0] == std::vector<int>{1});

    auto dbl_cycles = simple_cycles(fixtures::doubled_edge_map());
    REQUIRE(dbl_cycles.size() == 1);
    CHECK(dbl_cycles[0] == std::vector<int>{1, 4});

    auto triple_cycles = simple_cycles(fixtures::triple_edge_map());
    CHECK(triple_cycles.size() == 3);

    // K4 has four triangles and three 4-cycles.
    CHECK(simple_cycles(fixtures::tetrahedron_map()).size() == 7);

    auto sp_cycles = simple_cycles(fixtures::square_parallel_map());
    REQUIRE(sp_cycles.size() == 3);
    std::multiset<size_t> lens;
    for (const auto& c : sp_cycles) lens.insert(c.size());
    CHECK(lens == std::multiset<size_t>{2, 4, 4});
}

TEST_CASE("cycle sides") {
    auto tri = fixtures::triangle_map();
    auto left = cycle_left_faces(tri, {1, 3, 5});
    CHECK(left[tri.face_of[1]]);
    CHECK_FALSE(left[tri.face_of[2]]);

    auto rev = cycle_left_faces(tri, {6, 4, 2});
    CHECK(rev[tri.face_of[2]]);
    CHECK_FALSE(rev[tri.face_of[1]]);
}

TEST_CASE("annular girths") {
    auto dbl = make_annular_map(make_plane_map(fixtures::doubled_edge_map(), 1), 2);
    auto g1 = annular_girths(dbl);
    CHECK(g1.separating == 2);
    CHECK_FALSE(g1.non_separating.has_value());

    auto triple = make_annular_map(make_plane_map(fixtures::triple_edge_map(), 1), 2);
    auto g2 = annular_girths(triple);
    CHECK(g2.separating == 2);
    CHECK(g2.non_separating == 2);

    auto sp = make_annular_map(make_plane_map(fixtures::square_parallel_map(), 2), 1);
    auto g3 = annular_girths(sp);
    CHECK(g3.separating == 2);
    CHECK(g3.non_separating == 4);

    CHECK_THROWS_WITH(make_annular_map(make_plane_map(fixtures::triangle_map(), 1), 3),
                      "inner root face equals root face");
}

TEST_CASE("duality") {
    auto tri = fixtures::triangle_map();
    auto d = dual_map(tri);
    CHECK(d.vertex_count() == tri.face_count());
    CHECK(d.face_count() == tri.vertex_count());
    CHECK(d.edge_count() == tri.edge_count());
    CHECK(iso_check_unrooted(tri, dual_map(d)));

    auto tet = fixtures::tetrahedron_map();
    CHECK(iso_check_unrooted(tet, dual_map(dual_map(tet))));

    auto pm = make_plane_map(tri, 2);
    auto dm = dual(pm);
    CHECK(dm.marked_vertex == dm.m.vertex_of[pm.root]);
    // The marked dual vertex has the root face's degree.
    CHECK(dm.m.degree(dm.marked_vertex) == tri.face_degree(pm.root_face()));
}

TEST_CASE("inner quadrangulation") {
    auto pm = make_plane_map(fixtures::tetrahedron_map(), 2);
    auto qr = inner_quadrangulation(pm);
    const auto& qm = qr.qm.m;
    CHECK(qm.vertex_count() == 7);
    CHECK(qm.edge_count() == 15);
    CHECK(qm.face_count() == 10);
    CHECK(qr.qm.root_face() == qr.qm.m.face_of[2]);
    CHECK(qm.face_degree(qr.qm.root_face()) == 3);

    // Every face except the root is a triangle of one original edge plus two
    // spokes, and each spoke sits immediately counterclockwise of its owner.
    for (int f = 0; f < qm.face_count(); ++f) {
        if (f == qr.qm.root_face()) continue;
        CHECK(qm.face_degree(f) == 3);
    }
    for (int h = 1; h <= qr.m_darts; ++h) {
        int s = qr.spoke[h];
        if (s == 0) continue;
        CHECK(qm.sigma[h] == s);
        CHECK(qr.is_spoke_edge(s));
        CHECK(qr.m_dart_of_spoke(s) == h);
    }

    // Q alone: one 4-face per inner edge of the original map.
    auto q = quad_only(qr);
    CHECK(q.vertex_count() == 7);
    CHECK(q.edge_count() == 9);
    int quads = 0;
    for (int f = 0; f < q.face_count(); ++f)
        if (q.face_degree(f) == 4) ++quads;
    CHECK(quads == 3);
}

TEST_CASE("root conversions round-trip") {
    auto tri = fixtures::triangle_map();
    RootedMap rm{tri, 1};
    auto c1 = rooted_to_c1(rm);
    CHECK(c1.m.face_degree(c1.root_face()) == 1);
    auto back = c1_to_rooted(c1);
    CHECK(back.root_corner == 1);
    CHECK(back.m.alpha == tri.alpha);
    CHECK(back.m.sigma == tri.sigma);

    // The edgeless map round-trips through the single-loop map.
    RootedMap point{vertex_map(), 0};
    auto c1p = rooted_to_c1(point);
    CHECK(c1p.m.edge_count() == 1);
    auto backp = c1_to_rooted(c1p);
    CHECK(backp.m.dart_count() == 0);
    CHECK(backp.root_corner == 0);

    EdgeMarkedMap em{tri, 0};
    auto c2 = marked_to_c2(em);
    CHECK(c2.m.face_degree(c2.root_face()) == 2);
    auto back2 = c2_to_marked(c2);
    CHECK(back2.marked_edge == 0);
    CHECK(back2.m.alpha == tri.alpha);
    CHECK(back2.m.sigma == tri.sigma);

    CHECK_THROWS_AS(c1_to_rooted(make_plane_map(tri, 1)), class_error);
    CHECK_THROWS_AS(c2_to_marked(make_plane_map(tri, 1)), class_error);
}

TEST_CASE("canonical codes and isomorphism") {
    auto tri = fixtures::triangle_map();
    // The triangle's rotational symmetry: every root dart of the outer face
    // yields the same plane code.
    auto code2 = plane_code(make_plane_map(tri, 2));
    CHECK(code2 == plane_code(make_plane_map(tri, 4)));
    CHECK(code2 == plane_code(make_plane_map(tri, 6)));
    // Rooting in the other face gives a mirror object, not the same code.
    CHECK(iso_check(make_plane_map(tri, 2), make_plane_map(tri, 4)));
    CHECK_FALSE(iso_check(make_plane_map(tri, 2), make_plane_map(fixtures::triple_edge_map(), 1)));

    // Relabeled square-plus-parallel copy: swap the dart pairs of two edges.
    auto a = fixtures::square_parallel_map();
    auto b = build_map({0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9},
                       {0, 6, 10, 2, 7, 8, 9, 4, 5, 1, 3});
    CHECK(iso_check(make_plane_map(a, 2), make_plane_map(b, 2)));
    CHECK(iso_check(make_annular_map(make_plane_map(a, 2), 1),
                    make_annular_map(make_plane_map(b, 2), 1)));
    CHECK(iso_check_unrooted(a, b));

    CHECK_FALSE(iso_check_unrooted(tri, fixtures::triple_edge_map()));

    // (1 2)(3 6)(4 5) commutes with sigma and alpha and swaps the two faces,
    // so rooting the triangle on either side of the same edge is the same
    // rooted map.
    CHECK(rooted_map_code(RootedMap{tri, 1}) == rooted_map_code(RootedMap{tri, 2}));
    auto path = fixtures::path2_map();
    CHECK(rooted_map_code(RootedMap{path, 1}) != rooted_map_code(RootedMap{path, 2}));
}

TEST_CASE("map file parsing") {
    auto loop = parse_map(R"({"half_edges": 2, "alpha": [[1, 2]], "sigma": [[1, 2]],
                              "root_half_edge": 1})");
    CHECK(loop.m.vertex_count() == 1);
    CHECK(loop.m.edge_count() == 1);
    CHECK(loop.m.face_count() == 2);
    CHECK(loop.root_half_edge == 1);
    CHECK_FALSE(loop.is_annular());

    auto tri = parse_map(R"({"half_edges": 6,
                             "alpha": [[1, 2], [3, 4], [5, 6]],
                             "sigma": [[1, 6], [2, 3], [4, 5]],
                             "root_half_edge": 2})");
    CHECK(tri.m.vertex_count() == 3);
    CHECK(tri.m.edge_count() == 3);
    CHECK(tri.m.face_count() == 2);
    CHECK(tri.m.alpha == fixtures::triangle_map().alpha);
    CHECK(tri.m.sigma == fixtures::triangle_map().sigma);

    auto empty = parse_map(R"({"half_edges": 0})");
    CHECK(empty.m.dart_count() == 0);
    CHECK(empty.m.vertex_count() == 1);

    CHECK_THROWS_WITH(parse_map("not json"),
                      Catch::Matchers::StartsWith("invalid JSON"));
    CHECK_THROWS_WITH(parse_map(R"([1, 2])"), "map file must be a JSON object");
    CHECK_THROWS_WITH(parse_map(R"({"alpha": []})"), "missing field half_edges");
    CHECK_THROWS_WITH(
        parse_map(R"({"half_edges": 4, "alpha": [[1, 2], [1, 3]], "sigma": [[1, 2, 3, 4]]})"),
        "alpha is not an involution");
    CHECK_THROWS_WITH(
        parse_map(R"({"half_edges": 4, "alpha": [[1, 2]], "sigma": [[1, 2, 3, 4]]})"),
        "alpha does not cover every half-edge");
    CHECK_THROWS_WITH(
        parse_map(R"({"half_edges": 4, "alpha": [[1, 2], [3, 4]], "sigma": [[1, 2], [2, 3, 4]]})"),
        "sigma is not a permutation");
    CHECK_THROWS_WITH(
        parse_map(R"({"half_edges": 2, "alpha": [[1, 2]], "sigma": [[1, 2]],
                      "root_half_edge": 7})"),
        "dangling root reference");
    CHECK_THROWS_WITH(
        parse_map(R"({"half_edges": 2, "alpha": [[1, 2]], "sigma": [[1, 2]],
                      "inner_root_half_edge": 3})"),
        "dangling root reference");
    // Two interleaved loops on one vertex: the torus embedding.
    CHECK_THROWS_WITH(
        parse_map(R"({"half_edges": 4, "alpha": [[1, 2], [3, 4]], "sigma": [[1, 3, 2, 4]]})"),
        "map is not planar (Euler characteristic != 2)");
}

TEST_CASE("map serialization round-trips") {
    ParsedMap pm;
    pm.m = fixtures::square_parallel_map();
    pm.root_half_edge = 2;
    pm.inner_root_half_edge = 1;
    auto text = serialize_map(pm);
    auto re = parse_map(text);
    CHECK(re.m.alpha == pm.m.alpha);
    CHECK(re.m.sigma == pm.m.sigma);
    CHECK(re.root_half_edge == 2);
    CHECK(re.inner_root_half_edge == 1);
    CHECK(re.is_annular());
    CHECK(serialize_map(re) == text);
}

TEST_CASE("dot export") {
    ParsedMap pm;
    pm.m = fixtures::triangle_map();
    pm.root_half_edge = 2;
    auto dot = map_to_dot(pm);
    CHECK(dot.find("graph map {") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    CHECK(dot.find("style=bold") != std::string::npos);
}
