#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "planarflow/dual_graph.hpp"
#include "planarflow/errors.hpp"
#include "planarflow/instances.hpp"
#include "planarflow/plane_graph.hpp"

using namespace planarflow;

namespace {

PlaneGraph single_edge(double cap = 7.0) {
    return build_plane_graph(2, {{0, 1, cap}}, {{0}, {0}}, 0, 1);
}

} // namespace

TEST_CASE("single edge: smallest valid instance") {
    PlaneGraph g = single_edge();
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.num_faces() == 1);
    // the lone face walks the edge twice, once per side
    CHECK(g.faces[0].walk.size() == 2);
}

TEST_CASE("diamond: faces by hand traversal") {
    PlaneGraph g = make_diamond();
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 5);
    CHECK(g.num_faces() == 3);
    // face sizes: two triangles and the outer quad
    std::vector<int> sizes;
    for (const auto& f : g.faces) sizes.push_back(static_cast<int>(f.walk.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{3, 3, 4});
    // outer face flag set via signed area on the drawing
    int outer = -1;
    for (const auto& f : g.faces)
        if (f.is_outer) outer = f.id;
    REQUIRE(outer >= 0);
    CHECK(g.faces[outer].walk.size() == 4);
}

TEST_CASE("every edge side appears exactly once across boundary walks") {
    PlaneGraph g = make_grid(4, 1, 9, 17);
    std::map<int, int> uses;
    for (const auto& f : g.faces)
        for (auto [v, e] : f.walk) {
            (void)v;
            uses[e]++;
        }
    for (int e = 0; e < g.num_edges(); ++e) CHECK(uses[e] == 2);
}

TEST_CASE("3x3 grid has 5 faces") {
    PlaneGraph g = make_grid(3, 1, 1, 1);
    CHECK(g.num_vertices() == 9);
    CHECK(g.num_edges() == 12);
    CHECK(g.num_faces() == 5);
}

TEST_CASE("K5 rejected by the Euler check") {
    std::vector<PlaneGraph::Edge> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.push_back({u, v, 1.0});
    std::vector<std::vector<int>> rot(5);
    for (size_t e = 0; e < edges.size(); ++e) {
        rot[edges[e].u].push_back(static_cast<int>(e));
        rot[edges[e].v].push_back(static_cast<int>(e));
    }
    CHECK_THROWS_AS(build_plane_graph(5, edges, rot, 0, 4), Error);
    try {
        build_plane_graph(5, edges, rot, 0, 4);
    } catch (const Error& err) {
        CHECK(err.code() == Errc::NotPlanarEmbedding);
    }
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(build_plane_graph(2, {{0, 1, 0.0}}, {{0}, {0}}, 0, 1), Error); // zero cap
    CHECK_THROWS_AS(build_plane_graph(2, {{0, 0, 1.0}}, {{0, 0}, {}}, 0, 1), Error); // self loop
    CHECK_THROWS_AS(build_plane_graph(2, {{0, 1, 1.0}}, {{0}, {0}}, 0, 0), Error); // s == t
    CHECK_THROWS_AS(build_plane_graph(3, {{0, 1, 1.0}}, {{0}, {0}, {}}, 0, 2), Error); // disconnected
    // rotation not a permutation
    CHECK_THROWS_AS(build_plane_graph(2, {{0, 1, 1.0}}, {{0, 0}, {0}}, 0, 1), Error);
}

TEST_CASE("dual of the single edge: one vertex, one self-loop") {
    PlaneGraph g = single_edge(7.0);
    DualGraph d = build_dual(g);
    CHECK(d.num_vertices() == 1);
    CHECK(d.num_edges() == 1);
    CHECK(d.emb.edges[0].u == d.emb.edges[0].v);
    CHECK(d.w(0) == 7.0);
}

TEST_CASE("diamond dual: weights and adjacency") {
    PlaneGraph g = make_diamond();
    DualGraph d = build_dual(g);
    CHECK(d.num_vertices() == 3);
    CHECK(d.num_edges() == 5);
    for (int e = 0; e < 5; ++e) CHECK(d.w(e) == g.edges[e].cap);
    // ab (edge 4) separates the two triangles; the rest touch the outer quad
    int f_outer = -1;
    for (const auto& f : g.faces)
        if (f.walk.size() == 4) f_outer = f.id;
    auto touches = [&](int e, int face) {
        return d.emb.edges[e].u == face || d.emb.edges[e].v == face;
    };
    CHECK(!touches(4, f_outer));
    for (int e = 0; e < 4; ++e) CHECK(touches(e, f_outer));
}

TEST_CASE("dual weight preservation") {
    PlaneGraph g = make_grid(5, 1, 20, 99);
    DualGraph d = build_dual(g);
    double cap_sum = 0.0;
    for (const auto& e : g.edges) cap_sum += e.cap;
    CHECK(d.total_weight() == cap_sum);
    CHECK(d.num_edges() == g.num_edges());
}

TEST_CASE("dual faces correspond to primal vertices") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        PlaneGraph g = make_random_planar(40, 1, 10, seed);
        DualGraph d = build_dual(g);
        CHECK(d.emb.num_faces() == g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) {
            int df = d.primal_vertex_to_dual_face[v];
            REQUIRE(df >= 0);
            CHECK(d.dual_face_to_primal_vertex[df] == v);
            // the corner walk length equals deg(v)
            CHECK(d.fstar_corners[v].size() == g.rotation[v].size());
        }
    }
}

TEST_CASE("coordinate round: rotations derived by angle sort validate") {
    PlaneGraph g = make_random_planar(60, 1, 10, 1234);
    CHECK(g.num_vertices() == 60);
    CHECK(g.emb.euler_ok());
}
