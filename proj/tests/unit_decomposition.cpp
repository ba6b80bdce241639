#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "planarflow/dual_graph.hpp"
#include "planarflow/errors.hpp"
#include "planarflow/instances.hpp"
#include "planarflow/oracle.hpp"
#include "planarflow/plane_graph.hpp"
#include "planarflow/shortest_paths.hpp"
#include "planarflow/sliced_dual.hpp"

using namespace planarflow;

namespace {

// Contract x_i with y_i and drop one pi-edge copy: the result must be G*
// up to edge multiset equality.
void check_round_trip(const PlaneGraph& g, const DualGraph& d, const SlicedDual& sd) {
    auto to_dual_vertex = [&](int dv) {
        if (sd.vertex_kind[dv] == SlicedDual::kInner) return sd.vertex_index[dv];
        return sd.pi_vertices[sd.vertex_index[dv]];
    };
    std::multiset<std::tuple<int, int, double>> got, want;
    for (int e = 0; e < sd.num_edges(); ++e) {
        if (sd.edge_info[e].copy == SlicedDual::kCopyY) continue; // merge the copies
        int u = to_dual_vertex(sd.emb.edges[e].u);
        int v = to_dual_vertex(sd.emb.edges[e].v);
        got.insert({std::min(u, v), std::max(u, v), sd.emb.edges[e].w});
    }
    for (int e = 0; e < d.num_edges(); ++e) {
        int u = d.emb.edges[e].u, v = d.emb.edges[e].v;
        want.insert({std::min(u, v), std::max(u, v), d.emb.edges[e].w});
    }
    CHECK(got == want);
    (void)g;
}

void check_sliced_invariants(const PlaneGraph& g) {
    DualGraph d = build_dual(g);
    SlicedDual sd = decompose(d, g);
    CHECK(sd.num_edges() == d.num_edges() + sd.k - 1);
    CHECK(sd.emb.euler_ok());
    check_round_trip(g, d, sd);

    // pi weight equals an independent dijkstra distance between terminals
    auto [vs, vt] = dual_terminals(d, g);
    DistForest df = sssp(d.emb, {{vs, 0.0}});
    CHECK(sd.pi_prefix[sd.k - 1] == df.dist[vt]);

    // per-edge copies carry the capacity
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = sd.primal_to_d[e];
        CHECK(sd.weight(a) == g.edges[e].cap);
        if (b != -1) CHECK(sd.weight(b) == g.edges[e].cap);
    }

    // face records: q sets disjoint from the face, indices sane
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v == g.s || v == g.t) continue;
        const auto& rec = sd.face_record(v);
        CHECK(rec.walk.size() == g.rotation[v].size());
        CHECK(rec.weight == [&] {
            double c = 0.0;
            for (int e : g.rotation[v]) c += g.edges[e].cap;
            return c;
        }());
        for (int q : rec.qx) {
            CHECK(sd.vertex_kind[q] == SlicedDual::kX);
            CHECK(!std::binary_search(rec.vset.begin(), rec.vset.end(), q));
        }
        for (int q : rec.qy) {
            CHECK(sd.vertex_kind[q] == SlicedDual::kY);
            CHECK(!std::binary_search(rec.vset.begin(), rec.vset.end(), q));
        }
        if (rec.indices.empty()) {
            CHECK(rec.qx.empty());
            CHECK(rec.qy.empty());
            CHECK(!rec.meets_pi_x);
            CHECK(!rec.meets_pi_y);
        }
    }
    CHECK_THROWS_AS(sd.face_record(g.s), Error);
}

} // namespace

TEST_CASE("single edge: degenerate k = 1 cut") {
    PlaneGraph g = build_plane_graph(2, {{0, 1, 7.0}}, {{0}, {0}}, 0, 1);
    DualGraph d = build_dual(g);
    auto [vs, vt] = dual_terminals(d, g);
    CHECK(vs == vt); // one dual vertex only
    SlicedDual sd = decompose(d, g);
    CHECK(sd.k == 1);
    CHECK(sd.num_vertices() == 2);
    CHECK(sd.num_edges() == 1);
    // the self-loop becomes the x_1 - y_1 edge of weight 7
    CHECK(sd.emb.edges[0].w == 7.0);
    CHECK(sd.emb.edges[0].u != sd.emb.edges[0].v);
}

TEST_CASE("path graph s-a-t: both self-loops rerouted") {
    PlaneGraph g = build_plane_graph(3, {{0, 1, 4.0}, {1, 2, 9.0}}, {{0}, {0, 1}, {1}}, 0, 2);
    DualGraph d = build_dual(g);
    SlicedDual sd = decompose(d, g);
    CHECK(sd.k == 1);
    REQUIRE(sd.num_edges() == 2);
    for (int e = 0; e < 2; ++e) {
        CHECK(sd.emb.edges[e].u != sd.emb.edges[e].v);
    }
    // x_1 - y_1 distance picks the min capacity = true max flow
    DistForest df = sssp(sd.emb, {{sd.x(0), 0.0}});
    CHECK(df.dist[sd.y(0)] == 4.0);
}

TEST_CASE("tree edge off the s-t path stays a self-loop") {
    // star: s - a, a - t, a - u
    PlaneGraph g = build_plane_graph(4, {{0, 1, 4.0}, {1, 2, 9.0}, {1, 3, 2.0}},
                                     {{0}, {0, 1, 2}, {1}, {2}}, 0, 2);
    DualGraph d = build_dual(g);
    SlicedDual sd = decompose(d, g);
    CHECK(sd.k == 1);
    int loops = 0;
    for (const auto& e : sd.emb.edges) loops += (e.u == e.v);
    CHECK(loops == 1); // the a-u edge
    DistForest df = sssp(sd.emb, {{sd.x(0), 0.0}});
    CHECK(df.dist[sd.y(0)] == 4.0);
}

TEST_CASE("diamond: dual terminals and cut") {
    PlaneGraph g = make_diamond();
    DualGraph d = build_dual(g);
    auto [vs, vt] = dual_terminals(d, g);
    CHECK(vs != vt);
    // v*_s lies on f*_s, v*_t on f*_t
    auto fs = d.fstar_vertices(g.s);
    auto ft = d.fstar_vertices(g.t);
    CHECK(std::count(fs.begin(), fs.end(), vs) == 1);
    CHECK(std::count(ft.begin(), ft.end(), vt) == 1);
    check_sliced_invariants(g);
}

TEST_CASE("sliced dual invariants on grids") {
    check_sliced_invariants(make_grid(3, 1, 1, 0));
    check_sliced_invariants(make_grid(4, 1, 9, 7));
    check_sliced_invariants(make_grid(6, 1, 20, 42));
    check_sliced_invariants(make_grid(5, 2, 2, 3, /*corner_terminals=*/false));
}

TEST_CASE("sliced dual invariants on random planar instances") {
    for (std::uint64_t seed : {1ull, 5ull, 9ull, 13ull}) {
        check_sliced_invariants(make_random_planar(30, 1, 12, seed));
        check_sliced_invariants(make_random_planar(50, 1, 12, seed, false));
    }
}

TEST_CASE("min over x_i y_i distances equals the oracle max flow") {
    // Prop. 1 semantics through the cut, before the path family exists
    for (std::uint64_t seed : {0ull, 1ull, 2ull, 3ull}) {
        PlaneGraph g = make_grid(4 + static_cast<int>(seed), 1, 9, seed);
        DualGraph d = build_dual(g);
        SlicedDual sd = decompose(d, g);
        double best = kInf;
        for (int i = 0; i < sd.k; ++i) {
            DistForest df = sssp(sd.emb, {{sd.x(i), 0.0}});
            best = std::min(best, df.dist[sd.y(i)]);
        }
        CHECK(best == generic_max_flow(to_network(g)));
    }
}
