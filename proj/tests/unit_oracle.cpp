#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planarflow/errors.hpp"
#include "planarflow/instances.hpp"
#include "planarflow/oracle.hpp"

using namespace planarflow;

TEST_CASE("max flow basics") {
    UndirectedNetwork one{2, {{0, 1, 7.0}}, 0, 1};
    CHECK(generic_max_flow(one) == 7.0);

    // two disjoint unit paths s -> t
    UndirectedNetwork two{4, {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}}, 0, 3};
    CHECK(generic_max_flow(two) == 2.0);

    // t unreachable
    UndirectedNetwork disc{3, {{0, 1, 4.0}}, 0, 2};
    CHECK(generic_max_flow(disc) == 0.0);
}

TEST_CASE("diamond max flow and vitalities") {
    UndirectedNetwork net = to_network(make_diamond());
    CHECK(generic_max_flow(net) == 5.0);
    // spec order: sa, sb, at, bt, ab
    CHECK(brute_edge_vitality(net, 0) == 3.0);
    CHECK(brute_edge_vitality(net, 1) == 2.0);
    CHECK(brute_edge_vitality(net, 2) == 2.0);
    CHECK(brute_edge_vitality(net, 3) == 3.0);
    CHECK(brute_edge_vitality(net, 4) == 1.0);
    CHECK(brute_vertex_vitality(net, 1) == 3.0);
    CHECK(brute_vertex_vitality(net, 2) == 3.0);
    CHECK_THROWS_AS(brute_vertex_vitality(net, 0), Error);
}

TEST_CASE("bridge edge carries the whole flow") {
    UndirectedNetwork net{3, {{0, 1, 5.0}, {1, 2, 3.0}}, 0, 2};
    double mf = generic_max_flow(net);
    CHECK(mf == 3.0);
    CHECK(brute_edge_vitality(net, 0) == mf);
    CHECK(brute_edge_vitality(net, 1) == mf);
}

TEST_CASE("max flow equals exhaustive min cut on small instances") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        UndirectedNetwork net = to_network(make_grid(3, 1, 9, seed)); // 9 vertices
        CHECK(generic_max_flow(net) == enumerate_min_cut(net));
    }
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        UndirectedNetwork net = to_network(make_random_planar(10, 1, 9, seed));
        CHECK(generic_max_flow(net) == enumerate_min_cut(net));
    }
}

TEST_CASE("vitality bounds") {
    UndirectedNetwork net = to_network(make_grid(4, 1, 9, 5));
    double mf = generic_max_flow(net);
    for (size_t e = 0; e < net.edges.size(); ++e) {
        double vit = brute_edge_vitality(net, static_cast<int>(e));
        CHECK(vit >= 0.0);
        CHECK(vit <= std::min(net.edges[e].cap, mf));
    }
    for (int v = 0; v < net.n; ++v) {
        if (v == net.s || v == net.t) continue;
        double vit = brute_vertex_vitality(net, v);
        CHECK(vit >= 0.0);
        CHECK(vit <= mf);
    }
}
