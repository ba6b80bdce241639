#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "planarflow/dual_graph.hpp"
#include "planarflow/errors.hpp"
#include "planarflow/instances.hpp"
#include "planarflow/oracle.hpp"
#include "planarflow/path_family.hpp"
#include "planarflow/shortest_paths.hpp"
#include "planarflow/sliced_dual.hpp"

using namespace planarflow;

namespace {

struct Pipe {
    PlaneGraph g;
    DualGraph d;
    SlicedDual sd;
    PathFamily fam;
};

Pipe make_pipe(PlaneGraph g) {
    Pipe p{std::move(g), {}, {}, {}};
    p.d = build_dual(p.g);
    p.sd = decompose(p.d, p.g);
    p.fam = noncrossing_family(p.sd);
    return p;
}

// maximal runs of p_i's vertices lying on p_j; returns start/end positions
std::vector<std::pair<int, int>> common_runs(const PathFamily& fam, int i, int j) {
    std::set<int> on(fam.verts[j].begin(), fam.verts[j].end());
    std::vector<std::pair<int, int>> runs;
    int len = static_cast<int>(fam.verts[i].size());
    for (int p = 0; p < len;) {
        if (!on.count(fam.verts[i][p])) {
            ++p;
            continue;
        }
        int q = p;
        while (q + 1 < len && on.count(fam.verts[i][q + 1])) ++q;
        runs.push_back({p, q});
        p = q + 1;
    }
    return runs;
}

int count_crossings(const SlicedDual& sd, const PathFamily& fam, int i, int j) {
    SplitResult sr = split_by_path(sd, fam.verts[j], fam.edges[j]);
    std::vector<int> eside(sd.num_edges(), 0);
    for (int e : sr.west_e) eside[e] = 1;
    for (int e : sr.east_e) eside[e] = 2;
    int crossings = 0;
    int len = static_cast<int>(fam.verts[i].size());
    for (auto [p, q] : common_runs(fam, i, j)) {
        if (p == 0 || q == len - 1) continue; // prefix/suffix touch, not a crossing
        int entry = eside[fam.edges[i][p - 1]];
        int exit = eside[fam.edges[i][q]];
        if (entry != 0 && exit != 0 && entry != exit) ++crossings;
    }
    return crossings;
}

void check_family(const PlaneGraph& g, bool deep = true) {
    Pipe p = make_pipe(g);
    const PathFamily& fam = p.fam;
    const SlicedDual& sd = p.sd;
    const int k = fam.k;

    double best = kInf;
    for (int i = 0; i < k; ++i) {
        // shortest: against an independent point-to-point dijkstra in full D
        DistForest f = sssp(sd.emb, {{sd.x(i), 0.0}});
        CHECK(fam.d[i] == f.dist[sd.y(i)]);
        CHECK(fam.prefix[i].back() == fam.d[i]);
        CHECK(fam.verts[i].front() == sd.x(i));
        CHECK(fam.verts[i].back() == sd.y(i));
        best = std::min(best, fam.d[i]);
    }
    CHECK(best == generic_max_flow(to_network(g)));

    // U is a forest of exactly the canonical path edges
    {
        std::vector<int> uf(sd.num_vertices());
        for (size_t v = 0; v < uf.size(); ++v) uf[v] = static_cast<int>(v);
        auto find = [&](int v) {
            while (uf[v] != v) v = uf[v] = uf[uf[v]];
            return v;
        };
        for (int e = 0; e < sd.num_edges(); ++e) {
            if (!fam.in_u_edge[e]) continue;
            int a = find(sd.emb.edges[e].u), b = find(sd.emb.edges[e].v);
            CHECK(a != b); // a cycle in U would merge twice
            uf[a] = b;
        }
    }

    if (!deep) return;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            CHECK(common_runs(fam, i, j).size() <= 1); // single-touch
            CHECK(count_crossings(sd, fam, i, j) == 0);

            // shared subpath against direct set intersection
            auto sh = fam.shared_subpath(i, j);
            std::set<int> a(fam.verts[i].begin(), fam.verts[i].end());
            std::set<int> b(fam.verts[j].begin(), fam.verts[j].end());
            std::vector<int> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (sh.empty) {
                CHECK(inter.empty());
            } else {
                std::vector<int> chain = fam.tree_path_vertices(sh.a, sh.b);
                std::set<int> cs(chain.begin(), chain.end());
                CHECK(std::vector<int>(cs.begin(), cs.end()) == inter);
                double w = 0.0;
                for (size_t t = 0; t + 1 < chain.size(); ++t) {
                    int child = (fam.u_par[chain[t]] == chain[t + 1]) ? chain[t] : chain[t + 1];
                    w += sd.emb.edges[fam.u_par_edge[child]].w;
                }
                CHECK(w == sh.weight);
            }
        }

    // interval labels: Left_i and Right_i partition D with p_i as the seam
    for (int i = 0; i < k; ++i) {
        std::set<int> pv(fam.verts[i].begin(), fam.verts[i].end());
        for (int v = 0; v < sd.num_vertices(); ++v) {
            bool left = fam.vertex_in(v, -1, i);
            bool right = fam.vertex_in(v, i, k);
            CHECK((left || right));
            CHECK((left && right) == (pv.count(v) > 0));
        }
    }
}

} // namespace

TEST_CASE("sssp basics") {
    // path graph a-b-c with weights 2, 3
    PlaneGraph g = build_plane_graph(3, {{0, 1, 2.0}, {1, 2, 3.0}}, {{0}, {0, 1}, {1}}, 0, 2);
    DistForest f = sssp(g.emb, {{0, 0.0}});
    CHECK(f.dist[0] == 0.0);
    CHECK(f.dist[2] == 5.0);
    // multi-source with offsets
    DistForest f2 = sssp(g.emb, {{0, 1.0}, {2, 0.0}});
    CHECK(f2.dist[1] == 3.0);
}

TEST_CASE("family on the diamond") {
    Pipe p = make_pipe(make_diamond());
    CHECK(p.fam.k == 2);
    double best = std::min(p.fam.d[0], p.fam.d[1]);
    CHECK(best == 5.0);
    check_family(make_diamond());
}

TEST_CASE("family on the single edge (k = 1)") {
    PlaneGraph g = build_plane_graph(2, {{0, 1, 7.0}}, {{0}, {0}}, 0, 1);
    Pipe p = make_pipe(g);
    CHECK(p.fam.k == 1);
    CHECK(p.fam.d[0] == 7.0);
}

TEST_CASE("family invariants on grids") {
    check_family(make_grid(3, 1, 1, 0));
    check_family(make_grid(4, 1, 9, 7));
    check_family(make_grid(5, 1, 5, 11));
    check_family(make_grid(6, 1, 20, 42));
    check_family(make_grid(5, 1, 9, 3, /*corner_terminals=*/false));
    check_family(make_grid(4, 1, 1, 0)); // unit capacities: heavy tie-breaking
}

TEST_CASE("family invariants on random planar instances") {
    for (std::uint64_t seed : {1ull, 2ull, 5ull, 9ull}) {
        check_family(make_random_planar(25, 1, 12, seed));
        check_family(make_random_planar(40, 1, 3, seed, false));
    }
}

TEST_CASE("family invariants with fractional capacities") {
    for (std::uint64_t seed : {3ull, 8ull}) {
        check_family(perturb_quarters(make_grid(5, 1, 6, seed), seed + 100));
        check_family(perturb_quarters(make_random_planar(30, 1, 6, seed), seed + 200));
    }
}

TEST_CASE("larger instances: shallow checks") {
    check_family(make_grid(10, 1, 9, 77), /*deep=*/false);
    check_family(make_random_planar(150, 1, 20, 5), /*deep=*/false);
}
