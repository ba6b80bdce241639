#include "planarflow/shortest_paths.hpp"

#include <algorithm>
#include <queue>

#include "planarflow/errors.hpp"

namespace planarflow {

DistForest sssp(const EmbeddedGraph& g,
                const std::vector<std::pair<int, double>>& sources,
                const std::vector<char>* vertex_mask,
                const std::vector<char>* edge_mask,
                const std::vector<char>* prefer_edge) {
    const int n = g.num_vertices();
    DistForest out;
    out.dist.assign(n, kInf);
    out.par_edge.assign(n, -1);
    require(!sources.empty(), Errc::BadParams, "sssp needs at least one source");

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (auto [v, off] : sources) {
        if (vertex_mask && !(*vertex_mask)[v]) continue;
        if (off < out.dist[v]) {
            out.dist[v] = off;
            out.par_edge[v] = -1;
            heap.push({off, v});
        }
    }

    auto better_parent = [&](int cand, int cur) {
        if (cur == -1) return false; // keep source status
        bool pc = prefer_edge && (*prefer_edge)[cand];
        bool pu = prefer_edge && (*prefer_edge)[cur];
        if (pc != pu) return pc;
        return cand < cur;
    };

    while (!heap.empty()) {
        auto [dv, v] = heap.top();
        heap.pop();
        if (dv > out.dist[v]) continue;
        for (int end : g.rot[v]) {
            int e = EmbeddedGraph::edge_of(end);
            if (edge_mask && !(*edge_mask)[e]) continue;
            double w = g.edges[e].w;
            require(w >= 0.0, Errc::NegativeWeight, "negative edge weight in sssp");
            int u = g.dart_head(end);
            if (u == v) continue; // self-loops never improve
            if (vertex_mask && !(*vertex_mask)[u]) continue;
            double nd = dv + w;
            if (nd < out.dist[u]) {
                out.dist[u] = nd;
                out.par_edge[u] = e;
                heap.push({nd, u});
            } else if (nd == out.dist[u] && better_parent(e, out.par_edge[u])) {
                out.par_edge[u] = e;
            }
        }
    }
    return out;
}

std::vector<int> extract_path(const EmbeddedGraph& g, const DistForest& f, int v) {
    require(f.dist[v] < kInf, Errc::BadParams, "vertex unreachable");
    std::vector<int> path;
    int cur = v;
    path.push_back(cur);
    while (f.par_edge[cur] != -1) {
        const auto& e = g.edges[f.par_edge[cur]];
        cur = (e.u == cur) ? e.v : e.u;
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace planarflow
