#include "planarflow/regions.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "planarflow/errors.hpp"
#include "planarflow/shortest_paths.hpp"

namespace planarflow {

std::vector<double> Slice::run(const std::vector<std::pair<int, double>>& sources) const {
    std::vector<double> dist(verts.size(), kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (auto [gv, off] : sources) {
        int lv = local(gv);
        require(lv >= 0, Errc::Internal, "slice source is not a kept member");
        if (off < dist[lv]) {
            dist[lv] = off;
            heap.push({off, lv});
        }
    }
    while (!heap.empty()) {
        auto [dv, v] = heap.top();
        heap.pop();
        if (dv > dist[v]) continue;
        for (const Arc& arc : adj[v]) {
            double nd = dv + arc.w;
            if (nd < dist[arc.to]) {
                dist[arc.to] = nd;
                heap.push({nd, arc.to});
            }
        }
    }
    return dist;
}

double Slice::lookup(const std::vector<double>& dist, int global_v) const {
    int lv = local_of[global_v];
    require(lv != -1, Errc::Internal, "distance lookup outside the slice");
    if (lv >= 0) return dist[lv];
    const Drop& d = drops[-2 - lv];
    return std::min(dist[d.la] + d.offa, dist[d.lb] + d.offb);
}

Slice build_region(const SlicedDual& sd, const PathFamily& fam, int a, int b,
                   const std::vector<int>& keep) {
    const EmbeddedGraph& D = sd.emb;
    const int k = fam.k;
    require(-1 <= a && a <= b && b <= k, Errc::Internal, "bad region pair");

    Slice s;
    s.a = a;
    s.b = b;
    s.local_of.assign(D.num_vertices(), -1);

    auto vmember = [&](int v) { return fam.vertex_in(v, a, b); };
    auto emember = [&](int e) { return fam.edge_in(e, a, b); };

    // discover the (connected) region by BFS from the boundary terminals
    std::vector<int> members;
    std::vector<char> vseen(0);
    std::vector<char> in_members(D.num_vertices(), 0); // touched ones only; freed with slice
    std::queue<int> bfs;
    auto push_seed = [&](int v) {
        if (v < 0) return;
        require(vmember(v), Errc::Internal, "region seed outside the region");
        if (!in_members[v]) {
            in_members[v] = 1;
            members.push_back(v);
            bfs.push(v);
        }
    };
    if (a >= 0 && a < k) {
        push_seed(sd.x(a));
        push_seed(sd.y(a));
    }
    if (b >= 0 && b < k) {
        push_seed(sd.x(b));
        push_seed(sd.y(b));
    }
    for (int v : keep) push_seed(v);
    require(!members.empty(), Errc::Internal, "region has no seeds");

    std::unordered_set<int> edge_set;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int end : D.rot[v]) {
            int e = EmbeddedGraph::edge_of(end);
            if (!emember(e)) continue;
            edge_set.insert(e);
            int w = D.dart_head(end);
            if (!in_members[w]) {
                in_members[w] = 1;
                members.push_back(w);
                bfs.push(w);
            }
        }
    }
    s.member_edges.assign(edge_set.begin(), edge_set.end());
    std::sort(s.member_edges.begin(), s.member_edges.end());

    // chain compression along the shared subpath of the two boundary paths
    std::vector<int> chain;
    if (a >= 0 && b < k && a != b) {
        auto sh = fam.shared_subpath(a, b);
        if (!sh.empty) chain = fam.tree_path_vertices(sh.a, sh.b);
    }
    std::vector<char> keepflag(D.num_vertices(), 0);
    for (int v : keep) keepflag[v] = 1;
    if (a >= 0 && a < k) keepflag[sd.x(a)] = keepflag[sd.y(a)] = 1;
    if (b >= 0 && b < k) keepflag[sd.x(b)] = keepflag[sd.y(b)] = 1;

    std::vector<char> dropped(D.num_vertices(), 0);
    for (size_t j = 1; j + 1 < chain.size(); ++j) {
        int u = chain[j];
        if (keepflag[u]) continue;
        int deg = 0;
        for (int end : D.rot[u])
            if (emember(EmbeddedGraph::edge_of(end))) ++deg;
        if (deg == 2) dropped[u] = 1;
    }

    // local ids for kept members (discovery order)
    for (int v : members)
        if (!dropped[v]) {
            s.local_of[v] = static_cast<int>(s.verts.size());
            s.verts.push_back(v);
        }
    s.adj.assign(s.verts.size(), {});

    std::vector<char> absorbed(0);
    std::unordered_set<int> absorbed_edges;
    if (!chain.empty()) {
        // pseudo edges across runs of dropped chain vertices
        auto edge_between = [&](int u, int v) {
            int child = (fam.u_par[u] == v) ? u : v;
            return fam.u_par_edge[child];
        };
        size_t run_start = 0;
        double acc = 0.0;
        std::vector<std::pair<int, double>> run; // dropped vertex, offset from run_start border
        for (size_t j = 0; j + 1 < chain.size(); ++j) {
            int e = edge_between(chain[j], chain[j + 1]);
            bool absorb = dropped[chain[j]] || dropped[chain[j + 1]];
            if (absorb) absorbed_edges.insert(e);
            acc += D.edges[e].w;
            (void)run_start;
            if (dropped[chain[j + 1]]) {
                run.push_back({chain[j + 1], acc});
            } else {
                if (!run.empty()) {
                    int la = s.local_of[chain[run_start]];
                    int lb = s.local_of[chain[j + 1]];
                    require(la >= 0 && lb >= 0, Errc::Internal, "chain borders must be kept");
                    for (auto [dv, off] : run) {
                        s.local_of[dv] = -2 - static_cast<int>(s.drops.size());
                        s.drop_global.push_back(dv);
                        s.drops.push_back({la, lb, off, acc - off});
                    }
                    s.adj[la].push_back({lb, acc});
                    s.adj[lb].push_back({la, acc});
                    run.clear();
                }
                run_start = j + 1;
                acc = 0.0;
            }
        }
        require(run.empty(), Errc::Internal, "chain ended inside a dropped run");
    }

    for (int e : s.member_edges) {
        if (absorbed_edges.count(e)) continue;
        int lu = s.local_of[D.edges[e].u];
        int lv = s.local_of[D.edges[e].v];
        require(lu >= 0 && lv >= 0, Errc::Internal, "member edge touches a dropped vertex");
        if (lu == lv) continue; // self-loops carry no distance
        s.adj[lu].push_back({lv, D.edges[e].w});
        s.adj[lv].push_back({lu, D.edges[e].w});
    }
    return s;
}

std::vector<Slice> build_slices(const SlicedDual& sd, const PathFamily& fam,
                                const std::vector<int>& indices) {
    std::vector<Slice> out;
    for (size_t t = 0; t + 1 < indices.size(); ++t) {
        require(indices[t] < indices[t + 1], Errc::BadParams, "indices must increase");
        out.push_back(build_region(sd, fam, indices[t], indices[t + 1], {}));
    }
    return out;
}

} // namespace planarflow
