#include "planarflow/path_family.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <string>

#include "planarflow/errors.hpp"
#include "planarflow/shortest_paths.hpp"

namespace planarflow {

namespace {

bool in_cyclic_open(int p, int a, int b) {
    // p strictly between a and b walking +1 from a
    if (a < b) return p > a && p < b;
    if (a > b) return p > a || p < b;
    return false;
}

int end_of_edge_at(const EmbeddedGraph& g, int e, int v) {
    return 2 * e + (g.edges[e].u == v ? 0 : 1);
}

} // namespace

SplitResult split_by_path(const SlicedDual& sd, const std::vector<int>& pverts,
                          const std::vector<int>& pedges, const std::vector<char>* vmask,
                          const std::vector<char>* emask) {
    const EmbeddedGraph& D = sd.emb;
    const int n = D.num_vertices(), m = D.num_edges();
    const int len = static_cast<int>(pverts.size());
    require(len >= 2, Errc::Internal, "split needs a path with at least one edge");

    std::vector<int> ppos(n, -1);
    for (int j = 0; j < len; ++j) ppos[pverts[j]] = j;
    std::vector<char> pedge(m, 0);
    for (int e : pedges) pedge[e] = 1;

    // 1 = west, 2 = east
    std::vector<char> vside(n, 0), eside(m, 0);
    std::queue<int> bfs;

    int phi = -1;  // face just east of the upcoming path edge
    int mode = +1; // east = cyclic open (arrival -> departure) when +1

    for (int j = 0; j < len; ++j) {
        int u = pverts[j];
        int mu = D.degree(u);
        int q = (j > 0) ? D.end_pos[end_of_edge_at(D, pedges[j - 1], u)] : -1;
        int o = (j + 1 < len) ? D.end_pos[end_of_edge_at(D, pedges[j], u)] : -1;

        if (j > 0) {
            bool fa = D.corner_face(u, q) == phi;
            bool fb = D.corner_face(u, (q - 1 + mu) % mu) == phi;
            if (fa != fb) mode = fa ? +1 : -1;
            // both or neither: degenerate local geometry, keep the carry
        }

        for (int p = 0; p < mu; ++p) {
            if (p == q || p == o) continue;
            bool east;
            if (j == 0)
                east = (p < o); // rotation at x_i starts on the east side
            else if (j + 1 == len)
                east = (mode == +1) ? (p > q) : (p < q);
            else
                east = (mode == +1) ? in_cyclic_open(p, q, o) : in_cyclic_open(p, o, q);
            int end = D.rot[u][p];
            int e = EmbeddedGraph::edge_of(end);
            if (pedge[e]) continue; // the path touching itself at a corner
            if (emask && !(*emask)[e]) continue;
            if (!eside[e]) eside[e] = east ? 2 : 1;
            int w = D.dart_head(end);
            if (ppos[w] >= 0 || w == u) continue;
            if (vmask && !(*vmask)[w]) continue;
            if (!vside[w]) {
                vside[w] = east ? 2 : 1;
                bfs.push(w);
            }
        }

        if (j + 1 < len) {
            // face east-adjacent to the departing edge
            phi = (mode == +1) ? D.corner_face(u, (o - 1 + mu) % mu) : D.corner_face(u, o);
        }
    }

    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int end : D.rot[v]) {
            int e = EmbeddedGraph::edge_of(end);
            if (emask && !(*emask)[e]) continue;
            if (!eside[e]) eside[e] = vside[v];
            int w = D.dart_head(end);
            if (w == v || ppos[w] >= 0) continue;
            if (vmask && !(*vmask)[w]) continue;
            if (!vside[w]) {
                vside[w] = vside[v];
                bfs.push(w);
            }
        }
    }

    SplitResult out;
    for (int v = 0; v < n; ++v) {
        if (vside[v] == 1) out.west_v.push_back(v);
        if (vside[v] == 2) out.east_v.push_back(v);
    }
    for (int e = 0; e < m; ++e) {
        if (eside[e] == 1) out.west_e.push_back(e);
        if (eside[e] == 2) out.east_e.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------

int PathFamily::lca(int u, int v) const {
    require(u_root[u] >= 0 && u_root[u] == u_root[v], Errc::Internal,
            "lca endpoints in different trees");
    if (u_depth[u] < u_depth[v]) std::swap(u, v);
    int diff = u_depth[u] - u_depth[v];
    for (size_t b = 0; b < u_up.size(); ++b)
        if (diff & (1 << b)) u = u_up[b][u];
    if (u == v) return u;
    for (int b = static_cast<int>(u_up.size()) - 1; b >= 0; --b)
        if (u_up[b][u] != u_up[b][v]) {
            u = u_up[b][u];
            v = u_up[b][v];
        }
    return u_par[u];
}

std::vector<int> PathFamily::tree_path_vertices(int a, int b) const {
    int l = lca(a, b);
    std::vector<int> left, right;
    for (int v = a; v != l; v = u_par[v]) left.push_back(v);
    left.push_back(l);
    for (int v = b; v != l; v = u_par[v]) right.push_back(v);
    std::reverse(right.begin(), right.end());
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

int PathFamily::lift(int v, int steps) const {
    for (size_t b = 0; b < u_up.size() && steps; ++b, steps >>= 1)
        if (steps & 1) v = u_up[b][v];
    return v;
}

// Each path is two vertical chains meeting at its apex; intersect the four
// chain pairs. A chain-pair intersection is the vertical run from
// l = lca(x, y) up to l's ancestor at depth max(depth r1, depth r2).
PathFamily::Shared PathFamily::shared_subpath(int i, int j) const {
    Shared out;
    int a = verts[i].front(), b = verts[i].back();
    int c = verts[j].front(), dd = verts[j].back();
    if (u_root[a] != u_root[c]) return out;

    int r1 = lca(a, b), r2 = lca(c, dd);
    int top_depth = std::max(u_depth[r1], u_depth[r2]);
    int cand[8];
    int ncand = 0;
    for (int x : {a, b})
        for (int y : {c, dd}) {
            int l = lca(x, y);
            if (u_depth[l] < top_depth) continue;
            cand[ncand++] = l;
            cand[ncand++] = lift(l, u_depth[l] - top_depth);
        }
    if (ncand == 0) return out;

    auto dist_steps = [&](int p, int q) {
        return u_depth[p] + u_depth[q] - 2 * u_depth[lca(p, q)];
    };
    int bp = cand[0], bq = cand[0], best = -1;
    for (int s = 0; s < ncand; ++s)
        for (int t = s; t < ncand; ++t)
            if (dist_steps(cand[s], cand[t]) > best) {
                best = dist_steps(cand[s], cand[t]);
                bp = cand[s];
                bq = cand[t];
            }
    out.empty = false;
    out.a = bp;
    out.b = bq;
    out.weight = u_wdepth[bp] + u_wdepth[bq] - 2.0 * u_wdepth[lca(bp, bq)];
    return out;
}

// ---------------------------------------------------------------------------

PathFamily noncrossing_family(const SlicedDual& sd) {
    const EmbeddedGraph& D = sd.emb;
    const int n = D.num_vertices(), m = D.num_edges();
    const int k = sd.k;

    PathFamily fam;
    fam.k = k;
    fam.verts.resize(k);
    fam.edges.resize(k);
    fam.prefix.resize(k);
    fam.d.assign(k, 0.0);

    std::vector<char> built_edge(m, 0);
    std::vector<double> goal(k, 0.0);

    auto build_path = [&](int i, const std::vector<char>* vmask, const std::vector<char>* emask) {
        DistForest f = sssp(D, {{sd.x(i), 0.0}}, vmask, emask, &built_edge);
        require(f.dist[sd.y(i)] < kInf, Errc::Internal,
                "terminal pair disconnected inside its region (path " + std::to_string(i) + ")");
        goal[i] = f.dist[sd.y(i)];
        std::vector<int> vs, es;
        int cur = sd.y(i);
        vs.push_back(cur);
        while (f.par_edge[cur] != -1) {
            int e = f.par_edge[cur];
            es.push_back(e);
            cur = (D.edges[e].u == cur) ? D.edges[e].v : D.edges[e].u;
            vs.push_back(cur);
        }
        require(cur == sd.x(i), Errc::Internal, "path does not reach its source");
        std::reverse(vs.begin(), vs.end());
        std::reverse(es.begin(), es.end());
        fam.verts[i] = std::move(vs);
        fam.edges[i] = std::move(es);
        for (int e : fam.edges[i]) built_edge[e] = 1;
    };

    struct Region {
        std::vector<int> vs, es;
    };
    auto region_masks = [&](const Region& r, std::vector<char>& vm, std::vector<char>& em) {
        vm.assign(n, 0);
        em.assign(m, 0);
        for (int v : r.vs) vm[v] = 1;
        for (int e : r.es) em[e] = 1;
    };
    auto make_side_region = [&](const Region& base, int i, bool east) {
        std::vector<char> vm, em;
        region_masks(base, vm, em);
        SplitResult sr = split_by_path(sd, fam.verts[i], fam.edges[i], &vm, &em);
        Region out;
        out.vs = east ? std::move(sr.east_v) : std::move(sr.west_v);
        out.es = east ? std::move(sr.east_e) : std::move(sr.west_e);
        out.vs.insert(out.vs.end(), fam.verts[i].begin(), fam.verts[i].end());
        out.es.insert(out.es.end(), fam.edges[i].begin(), fam.edges[i].end());
        return out;
    };

    build_path(0, nullptr, nullptr);
    if (k > 1) {
        Region full;
        full.vs.resize(n);
        full.es.resize(m);
        for (int v = 0; v < n; ++v) full.vs[v] = v;
        for (int e = 0; e < m; ++e) full.es[e] = e;

        Region right_of_first = make_side_region(full, 0, /*east=*/true);
        {
            std::vector<char> vm, em;
            region_masks(right_of_first, vm, em);
            build_path(k - 1, &vm, &em);
        }

        struct Job {
            int lo, hi;
            Region region;
        };
        std::vector<Job> stack;
        stack.push_back({0, k - 1, make_side_region(right_of_first, k - 1, /*east=*/false)});
        while (!stack.empty()) {
            Job job = std::move(stack.back());
            stack.pop_back();
            if (job.hi - job.lo <= 1) continue;
            int mid = (job.lo + job.hi) / 2;
            std::vector<char> vm, em;
            region_masks(job.region, vm, em);
            require(vm[sd.x(mid)] && vm[sd.y(mid)], Errc::Internal,
                    "terminal pair escaped its region");
            build_path(mid, &vm, &em);
            stack.push_back({job.lo, mid, make_side_region(job.region, mid, /*east=*/false)});
            stack.push_back({mid, job.hi, make_side_region(job.region, mid, /*east=*/true)});
        }
    }

    // ---- U forest (union-find; equal-weight evidence for dropped cycle edges) ----
    std::vector<int> uf(n);
    for (int v = 0; v < n; ++v) uf[v] = v;
    auto find = [&](int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };
    fam.in_u_vertex.assign(n, 0);
    fam.in_u_edge.assign(m, 0);
    std::vector<int> deferred;
    for (int i = 0; i < k; ++i) {
        for (int e : fam.edges[i]) {
            if (fam.in_u_edge[e]) continue;
            int ru = find(D.edges[e].u), rv = find(D.edges[e].v);
            if (ru == rv) {
                deferred.push_back(e);
                continue;
            }
            uf[ru] = rv;
            fam.in_u_edge[e] = 1;
        }
        for (int v : fam.verts[i]) fam.in_u_vertex[v] = 1;
    }

    // root the forest
    fam.u_par.assign(n, -1);
    fam.u_par_edge.assign(n, -1);
    fam.u_depth.assign(n, 0);
    fam.u_root.assign(n, -1);
    fam.u_wdepth.assign(n, 0.0);
    {
        std::vector<std::vector<std::pair<int, int>>> adj(n); // (to, edge)
        for (int e = 0; e < m; ++e)
            if (fam.in_u_edge[e]) {
                adj[D.edges[e].u].push_back({D.edges[e].v, e});
                adj[D.edges[e].v].push_back({D.edges[e].u, e});
            }
        for (int r = 0; r < n; ++r) {
            if (!fam.in_u_vertex[r] || fam.u_root[r] >= 0) continue;
            std::queue<int> q;
            q.push(r);
            fam.u_root[r] = r;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (auto [w, e] : adj[v]) {
                    if (fam.u_root[w] >= 0) continue;
                    fam.u_root[w] = r;
                    fam.u_par[w] = v;
                    fam.u_par_edge[w] = e;
                    fam.u_depth[w] = fam.u_depth[v] + 1;
                    fam.u_wdepth[w] = fam.u_wdepth[v] + D.edges[e].w;
                    q.push(w);
                }
            }
        }
    }
    int LOG = 1;
    while ((1 << LOG) < n) ++LOG;
    fam.u_up.assign(LOG, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v) fam.u_up[0][v] = (fam.u_par[v] >= 0) ? fam.u_par[v] : v;
    for (int b = 1; b < LOG; ++b)
        for (int v = 0; v < n; ++v) fam.u_up[b][v] = fam.u_up[b - 1][fam.u_up[b - 1][v]];

    // dropped edges must be certified by an equal-weight tree path
    for (int e : deferred) {
        int u = D.edges[e].u, v = D.edges[e].v;
        require(fam.u_root[u] == fam.u_root[v], Errc::Internal, "deferred edge between trees");
        int l = fam.lca(u, v);
        double tw = fam.u_wdepth[u] + fam.u_wdepth[v] - 2.0 * fam.u_wdepth[l];
        require(tw == D.edges[e].w, Errc::Internal,
                "path union is not a forest (unequal cycle weights)");
    }

    // ---- canonical form: p_i is the tree path between its terminals ----
    for (int i = 0; i < k; ++i) {
        std::vector<int> vs = fam.tree_path_vertices(sd.x(i), sd.y(i));
        std::vector<int> es;
        double w = 0.0;
        for (size_t j = 0; j + 1 < vs.size(); ++j) {
            int child = (fam.u_par[vs[j]] == vs[j + 1]) ? vs[j] : vs[j + 1];
            int e = fam.u_par_edge[child];
            es.push_back(e);
            w += D.edges[e].w;
        }
        require(w == goal[i], Errc::Internal, "canonical path changed length");
        fam.verts[i] = std::move(vs);
        fam.edges[i] = std::move(es);
        fam.d[i] = goal[i];
        fam.prefix[i].assign(fam.verts[i].size(), 0.0);
        for (size_t j = 0; j + 1 < fam.verts[i].size(); ++j)
            fam.prefix[i][j + 1] = fam.prefix[i][j] + D.edges[fam.edges[i][j]].w;
    }
    // U is the union of the canonical paths
    fam.in_u_vertex.assign(n, 0);
    fam.in_u_edge.assign(m, 0);
    for (int i = 0; i < k; ++i) {
        for (int v : fam.verts[i]) fam.in_u_vertex[v] = 1;
        for (int e : fam.edges[i]) fam.in_u_edge[e] = 1;
    }

    // ---- interval labels ----
    fam.v_on_path.assign(n, 0);
    fam.e_on_path.assign(m, 0);
    for (int i = 0; i < k; ++i) {
        for (int v : fam.verts[i]) fam.v_on_path[v] = 1;
        for (int e : fam.edges[i]) fam.e_on_path[e] = 1;
    }
    std::vector<int> v_east(n, 0), v_west(n, 0), e_east(m, 0), e_west(m, 0);
    for (int i = 0; i < k; ++i) {
        SplitResult sr = split_by_path(sd, fam.verts[i], fam.edges[i]);
        for (int v : sr.east_v) v_east[v]++;
        for (int v : sr.west_v) v_west[v]++;
        for (int e : sr.east_e) e_east[e]++;
        for (int e : sr.west_e) e_west[e]++;
    }
    fam.v_lo.assign(n, 0);
    fam.v_hi.assign(n, 0);
    fam.e_lo.assign(m, 0);
    fam.e_hi.assign(m, 0);
    for (int v = 0; v < n; ++v) {
        fam.v_lo[v] = v_east[v];
        fam.v_hi[v] = k - 1 - v_west[v];
    }
    for (int e = 0; e < m; ++e) {
        fam.e_lo[e] = e_east[e];
        fam.e_hi[e] = k - 1 - e_west[e];
    }
    return fam;
}

} // namespace planarflow
