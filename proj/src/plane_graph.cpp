#include "planarflow/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "planarflow/errors.hpp"

namespace planarflow {

namespace {

void check_connected(int n, const std::vector<PlaneGraph::Edge>& edges) {
    if (n == 0) fail(Errc::DisconnectedGraph, "empty graph");
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    if (cnt != n) fail(Errc::DisconnectedGraph, "graph has more than one component");
}

// The outer face is not determined by a rotation system alone; pick a
// deterministic convention (face 0), overridden by signed area when the
// builder has coordinates. Walks carry the face on their right, so bounded
// faces trace clockwise (negative area) and the outer one counterclockwise.
void mark_outer(PlaneGraph& g) {
    if (g.faces.empty()) return;
    int outer = 0;
    if (g.coords) {
        const auto& pts = *g.coords;
        double best = 0.0;
        for (const Face& f : g.faces) {
            double area2 = 0.0;
            for (size_t i = 0; i < f.walk.size(); ++i) {
                auto [a, x] = f.walk[i];
                int b = f.walk[(i + 1) % f.walk.size()].first;
                (void)x;
                area2 += pts[a].first * pts[b].second - pts[b].first * pts[a].second;
            }
            if (area2 > best) {
                best = area2;
                outer = f.id;
            }
        }
    }
    g.faces[outer].is_outer = true;
}

} // namespace

PlaneGraph build_plane_graph(int num_vertices,
                             const std::vector<PlaneGraph::Edge>& edges,
                             const std::vector<std::vector<int>>& rotations,
                             int s, int t) {
    PlaneGraph g;
    g.edges = edges;
    g.rotation = rotations;
    g.s = s;
    g.t = t;

    require(static_cast<int>(rotations.size()) == num_vertices, Errc::InvalidRotation,
            "need one rotation list per vertex");
    require(s >= 0 && s < num_vertices && t >= 0 && t < num_vertices, Errc::TerminalMissing,
            "terminal out of range");
    require(s != t, Errc::TerminalMissing, "s and t must differ");

    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        require(e.u >= 0 && e.u < num_vertices && e.v >= 0 && e.v < num_vertices,
                Errc::InvalidRotation, "edge " + std::to_string(i) + " endpoint out of range");
        require(e.cap > 0.0, Errc::NonPositiveCapacity,
                "edge " + std::to_string(i) + " has capacity " + std::to_string(e.cap));
        require(e.u != e.v, Errc::SelfLoopRejected,
                "edge " + std::to_string(i) + " is a self-loop");
    }

    check_connected(num_vertices, edges);

    // rotation lists must be permutations of the incident edges
    std::vector<std::vector<int>> incident(num_vertices);
    for (size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].u].push_back(static_cast<int>(i));
        incident[edges[i].v].push_back(static_cast<int>(i));
    }
    for (int v = 0; v < num_vertices; ++v) {
        std::vector<int> a = incident[v], b = rotations[v];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        require(a == b, Errc::InvalidRotation,
                "rotation at vertex " + std::to_string(v) +
                    " is not a permutation of its incident edges");
    }

    g.emb.edges.resize(edges.size());
    for (size_t i = 0; i < edges.size(); ++i)
        g.emb.edges[i] = {edges[i].u, edges[i].v, edges[i].cap};
    g.emb.rot.assign(num_vertices, {});
    for (int v = 0; v < num_vertices; ++v)
        for (int e : rotations[v])
            g.emb.rot[v].push_back(2 * e + (edges[e].u == v ? 0 : 1));
    g.emb.finalize();

    require(g.emb.euler_ok(), Errc::NotPlanarEmbedding,
            "V - E + F = " + std::to_string(num_vertices - static_cast<int>(edges.size()) +
                                            g.emb.num_faces()) +
                ", expected 2");

    g.faces.resize(g.emb.num_faces());
    for (int f = 0; f < g.emb.num_faces(); ++f) {
        g.faces[f].id = f;
        for (int end : g.emb.face_ends[f])
            g.faces[f].walk.emplace_back(g.emb.end_vertex(end), EmbeddedGraph::edge_of(end));
    }
    mark_outer(g);
    return g;
}

PlaneGraph build_plane_graph_from_coords(const std::vector<std::pair<double, double>>& pts,
                                         const std::vector<PlaneGraph::Edge>& edges,
                                         int s, int t) {
    int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> rotations(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        rotations[edges[i].u].push_back(static_cast<int>(i));
        rotations[edges[i].v].push_back(static_cast<int>(i));
    }
    for (int v = 0; v < n; ++v) {
        auto angle_of = [&](int e) {
            int w = edges[e].u == v ? edges[e].v : edges[e].u;
            return std::atan2(pts[w].second - pts[v].second, pts[w].first - pts[v].first);
        };
        std::sort(rotations[v].begin(), rotations[v].end(), [&](int a, int b) {
            double aa = angle_of(a), ab = angle_of(b);
            if (aa != ab) return aa < ab;
            return a < b; // parallel edges: id order
        });
    }
    PlaneGraph g = build_plane_graph(n, edges, rotations, s, t);
    g.coords = pts;
    // re-derive the outer flag now that coordinates are known
    for (auto& f : g.faces) f.is_outer = false;
    mark_outer(g);
    return g;
}

std::vector<Face> enumerate_faces(const PlaneGraph& g) { return g.faces; }

} // namespace planarflow
