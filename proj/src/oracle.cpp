#include "planarflow/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "planarflow/errors.hpp"
#include "planarflow/plane_graph.hpp"

namespace planarflow {

UndirectedNetwork to_network(const PlaneGraph& g) {
    UndirectedNetwork net;
    net.n = g.num_vertices();
    net.s = g.s;
    net.t = g.t;
    net.edges.reserve(g.edges.size());
    for (const auto& e : g.edges) net.edges.push_back({e.u, e.v, e.cap});
    return net;
}

namespace {

// Edmonds-Karp on an arc list with residual pairing arc^1.
struct FlowGraph {
    struct Arc {
        int to;
        double cap;
    };
    std::vector<Arc> arcs;             // arc 2i+1 is the reverse of arc 2i
    std::vector<std::vector<int>> adj; // vertex -> arc ids

    explicit FlowGraph(int n) : adj(n) {}

    void add_undirected(int u, int v, double c) {
        adj[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, c});
        adj[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, c});
    }

    double max_flow(int s, int t) {
        double total = 0.0;
        const double INF = std::numeric_limits<double>::infinity();
        std::vector<int> pre_arc(adj.size());
        for (;;) {
            std::fill(pre_arc.begin(), pre_arc.end(), -1);
            pre_arc[s] = -2;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && pre_arc[t] == -1) {
                int v = q.front();
                q.pop();
                for (int a : adj[v]) {
                    if (arcs[a].cap <= 0.0) continue;
                    int w = arcs[a].to;
                    if (pre_arc[w] != -1) continue;
                    pre_arc[w] = a;
                    q.push(w);
                }
            }
            if (pre_arc[t] == -1) break;
            double push = INF;
            for (int v = t; v != s;) {
                int a = pre_arc[v];
                push = std::min(push, arcs[a].cap);
                v = arcs[a ^ 1].to;
            }
            for (int v = t; v != s;) {
                int a = pre_arc[v];
                arcs[a].cap -= push;
                arcs[a ^ 1].cap += push;
                v = arcs[a ^ 1].to;
            }
            total += push;
        }
        return total;
    }
};

double max_flow_skipping(const UndirectedNetwork& net, int skip_edge, int skip_vertex) {
    FlowGraph fg(net.n);
    for (size_t i = 0; i < net.edges.size(); ++i) {
        if (static_cast<int>(i) == skip_edge) continue;
        const auto& e = net.edges[i];
        if (e.u == skip_vertex || e.v == skip_vertex) continue;
        fg.add_undirected(e.u, e.v, e.cap);
    }
    return fg.max_flow(net.s, net.t);
}

} // namespace

double generic_max_flow(const UndirectedNetwork& net) {
    return max_flow_skipping(net, -1, -1);
}

double brute_edge_vitality(const UndirectedNetwork& net, int edge) {
    require(edge >= 0 && edge < static_cast<int>(net.edges.size()), Errc::BadParams,
            "no such edge");
    return generic_max_flow(net) - max_flow_skipping(net, edge, -1);
}

double brute_vertex_vitality(const UndirectedNetwork& net, int v) {
    require(v != net.s && v != net.t, Errc::TerminalDeletion, "cannot delete a terminal");
    require(v >= 0 && v < net.n, Errc::BadParams, "no such vertex");
    return generic_max_flow(net) - max_flow_skipping(net, -1, v);
}

double enumerate_min_cut(const UndirectedNetwork& net) {
    int n = net.n;
    std::vector<int> rest; // vertices other than s, t
    for (int v = 0; v < n; ++v)
        if (v != net.s && v != net.t) rest.push_back(v);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (1ull << rest.size()); ++mask) {
        std::vector<char> in_s(n, 0);
        in_s[net.s] = 1;
        for (size_t i = 0; i < rest.size(); ++i)
            if (mask & (1ull << i)) in_s[rest[i]] = 1;
        double cut = 0.0;
        for (const auto& e : net.edges)
            if (in_s[e.u] != in_s[e.v]) cut += e.cap;
        best = std::min(best, cut);
    }
    return best;
}

} // namespace planarflow
