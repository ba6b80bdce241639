#pragma once

#include <vector>

namespace planarflow {

struct PlaneGraph;

// Ground-truth engine, deliberately independent of the planar pipeline:
// no embedding, generic augmenting-path max flow.
struct UndirectedNetwork {
    struct Edge {
        int u = -1;
        int v = -1;
        double cap = 0.0;
    };

    int n = 0;
    std::vector<Edge> edges;
    int s = -1;
    int t = -1;
};

UndirectedNetwork to_network(const PlaneGraph& g);

// Exact max flow by shortest (hop-count) augmenting paths. Each undirected
// edge is modeled as two opposite arcs of capacity c(e). Returns 0 when t is
// unreachable.
double generic_max_flow(const UndirectedNetwork& net);

// MF(net) - MF(net - edge).
double brute_edge_vitality(const UndirectedNetwork& net, int edge);

// MF(net) - MF(net - v), where deleting v removes all incident edges.
// Throws TerminalDeletion for v in {s, t}.
double brute_vertex_vitality(const UndirectedNetwork& net, int v);

// Exhaustive minimum st-cut for tiny instances (test oracle; n <= ~20).
double enumerate_min_cut(const UndirectedNetwork& net);

} // namespace planarflow
