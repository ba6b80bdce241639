#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planarflow/embedded_graph.hpp"

namespace planarflow {

// One face of the embedding: closed boundary walk as (vertex, edge) steps.
// Every edge id appears exactly twice across all walks (once per side).
struct Face {
    int id = -1;
    std::vector<std::pair<int, int>> walk; // (vertex the walk leaves, edge it leaves along)
    bool is_outer = false;
};

// Capacitated plane graph: fixed combinatorial embedding (per-vertex
// counterclockwise rotation of incident edge ids) plus terminals s, t.
// Immutable after build_plane_graph.
struct PlaneGraph {
    struct Edge {
        int u = -1;
        int v = -1;
        double cap = 0.0;
    };

    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation; // per vertex: incident EDGE ids, CCW
    int s = -1;
    int t = -1;

    EmbeddedGraph emb;        // ends derived from rotation
    std::vector<Face> faces;  // enumerated at build time

    // optional straight-line drawing (kept when built from coordinates)
    std::optional<std::vector<std::pair<double, double>>> coords;

    int num_vertices() const { return static_cast<int>(rotation.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }

    int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
};

// Validates and assembles a PlaneGraph.
// Throws: TerminalMissing, NonPositiveCapacity, SelfLoopRejected,
// InvalidRotation, DisconnectedGraph, NotPlanarEmbedding.
PlaneGraph build_plane_graph(int num_vertices,
                             const std::vector<PlaneGraph::Edge>& edges,
                             const std::vector<std::vector<int>>& rotations,
                             int s, int t);

// Convenience: derive rotations by counterclockwise angle sort around each
// vertex of a straight-line drawing, then build.
PlaneGraph build_plane_graph_from_coords(const std::vector<std::pair<double, double>>& pts,
                                         const std::vector<PlaneGraph::Edge>& edges,
                                         int s, int t);

std::vector<Face> enumerate_faces(const PlaneGraph& g);

} // namespace planarflow
