#pragma once

#include <cstdint>
#include <vector>

namespace planarflow {

// Undirected multigraph with a rotation system. Self-loops are allowed here
// (the dual needs them); PlaneGraph rejects them at validation.
//
// An "end" is one of the two attachment points of an edge: end = 2*e + side,
// where side 0 sits at edges[e].u and side 1 at edges[e].v. Ends double as
// darts: end x at vertex a is the dart leaving a along edge_of(x).
struct EmbeddedGraph {
    struct Edge {
        int u = -1;
        int v = -1;
        double w = 0.0;
    };

    std::vector<Edge> edges;
    std::vector<std::vector<int>> rot; // per vertex: incident ends in cyclic order

    int num_vertices() const { return static_cast<int>(rot.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    static int edge_of(int end) { return end >> 1; }
    static int side_of(int end) { return end & 1; }
    static int opposite(int end) { return end ^ 1; }

    int end_vertex(int end) const {
        const Edge& e = edges[edge_of(end)];
        return side_of(end) == 0 ? e.u : e.v;
    }
    // dart semantics: head of the dart associated with `end`
    int dart_head(int end) const { return end_vertex(opposite(end)); }

    // ---- derived embedding data (built by finalize) ----
    std::vector<int> end_pos;     // end -> index within rot[end_vertex(end)]
    std::vector<int> face_of_end; // end(-as-dart) -> face id
    std::vector<std::vector<int>> face_ends; // per face: ends in walk order
    int num_faces() const { return static_cast<int>(face_ends.size()); }

    // Face walk successor of a dart: cross to the head, take the next end in
    // rotation after the arrival end.
    int next_in_face(int end) const {
        int arr = opposite(end);
        int b = end_vertex(arr);
        int p = end_pos[arr];
        return rot[b][(p + 1) % rot[b].size()];
    }

    // Face at the corner between rot[v][j] and rot[v][j+1 mod deg].
    int corner_face(int v, int j) const {
        return face_of_end[rot[v][(j + 1) % rot[v].size()]];
    }

    // Fills end_pos and enumerates faces (orbits of next_in_face, discovered
    // in increasing end id order).
    void finalize();

    // True iff the rotation system embeds the graph in the sphere
    // (V - E + F == 2; requires finalize and a connected graph).
    bool euler_ok() const {
        return num_vertices() - num_edges() + num_faces() == 2;
    }
};

} // namespace planarflow
