#pragma once

#include <array>
#include <utility>
#include <vector>

#include "planarflow/dual_graph.hpp"
#include "planarflow/embedded_graph.hpp"
#include "planarflow/plane_graph.hpp"

namespace planarflow {

// The dual cut along the fixed shortest path pi = (w_0 .. w_{k-1}).
//
// Every pi vertex w_i splits into x_i and y_i; each pi edge is duplicated
// into an x copy and a y copy of the same weight. Edges incident to w_i are
// reattached to x_i or y_i according to which side of pi their rotation
// position falls on; at w_0 and w_{k-1} the split position is the corner of
// f*_s (resp. f*_t), i.e. the dummy-edge direction.
//
// D vertex ids: x_i = i, y_i = k + i, then the remaining dual vertices in
// dual id order. Immutable after cut_along_pi.
struct SlicedDual {
    int k = 0;
    std::vector<int> pi_vertices; // dual ids w_0..w_{k-1}
    std::vector<int> pi_edges;    // dual edge ids, size k-1
    std::vector<double> pi_prefix; // prefix weights along pi, size k

    EmbeddedGraph emb; // D

    // per D edge: originating primal edge and which copy this is
    enum Copy : int { kPlain = 0, kCopyX = 1, kCopyY = 2 };
    struct EdgeInfo {
        int primal_edge = -1;
        int copy = kPlain;
    };
    std::vector<EdgeInfo> edge_info;
    std::vector<std::array<int, 2>> primal_to_d; // primal e -> {eD, -1} or {eDx, eDy}

    enum VertexKind : int { kX = 0, kY = 1, kInner = 2 };
    std::vector<int> vertex_kind;    // per D vertex
    std::vector<int> vertex_index;   // x_i/y_i -> i; inner -> dual vertex id
    std::vector<int> dual_to_inner;  // dual vertex -> D id (-1 for pi vertices)

    int outer_face = -1; // face of D opened up by the cut

    // face f^D_v of a non-terminal primal vertex v
    struct FaceRecord {
        int primal_v = -1;
        int d_face = -1;            // face id in emb
        std::vector<int> walk;      // D vertices in corner order (with repeats)
        std::vector<int> vset;      // deduplicated, ascending
        std::vector<int> indices;   // I_v: pi indices i touched by f*_v, ascending
        std::vector<int> qx, qy;    // q^x_f, q^y_f as D vertex ids, ascending
        bool meets_pi_x = false;    // f in F^x
        bool meets_pi_y = false;    // f in F^y
        double weight = 0.0;        // w(f) = c(v)
    };
    std::vector<FaceRecord> records;      // one per non-terminal primal vertex
    std::vector<int> record_of_vertex;    // primal v -> index into records, -1 for s,t

    int x(int i) const { return i; }
    int y(int i) const { return k + i; }
    int s_primal = -1, t_primal = -1;

    int num_vertices() const { return emb.num_vertices(); }
    int num_edges() const { return emb.num_edges(); }
    double weight(int d_edge) const { return emb.edges[d_edge].w; }

    // |pi[v_i, v_j]| in O(1)
    double pi_subpath_weight(int i, int j) const {
        return pi_prefix[j > i ? j : i] - pi_prefix[j > i ? i : j];
    }

    // Throws TerminalQuery for v in {s, t}.
    const FaceRecord& face_record(int primal_v) const;
};

// Picks (v*_s, v*_t): lowest-id dual vertex on f*_s / f*_t, bumping to the
// next candidate on collision. The pair may still coincide when both faces
// have a single dual vertex; the k = 1 cut handles that.
std::pair<int, int> dual_terminals(const DualGraph& d, const PlaneGraph& g);

// Deterministic Dijkstra (lexicographically smallest parent on ties).
// Returns the vertex sequence; fills edge ids of the path when asked.
std::vector<int> shortest_pi(const DualGraph& d, int vs, int vt,
                             std::vector<int>* path_edges = nullptr);

SlicedDual cut_along_pi(const DualGraph& d, const PlaneGraph& g,
                        const std::vector<int>& pi_vertices,
                        const std::vector<int>& pi_edges);

// Convenience: terminals + pi + cut.
SlicedDual decompose(const DualGraph& d, const PlaneGraph& g);

} // namespace planarflow
