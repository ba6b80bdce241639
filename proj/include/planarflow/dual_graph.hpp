#pragma once

#include <utility>
#include <vector>

#include "planarflow/embedded_graph.hpp"
#include "planarflow/plane_graph.hpp"

namespace planarflow {

// Planar dual with the embedding induced by the primal one.
//
// Dual vertex i = primal face i; dual edge e* keeps the primal edge id, with
// weight w(e*) = c(e). Ends of e* are identified with the primal darts of e:
// the end of e* at face F corresponds to the primal dart whose face is F.
// Parallel dual edges and self-loops (primal bridges) are normal here.
struct DualGraph {
    EmbeddedGraph emb; // vertices: primal faces; edge ids: primal edge ids

    // f*_v support: dual faces correspond one-to-one to primal vertices.
    std::vector<int> dual_face_to_primal_vertex; // dual face id -> v
    std::vector<int> primal_vertex_to_dual_face; // v -> dual face id

    // f*_v as a closed corner walk: (dual vertex F, corner gap j) pairs, where
    // gap j sits between rot[F][j] and rot[F][j+1].
    std::vector<std::vector<std::pair<int, int>>> fstar_corners; // per primal v

    int num_vertices() const { return emb.num_vertices(); }
    int num_edges() const { return emb.num_edges(); }

    double w(int dual_edge) const { return emb.edges[dual_edge].w; }
    double total_weight() const {
        double sum = 0.0;
        for (const auto& e : emb.edges) sum += e.w;
        return sum;
    }

    // dual vertices on the boundary of f*_v, deduplicated, ascending
    std::vector<int> fstar_vertices(int v) const;
};

DualGraph build_dual(const PlaneGraph& g);

} // namespace planarflow
