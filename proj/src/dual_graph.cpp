#include "planarflow/dual_graph.hpp"

#include <algorithm>
#include <cassert>

#include "planarflow/errors.hpp"

namespace planarflow {

std::vector<int> DualGraph::fstar_vertices(int v) const {
    std::vector<int> out;
    for (auto [F, j] : fstar_corners[v]) {
        (void)j;
        out.push_back(F);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Dual end ids coincide with primal end ids: the end of e* at face F is the
// primal dart of e whose face is F, and the rotation at F is that face's walk
// order. Dual faces then come out one per primal vertex, which build_dual
// verifies via the corner rule (the pivot vertex of consecutive walk darts).
DualGraph build_dual(const PlaneGraph& g) {
    DualGraph d;
    const EmbeddedGraph& pe = g.emb;

    d.emb.edges.resize(pe.num_edges());
    for (int e = 0; e < pe.num_edges(); ++e) {
        d.emb.edges[e].u = pe.face_of_end[2 * e];
        d.emb.edges[e].v = pe.face_of_end[2 * e + 1];
        d.emb.edges[e].w = g.edges[e].cap;
    }
    d.emb.rot = pe.face_ends;
    d.emb.finalize();

    require(d.emb.euler_ok(), Errc::Internal, "dual embedding failed the Euler check");

    const int n = g.num_vertices();
    d.dual_face_to_primal_vertex.assign(d.emb.num_faces(), -1);
    d.primal_vertex_to_dual_face.assign(n, -1);
    d.fstar_corners.assign(n, {});

    require(d.emb.num_faces() == n, Errc::Internal,
            "dual face count must equal primal vertex count");

    for (int F = 0; F < d.emb.num_vertices(); ++F) {
        int deg = d.emb.degree(F);
        for (int j = 0; j < deg; ++j) {
            int dj = d.emb.rot[F][j]; // primal dart whose face is F
            int v = pe.dart_head(dj); // pivot vertex of the corner (j, j+1)
            int df = d.emb.corner_face(F, j);
            if (d.dual_face_to_primal_vertex[df] == -1) {
                d.dual_face_to_primal_vertex[df] = v;
                require(d.primal_vertex_to_dual_face[v] == -1, Errc::Internal,
                        "two dual faces map to one primal vertex");
                d.primal_vertex_to_dual_face[v] = df;
            } else {
                require(d.dual_face_to_primal_vertex[df] == v, Errc::Internal,
                        "dual face touches corners of two primal vertices");
            }
        }
    }

    // f*_v corner walks, in dual-face walk order
    for (int df = 0; df < d.emb.num_faces(); ++df) {
        int v = d.dual_face_to_primal_vertex[df];
        for (int dual_end : d.emb.face_ends[df]) {
            // this dual dart leaves vertex F at rotation position p; the walk
            // pivots through the corner (p-1, p) at F before leaving
            int F = d.emb.end_vertex(dual_end);
            int p = d.emb.end_pos[dual_end];
            int gap = (p + d.emb.degree(F) - 1) % d.emb.degree(F);
            assert(d.emb.corner_face(F, gap) == df);
            d.fstar_corners[v].push_back({F, gap});
        }
    }
    return d;
}

} // namespace planarflow
