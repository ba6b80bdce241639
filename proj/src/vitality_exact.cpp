#include "planarflow/vitality_exact.hpp"

#include <algorithm>

#include "planarflow/errors.hpp"
#include "planarflow/shortest_paths.hpp"

namespace planarflow {

double max_flow_value(const PathFamily& fam) {
    double mf = kInf;
    for (double di : fam.d) mf = std::min(mf, di);
    return mf;
}

namespace {

// min_i { min(d_i, dist(S, x_i) + dist(S, y_i)) } from one multi-source run
double min_through_set(const SlicedDual& sd, const PathFamily& fam,
                       const std::vector<int>& S) {
    if (S.empty()) return kInf;
    std::vector<std::pair<int, double>> sources;
    sources.reserve(S.size());
    for (int v : S) sources.push_back({v, 0.0});
    DistForest f = sssp(sd.emb, sources);
    double best = kInf;
    for (int i = 0; i < sd.k; ++i)
        best = std::min(best, std::min(fam.d[i], f.dist[sd.x(i)] + f.dist[sd.y(i)]));
    return best;
}

} // namespace

double d_i_of_set(const SlicedDual& sd, const PathFamily& fam, int i,
                  const std::vector<int>& S) {
    if (S.empty()) return fam.d[i];
    std::vector<std::pair<int, double>> sources;
    for (int v : S) sources.push_back({v, 0.0});
    DistForest f = sssp(sd.emb, sources);
    return std::min(fam.d[i], f.dist[sd.x(i)] + f.dist[sd.y(i)]);
}

VitalityValue edge_vitality_exact(const SlicedDual& sd, const PathFamily& fam, int primal_edge) {
    double mf = max_flow_value(fam);
    auto [ex, ey] = sd.primal_to_d[primal_edge];
    double mfe;
    if (ey == -1) {
        const auto& e = sd.emb.edges[ex];
        mfe = min_through_set(sd, fam, {e.u, e.v});
    } else {
        // both copies; a route using both would cross pi twice and cannot win
        const auto& ax = sd.emb.edges[ex];
        const auto& ay = sd.emb.edges[ey];
        mfe = std::min(min_through_set(sd, fam, {ax.u, ax.v}),
                       min_through_set(sd, fam, {ay.u, ay.v}));
    }
    mfe = std::min(mfe, mf);
    VitalityValue out;
    out.element = primal_edge;
    out.is_vertex = false;
    out.value = mf - mfe;
    out.capacity = sd.emb.edges[ex].w;
    return out;
}

VitalityValue vertex_vitality_exact(const SlicedDual& sd, const PathFamily& fam,
                                    const PlaneGraph& g, int v) {
    require(v != g.s && v != g.t, Errc::TerminalQuery, "terminals cannot be removed");
    double mf = max_flow_value(fam);
    const auto& rec = sd.face_record(v);

    double mfv;
    if (rec.indices.empty()) {
        mfv = min_through_set(sd, fam, rec.vset);
    } else {
        std::vector<std::pair<int, double>> sources;
        for (int u : rec.vset) sources.push_back({u, 0.0});
        DistForest f = sssp(sd.emb, sources);
        double via_face = kInf, to_qx = kInf, to_qy = kInf;
        for (int i = 0; i < sd.k; ++i)
            via_face = std::min(via_face,
                                std::min(fam.d[i], f.dist[sd.x(i)] + f.dist[sd.y(i)]));
        for (int q : rec.qx) to_qx = std::min(to_qx, f.dist[q]);
        for (int q : rec.qy) to_qy = std::min(to_qy, f.dist[q]);
        mfv = std::min({via_face, min_through_set(sd, fam, rec.qx),
                        min_through_set(sd, fam, rec.qy), to_qx, to_qy});
    }
    mfv = std::min(mfv, mf);
    VitalityValue out;
    out.element = v;
    out.is_vertex = true;
    out.value = mf - mfv;
    out.capacity = rec.weight;
    return out;
}

std::vector<VitalityValue> batch_vertex_vitality(const SlicedDual& sd, const PathFamily& fam,
                                                 const PlaneGraph& g,
                                                 const std::vector<int>& vertices) {
    std::vector<VitalityValue> out;
    out.reserve(vertices.size());
    for (int v : vertices) out.push_back(vertex_vitality_exact(sd, fam, g, v));
    return out;
}

} // namespace planarflow
