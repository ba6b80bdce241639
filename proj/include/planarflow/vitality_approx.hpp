#pragma once

#include <vector>

#include "planarflow/regions.hpp"
#include "planarflow/vitality_exact.hpp"

namespace planarflow {

// Capacities above the max flow never matter: clamp them to MF.
// Changes neither MF nor any vitality value.
PlaneGraph clamp_capacities(const PlaneGraph& g, double mf);

// Bucket r holds the path indices i with d_i in [MF + delta r, MF + delta (r+1)).
struct Buckets {
    double delta = 0.0;
    double mf = 0.0;
    std::vector<std::vector<int>> lists;

    bool empty_bucket(int r) const {
        return r >= static_cast<int>(lists.size()) || lists[r].empty();
    }
};
Buckets build_buckets(const PathFamily& fam, double delta);

// Lemma-style per-bucket labels: for every D edge (resp. face record) a value
// within [min_{i in L_r} d_i(S), min + delta). Bucket r must be nonempty.
std::vector<double> alpha_edges(const SlicedDual& sd, const PathFamily& fam,
                                const Buckets& buckets, int r);
std::vector<double> alpha_faces(const SlicedDual& sd, const PathFamily& fam,
                                const Buckets& buckets, int r);

enum class Side { X, Y };

// Exact dist_D(f, q^side_f) per face record; +inf where the q set is empty.
std::vector<double> face_boundary_distance(const SlicedDual& sd, const PathFamily& fam,
                                           Side side);

// Lemma-style labels for min_{i in L_r} d_i(q^side_f): valid (within the
// bucket contract) whenever the computed value stays below dist(f, q^side_f);
// other faces are marked inapplicable for this bucket.
struct BetaLabels {
    std::vector<double> value;
    std::vector<char> applicable;
};
BetaLabels beta_faces(const SlicedDual& sd, const PathFamily& fam, const Buckets& buckets,
                      int r, Side side, const std::vector<double>& boundary_dist,
                      bool naive_schedule = false);

struct ReportRow {
    bool is_vertex = false;
    int id = -1;
    int u = -1, v = -1;      // edge endpoints
    double capacity = 0.0;
    double value = 0.0;
    bool exact = true;
    bool beta_na = false;    // q^y estimate inapplicable in every bucket
    bool gamma_na = false;   // q^x estimate likewise
};

struct VitalityReport {
    double mf = 0.0;
    int n = 0, m = 0;
    bool exact_mode = true;
    double c = -1.0, delta = -1.0;
    bool clamped = false;
    std::vector<ReportRow> rows;
};

// vit^delta(e) in (vit(e) - delta, vit(e)] for every edge with c(e) <= c.
VitalityReport approx_edge_vitality(const SlicedDual& sd, const PathFamily& fam,
                                    const PlaneGraph& g, double c, double delta);

// vit^delta(v) in (vit(v) - delta, vit(v)] for every vertex with c(v) <= c.
VitalityReport approx_vertex_vitality(const SlicedDual& sd, const PathFamily& fam,
                                      const PlaneGraph& g, double c, double delta);

} // namespace planarflow
