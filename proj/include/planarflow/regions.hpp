#pragma once

#include <vector>

#include "planarflow/path_family.hpp"
#include "planarflow/sliced_dual.hpp"

namespace planarflow {

// One region Omega_{a,b} of D (between p_a and p_b, a < b, sentinels -1/k for
// the outer caps), compressed: the shared subpath p_a ∩ p_b is contracted to
// weight-preserving pseudo edges wherever its interior vertices carry no
// other region edges. Distances between region vertices are unchanged, and
// sources on the bounding paths see exact whole-graph distances.
struct Slice {
    int a = -1, b = -1;

    std::vector<int> verts; // kept vertices, local id -> global D vertex
    struct Arc {
        int to;     // local
        double w;
    };
    std::vector<std::vector<Arc>> adj;

    // dropped chain vertices reachable through their kept run borders
    struct Drop {
        int la = -1, lb = -1;  // local ids of the bordering kept vertices
        double offa = 0.0, offb = 0.0;
    };
    std::vector<int> drop_global;
    std::vector<Drop> drops;

    std::vector<int> member_edges; // global D edge ids present (uncompressed)

    // local-id lookup for this slice only (indexed by global vertex)
    std::vector<int> local_of;     // -1 outside; -2-d for dropped index d

    int local(int global_v) const { return local_of[global_v]; }

    // Dijkstra from global sources (must be kept members).
    std::vector<double> run(const std::vector<std::pair<int, double>>& sources) const;

    // distance to any member vertex, kept or dropped
    double lookup(const std::vector<double>& dist, int global_v) const;

    bool has_vertex(int global_v) const { return local_of[global_v] != -1; }
};

// Region for an arbitrary boundary pair; keeps listed vertices even when the
// compression would drop them.
Slice build_region(const SlicedDual& sd, const PathFamily& fam, int a, int b,
                   const std::vector<int>& keep);

// Slices between consecutive entries of an increasing index list (the spec's
// slicing of one bucket, caps excluded).
std::vector<Slice> build_slices(const SlicedDual& sd, const PathFamily& fam,
                                const std::vector<int>& indices);

} // namespace planarflow
