#pragma once

#include <vector>

#include "planarflow/path_family.hpp"
#include "planarflow/sliced_dual.hpp"

namespace planarflow {

struct VitalityValue {
    int element = -1;       // primal edge id or vertex id
    bool is_vertex = false;
    double value = 0.0;
    double capacity = 0.0;  // c(e), or c(v) = sum of incident capacities
    bool exact = true;
    double delta = 0.0;     // additive slack when approximate
};

// MF = min_i d_i
double max_flow_value(const PathFamily& fam);

// d_i(S) = min{ d_i, dist_D(x_i, S) + dist_D(y_i, S) }; d_i for empty S.
double d_i_of_set(const SlicedDual& sd, const PathFamily& fam, int i,
                  const std::vector<int>& S);

// vit(e) = MF - MF_e, with MF_e = min_i d_i(e^D) (both copies when e* in pi).
VitalityValue edge_vitality_exact(const SlicedDual& sd, const PathFamily& fam, int primal_edge);

// vit(v) = MF - MF_v via the five-term minimum over f^D_v, q^x_f, q^y_f.
// Throws TerminalQuery for v in {s, t}.
VitalityValue vertex_vitality_exact(const SlicedDual& sd, const PathFamily& fam,
                                    const PlaneGraph& g, int v);

std::vector<VitalityValue> batch_vertex_vitality(const SlicedDual& sd, const PathFamily& fam,
                                                 const PlaneGraph& g,
                                                 const std::vector<int>& vertices);

} // namespace planarflow
