#pragma once

#include <vector>

#include "planarflow/sliced_dual.hpp"

namespace planarflow {

// The family {p_i} of shortest x_i y_i paths in D: pairwise non-crossing and
// single-touch, with U = union(p_i) kept as a rooted forest. Paths are stored
// in their canonical form (the unique U-tree path between their terminals).
//
// Every vertex/edge of D carries an interval [lo, hi] over path indices:
// elements on paths span the indices of the paths containing them; elements
// strictly between p_g and p_{g+1} get lo = g+1, hi = g. An element belongs
// to the region Omega_{a,b} (between p_a and p_b, boundaries included) iff
// a <= hi and lo <= b; sentinels a = -1 / b = k select the outer caps.
struct PathFamily {
    int k = 0;
    std::vector<std::vector<int>> verts;    // p_i as D vertex sequence x_i..y_i
    std::vector<std::vector<int>> edges;    // D edge ids along p_i
    std::vector<std::vector<double>> prefix; // per path: prefix weights, size |verts|
    std::vector<double> d;                  // d_i

    // interval labels
    std::vector<int> v_lo, v_hi;
    std::vector<int> e_lo, e_hi;
    std::vector<char> v_on_path, e_on_path;

    // U forest
    std::vector<char> in_u_vertex, in_u_edge;
    std::vector<int> u_par, u_par_edge, u_depth, u_root;
    std::vector<double> u_wdepth;
    std::vector<std::vector<int>> u_up; // binary lifting over u_par

    bool in_region(int lo_idx, int lo, int hi, int hi_idx) const = delete;
    bool vertex_in(int v, int a, int b) const { return a <= v_hi[v] && v_lo[v] <= b; }
    bool edge_in(int e, int a, int b) const { return a <= e_hi[e] && e_lo[e] <= b; }

    int lca(int u, int v) const;
    int lift(int v, int steps) const;
    bool same_tree(int u, int v) const { return u_root[u] == u_root[v]; }

    // p_i ∩ p_j: empty or the tree path between `a` and `b` (a deeper end).
    struct Shared {
        bool empty = true;
        int a = -1, b = -1;
        double weight = 0.0;
    };
    Shared shared_subpath(int i, int j) const;
    // interior vertices of the shared path, endpoints excluded
    std::vector<int> tree_path_vertices(int a, int b) const;
};

PathFamily noncrossing_family(const SlicedDual& sd);

// Splits a (sub)graph of D along a path whose endpoints lie on the outer
// boundary. Returns the elements strictly on each side; path elements belong
// to both sides and are not listed. Masks, when given, restrict the arena.
struct SplitResult {
    std::vector<int> west_v, west_e, east_v, east_e;
};
SplitResult split_by_path(const SlicedDual& sd, const std::vector<int>& pverts,
                          const std::vector<int>& pedges,
                          const std::vector<char>* vmask = nullptr,
                          const std::vector<char>* emask = nullptr);

} // namespace planarflow
