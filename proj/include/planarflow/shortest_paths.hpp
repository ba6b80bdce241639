#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "planarflow/embedded_graph.hpp"

namespace planarflow {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Distance labels plus parent forest; unreachable vertices stay at +inf.
struct DistForest {
    std::vector<double> dist;
    std::vector<int> par_edge; // -1 at sources / unreachable
};

// Multi-source Dijkstra over an EmbeddedGraph view.
//
// sources: (vertex, offset) pairs; offsets let a vertex set act as a single
// contracted source (all offsets 0) or encode apex-style queries.
// vertex_mask / edge_mask: when given, restrict the traversal (1 = usable).
// prefer_edge: optional tie-break; on equal distance a preferred parent edge
// wins over a non-preferred one, then the smaller edge id.
//
// Throws NegativeWeight if a usable edge has negative weight.
DistForest sssp(const EmbeddedGraph& g,
                const std::vector<std::pair<int, double>>& sources,
                const std::vector<char>* vertex_mask = nullptr,
                const std::vector<char>* edge_mask = nullptr,
                const std::vector<char>* prefer_edge = nullptr);

// Path back to the nearest source; returns vertex ids source..v.
std::vector<int> extract_path(const EmbeddedGraph& g, const DistForest& f, int v);

} // namespace planarflow
