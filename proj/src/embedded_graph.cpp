#include "planarflow/embedded_graph.hpp"

#include <cassert>

namespace planarflow {

void EmbeddedGraph::finalize() {
    const int m = num_edges();
    end_pos.assign(2 * m, -1);
    for (int v = 0; v < num_vertices(); ++v)
        for (int j = 0; j < degree(v); ++j)
            end_pos[rot[v][j]] = j;
    for (int x = 0; x < 2 * m; ++x)
        assert(end_pos[x] >= 0 && "rotation lists must cover every end");

    face_of_end.assign(2 * m, -1);
    face_ends.clear();
    for (int x0 = 0; x0 < 2 * m; ++x0) {
        if (face_of_end[x0] >= 0) continue;
        int f = static_cast<int>(face_ends.size());
        face_ends.emplace_back();
        int x = x0;
        do {
            face_of_end[x] = f;
            face_ends[f].push_back(x);
            x = next_in_face(x);
        } while (x != x0);
    }
}

} // namespace planarflow
