#include "planarflow/sliced_dual.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

#include "planarflow/errors.hpp"

namespace planarflow {

const SlicedDual::FaceRecord& SlicedDual::face_record(int primal_v) const {
    require(primal_v != s_primal && primal_v != t_primal, Errc::TerminalQuery,
            "no face record for a terminal");
    int idx = record_of_vertex[primal_v];
    require(idx >= 0, Errc::Internal, "missing face record");
    return records[idx];
}

std::pair<int, int> dual_terminals(const DualGraph& d, const PlaneGraph& g) {
    std::vector<int> fs = d.fstar_vertices(g.s);
    std::vector<int> ft = d.fstar_vertices(g.t);
    int vs = fs[0];
    int vt = ft[0];
    if (vs == vt) {
        if (ft.size() > 1)
            vt = ft[1];
        else if (fs.size() > 1)
            vs = fs[1];
        // both singletons: forced coincidence, handled by the k = 1 cut
    }
    return {vs, vt};
}

std::vector<int> shortest_pi(const DualGraph& d, int vs, int vt, std::vector<int>* path_edges) {
    const EmbeddedGraph& e = d.emb;
    const int n = e.num_vertices();
    const double INF = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, INF);
    std::vector<int> par_v(n, -1), par_e(n, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[vs] = 0.0;
    heap.push({0.0, vs});
    while (!heap.empty()) {
        auto [dv, v] = heap.top();
        heap.pop();
        if (dv > dist[v]) continue;
        for (int end : e.rot[v]) {
            int ed = EmbeddedGraph::edge_of(end);
            int w = e.dart_head(end);
            double nd = dv + e.edges[ed].w;
            if (nd < dist[w]) {
                dist[w] = nd;
                par_v[w] = v;
                par_e[w] = ed;
                heap.push({nd, w});
            } else if (nd == dist[w] &&
                       std::make_pair(v, ed) < std::make_pair(par_v[w], par_e[w])) {
                par_v[w] = v;
                par_e[w] = ed;
            }
        }
    }
    require(dist[vt] < INF, Errc::Internal, "dual graph is disconnected");

    std::vector<int> verts, edges;
    for (int v = vt; v != vs; v = par_v[v]) {
        verts.push_back(v);
        edges.push_back(par_e[v]);
    }
    verts.push_back(vs);
    std::reverse(verts.begin(), verts.end());
    std::reverse(edges.begin(), edges.end());
    if (path_edges) *path_edges = edges;
    return verts;
}

namespace {

// records the fate of one pi vertex's rotation
struct Split {
    int m = 0;
    int pos_in = -1, pos_out = -1; // positions of the pi-edge ends (-1 at path ends)
    int gap_in = -1, gap_out = -1; // dummy-edge corners at w_0 / w_{k-1}
    std::vector<int> side;         // per position: 0 x, 1 y, 2 pi edge
    std::vector<int> xpos, ypos;   // positions per side, in new rotation order
    std::vector<int> nidx;         // per position: index within the new rotation
};

int end_at(const EmbeddedGraph& e, int edge, int v) {
    require(e.edges[edge].u != e.edges[edge].v, Errc::Internal,
            "pi must not contain self-loops");
    return 2 * edge + (e.edges[edge].u == v ? 0 : 1);
}

} // namespace

SlicedDual cut_along_pi(const DualGraph& d, const PlaneGraph& g,
                        const std::vector<int>& piv, const std::vector<int>& pie) {
    SlicedDual sd;
    const EmbeddedGraph& de = d.emb;
    sd.k = static_cast<int>(piv.size());
    sd.pi_vertices = piv;
    sd.pi_edges = pie;
    sd.s_primal = g.s;
    sd.t_primal = g.t;
    const int k = sd.k;
    require(k >= 1 && static_cast<int>(pie.size()) == k - 1, Errc::Internal, "malformed pi");

    sd.pi_prefix.assign(k, 0.0);
    for (int i = 0; i + 1 < k; ++i) sd.pi_prefix[i + 1] = sd.pi_prefix[i] + de.edges[pie[i]].w;

    std::vector<int> pi_index(de.num_vertices(), -1);
    for (int i = 0; i < k; ++i) {
        require(pi_index[piv[i]] == -1, Errc::Internal, "pi revisits a dual vertex");
        pi_index[piv[i]] = i;
    }
    std::vector<char> is_pi_edge(de.num_edges(), 0);
    for (int e : pie) is_pi_edge[e] = 1;

    // ---- D vertex ids ----
    const int n_inner = de.num_vertices() - k;
    sd.dual_to_inner.assign(de.num_vertices(), -1);
    sd.vertex_kind.assign(2 * k + n_inner, static_cast<int>(SlicedDual::kInner));
    sd.vertex_index.assign(2 * k + n_inner, -1);
    for (int i = 0; i < k; ++i) {
        sd.vertex_kind[sd.x(i)] = SlicedDual::kX;
        sd.vertex_index[sd.x(i)] = i;
        sd.vertex_kind[sd.y(i)] = SlicedDual::kY;
        sd.vertex_index[sd.y(i)] = i;
    }
    {
        int next = 2 * k;
        for (int F = 0; F < de.num_vertices(); ++F) {
            if (pi_index[F] >= 0) continue;
            sd.dual_to_inner[F] = next;
            sd.vertex_kind[next] = SlicedDual::kInner;
            sd.vertex_index[next] = F;
            ++next;
        }
    }

    // ---- per-pi-vertex splits ----
    auto alpha_corner = [&](int primal_v, int at_dual_vertex) {
        for (auto [F, gap] : d.fstar_corners[primal_v])
            if (F == at_dual_vertex) return gap;
        fail(Errc::Internal, "chosen dual terminal is not on the terminal's dual face");
    };

    std::vector<Split> split(k);
    for (int i = 0; i < k; ++i) {
        Split& sp = split[i];
        int w = piv[i];
        sp.m = de.degree(w);
        sp.side.assign(sp.m, -1);
        sp.nidx.assign(sp.m, -1);
        if (i > 0) sp.pos_in = de.end_pos[end_at(de, pie[i - 1], w)];
        if (i < k - 1) sp.pos_out = de.end_pos[end_at(de, pie[i], w)];
        if (i == 0) sp.gap_in = alpha_corner(g.s, w);
        if (i == k - 1) sp.gap_out = alpha_corner(g.t, w);

        int p0 = (sp.pos_out >= 0 ? sp.pos_out + 1 : sp.gap_out + 1) % sp.m;
        int state = 0; // x side
        // alpha corner directly after the outgoing pi end: empty x side
        if (sp.gap_in == sp.pos_out && sp.pos_out >= 0) state = 1;
        for (int j = 0; j < sp.m; ++j) {
            int p = (p0 + j) % sp.m;
            if (p == sp.pos_in) {
                sp.side[p] = 2;
                state = 1;
            } else if (p == sp.pos_out) {
                sp.side[p] = 2;
            } else {
                sp.side[p] = state;
                (state == 0 ? sp.xpos : sp.ypos).push_back(p);
            }
            if (p == sp.gap_in) state = 1;
        }
        int xbase = (i < k - 1) ? 1 : 0; // leading gx_i end
        int ybase = (i > 0) ? 1 : 0;     // leading gy_{i-1} end
        for (size_t j = 0; j < sp.xpos.size(); ++j) sp.nidx[sp.xpos[j]] = xbase + static_cast<int>(j);
        for (size_t j = 0; j < sp.ypos.size(); ++j) sp.nidx[sp.ypos[j]] = ybase + static_cast<int>(j);
    }

    // ---- D edges ----
    auto map_end_vertex = [&](int dual_end) {
        int F = de.end_vertex(dual_end);
        int i = pi_index[F];
        if (i < 0) return sd.dual_to_inner[F];
        const Split& sp = split[i];
        int p = de.end_pos[dual_end];
        require(sp.side[p] != 2, Errc::Internal, "plain edge mapped onto a pi position");
        return sp.side[p] == 0 ? sd.x(i) : sd.y(i);
    };

    sd.primal_to_d.assign(g.num_edges(), {-1, -1});
    std::vector<int> dedge_of_dual(de.num_edges(), -1);
    std::vector<int> gx_edge(std::max(0, k - 1), -1), gy_edge(std::max(0, k - 1), -1);
    auto push_edge = [&](int u, int v, double w, int primal, int copy) {
        int id = static_cast<int>(sd.emb.edges.size());
        sd.emb.edges.push_back({u, v, w});
        sd.edge_info.push_back({primal, copy});
        return id;
    };
    for (int i = 0; i + 1 < k; ++i)
        gx_edge[i] = push_edge(sd.x(i), sd.x(i + 1), de.edges[pie[i]].w, pie[i], SlicedDual::kCopyX);
    for (int i = 0; i + 1 < k; ++i)
        gy_edge[i] = push_edge(sd.y(i), sd.y(i + 1), de.edges[pie[i]].w, pie[i], SlicedDual::kCopyY);
    for (int e = 0; e < de.num_edges(); ++e) {
        if (is_pi_edge[e]) {
            // primal id of a dual edge is the dual edge id itself
            int i = -1;
            for (int j = 0; j + 1 < k; ++j)
                if (pie[j] == e) i = j;
            sd.primal_to_d[e] = {gx_edge[i], gy_edge[i]};
            continue;
        }
        int u = map_end_vertex(2 * e);
        int v = map_end_vertex(2 * e + 1);
        int id = push_edge(u, v, de.edges[e].w, e, SlicedDual::kPlain);
        dedge_of_dual[e] = id;
        sd.primal_to_d[e] = {id, -1};
    }

    // ---- D rotations ----
    sd.emb.rot.assign(2 * k + n_inner, {});
    auto d_end = [&](int dual_end) {
        return 2 * dedge_of_dual[EmbeddedGraph::edge_of(dual_end)] +
               EmbeddedGraph::side_of(dual_end);
    };
    for (int i = 0; i < k; ++i) {
        const Split& sp = split[i];
        auto& rx = sd.emb.rot[sd.x(i)];
        if (i < k - 1) rx.push_back(2 * gx_edge[i] + 0);
        for (int p : sp.xpos) rx.push_back(d_end(de.rot[piv[i]][p]));
        if (i > 0) rx.push_back(2 * gx_edge[i - 1] + 1);
        auto& ry = sd.emb.rot[sd.y(i)];
        if (i > 0) ry.push_back(2 * gy_edge[i - 1] + 1);
        for (int p : sp.ypos) ry.push_back(d_end(de.rot[piv[i]][p]));
        if (i < k - 1) ry.push_back(2 * gy_edge[i] + 0);
    }
    for (int F = 0; F < de.num_vertices(); ++F) {
        if (pi_index[F] >= 0) continue;
        auto& r = sd.emb.rot[sd.dual_to_inner[F]];
        for (int dual_end : de.rot[F]) r.push_back(d_end(dual_end));
    }
    sd.emb.finalize();

    require(sd.num_edges() == de.num_edges() + k - 1, Errc::Internal,
            "cut must add exactly k-1 duplicated edges");
    require(sd.emb.euler_ok(), Errc::Internal, "D is not a sphere embedding");

    // the opened face sits at the wrap-around corner of x_0
    require(sd.emb.degree(sd.x(0)) > 0, Errc::Internal, "x_1 has no incident edges");
    sd.outer_face = sd.emb.corner_face(sd.x(0), sd.emb.degree(sd.x(0)) - 1);

    // ---- face records ----
    // dual corner (w_i, gap) -> D corner (vertex, gap); never called on the
    // alpha/beta corners, which dissolve into the outer face.
    auto map_corner = [&](int F, int gap) -> std::pair<int, int> {
        int i = pi_index[F];
        if (i < 0) return {sd.dual_to_inner[F], gap};
        const Split& sp = split[i];
        require(gap != sp.gap_in && gap != sp.gap_out, Errc::Internal,
                "terminal corner queried for a face record");
        int p = gap, q = (gap + 1) % sp.m;
        int sp_p = sp.side[p], sp_q = sp.side[q];
        if (sp_p == 2) {
            // corner just after a pi end, on the side the traversal enters
            if (p == sp.pos_out) return {sd.x(i), 0};
            return {sd.y(i), 0}; // p == pos_in
        }
        if (sp_p == 0) return {sd.x(i), sp.nidx[p]};
        (void)sp_q;
        return {sd.y(i), sp.nidx[p]};
    };

    sd.record_of_vertex.assign(g.num_vertices(), -1);
    std::vector<int> face_claimed(sd.emb.num_faces(), -1);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v == g.s || v == g.t) continue;
        SlicedDual::FaceRecord rec;
        rec.primal_v = v;
        for (auto [F, gap] : d.fstar_corners[v]) {
            auto [dv, dgap] = map_corner(F, gap);
            int f = sd.emb.corner_face(dv, dgap);
            require(rec.d_face == -1 || rec.d_face == f, Errc::Internal,
                    "face record torn apart by the cut (vertex " + std::to_string(v) + ")");
            rec.d_face = f;
            rec.walk.push_back(dv);
        }
        require(rec.d_face != sd.outer_face, Errc::Internal,
                "face record collapsed into the outer face");
        require(face_claimed[rec.d_face] == -1, Errc::Internal,
                "two primal vertices claim one D face");
        face_claimed[rec.d_face] = v;

        rec.vset = rec.walk;
        std::sort(rec.vset.begin(), rec.vset.end());
        rec.vset.erase(std::unique(rec.vset.begin(), rec.vset.end()), rec.vset.end());
        std::vector<char> in_face(2 * k, 0);
        for (int dv : rec.vset)
            if (dv < 2 * k) in_face[dv] = 1;
        for (int i = 0; i < k; ++i) {
            bool has_x = in_face[sd.x(i)], has_y = in_face[sd.y(i)];
            if (!has_x && !has_y) continue;
            rec.indices.push_back(i);
            rec.meets_pi_x |= has_x;
            rec.meets_pi_y |= has_y;
            if (!has_x) rec.qx.push_back(sd.x(i));
            if (!has_y) rec.qy.push_back(sd.y(i));
        }
        for (int end : sd.emb.face_ends[rec.d_face])
            rec.weight += sd.emb.edges[EmbeddedGraph::edge_of(end)].w;
        sd.record_of_vertex[v] = static_cast<int>(sd.records.size());
        sd.records.push_back(std::move(rec));
    }
    require(static_cast<int>(sd.records.size()) == g.num_vertices() - 2, Errc::Internal,
            "expected one face record per non-terminal vertex");
    require(sd.emb.num_faces() == g.num_vertices() - 1, Errc::Internal,
            "D must have one face per non-terminal vertex plus the outer face");

    return sd;
}

SlicedDual decompose(const DualGraph& d, const PlaneGraph& g) {
    auto [vs, vt] = dual_terminals(d, g);
    std::vector<int> pie;
    std::vector<int> piv = shortest_pi(d, vs, vt, &pie);
    return cut_along_pi(d, g, piv, pie);
}

} // namespace planarflow
