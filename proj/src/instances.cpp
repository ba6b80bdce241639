#include "planarflow/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "planarflow/errors.hpp"

namespace planarflow {

PlaneGraph make_diamond() {
    std::vector<std::pair<double, double>> pts = {{0, 0}, {1, 1}, {1, -1}, {2, 0}};
    std::vector<PlaneGraph::Edge> edges = {
        {0, 1, 3.0}, // sa
        {0, 2, 2.0}, // sb
        {1, 3, 2.0}, // at
        {2, 3, 3.0}, // bt
        {1, 2, 1.0}, // ab
    };
    return build_plane_graph_from_coords(pts, edges, 0, 3);
}

PlaneGraph make_grid(int m, int cap_min, int cap_max, std::uint64_t seed,
                     bool corner_terminals) {
    require(m >= 2, Errc::BadParams, "grid size must be at least 2");
    require(cap_min >= 1 && cap_max >= cap_min, Errc::BadParams, "bad capacity range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> cap(cap_min, cap_max);

    std::vector<std::pair<double, double>> pts(m * m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) pts[r * m + c] = {double(c), double(r)};

    std::vector<PlaneGraph::Edge> edges;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            if (c + 1 < m) edges.push_back({r * m + c, r * m + c + 1, double(cap(rng))});
            if (r + 1 < m) edges.push_back({r * m + c, (r + 1) * m + c, double(cap(rng))});
        }

    int s = 0, t = m * m - 1;
    if (!corner_terminals) {
        std::uniform_int_distribution<int> pick(0, m * m - 1);
        s = pick(rng);
        do t = pick(rng);
        while (t == s);
    }
    return build_plane_graph_from_coords(pts, edges, s, t);
}

namespace {

struct Tri {
    int a, b, c;
    bool alive = true;
};

// sign of the incircle determinant (d inside circumcircle of ccw abc)
long double incircle(const std::pair<double, double>& a, const std::pair<double, double>& b,
                     const std::pair<double, double>& c, const std::pair<double, double>& d) {
    long double ax = a.first - d.first, ay = a.second - d.second;
    long double bx = b.first - d.first, by = b.second - d.second;
    long double cx = c.first - d.first, cy = c.second - d.second;
    long double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    return ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
}

long double orient(const std::pair<double, double>& a, const std::pair<double, double>& b,
                   const std::pair<double, double>& c) {
    return (long double)(b.first - a.first) * (c.second - a.second) -
           (long double)(b.second - a.second) * (c.first - a.first);
}

} // namespace

PlaneGraph make_random_planar(int n, int cap_min, int cap_max, std::uint64_t seed,
                              bool extreme_terminals) {
    require(n >= 3, Errc::BadParams, "need at least 3 points");
    require(cap_min >= 1 && cap_max >= cap_min, Errc::BadParams, "bad capacity range");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    // points with a minimum spacing so the float incircle tests stay clean
    std::vector<std::pair<double, double>> pts;
    double min_gap = 0.2 / std::sqrt(double(n));
    int attempts = 0;
    while (static_cast<int>(pts.size()) < n && attempts < 200000) {
        ++attempts;
        std::pair<double, double> p = {uni(rng), uni(rng)};
        bool ok = true;
        for (auto& q : pts) {
            double dx = p.first - q.first, dy = p.second - q.second;
            if (dx * dx + dy * dy < min_gap * min_gap) {
                ok = false;
                break;
            }
        }
        if (ok) pts.push_back(p);
    }
    require(static_cast<int>(pts.size()) == n, Errc::BadParams,
            "could not place points with the required spacing");

    // Bowyer-Watson with a super-triangle
    std::vector<std::pair<double, double>> P = pts;
    P.push_back({-10.0, -10.0});
    P.push_back({20.0, -10.0});
    P.push_back({0.5, 25.0});
    std::vector<Tri> tris;
    tris.push_back({n, n + 1, n + 2});
    auto ccw = [&](Tri& t) {
        if (orient(P[t.a], P[t.b], P[t.c]) < 0) std::swap(t.b, t.c);
    };
    ccw(tris[0]);

    for (int p = 0; p < n; ++p) {
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> boundary;
        auto add_edge = [&](int u, int v) {
            auto [lo, hi] = std::minmax(u, v);
            if (seen.count({lo, hi})) {
                for (auto it = boundary.begin(); it != boundary.end(); ++it) {
                    auto [l2, h2] = std::minmax(it->first, it->second);
                    if (l2 == lo && h2 == hi) {
                        boundary.erase(it);
                        break;
                    }
                }
            } else {
                seen.insert({lo, hi});
                boundary.push_back({u, v});
            }
        };
        for (auto& t : tris) {
            if (!t.alive) continue;
            if (incircle(P[t.a], P[t.b], P[t.c], P[p]) > 0) {
                add_edge(t.a, t.b);
                add_edge(t.b, t.c);
                add_edge(t.c, t.a);
                t.alive = false;
            }
        }
        for (auto [u, v] : boundary) {
            Tri t{u, v, p};
            ccw(t);
            tris.push_back(t);
        }
    }

    std::set<std::pair<int, int>> edge_set;
    for (const Tri& t : tris) {
        if (!t.alive) continue;
        if (t.a >= n || t.b >= n || t.c >= n) continue;
        auto ins = [&](int u, int v) { edge_set.insert({std::min(u, v), std::max(u, v)}); };
        ins(t.a, t.b);
        ins(t.b, t.c);
        ins(t.c, t.a);
    }
    require(!edge_set.empty(), Errc::BadParams, "degenerate triangulation");

    std::uniform_int_distribution<int> cap(cap_min, cap_max);
    std::vector<PlaneGraph::Edge> edges;
    for (auto [u, v] : edge_set) edges.push_back({u, v, double(cap(rng))});

    int s = 0, t = 0;
    if (extreme_terminals) {
        for (int i = 1; i < n; ++i) {
            if (pts[i].first < pts[s].first) s = i;
            if (pts[i].first > pts[t].first) t = i;
        }
    } else {
        std::uniform_int_distribution<int> pick(0, n - 1);
        s = pick(rng);
        do t = pick(rng);
        while (t == s);
    }
    return build_plane_graph_from_coords(pts, edges, s, t);
}

PlaneGraph perturb_quarters(const PlaneGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> q(0, 3);
    std::vector<PlaneGraph::Edge> edges = g.edges;
    for (auto& e : edges) e.cap += 0.25 * q(rng);
    PlaneGraph out = build_plane_graph(g.num_vertices(), edges, g.rotation, g.s, g.t);
    out.coords = g.coords;
    return out;
}

} // namespace planarflow
