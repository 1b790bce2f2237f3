#include "zdg/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace zdg {

namespace {

/// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        const Bitset& row = g.row(u);
        for (int v = row.next_set(0); v >= 0; v = row.next_set(v + 1))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

}  // namespace

std::vector<std::vector<int>> components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            const Bitset& row = g.row(u);
            for (int v = row.next_set(0); v >= 0; v = row.next_set(v + 1))
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<ExtNat> diameter(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    long long best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) return ExtNat::inf();
            best = std::max<long long>(best, dist[v]);
        }
    }
    return ExtNat(best);
}

ExtNat girth(const SimpleGraph& g) {
    // Per-source BFS; a non-tree edge between vertices at depths d(u), d(v)
    // closes a cycle through the source of length d(u)+d(v)+1. Taking the
    // minimum over all sources is exact for unweighted graphs.
    const int n = g.vertex_count();
    long long best = -1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            const Bitset& row = g.row(u);
            for (int v = row.next_set(0); v >= 0; v = row.next_set(v + 1)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u] && u < v) {
                    long long len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best < 0 ? ExtNat::inf() : ExtNat(best);
}

Bitset neighborhood(const SimpleGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw UnknownVertexError("neighborhood: vertex " + std::to_string(v) +
                                 " not in graph of order " + std::to_string(g.vertex_count()));
    return g.row(v);
}

ShapeReport shape_tests(const SimpleGraph& g) {
    const int n = g.vertex_count();
    ShapeReport r;
    if (n == 0) return r;

    r.is_complete = true;
    for (int v = 0; v < n && r.is_complete; ++v) r.is_complete = g.degree(v) == n - 1;

    if (n >= 2 && g.edge_count() == n - 1) {
        int center = -1;
        bool leaves_ok = true;
        for (int v = 0; v < n; ++v) {
            int d = g.degree(v);
            if (d == n - 1 && center < 0)
                center = v;
            else if (d != 1)
                leaves_ok = false;
        }
        // K2 counts as a star with either endpoint as center.
        if (n == 2 && g.has_edge(0, 1)) {
            r.is_star = true;
            r.star_center = 0;
        } else if (center >= 0 && leaves_ok) {
            r.is_star = true;
            r.star_center = center;
        }
    }

    // Complete bipartite: a 2-coloring must exist and every cross pair must be
    // an edge. An edgeless graph is K_{n,0}.
    if (g.edge_count() == 0) {
        r.is_complete_bipartite = true;
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        r.bipartition = {std::move(all), {}};
    } else {
        std::vector<int> color(n, -1);
        bool bipartite = true;
        for (int s = 0; s < n && bipartite; ++s) {
            if (color[s] >= 0) continue;
            color[s] = 0;
            std::deque<int> queue{s};
            while (!queue.empty() && bipartite) {
                int u = queue.front();
                queue.pop_front();
                const Bitset& row = g.row(u);
                for (int v = row.next_set(0); v >= 0; v = row.next_set(v + 1)) {
                    if (color[v] < 0) {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if (color[v] == color[u]) {
                        bipartite = false;
                        break;
                    }
                }
            }
        }
        if (bipartite) {
            std::vector<int> a, b;
            for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
            bool complete = true;
            for (int u : a)
                for (int v : b)
                    if (!g.has_edge(u, v)) { complete = false; break; }
            if (complete) {
                r.is_complete_bipartite = true;
                r.bipartition = {std::move(a), std::move(b)};
            }
        }
    }
    return r;
}

bool isomorphic_small(const SimpleGraph& a, const SimpleGraph& b, int cap) {
    const int n = a.vertex_count();
    if (n > cap || b.vertex_count() > cap)
        throw CapExceededError("isomorphic_small: graph exceeds " + std::to_string(cap) +
                               " vertices");
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // Map vertices of `a` in order; candidates must match degree and respect
    // adjacency with everything already mapped.
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    auto backtrack = [&](auto&& self, int u) -> bool {
        if (u == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[u] != db[w]) continue;
            bool ok = true;
            for (int prev = 0; prev < u && ok; ++prev)
                ok = a.has_edge(prev, u) == b.has_edge(image[prev], w);
            if (!ok) continue;
            image[u] = w;
            used[w] = true;
            if (self(self, u + 1)) return true;
            used[w] = false;
            image[u] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

InvariantReport compute_invariants(const SimpleGraph& g) {
    const int n = g.vertex_count();
    InvariantReport r;
    r.vertex_count = n;
    r.edge_count = g.edge_count();
    r.component_count = static_cast<int>(components(g).size());
    r.diameter = diameter(g);
    r.girth = girth(g);
    r.is_connected = r.component_count <= 1;

    ShapeReport shape = shape_tests(g);
    r.is_complete = shape.is_complete;
    r.is_star = shape.is_star;
    r.star_center = shape.star_center;

    for (int v = 0; v < n; ++v) {
        r.degree_sequence.push_back(g.degree(v));
        if (g.degree(v) == n - 1) r.universal_vertices.push_back(v);
    }
    std::sort(r.degree_sequence.begin(), r.degree_sequence.end());
    return r;
}

}  // namespace zdg
