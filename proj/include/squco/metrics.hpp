#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <vector>

#include "squco/graph.hpp"

namespace squco {

// BFS distances from source; unreachable vertices are infinite.
inline std::vector<Length> distances_from(const Graph& g, Vertex source) {
    const std::size_t n = g.order();
    std::vector<Length> dist(n, Length::infinite());
    std::vector<std::uint64_t> seen(g.stride(), 0), frontier(g.stride(), 0), next(g.stride(), 0);
    bits::set(seen, source);
    bits::set(frontier, source);
    dist[source] = Length(0);
    for (std::size_t d = 1; bits::any(frontier); ++d) {
        std::fill(next.begin(), next.end(), 0);
        bits::for_each(frontier, [&](std::size_t u) {
            auto r = g.row(u);
            for (std::size_t k = 0; k < next.size(); ++k) next[k] |= r[k] & ~seen[k];
        });
        bits::for_each(next, [&](std::size_t w) { dist[w] = Length(d); });
        for (std::size_t k = 0; k < next.size(); ++k) seen[k] |= next[k];
        frontier.swap(next);
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto d = distances_from(g, 0);
    return std::all_of(d.begin(), d.end(), [](const Length& l) { return l.is_finite(); });
}

struct DistanceProfile {
    std::vector<Length> eccentricities;
    Length radius;
    Length diameter;
    bool connected = true;
};

inline DistanceProfile distance_profile(const Graph& g) {
    const std::size_t n = g.order();
    DistanceProfile p;
    p.eccentricities.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        auto d = distances_from(g, v);
        p.eccentricities[v] = *std::max_element(d.begin(), d.end());
    }
    if (n == 0) return p;
    p.connected = p.eccentricities[0].is_finite();
    if (!p.connected) {
        p.radius = p.diameter = Length::infinite();
        return p;
    }
    p.radius = *std::min_element(p.eccentricities.begin(), p.eccentricities.end());
    p.diameter = *std::max_element(p.eccentricities.begin(), p.eccentricities.end());
    return p;
}

// Length of a shortest cycle; infinite for forests.
inline Length girth(const Graph& g) {
    const std::size_t n = g.order();
    std::size_t best = SIZE_MAX;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), SIZE_MAX);
        dist[root] = 0;
        parent[root] = n;
        std::size_t head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            Vertex u = queue[head++];
            // Cycles found from deeper layers cannot improve best.
            if (2 * dist[u] >= best) break;
            bits::for_each(g.row(u), [&](std::size_t w) {
                if (dist[w] == SIZE_MAX) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            });
        }
    }
    return best == SIZE_MAX ? Length::infinite() : Length(best);
}

// Cut vertices via iterative DFS low points, ascending.
inline std::vector<Vertex> articulation_points(const Graph& g) {
    const std::size_t n = g.order();
    const std::size_t unvisited = SIZE_MAX;
    std::vector<std::size_t> disc(n, unvisited), low(n, 0);
    std::vector<Vertex> parent(n, n);
    std::vector<bool> cut(n, false);
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<std::size_t> next_edge(n, 0);
    std::size_t time = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != unvisited) continue;
        std::size_t root_children = 0;
        std::vector<Vertex> stack{root};
        disc[root] = low[root] = time++;
        while (!stack.empty()) {
            Vertex u = stack.back();
            if (next_edge[u] < adj[u].size()) {
                Vertex w = adj[u][next_edge[u]++];
                if (disc[w] == unvisited) {
                    parent[w] = u;
                    disc[w] = low[w] = time++;
                    if (u == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (Vertex p = parent[u]; p != n) {
                    low[p] = std::min(low[p], low[u]);
                    if (p != root && low[u] >= disc[p]) cut[p] = true;
                }
            }
        }
        if (root_children > 1) cut[root] = true;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

enum class Shell { exact, at_least };

// Vertices at distance exactly i from v, or at distance >= i (unreachable
// vertices count as infinitely far) with Shell::at_least.
inline std::vector<Vertex> distance_shell(const Graph& g, Vertex v, std::size_t i,
                                          Shell mode = Shell::exact) {
    if (v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(g.order()));
    auto d = distances_from(g, v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        bool hit = mode == Shell::exact ? d[u] == i : d[u] >= Length(i);
        if (hit) out.push_back(u);
    }
    return out;
}

inline std::size_t max_degree(const Graph& g) {
    std::size_t m = 0;
    for (Vertex v = 0; v < g.order(); ++v) m = std::max(m, g.degree(v));
    return m;
}

inline std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    std::size_t m = SIZE_MAX;
    for (Vertex v = 0; v < g.order(); ++v) m = std::min(m, g.degree(v));
    return m;
}

}  // namespace squco
