#pragma once

// Brute-force references for the test suites. Everything here is deliberately
// naive: exhaustive permutations, edge masks, vertex deletion and explicit
// subdivision search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "squco/graph.hpp"

namespace oracle {

using squco::Graph;
using squco::Vertex;

inline std::vector<std::pair<Vertex, Vertex>> pairs(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

inline Graph from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    const auto ps = pairs(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if ((mask >> i) & 1) g.add_edge(ps[i].first, ps[i].second);
    return g;
}

inline std::uint64_t to_mask(const Graph& g) {
    const auto ps = pairs(g.order());
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (g.adjacent(ps[i].first, ps[i].second)) mask |= std::uint64_t{1} << i;
    return mask;
}

// Visits every labelled graph on n vertices (n <= 8).
inline void for_each_labelled(std::size_t n, const std::function<void(std::uint64_t, const Graph&)>& f) {
    const std::size_t k = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) f(mask, from_mask(n, mask));
}

// Least edge mask over all n! relabellings: a complete invariant.
inline std::uint64_t brute_key(const Graph& g) {
    const std::size_t n = g.order();
    const auto ps = pairs(n);
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (g.adjacent(p[ps[i].first], p[ps[i].second])) mask |= std::uint64_t{1} << i;
        best = std::min(best, mask);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    const std::size_t n = g.order();
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == h.adjacent(p[u], p[v]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Isomorphism class keys of all graphs on n vertices via mask enumeration.
inline std::set<std::uint64_t> class_keys(std::size_t n) {
    std::set<std::uint64_t> keys;
    for_each_labelled(n, [&](std::uint64_t, const Graph& g) { keys.insert(brute_key(g)); });
    return keys;
}

inline std::optional<std::size_t> bfs_distance(const Graph& g, Vertex s, Vertex t) {
    std::vector<long> d(g.order(), -1);
    std::queue<Vertex> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        if (u == t) return static_cast<std::size_t>(d[u]);
        for (Vertex v : g.neighbors(u))
            if (d[v] < 0) d[v] = d[u] + 1, q.push(v);
    }
    return std::nullopt;
}

// Shortest cycle: for each edge, the shortest detour avoiding it plus one.
inline std::optional<std::size_t> naive_girth(const Graph& g) {
    std::optional<std::size_t> best;
    for (auto [u, v] : g.edges()) {
        Graph h = g;
        h.remove_edge(u, v);
        if (auto d = bfs_distance(h, u, v))
            if (!best || *d + 1 < *best) best = *d + 1;
    }
    return best;
}

inline std::size_t components(const Graph& g, std::optional<Vertex> skip = std::nullopt) {
    std::vector<bool> seen(g.order(), false);
    std::size_t count = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s] || s == skip) continue;
        ++count;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : g.neighbors(u))
                if (!seen[v] && v != skip) seen[v] = true, stack.push_back(v);
        }
    }
    return count;
}

// Vertices whose deletion increases the number of components.
inline std::vector<Vertex> naive_cut_vertices(const Graph& g) {
    std::vector<Vertex> out;
    const std::size_t base = components(g);
    for (Vertex v = 0; v < g.order(); ++v)
        if (components(g, v) > base) out.push_back(v);
    return out;
}

namespace detail {

// Routes each pattern edge along an internally disjoint path whose interior
// avoids branch vertices and earlier paths.
inline bool route(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& todo, std::size_t i,
                  std::vector<bool>& used) {
    if (i == todo.size()) return true;
    const auto [s, t] = todo[i];
    std::function<bool(Vertex)> dfs = [&](Vertex u) {
        for (Vertex v : g.neighbors(u)) {
            if (v == t) {
                if (route(g, todo, i + 1, used)) return true;
                continue;
            }
            if (used[v]) continue;
            used[v] = true;
            if (dfs(v)) return true;
            used[v] = false;
        }
        return false;
    };
    return dfs(s);
}

}  // namespace detail

// True when g contains a subdivision of K5 or K3,3: exhaustive choice of
// branch vertices, then backtracking over disjoint connecting paths.
inline bool has_kuratowski_subdivision(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 5) return false;
    std::vector<Vertex> verts(n);
    std::iota(verts.begin(), verts.end(), 0);

    auto try_pattern = [&](const std::vector<Vertex>& branch, const std::vector<std::pair<int, int>>& pattern) {
        std::vector<bool> used(n, false);
        for (Vertex b : branch) used[b] = true;
        std::vector<std::pair<Vertex, Vertex>> todo;
        for (auto [a, b] : pattern) todo.emplace_back(branch[a], branch[b]);
        for (auto [s, t] : todo)
            if (g.degree(s) < 3 || g.degree(t) < 3) return false;
        return detail::route(g, todo, 0, used);
    };

    std::vector<std::pair<int, int>> k5, k33;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) k5.emplace_back(a, b);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.emplace_back(a, b);

    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + 5, true);
    do {
        std::vector<Vertex> branch;
        for (Vertex v = 0; v < n; ++v)
            if (pick[v]) branch.push_back(v);
        if (try_pattern(branch, k5)) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));

    if (n < 6) return false;
    std::fill(pick.begin(), pick.end(), false);
    std::fill(pick.begin(), pick.begin() + 6, true);
    do {
        std::vector<Vertex> six;
        for (Vertex v = 0; v < n; ++v)
            if (pick[v]) six.push_back(v);
        // split into two triples; fixing six[0] on the left avoids mirror duplicates
        for (int mask = 0; mask < 64; ++mask) {
            if (std::popcount(static_cast<unsigned>(mask)) != 3 || !(mask & 1)) continue;
            std::vector<Vertex> branch;
            for (int i = 0; i < 6; ++i)
                if (mask >> i & 1) branch.push_back(six[i]);
            for (int i = 0; i < 6; ++i)
                if (!(mask >> i & 1)) branch.push_back(six[i]);
            if (try_pattern(branch, k33)) return true;
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

inline Graph relabel_randomly(const Graph& g, std::mt19937_64& rng, std::vector<Vertex>* perm_out = nullptr) {
    std::vector<Vertex> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    if (perm_out) *perm_out = p;
    return g.permuted(p);
}

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace oracle
