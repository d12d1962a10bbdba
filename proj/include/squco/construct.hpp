#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "squco/graph.hpp"

namespace squco {

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

// i ~ j iff the cyclic distance between i and j lies in connections.
inline Graph circulant(std::size_t n, const std::set<std::size_t>& connections) {
    if (n == 0) throw std::invalid_argument("circulant needs at least one vertex");
    for (auto c : connections)
        if (c < 1 || c > n / 2)
            throw std::invalid_argument("connection " + std::to_string(c) + " outside 1.." + std::to_string(n / 2));
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (auto c : connections) {
            Vertex j = (i + c) % n;
            if (j != i) g.add_edge(i, j);
        }
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least three vertices");
    return circulant(n, {1});
}

inline BipartiteGraph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    std::vector<bool> in_b(a + b, false);
    std::fill(in_b.begin() + static_cast<std::ptrdiff_t>(a), in_b.end(), true);
    return BipartiteGraph(std::move(g), std::move(in_b));
}

// Disjoint union of the two graphs, second one shifted past the first.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

struct BlowupSpec {
    Graph base;
    std::vector<std::size_t> multiplicities;
};

// Vertex v_i becomes an independent block U_i of k_i clones; blocks are laid
// out consecutively in base-vertex order.
inline Graph blowup(const BlowupSpec& spec) {
    const std::size_t n = spec.base.order();
    if (spec.multiplicities.size() != n)
        throw std::invalid_argument("blowup needs one multiplicity per base vertex");
    std::vector<std::size_t> offset(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (spec.multiplicities[v] == 0) throw std::invalid_argument("blowup multiplicities must be positive");
        offset[v + 1] = offset[v] + spec.multiplicities[v];
    }
    Graph g(offset[n]);
    for (auto [u, v] : spec.base.edges())
        for (Vertex x = offset[u]; x < offset[u + 1]; ++x)
            for (Vertex y = offset[v]; y < offset[v + 1]; ++y) g.add_edge(x, y);
    return g;
}

inline Graph blowup(const Graph& base, std::vector<std::size_t> multiplicities) {
    return blowup(BlowupSpec{base, std::move(multiplicities)});
}

// C_7[k_1, ..., k_7].
inline Graph c7_blowup(std::vector<std::size_t> multiplicities) {
    return blowup(cycle_graph(7), std::move(multiplicities));
}

// Vertex-edge incidence graph: part A is V(g) in order, part B the edges of g
// in lexicographic (u < v) order at indices n, n+1, ...
inline BipartiteGraph incidence_graph(const Graph& g) {
    const std::size_t n = g.order();
    auto es = g.edges();
    Graph h(n + es.size());
    for (std::size_t k = 0; k < es.size(); ++k) {
        h.add_edge(es[k].first, n + k);
        h.add_edge(es[k].second, n + k);
    }
    std::vector<bool> in_b(n + es.size(), false);
    std::fill(in_b.begin() + static_cast<std::ptrdiff_t>(n), in_b.end(), true);
    return BipartiteGraph(std::move(h), std::move(in_b));
}

// G * K_2: two universal vertices appended at n and n+1.
inline Graph join_k2(const Graph& g) {
    const std::size_t n = g.order();
    Graph h(n + 2);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (Vertex v = 0; v < n; ++v) {
        h.add_edge(v, n);
        h.add_edge(v, n + 1);
    }
    h.add_edge(n, n + 1);
    return h;
}

// Appends c1, c2, d1, d2 (in that order) with edges c1d1, c2d2, d1-A, c2-B;
// C joins part A and D joins part B.
inline BipartiteGraph ext(const BipartiteGraph& bg) {
    const Graph& g = bg.graph();
    const std::size_t n = g.order();
    const Vertex c1 = n, c2 = n + 1, d1 = n + 2, d2 = n + 3;
    Graph h(n + 4);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(c1, d1);
    h.add_edge(c2, d2);
    for (Vertex v = 0; v < n; ++v) h.add_edge(v, bg.in_a(v) ? d1 : c2);
    std::vector<bool> in_b = bg.sides();
    in_b.insert(in_b.end(), {false, false, true, true});
    return BipartiteGraph(std::move(h), std::move(in_b));
}

// Block offsets inside H(G, G'): A, B, A', B', c1, c2, d1, d2 in this order.
struct HLayout {
    std::size_t a = 0, a_size = 0;
    std::size_t b = 0, b_size = 0;
    std::size_t a2 = 0, a2_size = 0;
    std::size_t b2 = 0, b2_size = 0;
    Vertex c1 = 0, c2 = 0, d1 = 0, d2 = 0;
};

struct HConstruction {
    BipartiteGraph h;
    HLayout layout;
    std::vector<Vertex> embed_first;   // V(G)  -> V(H)
    std::vector<Vertex> embed_second;  // V(G') -> V(H)
};

// E(H) = E(G) + E(G') + {c1d1, c2d2} + AD + A'B + B'C, with parts
// A+A'+C and B+B'+D.
inline HConstruction h_construction(const BipartiteGraph& g, const BipartiteGraph& g2) {
    const auto ga = g.part_a(), gb = g.part_b();
    const auto g2a = g2.part_a(), g2b = g2.part_b();
    HLayout L;
    L.a = 0;
    L.a_size = ga.size();
    L.b = L.a + L.a_size;
    L.b_size = gb.size();
    L.a2 = L.b + L.b_size;
    L.a2_size = g2a.size();
    L.b2 = L.a2 + L.a2_size;
    L.b2_size = g2b.size();
    L.c1 = L.b2 + L.b2_size;
    L.c2 = L.c1 + 1;
    L.d1 = L.c1 + 2;
    L.d2 = L.c1 + 3;
    const std::size_t n = L.d2 + 1;

    HConstruction out;
    out.embed_first.resize(g.graph().order());
    out.embed_second.resize(g2.graph().order());
    for (std::size_t i = 0; i < ga.size(); ++i) out.embed_first[ga[i]] = L.a + i;
    for (std::size_t i = 0; i < gb.size(); ++i) out.embed_first[gb[i]] = L.b + i;
    for (std::size_t i = 0; i < g2a.size(); ++i) out.embed_second[g2a[i]] = L.a2 + i;
    for (std::size_t i = 0; i < g2b.size(); ++i) out.embed_second[g2b[i]] = L.b2 + i;

    Graph h(n);
    for (auto [u, v] : g.graph().edges()) h.add_edge(out.embed_first[u], out.embed_first[v]);
    for (auto [u, v] : g2.graph().edges()) h.add_edge(out.embed_second[u], out.embed_second[v]);
    h.add_edge(L.c1, L.d1);
    h.add_edge(L.c2, L.d2);
    for (std::size_t i = 0; i < L.a_size; ++i) {
        h.add_edge(L.a + i, L.d1);
        h.add_edge(L.a + i, L.d2);
    }
    for (std::size_t i = 0; i < L.a2_size; ++i)
        for (std::size_t j = 0; j < L.b_size; ++j) h.add_edge(L.a2 + i, L.b + j);
    for (std::size_t j = 0; j < L.b2_size; ++j) {
        h.add_edge(L.b2 + j, L.c1);
        h.add_edge(L.b2 + j, L.c2);
    }

    std::vector<bool> in_b(n, false);
    for (std::size_t j = 0; j < L.b_size; ++j) in_b[L.b + j] = true;
    for (std::size_t j = 0; j < L.b2_size; ++j) in_b[L.b2 + j] = true;
    in_b[L.d1] = in_b[L.d2] = true;
    out.h = BipartiteGraph(std::move(h), std::move(in_b));
    out.layout = L;
    return out;
}

// Two disjoint edges with the canonical bipartition {0,2} / {1,3}.
inline BipartiteGraph two_k2() {
    return *bipartition(Graph::from_edges(4, {{0, 1}, {2, 3}}));
}

// The Franklin graph as H(2K2, 2K2).
inline Graph franklin() { return h_construction(two_k2(), two_k2()).h.graph(); }

struct SqucoSupergraph {
    BipartiteGraph h;
    HLayout layout;
    std::vector<Vertex> embedding;  // V(bg) -> V(H)
};

// H(Ext(G), bipartite complement of Ext(G)): a bipartite squco graph that
// contains bg as an induced subgraph at the embedding indices.
inline SqucoSupergraph make_squco_supergraph(const BipartiteGraph& bg) {
    auto e = ext(bg);
    auto e2 = bipartite_complement(e);
    auto hc = h_construction(e, e2);
    SqucoSupergraph out{std::move(hc.h), hc.layout, {}};
    out.embedding.assign(hc.embed_first.begin(),
                         hc.embed_first.begin() + static_cast<std::ptrdiff_t>(bg.graph().order()));
    return out;
}

}  // namespace squco
