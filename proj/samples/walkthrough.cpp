// A tour of the library: build the known squco graphs, inspect them, and run
// a small exhaustive search.

#include <iostream>

#include "squco.hpp"

using namespace squco;

static void describe(const char* name, const Graph& g) {
    const auto r = is_squco(g);
    std::cout << name << ": " << to_graph6(g) << "  n=" << r.n << " m=" << r.m << " girth=" << r.girth.str()
              << " diameter=" << r.diameter.str() << " planar=" << is_planar(g).planar
              << " squco=" << r.is_squco << '\n';
}

int main() {
    describe("C7", cycle_graph(7));
    describe("C7[3,1,1,1,1,1,1]", c7_blowup({3, 1, 1, 1, 1, 1, 1}));
    describe("Franklin", franklin());
    describe("C41(4,5,8,10)", circulant(41, {4, 5, 8, 10}));
    describe("C6", cycle_graph(6));

    // Any bipartite graph sits inside a bipartite squco graph.
    const auto p5 = *bipartition(path_graph(5));
    const auto sup = make_squco_supergraph(p5);
    describe("supergraph of P5", sup.h.graph());
    std::cout << "P5 embedded at:";
    for (Vertex v : sup.embedding) std::cout << ' ' << v;
    std::cout << '\n';

    // Isomorphism through the reduction instance.
    std::cout << "C6 ~ 2K3 via reduction: "
              << decide_iso_via_squco(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))) << '\n';

    SearchConfig cfg;
    cfg.n_max = 8;
    const auto res = search_squco(cfg);
    std::cout << "squco graphs on at most 8 vertices:";
    for (const auto& h : res.hits) std::cout << ' ' << h.graph6;
    std::cout << '\n';
}
