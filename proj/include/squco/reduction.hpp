#pragma once

// Graph isomorphism reduces to squco recognition: with J_i = G_i * K_2,
// G_1 ~ G_2 iff H(I(J_1), bipartite complement of I(J_2)) is squco.

#include <map>
#include <stdexcept>
#include <string>

#include "squco/construct.hpp"
#include "squco/graph.hpp"
#include "squco/iso.hpp"
#include "squco/metrics.hpp"
#include "squco/squco.hpp"

namespace squco {

struct ReductionInstance {
    HConstruction h;
    std::size_t n_prime = 0;  // |V(G_i * K_2)|
    std::size_t m_prime = 0;  // |E(G_i * K_2)|
    Graph g1, g2;
};

class ReductionError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

}  // namespace detail

// Checks part sizes 2n'+2 / 2m'+2 and the right-part degree histogram
// {n': m', n'+1: 2, n'+2: m'}. Returns an empty string when all hold.
inline std::string audit_reduction_instance(const ReductionInstance& inst) {
    const auto& bg = inst.h.h;
    const std::size_t np = inst.n_prime, mp = inst.m_prime;
    if (!(mp > np && np > 1)) return "m' > n' > 1 violated";
    const auto left = bg.part_a(), right = bg.part_b();
    if (left.size() != 2 * np + 2) return "left part has " + std::to_string(left.size()) + " vertices";
    if (right.size() != 2 * mp + 2) return "right part has " + std::to_string(right.size()) + " vertices";
    std::map<std::size_t, std::size_t> hist;
    for (Vertex v : right) ++hist[bg.graph().degree(v)];
    const std::map<std::size_t, std::size_t> expected{{np, mp}, {np + 1, 2}, {np + 2, mp}};
    if (hist != expected) return "right-part degree histogram mismatch";
    return {};
}

inline ReductionInstance build_reduction_instance(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order())
        throw ReductionError("vertex counts differ (" + std::to_string(g1.order()) + " vs " +
                             std::to_string(g2.order()) + "); non-isomorphism is immediate");
    if (g1.size() != g2.size())
        throw ReductionError("edge counts differ (" + std::to_string(g1.size()) + " vs " +
                             std::to_string(g2.size()) + "); non-isomorphism is immediate");
    const Graph j1 = join_k2(g1), j2 = join_k2(g2);
    ReductionInstance inst;
    inst.n_prime = j1.order();
    inst.m_prime = j1.size();
    inst.g1 = g1;
    inst.g2 = g2;
    if (!(inst.m_prime > inst.n_prime && inst.n_prime > 1))
        throw ReductionError("m' > n' > 1 fails (n' = " + std::to_string(inst.n_prime) +
                             ", m' = " + std::to_string(inst.m_prime) + "); inputs need n >= 2");
    const auto inc1 = incidence_graph(j1), inc2 = incidence_graph(j2);
    for (const auto* inc : {&inc1, &inc2})
        if (detail::has_isolated_vertex(inc->graph()) ||
            detail::has_isolated_vertex(bipartite_complement(*inc).graph()))
            throw ReductionError("incidence graph or its bipartite complement has an isolated vertex");
    inst.h = h_construction(inc1, bipartite_complement(inc2));
    if (auto why = audit_reduction_instance(inst); !why.empty())
        throw std::logic_error("reduction instance failed its audit: " + why);
    return inst;
}

// Decides G_1 ~ G_2 through the squco test on the reduction instance. Count
// mismatches answer false directly; graphs on fewer than two vertices with
// equal counts are isomorphic outright.
inline bool decide_iso_via_squco(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
    if (g1.order() < 2) return true;
    return is_squco(build_reduction_instance(g1, g2).h.h.graph()).is_squco;
}

}  // namespace squco
