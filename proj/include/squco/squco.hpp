#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "squco/graph.hpp"
#include "squco/iso.hpp"
#include "squco/metrics.hpp"

namespace squco {

enum class Verdict { pass, fail, skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "skipped";
    }
}

struct FilterVerdict {
    std::string name;
    Verdict verdict = Verdict::skipped;
};

struct SqucoReport {
    bool is_squco = false;
    std::optional<std::vector<Vertex>> witness;  // square(G) -> complement(G)
    std::vector<FilterVerdict> filters;
    std::size_t n = 0, m = 0;
    Length girth = Length::infinite();
    Length radius, diameter;

    Verdict filter(const std::string& name) const {
        for (const auto& f : filters)
            if (f.name == name) return f.verdict;
        throw std::out_of_range("no filter named " + name);
    }

    bool all_filters_pass() const {
        return std::all_of(filters.begin(), filters.end(), [](const auto& f) { return f.verdict == Verdict::pass; });
    }
};

// Filter names in report order.
inline const std::array<const char*, 6>& filter_names() {
    static const std::array<const char*, 6> names{"connected",   "no_cut_vertices", "radius_3",
                                                  "diam_3_or_4", "girth_admissible", "degree_conditions"};
    return names;
}

namespace detail {

inline bool is_c7(const Graph& g) {
    if (g.order() != 7 || g.size() != 7 || !is_connected(g)) return false;
    for (Vertex v = 0; v < 7; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool is_regular(const Graph& g) {
    if (g.order() == 0) return true;
    auto d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

// Evaluates the necessary conditions cheapest first; with stop_early the
// first failure leaves the rest skipped. Metrics land in report.
inline void evaluate_filters(const Graph& g, SqucoReport& report, bool stop_early) {
    report.filters.clear();
    for (auto name : filter_names()) report.filters.push_back({name, Verdict::skipped});
    auto set = [&](std::size_t i, bool ok) {
        report.filters[i].verdict = ok ? Verdict::pass : Verdict::fail;
        return ok || !stop_early;
    };

    report.girth = girth(g);
    auto profile = distance_profile(g);
    report.radius = profile.radius;
    report.diameter = profile.diameter;

    if (g.order() <= 1) {
        for (auto& f : report.filters) f.verdict = Verdict::pass;
        return;
    }
    const bool c7 = is_c7(g);
    if (!set(0, profile.connected)) return;
    const bool degree_ok = (max_degree(g) > 2 || c7) && (!is_regular(g) || profile.diameter == 3);
    if (!set(5, degree_ok)) return;
    const Length gi = report.girth;
    const bool girth_ok = gi == 3 || gi == 4 || gi == 5 || (gi == 7 && c7);
    if (!set(4, girth_ok)) return;
    if (!set(1, articulation_points(g).empty())) return;
    if (!set(2, profile.radius == 3)) return;
    set(3, profile.diameter == 3 || profile.diameter == 4);
}

}  // namespace detail

// Necessary conditions for a nontrivial squco graph; K1 is trivially admissible.
inline std::vector<FilterVerdict> necessary_conditions(const Graph& g) {
    SqucoReport r;
    detail::evaluate_filters(g, r, false);
    return r.filters;
}

struct SqucoOptions {
    bool use_filters = true;
};

// Decides square(g) ~ complement(g). With filters on, a failed necessary
// condition short-circuits the isomorphism test.
inline SqucoReport is_squco(const Graph& g, SqucoOptions opts = {}) {
    SqucoReport r;
    r.n = g.order();
    r.m = g.size();
    detail::evaluate_filters(g, r, opts.use_filters);
    if (opts.use_filters && g.order() > 1 && !r.all_filters_pass()) return r;
    auto iso = are_isomorphic(square(g), complement(g));
    r.is_squco = iso.isomorphic;
    r.witness = std::move(iso.mapping);
    if (r.is_squco && g.order() > 1 && !r.all_filters_pass())
        throw std::logic_error("squco graph failed a necessary condition: " + to_graph6(g));
    return r;
}

// Degree screen on single-word adjacency rows (n <= 64): the degree multiset
// of the square must equal that of the complement, and for n >= 2 every
// vertex needs degree >= 2.
inline bool passes_degree_screen(std::span<const std::uint64_t> rows) {
    const std::size_t n = rows.size();
    if (n <= 1) return true;
    std::array<int, 65> hist{};
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t r = rows[v];
        const int d = std::popcount(r);
        if (d < 2) return false;
        std::uint64_t sq = r;
        while (r) {
            sq |= rows[static_cast<std::size_t>(std::countr_zero(r))];
            r &= r - 1;
        }
        sq &= ~(std::uint64_t{1} << v);
        ++hist[static_cast<std::size_t>(std::popcount(sq))];
        --hist[n - 1 - static_cast<std::size_t>(d)];
    }
    return std::all_of(hist.begin(), hist.end(), [](int c) { return c == 0; });
}

struct BipartiteSqucoVerdict {
    bool squco = false;
    bool self_complementary = false;
    bool diameter_3 = false;
};

// Evaluates both sides of: squco <=> bipartite self-complementary and of
// diameter 3. A disagreement is an engine bug and throws.
inline BipartiteSqucoVerdict bipartite_squco_equivalence(const BipartiteGraph& bg) {
    const Graph& g = bg.graph();
    if (g.order() <= 1 || !is_connected(g))
        throw std::invalid_argument("bipartite squco equivalence needs a connected graph with n > 1");
    BipartiteSqucoVerdict v;
    v.squco = is_squco(g).is_squco;
    v.self_complementary = are_isomorphic(g, bipartite_complement(bg).graph()).isomorphic;
    v.diameter_3 = distance_profile(g).diameter == 3;
    if (v.squco != (v.self_complementary && v.diameter_3))
        throw std::logic_error("bipartite squco characterisation violated for " + to_graph6(g));
    return v;
}

enum class Side { a, b, both };

// Every pair of vertices in the chosen part has a common neighbour.
inline bool common_neighbor_check(const BipartiteGraph& bg, Side side = Side::a) {
    auto check_part = [&](const std::vector<Vertex>& part) {
        const Graph& g = bg.graph();
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (bits::count_and(g.row(part[i]), g.row(part[j])) == 0) return false;
        return true;
    };
    switch (side) {
        case Side::a: return check_part(bg.part_a());
        case Side::b: return check_part(bg.part_b());
        default: return check_part(bg.part_a()) && check_part(bg.part_b());
    }
}

}  // namespace squco
