#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace squco {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

namespace bits {

inline constexpr std::size_t words_for(std::size_t n) noexcept { return (n + 63) / 64; }

inline bool test(std::span<const std::uint64_t> w, std::size_t i) noexcept {
    return (w[i >> 6] >> (i & 63)) & 1u;
}

inline void set(std::span<std::uint64_t> w, std::size_t i) noexcept {
    w[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void reset(std::span<std::uint64_t> w, std::size_t i) noexcept {
    w[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline std::size_t count(std::span<const std::uint64_t> w) noexcept {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

inline std::size_t count_and(std::span<const std::uint64_t> a,
                             std::span<const std::uint64_t> b) noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

inline bool any(std::span<const std::uint64_t> w) noexcept {
    for (auto x : w)
        if (x) return true;
    return false;
}

// Calls f(i) for every set bit i, ascending.
template <class F>
void for_each(std::span<const std::uint64_t> w, F&& f) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::uint64_t x = w[k];
        while (x) {
            f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
}

}  // namespace bits

// A nonnegative length that may be infinite (girth of a forest, distances
// across components). Infinity compares greater than every finite value.
class Length {
  public:
    constexpr Length() = default;
    constexpr explicit Length(std::size_t v) : value_(v), finite_(true) {}

    static constexpr Length infinite() {
        Length l;
        l.finite_ = false;
        return l;
    }

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr bool is_infinite() const noexcept { return !finite_; }

    std::size_t value() const {
        if (!finite_) throw std::logic_error("Length::value on infinite length");
        return value_;
    }

    std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

    friend constexpr bool operator==(const Length& a, const Length& b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Length& a, const Length& b) noexcept {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(const Length& a, std::size_t b) noexcept {
        return a.finite_ && a.value_ == b;
    }

  private:
    std::size_t value_ = 0;
    bool finite_ = true;
};

// Simple undirected graph on vertices 0..n-1, stored as n bitset rows.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), stride_(bits::words_for(n)), bits_(n * stride_, 0) {}

    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    // Rows packed with stride words_for(n); must be symmetric and loop-free.
    static Graph from_words(std::size_t n, std::span<const std::uint64_t> words) {
        Graph g(n);
        if (words.size() != g.bits_.size()) throw std::invalid_argument("row words do not match vertex count");
        std::copy(words.begin(), words.end(), g.bits_.begin());
        for (Vertex u = 0; u < n; ++u) {
            if (bits::test(g.row(u), u)) throw std::invalid_argument("loop at vertex " + std::to_string(u));
            bits::for_each(g.row(u), [&](std::size_t v) {
                if (v >= n || !bits::test(g.row(v), u)) throw std::invalid_argument("asymmetric adjacency rows");
            });
        }
        return g;
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t stride() const noexcept { return stride_; }

    std::size_t size() const noexcept {
        std::size_t twice = 0;
        for (auto x : bits_) twice += static_cast<std::size_t>(std::popcount(x));
        return twice / 2;
    }

    std::span<const std::uint64_t> row(Vertex v) const noexcept {
        return {bits_.data() + v * stride_, stride_};
    }

    const std::uint64_t* data() const noexcept { return bits_.data(); }

    bool adjacent(Vertex u, Vertex v) const {
        check(u);
        check(v);
        return bits::test(row(u), v);
    }

    void add_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        bits::set(mutable_row(u), v);
        bits::set(mutable_row(v), u);
    }

    void remove_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        bits::reset(mutable_row(u), v);
        bits::reset(mutable_row(v), u);
    }

    std::size_t degree(Vertex v) const noexcept { return bits::count(row(v)); }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(n_);
        for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        bits::for_each(row(v), [&](std::size_t u) { out.push_back(u); });
        return out;
    }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            bits::for_each(row(u), [&](std::size_t v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    // Relabels vertex v as perm[v].
    Graph permuted(std::span<const Vertex> perm) const {
        if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
        Graph h(n_);
        for (Vertex u = 0; u < n_; ++u)
            bits::for_each(row(u), [&](std::size_t v) { bits::set(h.mutable_row(perm[u]), perm[v]); });
        return h;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::span<std::uint64_t> mutable_row(Vertex v) noexcept {
        return {bits_.data() + v * stride_, stride_};
    }

    void check(Vertex v) const {
        if (v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n_));
    }

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

// A graph with an explicit two-sided vertex partition; every edge crosses.
class BipartiteGraph {
  public:
    BipartiteGraph() = default;

    // in_b[v] is true when v belongs to part B.
    BipartiteGraph(Graph g, std::vector<bool> in_b) : graph_(std::move(g)), in_b_(std::move(in_b)) {
        if (in_b_.size() != graph_.order())
            throw std::invalid_argument("partition size does not match vertex count");
        for (auto [u, v] : graph_.edges())
            if (in_b_[u] == in_b_[v])
                throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                            " lies inside one part");
    }

    const Graph& graph() const noexcept { return graph_; }
    bool in_a(Vertex v) const { return !in_b_.at(v); }
    bool in_b(Vertex v) const { return in_b_.at(v); }
    const std::vector<bool>& sides() const noexcept { return in_b_; }

    std::vector<Vertex> part_a() const { return part(false); }
    std::vector<Vertex> part_b() const { return part(true); }

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

  private:
    std::vector<Vertex> part(bool b) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < in_b_.size(); ++v)
            if (in_b_[v] == b) out.push_back(v);
        return out;
    }

    Graph graph_;
    std::vector<bool> in_b_;
};

inline Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    Graph h(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

// Vertices at distance 1 or 2 become adjacent.
inline Graph square(const Graph& g) {
    const std::size_t n = g.order();
    const std::size_t s = g.stride();
    std::vector<std::uint64_t> acc(s);
    Graph h(n);
    for (Vertex u = 0; u < n; ++u) {
        auto r = g.row(u);
        std::copy(r.begin(), r.end(), acc.begin());
        bits::for_each(r, [&](std::size_t w) {
            auto rw = g.row(w);
            for (std::size_t k = 0; k < s; ++k) acc[k] |= rw[k];
        });
        bits::reset(acc, u);
        bits::for_each(acc, [&](std::size_t v) {
            if (u < v) h.add_edge(u, v);
        });
    }
    return h;
}

namespace detail {

// BFS two-colouring from the lowest vertex of each component. Returns the
// colours and, when an odd cycle exists, one such cycle.
struct TwoColouring {
    std::vector<int> colour;
    std::vector<Vertex> odd_cycle;
};

inline TwoColouring two_colour(const Graph& g) {
    const std::size_t n = g.order();
    TwoColouring out;
    out.colour.assign(n, -1);
    std::vector<Vertex> parent(n, n);
    std::vector<std::size_t> depth(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (out.colour[s] >= 0) continue;
        out.colour[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (out.colour[w] < 0) {
                    out.colour[w] = 1 - out.colour[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (out.colour[w] == out.colour[u] && out.odd_cycle.empty()) {
                    // Walk both endpoints up to their common ancestor.
                    std::vector<Vertex> left{u}, right{w};
                    Vertex a = u, b = w;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    out.odd_cycle = left;
                    out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
                }
            }
        }
    }
    return out;
}

}  // namespace detail

// Canonical partition: per component, BFS from its lowest-index vertex; even
// levels form part A. Empty when the graph has an odd cycle.
inline std::optional<BipartiteGraph> bipartition(const Graph& g) {
    auto c = detail::two_colour(g);
    if (!c.odd_cycle.empty()) return std::nullopt;
    std::vector<bool> in_b(g.order());
    for (Vertex v = 0; v < g.order(); ++v) in_b[v] = c.colour[v] == 1;
    return BipartiteGraph(g, std::move(in_b));
}

inline bool is_bipartite(const Graph& g) { return detail::two_colour(g).odd_cycle.empty(); }

// A cycle of odd length as a closed vertex sequence (first vertex not repeated).
inline std::optional<std::vector<Vertex>> odd_cycle(const Graph& g) {
    auto c = detail::two_colour(g);
    if (c.odd_cycle.empty()) return std::nullopt;
    return c.odd_cycle;
}

// Inverts the cross edges; pairs inside a part stay non-adjacent.
inline BipartiteGraph bipartite_complement(const BipartiteGraph& bg) {
    const Graph& g = bg.graph();
    const std::size_t n = g.order();
    Graph h(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (bg.in_b(u) != bg.in_b(v) && !g.adjacent(u, v)) h.add_edge(u, v);
    return BipartiteGraph(std::move(h), bg.sides());
}

// Subgraph induced by s, relabelled by increasing original index.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    // vertex i of the result is s[i]
    const std::vector<Vertex> vs(s.begin(), s.end());
    std::vector<bool> seen(g.order());
    for (Vertex v : vs) {
        if (v >= g.order())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(g.order()));
        if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " selected twice");
        seen[v] = true;
    }
    Graph h(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) h.add_edge(i, j);
    return h;
}

inline Graph induced_subgraph(const Graph& g, std::initializer_list<Vertex> s) {
    return induced_subgraph(g, std::span<const Vertex>(s.begin(), s.size()));
}

}  // namespace squco
