#pragma once

// Canonical labelling by individualisation-refinement.
//
// Partitions are ordered: a cell is a contiguous range of positions in `lab`,
// and refinement only ever splits a cell in place. Every node of the search
// tree carries a hash of its refinement trace; leaves are ordered first by
// the trace sequence along their path and then by the relabelled adjacency
// matrix, and the canonical form is the least leaf. Subtrees are cut when
// their trace prefix already exceeds the best leaf's, when a discovered
// automorphism fixing the current prefix maps the child onto an explored
// sibling, or (backjumping) when a leaf turns out equivalent to the first or
// best leaf.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "squco/graph.hpp"
#include "squco/graph6.hpp"

namespace squco {

// Vertex colouring with class ids 0..k-1.
struct Coloring {
    std::vector<std::size_t> color;

    static Coloring uniform(std::size_t n) { return {std::vector<std::size_t>(n, 0)}; }

    std::size_t classes() const {
        return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct CanonicalForm {
    std::string key;           // graph6 of the canonically relabelled graph
    std::vector<Vertex> perm;  // input label -> canonical label

    Graph graph() const { return from_graph6(key); }
};

namespace detail {

struct AdjacencyView {
    std::size_t n = 0;
    std::size_t stride = 0;
    const std::uint64_t* data = nullptr;

    explicit AdjacencyView(const Graph& g) : n(g.order()), stride(g.stride()), data(g.data()) {}
    AdjacencyView(std::size_t n_, std::size_t stride_, const std::uint64_t* d)
        : n(n_), stride(stride_), data(d) {}

    std::span<const std::uint64_t> row(std::size_t v) const { return {data + v * stride, stride}; }
};

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return h;
}

struct Partition {
    std::vector<std::uint32_t> lab;   // position -> vertex
    std::vector<std::uint32_t> pos;   // vertex -> position
    std::vector<std::uint32_t> cell;  // vertex -> start of its cell
    std::vector<std::uint32_t> end;   // cell start -> one past its last position
    std::size_t cells = 0;

    std::size_t size() const { return lab.size(); }
    bool discrete() const { return cells == lab.size(); }

    // Cells ordered by colour value.
    static Partition from_colors(const std::vector<std::size_t>& color) {
        const std::size_t n = color.size();
        Partition p;
        p.lab.resize(n);
        p.pos.resize(n);
        p.cell.resize(n);
        p.end.assign(n, 0);
        std::iota(p.lab.begin(), p.lab.end(), 0u);
        std::stable_sort(p.lab.begin(), p.lab.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return color[a] < color[b]; });
        std::size_t s = 0;
        while (s < n) {
            std::size_t e = s + 1;
            while (e < n && color[p.lab[e]] == color[p.lab[s]]) ++e;
            for (std::size_t i = s; i < e; ++i) {
                p.pos[p.lab[i]] = static_cast<std::uint32_t>(i);
                p.cell[p.lab[i]] = static_cast<std::uint32_t>(s);
            }
            p.end[s] = static_cast<std::uint32_t>(e);
            ++p.cells;
            s = e;
        }
        return p;
    }
};

// Equitable refinement driven by a queue of splitter cells.
class Refiner {
  public:
    explicit Refiner(const AdjacencyView& g) : g_(g), mask_(g.stride), in_queue_(g.n, 0) {}

    // Refines until equitable with respect to all cells reachable from the
    // queued splitters. Returns a hash of the splitting trace.
    std::uint64_t run(Partition& p, std::vector<std::uint32_t> queue) {
        const std::size_t n = g_.n;
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        for (auto s : queue) in_queue_[s] = 1;
        std::uint64_t h = mix(0x51ed270b27a3c3d1ULL, p.cells);
        std::size_t head = 0;
        while (head < queue.size() && !p.discrete()) {
            const std::uint32_t w = queue[head++];
            in_queue_[w] = 0;
            std::fill(mask_.begin(), mask_.end(), 0);
            for (std::uint32_t i = w; i < p.end[w]; ++i) bits::set(mask_, p.lab[i]);
            h = mix(h, w);
            for (std::uint32_t s = 0; s < n;) {
                const std::uint32_t e = p.end[s];
                if (e - s > 1) split(p, s, e, queue, h);
                s = e;
            }
        }
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        return mix(h, p.cells);
    }

    // Moves v to the front of its cell as a singleton and refines from it.
    std::uint64_t individualize(Partition& p, std::uint32_t v) {
        const std::uint32_t s = p.cell[v];
        const std::uint32_t e = p.end[s];
        const std::uint32_t at = p.pos[v];
        std::swap(p.lab[s], p.lab[at]);
        p.pos[p.lab[at]] = at;
        p.pos[v] = s;
        p.end[s] = s + 1;
        p.end[s + 1] = e;
        for (std::uint32_t i = s + 1; i < e; ++i) p.cell[p.lab[i]] = s + 1;
        ++p.cells;
        return mix(run(p, {s}), s);
    }

  private:
    void split(Partition& p, std::uint32_t s, std::uint32_t e, std::vector<std::uint32_t>& queue,
               std::uint64_t& h) {
        keyed_.clear();
        bool uniform = true;
        std::size_t first = 0;
        for (std::uint32_t i = s; i < e; ++i) {
            const std::uint32_t v = p.lab[i];
            const std::size_t c = bits::count_and(g_.row(v), mask_);
            if (i == s) first = c;
            else if (c != first) uniform = false;
            keyed_.emplace_back(static_cast<std::uint32_t>(c), v);
        }
        if (uniform) return;
        std::sort(keyed_.begin(), keyed_.end());
        const bool was_queued = in_queue_[s] != 0;
        std::uint32_t frag = s;
        std::uint32_t largest = s, largest_size = 0;
        fragments_.clear();
        for (std::size_t k = 0; k < keyed_.size(); ++k) {
            const std::uint32_t i = s + static_cast<std::uint32_t>(k);
            p.lab[i] = keyed_[k].second;
            p.pos[keyed_[k].second] = i;
            const bool closes = k + 1 == keyed_.size() || keyed_[k + 1].first != keyed_[k].first;
            if (closes) {
                const std::uint32_t fe = i + 1;
                for (std::uint32_t j = frag; j < fe; ++j) p.cell[p.lab[j]] = frag;
                p.end[frag] = fe;
                h = mix(h, (std::uint64_t{s} << 40) ^ (std::uint64_t{keyed_[k].first} << 20) ^ (fe - frag));
                fragments_.push_back(frag);
                if (fe - frag > largest_size) {
                    largest_size = fe - frag;
                    largest = frag;
                }
                frag = fe;
            }
        }
        p.cells += fragments_.size() - 1;
        for (auto f : fragments_) {
            if (in_queue_[f]) continue;
            if (!was_queued && f == largest) continue;
            in_queue_[f] = 1;
            queue.push_back(f);
        }
    }

    const AdjacencyView& g_;
    std::vector<std::uint64_t> mask_;
    std::vector<char> in_queue_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> keyed_;
    std::vector<std::uint32_t> fragments_;
};

inline std::vector<std::uint32_t> all_cells(const Partition& p) {
    std::vector<std::uint32_t> q;
    for (std::uint32_t s = 0; s < p.size(); s = p.end[s]) q.push_back(s);
    return q;
}

struct LeafCertificate {
    std::vector<std::uint64_t> trace;
    std::vector<std::uint32_t> path;
    std::vector<std::uint32_t> lab;
    std::vector<std::uint64_t> adj;
};

class CanonSearch {
  public:
    explicit CanonSearch(const AdjacencyView& g) : g_(g), refiner_(g) {}

    CanonicalForm run(const std::vector<std::size_t>& colors) {
        const std::size_t n = g_.n;
        Partition root = Partition::from_colors(colors);
        std::vector<std::uint64_t> trace{refiner_.run(root, all_cells(root))};
        std::vector<std::uint32_t> path;
        search(root, trace, path);

        CanonicalForm out;
        out.perm.resize(n);
        for (std::size_t i = 0; i < n; ++i) out.perm[best_.lab[i]] = i;
        Graph c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (bits::test({best_.adj.data() + i * g_.stride, g_.stride}, j)) c.add_edge(i, j);
        out.key = to_graph6(c);
        return out;
    }

    const std::vector<std::vector<std::uint32_t>>& generators() const { return generators_; }
    std::size_t leaves() const { return leaves_; }

  private:
    // Returns the tree level whose child loop should continue.
    std::size_t search(const Partition& p, std::vector<std::uint64_t>& trace,
                       std::vector<std::uint32_t>& path) {
        const std::size_t level = path.size();
        const std::size_t up = level == 0 ? 0 : level - 1;
        if (have_best_ && compare_prefix(trace, best_.trace) > 0) return up;
        if (p.discrete()) return leaf(p, trace, path);

        // First smallest non-singleton cell.
        std::uint32_t target = 0, target_size = UINT32_MAX;
        for (std::uint32_t s = 0; s < p.size(); s = p.end[s]) {
            const std::uint32_t sz = p.end[s] - s;
            if (sz > 1 && sz < target_size) {
                target = s;
                target_size = sz;
            }
        }
        std::vector<std::uint32_t> candidates(p.lab.begin() + target, p.lab.begin() + p.end[target]);
        std::sort(candidates.begin(), candidates.end());

        std::vector<std::uint32_t> explored;
        std::vector<std::uint32_t> orbit;
        std::size_t gens_seen = SIZE_MAX;
        for (std::uint32_t v : candidates) {
            if (!explored.empty()) {
                if (gens_seen != generators_.size()) {
                    orbit = stabilizer_orbits(path);
                    gens_seen = generators_.size();
                }
                const bool covered = std::any_of(explored.begin(), explored.end(),
                                                 [&](std::uint32_t u) { return orbit[u] == orbit[v]; });
                if (covered) continue;
            }
            explored.push_back(v);
            Partition q = p;
            const std::uint64_t t = refiner_.individualize(q, v);
            trace.push_back(t);
            path.push_back(v);
            const std::size_t jump = search(q, trace, path);
            trace.pop_back();
            path.pop_back();
            if (jump < level) return jump;
        }
        return up;
    }

    std::size_t leaf(const Partition& p, const std::vector<std::uint64_t>& trace,
                     const std::vector<std::uint32_t>& path) {
        ++leaves_;
        const std::size_t level = path.size();
        const std::size_t up = level == 0 ? 0 : level - 1;
        const std::size_t n = g_.n, stride = g_.stride;
        adj_.assign(n * stride, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::span<std::uint64_t> r(adj_.data() + i * stride, stride);
            bits::for_each(g_.row(p.lab[i]), [&](std::size_t u) { bits::set(r, p.pos[u]); });
        }
        if (!have_best_) {
            first_ = {trace, path, p.lab, adj_};
            best_ = first_;
            have_best_ = true;
            return up;
        }
        if (adj_ == first_.adj) {
            add_generator(first_.lab, p.lab);
            if (trace == first_.trace) return common_prefix(path, first_.path);
        }
        int cmp = compare_full(trace, best_.trace);
        if (cmp == 0) cmp = compare_words(adj_, best_.adj);
        if (cmp == 0) {
            add_generator(best_.lab, p.lab);
            return common_prefix(path, best_.path);
        }
        if (cmp < 0) best_ = {trace, path, p.lab, adj_};
        return up;
    }

    void add_generator(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
        std::vector<std::uint32_t> gamma(g_.n);
        bool identity = true;
        for (std::size_t i = 0; i < g_.n; ++i) {
            gamma[from[i]] = to[i];
            identity = identity && from[i] == to[i];
        }
        if (!identity) generators_.push_back(std::move(gamma));
    }

    // Orbit representatives under the generators that fix every vertex of path.
    std::vector<std::uint32_t> stabilizer_orbits(const std::vector<std::uint32_t>& path) const {
        std::vector<std::uint32_t> parent(g_.n);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : generators_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](std::uint32_t v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (std::uint32_t v = 0; v < g_.n; ++v) {
                auto a = find(v), b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (std::uint32_t v = 0; v < g_.n; ++v) parent[v] = find(v);
        return parent;
    }

    static std::size_t common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return k;
    }

    // Compares a node's trace against the same-depth prefix of a leaf trace.
    static int compare_prefix(const std::vector<std::uint64_t>& node, const std::vector<std::uint64_t>& leaf) {
        const std::size_t k = std::min(node.size(), leaf.size());
        for (std::size_t i = 0; i < k; ++i)
            if (node[i] != leaf[i]) return node[i] < leaf[i] ? -1 : 1;
        return node.size() > leaf.size() ? 1 : 0;
    }

    static int compare_full(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        if (a == b) return 0;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? -1 : 1;
    }

    static int compare_words(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    const AdjacencyView& g_;
    Refiner refiner_;
    bool have_best_ = false;
    LeafCertificate first_, best_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::vector<std::uint32_t>> generators_;
    std::size_t leaves_ = 0;
};

inline CanonicalForm canonical_form(const AdjacencyView& view) {
    CanonSearch search(view);
    return search.run(std::vector<std::size_t>(view.n, 0));
}

inline void check_coloring(const Graph& g, const Coloring& c) {
    if (c.color.size() != g.order()) throw std::invalid_argument("colouring size does not match vertex count");
}

}  // namespace detail

// Coarsest equitable refinement of init. Class ids follow cell order, which
// depends only on the isomorphism type of (g, init).
inline Coloring refine(const Graph& g, const Coloring& init) {
    detail::check_coloring(g, init);
    detail::AdjacencyView view(g);
    auto p = detail::Partition::from_colors(init.color);
    detail::Refiner r(view);
    r.run(p, detail::all_cells(p));
    Coloring out{std::vector<std::size_t>(g.order())};
    std::size_t id = 0;
    for (std::uint32_t s = 0; s < p.size(); s = p.end[s], ++id)
        for (std::uint32_t i = s; i < p.end[s]; ++i) out.color[p.lab[i]] = id;
    return out;
}

// Label-invariant summary of the equitable refinement of the uniform
// colouring: refinement trace hash followed by the cell sizes in order.
inline std::vector<std::uint64_t> refinement_signature(const Graph& g) {
    detail::AdjacencyView view(g);
    auto p = detail::Partition::from_colors(std::vector<std::size_t>(g.order(), 0));
    detail::Refiner r(view);
    std::vector<std::uint64_t> sig{r.run(p, detail::all_cells(p))};
    for (std::uint32_t s = 0; s < p.size(); s = p.end[s]) sig.push_back(p.end[s] - s);
    return sig;
}

inline CanonicalForm canonical_form(const Graph& g, const Coloring& init) {
    detail::check_coloring(g, init);
    detail::AdjacencyView view(g);
    detail::CanonSearch search(view);
    return search.run(init.color);
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_form(g, Coloring::uniform(g.order())); }

// True when mapping is a bijection V(g) -> V(h) preserving adjacency and non-adjacency.
inline bool verify_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping) {
    const std::size_t n = g.order();
    if (h.order() != n || mapping.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (Vertex v : mapping) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    if (g.size() != h.size()) return false;
    for (auto [u, v] : g.edges())
        if (!h.adjacent(mapping[u], mapping[v])) return false;
    return true;
}

struct IsoResult {
    bool isomorphic = false;
    std::optional<std::vector<Vertex>> mapping;  // g vertex -> h vertex

    explicit operator bool() const noexcept { return isomorphic; }
};

inline IsoResult are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return {};
    auto dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return {};
    if (refinement_signature(g) != refinement_signature(h)) return {};

    auto cg = canonical_form(g);
    auto ch = canonical_form(h);
    if (cg.key != ch.key) return {};
    std::vector<Vertex> inverse_h(h.order());
    for (Vertex v = 0; v < h.order(); ++v) inverse_h[ch.perm[v]] = v;
    std::vector<Vertex> mapping(g.order());
    for (Vertex v = 0; v < g.order(); ++v) mapping[v] = inverse_h[cg.perm[v]];
    if (!verify_isomorphism(g, h, mapping))
        throw std::logic_error("canonical labelling produced an invalid isomorphism");
    return {true, std::move(mapping)};
}

}  // namespace squco
