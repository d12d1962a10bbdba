#pragma once

// Planarity via the left-right criterion (DFS orientation, then constraint
// testing with a stack of conflict pairs). Only the decision is computed; no
// embedding is produced.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "squco/construct.hpp"
#include "squco/graph.hpp"
#include "squco/iso.hpp"

namespace squco {

struct KuratowskiWitness {
    enum class Kind { k5, k33 };
    Kind kind = Kind::k5;
    std::vector<Vertex> vertices;     // all vertices of the subdivision
    std::vector<Vertex> branch;       // its branch vertices
    std::vector<Edge> edges;          // edges of the subdivision
};

struct PlanarityVerdict {
    enum class Reason { algorithmic, edge_bound };
    bool planar = true;
    Reason reason = Reason::algorithmic;
    std::optional<KuratowskiWitness> witness;
};

namespace detail {

class LeftRightTest {
  public:
    explicit LeftRightTest(const Graph& g) : n_(g.order()) {
        auto es = g.edges();
        m_ = es.size();
        adj_.resize(n_);
        for (std::size_t k = 0; k < m_; ++k) {
            adj_[es[k].first].push_back({es[k].second, static_cast<int>(k)});
            adj_[es[k].second].push_back({es[k].first, static_cast<int>(k)});
        }
        height_.assign(n_, -1);
        parent_edge_.assign(n_, -1);
        out_.resize(n_);
        oriented_.assign(m_, false);
        src_.assign(m_, -1);
        dst_.assign(m_, -1);
        lowpt_.assign(m_, 0);
        lowpt2_.assign(m_, 0);
        nesting_.assign(m_, 0);
        ref_.assign(m_, -1);
        lowpt_edge_.assign(m_, -1);
        stack_bottom_.assign(m_, -1);
    }

    bool planar() {
        std::vector<int> roots;
        for (std::size_t v = 0; v < n_; ++v)
            if (height_[v] < 0) {
                height_[v] = 0;
                roots.push_back(static_cast<int>(v));
                orient(static_cast<int>(v));
            }
        for (auto& o : out_)
            std::stable_sort(o.begin(), o.end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        for (int r : roots)
            if (!test(r)) return false;
        return true;
    }

  private:
    struct Interval {
        int low = -1, high = -1;
        bool empty() const { return low < 0 && high < 0; }
    };
    struct ConflictPair {
        Interval left, right;
        long id = 0;
        void swap() { std::swap(left, right); }
    };

    void orient(int v) {
        const int e = parent_edge_[v];
        for (auto [w, k] : adj_[v]) {
            if (oriented_[k]) continue;
            oriented_[k] = true;
            src_[k] = v;
            dst_[k] = static_cast<int>(w);
            out_[v].push_back(k);
            lowpt_[k] = lowpt2_[k] = height_[v];
            if (height_[w] < 0) {
                parent_edge_[w] = k;
                height_[w] = height_[v] + 1;
                orient(static_cast<int>(w));
            } else {
                lowpt_[k] = height_[w];
            }
            nesting_[k] = 2 * lowpt_[k] + (lowpt2_[k] < height_[v] ? 1 : 0);
            if (e >= 0) {
                if (lowpt_[k] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[k]);
                    lowpt_[e] = lowpt_[k];
                } else if (lowpt_[k] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[k]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[k]);
                }
            }
        }
    }

    long top_id() const { return stack_.empty() ? -1 : stack_.back().id; }

    bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt_[p.right.low];
        if (p.right.empty()) return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    ConflictPair fresh() { return ConflictPair{{}, {}, next_id_++}; }

    bool test(int v) {
        const int e = parent_edge_[v];
        for (std::size_t idx = 0; idx < out_[v].size(); ++idx) {
            const int k = out_[v][idx];
            const int w = dst_[k];
            stack_bottom_[k] = top_id();
            if (k == parent_edge_[w]) {
                if (!test(w)) return false;
            } else {
                lowpt_edge_[k] = k;
                auto p = fresh();
                p.right = {k, k};
                stack_.push_back(p);
            }
            if (lowpt_[k] < height_[v]) {
                if (idx == 0) lowpt_edge_[e] = lowpt_edge_[k];
                else if (!add_constraints(k, e)) return false;
            }
        }
        if (e >= 0) remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p = fresh();
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) q.swap();
            if (!q.left.empty()) return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty()) p.right = q.right;
                else ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            } else {
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (top_id() != stack_bottom_[ei]);

        while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei)) q.swap();
            if (conflicting(q.right, ei)) return false;
            if (p.right.low >= 0) ref_[p.right.low] = q.right.high;
            if (q.right.low >= 0) p.right.low = q.right.low;
            if (p.left.empty()) p.left = q.left;
            else if (p.left.low >= 0) ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
        return true;
    }

    void remove_back_edges(int e) {
        const int u = src_[e];
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
        if (!stack_.empty()) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            while (p.left.high >= 0 && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
            if (p.left.high < 0 && p.left.low >= 0) {
                ref_[p.left.low] = p.right.low;
                p.left.low = -1;
            }
            while (p.right.high >= 0 && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
            if (p.right.high < 0 && p.right.low >= 0) {
                ref_[p.right.low] = p.left.low;
                p.right.low = -1;
            }
            stack_.push_back(p);
        }
        if (lowpt_[e] < height_[u] && !stack_.empty()) {
            const int hl = stack_.back().left.high, hr = stack_.back().right.high;
            ref_[e] = (hl >= 0 && (hr < 0 || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
        }
    }

    std::size_t n_, m_ = 0;
    std::vector<std::vector<std::pair<Vertex, int>>> adj_;
    std::vector<int> height_, parent_edge_;
    std::vector<std::vector<int>> out_;
    std::vector<bool> oriented_;
    std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_;
    std::vector<long> stack_bottom_;
    std::vector<ConflictPair> stack_;
    long next_id_ = 0;
};

inline bool exceeds_edge_bound(const Graph& g) {
    const std::size_t n = g.order(), m = g.size();
    if (n < 3) return false;
    if (m > 3 * n - 6) return true;
    return m > 2 * n - 4 && is_bipartite(g);
}

inline bool planar_decision(const Graph& g) {
    if (exceeds_edge_bound(g)) return false;
    return LeftRightTest(g).planar();
}

}  // namespace detail

// Checks that the witness edges form a subdivision of K5 or K3,3 on its branch vertices.
inline bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w) {
    const std::size_t n = g.order();
    Graph sub(n);
    for (auto [u, v] : w.edges) {
        if (u >= n || v >= n || !g.adjacent(u, v)) return false;
        sub.add_edge(u, v);
    }
    std::vector<Vertex> branch;
    for (Vertex v = 0; v < n; ++v) {
        auto d = sub.degree(v);
        if (d == 0 || d == 2) continue;
        if (d < 2) return false;
        branch.push_back(v);
    }
    std::vector<std::size_t> index(n, SIZE_MAX);
    for (std::size_t i = 0; i < branch.size(); ++i) index[branch[i]] = i;
    Graph contracted(branch.size());
    std::size_t paths = 0;
    for (Vertex b : branch)
        for (Vertex start : sub.neighbors(b)) {
            Vertex prev = b, cur = start;
            while (index[cur] == SIZE_MAX) {
                auto nb = sub.neighbors(cur);
                Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
            }
            if (cur == b) return false;
            if (b < cur) {
                if (contracted.adjacent(index[b], index[cur])) return false;
                contracted.add_edge(index[b], index[cur]);
                ++paths;
            }
        }
    // Every subdivision vertex must lie on one of the traced paths.
    std::size_t internal = 0;
    for (Vertex v = 0; v < n; ++v)
        if (sub.degree(v) == 2) ++internal;
    if (sub.size() != paths + internal) return false;
    if (w.kind == KuratowskiWitness::Kind::k5)
        return branch.size() == 5 && contracted == complete_graph(5);
    return branch.size() == 6 && are_isomorphic(contracted, complete_bipartite(3, 3).graph()).isomorphic;
}

// Edge-minimal nonplanar subgraph, which is a Kuratowski subdivision.
inline KuratowskiWitness kuratowski_witness(const Graph& g) {
    if (detail::LeftRightTest(g).planar()) throw std::invalid_argument("planar graphs have no Kuratowski witness");
    Graph h = g;
    for (auto [u, v] : g.edges()) {
        h.remove_edge(u, v);
        if (detail::LeftRightTest(h).planar()) h.add_edge(u, v);
    }
    KuratowskiWitness w;
    w.edges = h.edges();
    for (Vertex v = 0; v < h.order(); ++v) {
        auto d = h.degree(v);
        if (d > 0) w.vertices.push_back(v);
        if (d > 2) w.branch.push_back(v);
    }
    w.kind = w.branch.size() == 5 ? KuratowskiWitness::Kind::k5 : KuratowskiWitness::Kind::k33;
    if (!verify_kuratowski(g, w)) throw std::logic_error("extracted Kuratowski witness failed verification");
    return w;
}

inline PlanarityVerdict is_planar(const Graph& g, bool want_witness = false) {
    PlanarityVerdict v;
    if (detail::exceeds_edge_bound(g)) {
        v.planar = false;
        v.reason = PlanarityVerdict::Reason::edge_bound;
    } else {
        v.planar = detail::LeftRightTest(g).planar();
    }
    if (!v.planar && want_witness) v.witness = kuratowski_witness(g);
    return v;
}

struct BipartiteBoundVerdict {
    bool planar_edge_bound = true;     // m <= 2(a+b) - 4
    bool squco_product_bound = true;   // (a-4)(b-4) <= 8, from m = ab/2
};

// Necessary conditions on a planar bipartite graph with parts of sizes a, b
// and m edges; the product bound applies when m = ab/2 (bipartite
// self-complementary edge count).
inline BipartiteBoundVerdict bipartite_edge_bounds(std::size_t a, std::size_t b, std::size_t m) {
    if (m > a * b) throw std::invalid_argument("edge count exceeds a*b");
    BipartiteBoundVerdict v;
    const std::size_t n = a + b;
    v.planar_edge_bound = n < 3 || m + 4 <= 2 * n;
    const long long pa = static_cast<long long>(a) - 4, pb = static_cast<long long>(b) - 4;
    v.squco_product_bound = pa * pb <= 8;
    return v;
}

}  // namespace squco
