#pragma once

// Isomorph-free vertex-by-vertex generation with canonical deletion, hereditary
// constraint pruning, fixed-depth sharding over a thread pool and a
// line-oriented checkpoint file.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "squco/graph.hpp"
#include "squco/graph6.hpp"
#include "squco/iso.hpp"
#include "squco/metrics.hpp"
#include "squco/planar.hpp"
#include "squco/squco.hpp"

namespace squco {

inline constexpr std::size_t max_search_order = 32;

struct Constraints {
    bool connected = false;
    bool bipartite = false;
    bool planar = false;
    std::optional<std::size_t> girth_min;
    std::optional<std::size_t> girth_exact;
    std::optional<std::size_t> max_degree;

    // Girth lower bound used for pruning; girth_exact implies it.
    std::optional<std::size_t> girth_floor() const {
        if (girth_min && girth_exact) return std::max(*girth_min, *girth_exact);
        return girth_min ? girth_min : girth_exact;
    }

    std::string describe() const {
        std::string s;
        auto add = [&](const std::string& part) { s += (s.empty() ? "" : ",") + part; };
        if (connected) add("connected");
        if (bipartite) add("bipartite");
        if (planar) add("planar");
        if (girth_min) add("girth_min=" + std::to_string(*girth_min));
        if (girth_exact) add("girth_exact=" + std::to_string(*girth_exact));
        if (max_degree) add("max_degree=" + std::to_string(*max_degree));
        return s.empty() ? "none" : s;
    }

    void validate() const {
        if ((girth_min && *girth_min < 3) || (girth_exact && *girth_exact < 3))
            throw std::invalid_argument("girth parameters must be at least 3");
    }
};

// A named graph property. An empty test means the squco property.
struct SearchPredicate {
    std::string name = "squco";
    std::function<bool(const Graph&)> test;

    bool is_squco() const { return !test; }

    static SearchPredicate squco() { return {}; }
    static SearchPredicate any() {
        return {"any", [](const Graph&) { return true; }};
    }
    static SearchPredicate custom(std::string name, std::function<bool(const Graph&)> f) {
        if (!f) throw std::invalid_argument("custom predicate needs a callable");
        return {std::move(name), std::move(f)};
    }
};

struct SearchConfig {
    std::size_t n_min = 1;
    std::size_t n_max = 1;
    Constraints constraints;
    SearchPredicate predicate;
    std::size_t jobs = 1;
    std::optional<std::filesystem::path> resume_path;
    std::size_t shard_depth = 0;  // 0 picks min(n_max, 7)
    std::size_t shard_count = 64;

    std::size_t effective_depth() const {
        const std::size_t d = shard_depth == 0 ? 7 : shard_depth;
        return std::max<std::size_t>(1, std::min(d, n_max));
    }

    void validate() const {
        if (n_min < 1) throw std::invalid_argument("n_min must be at least 1");
        if (n_max < n_min) throw std::invalid_argument("n_max must be at least n_min");
        if (n_max > max_search_order)
            throw std::invalid_argument("n_max above " + std::to_string(max_search_order) + " is not supported");
        if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
        if (shard_count < 1) throw std::invalid_argument("shard_count must be at least 1");
        constraints.validate();
    }
};

// Per-order tallies. generated counts accepted isomorphism classes; it is
// unknown on the last level of a squco search, where candidates are screened
// by the predicate before the (costlier) canonical acceptance test.
struct Tally {
    std::uint64_t candidates = 0;
    std::uint64_t pruned = 0;
    std::optional<std::uint64_t> generated = 0;
    std::uint64_t tested = 0;
    std::uint64_t hits = 0;

    Tally& operator+=(const Tally& o) {
        candidates += o.candidates;
        pruned += o.pruned;
        generated = generated && o.generated ? std::optional<std::uint64_t>(*generated + *o.generated)
                                             : std::nullopt;
        tested += o.tested;
        hits += o.hits;
        return *this;
    }
    bool operator==(const Tally&) const = default;
};

using Tallies = std::map<std::size_t, Tally>;

struct SearchHit {
    std::string graph6;  // canonical form
    std::optional<SqucoReport> report;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    Tallies counts;
    std::chrono::duration<double> elapsed{};
    std::size_t shards_total = 0;
    std::size_t shards_resumed = 0;
};

class SearchError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

using Rows = std::array<std::uint64_t, max_search_order>;

inline std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
inline std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

struct Node {
    std::size_t n = 0;
    Rows rows{};
    std::string key;  // canonical graph6
};

inline Graph to_graph(std::size_t n, const Rows& rows) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (std::uint64_t r = rows[u] & ~low_mask(u + 1); r; r &= r - 1)
            g.add_edge(u, static_cast<Vertex>(std::countr_zero(r)));
    return g;
}

inline CanonicalForm canon(std::size_t n, const Rows& rows) {
    return canonical_form(AdjacencyView(n, 1, rows.data()));
}

inline bool rows_connected(std::size_t n, const Rows& rows) {
    if (n <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == low_mask(n);
}

// Facts about a parent reused by every candidate neighbourhood.
struct ParentInfo {
    std::array<std::uint8_t, max_search_order> deg{};
    std::size_t maxdeg = 0;
    std::uint64_t maxmask = 0;
    std::uint64_t saturated = 0;  // degree already at the max_degree bound
    std::uint64_t deg1 = 0;
    bool isolated = false;
    std::vector<std::uint64_t> ball;                            // girth pruning
    std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;  // bipartite: (component, colour class)
};

class Generator {
  public:
    Generator(const Constraints& c, const SearchPredicate& pred, std::size_t n_min, std::size_t n_max)
        : c_(c), pred_(pred), n_min_(n_min), n_max_(n_max), floor_(c.girth_floor()) {}

    Tallies& tallies() { return tallies_; }
    std::vector<std::string>& hits() { return hits_; }

    // Level-1 root; counted like any generated class.
    Node root() {
        Node k1;
        k1.n = 1;
        k1.key = canon(1, k1.rows).key;
        auto& t = tallies_[1];
        ++t.candidates;
        *t.generated += 1;
        visit(k1);
        return k1;
    }

    // Calls on_child for each accepted child; on the squco search's last
    // level children are screened instead and only hits are recorded.
    template <class F>
    void expand(const Node& p, bool screen_first, F&& on_child) {
        const std::size_t n = p.n, cn = n + 1;
        Tally& t = tallies_[cn];
        const ParentInfo info = prepare(p);
        const bool squco_leaf = screen_first && pred_.is_squco();
        if (screen_first) t.generated.reset();
        if (squco_leaf && info.isolated) return;

        const std::uint64_t required = squco_leaf ? info.deg1 : 0;
        const std::uint64_t free = low_mask(n) & ~required;
        std::unordered_set<std::string> seen;
        Node child;
        child.n = cn;
        for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
            const std::uint64_t s = sub | required;
            ++t.candidates;
            if (candidate(p, info, s, child, t, screen_first, seen)) {
                if (!screen_first) on_child(child);
            }
            if (sub == 0) break;
        }
    }

    // Depth-first walk below node down to n_max.
    void walk(const Node& node) {
        if (node.n >= n_max_) return;
        const bool last = node.n + 1 == n_max_;
        expand(node, last && screen_last_, [&](const Node& child) {
            visit(child);
            walk(child);
        });
    }

    bool screen_last_ = true;

    // Final filters and predicate on an accepted class.
    void visit(const Node& g) {
        if (g.n < n_min_) return;
        if (!final_filters(g)) return;
        auto& t = tallies_[g.n];
        ++t.tested;
        if (pred_.is_squco() && !passes_degree_screen({g.rows.data(), g.n})) return;
        if (!full_predicate(g)) return;
        ++t.hits;
        hits_.push_back(g.key);
    }

  private:
    ParentInfo prepare(const Node& p) const {
        ParentInfo info;
        const std::size_t n = p.n;
        for (Vertex u = 0; u < n; ++u) {
            const auto d = static_cast<std::size_t>(std::popcount(p.rows[u]));
            info.deg[u] = static_cast<std::uint8_t>(d);
            if (d > info.maxdeg) info.maxdeg = d, info.maxmask = 0;
            if (d == info.maxdeg) info.maxmask |= bit(u);
            if (c_.max_degree && d >= *c_.max_degree) info.saturated |= bit(u);
            if (d == 1) info.deg1 |= bit(u);
            if (d == 0) info.isolated = true;
        }
        if (floor_ && *floor_ > 3) {
            // Adding v with neighbours a, b closes a cycle of length dist(a, b) + 2.
            const std::size_t radius = *floor_ - 3;
            info.ball.resize(n);
            for (Vertex a = 0; a < n; ++a) {
                std::uint64_t b = bit(a);
                for (std::size_t r = 0; r < radius; ++r) {
                    std::uint64_t next = b;
                    for (std::uint64_t f = b; f; f &= f - 1) next |= p.rows[std::countr_zero(f)];
                    if (next == b) break;
                    b = next;
                }
                info.ball[a] = b;
            }
        }
        if (c_.bipartite) {
            std::uint64_t unseen = low_mask(n);
            while (unseen) {
                const std::uint64_t start = unseen & (~unseen + 1);
                std::uint64_t comp = start, colour = start, frontier = start;
                bool odd = false;
                while (frontier) {
                    std::uint64_t next = 0;
                    for (std::uint64_t f = frontier; f; f &= f - 1) next |= p.rows[std::countr_zero(f)];
                    next &= ~comp;
                    odd = !odd;
                    if (!odd) colour |= next;
                    comp |= next;
                    frontier = next;
                }
                info.parts.emplace_back(comp, colour);
                unseen &= ~comp;
            }
        }
        return info;
    }

    bool hereditary(const ParentInfo& info, std::uint64_t s, const Node& child) const {
        if (c_.max_degree && (static_cast<std::size_t>(std::popcount(s)) > *c_.max_degree || (s & info.saturated)))
            return false;
        if (!info.ball.empty())
            for (std::uint64_t f = s; f; f &= f - 1) {
                const auto a = static_cast<std::size_t>(std::countr_zero(f));
                if ((info.ball[a] & s) != bit(a)) return false;
            }
        if (c_.bipartite)
            for (auto [comp, colour] : info.parts) {
                const std::uint64_t in = s & comp;
                if ((in & colour) && (in & ~colour)) return false;
            }
        if (c_.planar && !is_planar(to_graph(child.n, child.rows)).planar) return false;
        return true;
    }

    bool final_filters(const Node& g) const {
        if (c_.connected && !rows_connected(g.n, g.rows)) return false;
        if (c_.girth_exact && girth(to_graph(g.n, g.rows)) != *c_.girth_exact) return false;
        return true;
    }

    bool full_predicate(const Node& g) const {
        const Graph graph = to_graph(g.n, g.rows);
        return pred_.is_squco() ? is_squco(graph).is_squco : pred_.test(graph);
    }

    static void build(const Node& p, std::uint64_t s, Node& child) {
        const std::size_t n = p.n;
        for (Vertex u = 0; u < n; ++u) child.rows[u] = p.rows[u] | (((s >> u) & 1) << n);
        child.rows[n] = s;
    }

    // Canonical deletion: the designated vertex maximises (degree, neighbour
    // degree sum) and, among ties, has the least canonical label. The child is
    // accepted when deleting it yields the parent's isomorphism class.
    std::optional<std::string> accept(const Node& p, const Node& child, std::uint64_t ties) const {
        const std::size_t n = p.n;
        CanonicalForm cf = canon(child.n, child.rows);
        if (ties == bit(n)) return std::move(cf.key);
        Vertex w = n;
        for (std::uint64_t f = ties; f; f &= f - 1) {
            const auto u = static_cast<Vertex>(std::countr_zero(f));
            if (cf.perm[u] < cf.perm[w]) w = u;
        }
        if (w == n) return std::move(cf.key);
        Rows minus{};
        const std::uint64_t below = low_mask(w);
        for (Vertex u = 0, i = 0; u < child.n; ++u) {
            if (u == w) continue;
            const std::uint64_t r = child.rows[u];
            minus[i++] = (r & below) | ((r >> (w + 1)) << w);
        }
        if (canon(n, minus).key == p.key) return std::move(cf.key);
        return std::nullopt;
    }

    // Returns true when child (filled in place) is a new accepted class.
    bool candidate(const Node& p, const ParentInfo& info, std::uint64_t s, Node& child, Tally& t,
                   bool screen_first, std::unordered_set<std::string>& seen) {
        const std::size_t n = p.n;
        const auto d = static_cast<std::size_t>(std::popcount(s));
        if (d < info.maxdeg + ((s & info.maxmask) ? 1 : 0)) return false;
        build(p, s, child);
        if (!hereditary(info, s, child)) {
            ++t.pruned;
            return false;
        }
        if (screen_first && pred_.is_squco()) {
            ++t.tested;
            if (!passes_degree_screen({child.rows.data(), child.n})) return false;
        }

        std::array<std::uint32_t, max_search_order> deg{};
        for (Vertex u = 0; u <= n; ++u) deg[u] = static_cast<std::uint32_t>(std::popcount(child.rows[u]));
        auto inv = [&](Vertex u) {
            std::uint32_t sum = 0;
            for (std::uint64_t r = child.rows[u]; r; r &= r - 1) sum += deg[std::countr_zero(r)];
            return (deg[u] << 16) | sum;
        };
        const std::uint32_t mine = inv(n);
        std::uint64_t ties = bit(n);
        for (std::uint64_t f = info.maxmask | s; f; f &= f - 1) {
            const auto u = static_cast<Vertex>(std::countr_zero(f));
            if (deg[u] != d) continue;
            const std::uint32_t x = inv(u);
            if (x > mine) return false;
            if (x == mine) ties |= bit(u);
        }

        if (screen_first) {
            if (!final_filters(child)) return false;
            if (!pred_.is_squco()) ++t.tested;
            auto key = accept(p, child, ties);
            if (!key || !seen.insert(*key).second) return false;
            child.key = std::move(*key);
            if (!full_predicate(child)) return false;
            ++t.hits;
            hits_.push_back(child.key);
            return true;
        }
        auto key = accept(p, child, ties);
        if (!key || !seen.insert(*key).second) return false;
        child.key = std::move(*key);
        *t.generated += 1;
        return true;
    }

    const Constraints& c_;
    const SearchPredicate& pred_;
    std::size_t n_min_, n_max_;
    std::optional<std::size_t> floor_;
    Tallies tallies_;
    std::vector<std::string> hits_;
};

inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

inline std::string format_tallies(const Tallies& ts) {
    std::string out;
    for (const auto& [n, t] : ts) {
        if (!out.empty()) out += ';';
        out += std::to_string(n) + ':' + std::to_string(t.candidates) + '/' + std::to_string(t.pruned) + '/' +
               (t.generated ? std::to_string(*t.generated) : "-") + '/' + std::to_string(t.tested) + '/' +
               std::to_string(t.hits);
    }
    return out.empty() ? "-" : out;
}

inline Tallies parse_tallies(const std::string& s) {
    Tallies ts;
    if (s == "-") return ts;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) {
        Tally t;
        std::size_t n = 0;
        char colon = 0, s1 = 0, s2 = 0, s4 = 0;
        std::string gen;
        std::istringstream f(item);
        f >> n >> colon >> t.candidates >> s1 >> t.pruned >> s2;
        std::getline(f, gen, '/');
        f >> t.tested >> s4 >> t.hits;
        if (!f || colon != ':' || s1 != '/' || s2 != '/' || s4 != '/')
            throw SearchError("malformed tally in checkpoint: " + item);
        if (gen == "-")
            t.generated.reset();
        else
            t.generated = std::stoull(gen);
        ts[n] = t;
    }
    return ts;
}

struct ShardResult {
    bool done = false;
    Tallies tallies;
    std::vector<std::string> hits;
};

class Checkpoint {
  public:
    static constexpr const char* version = "squco-search-v1";

    Checkpoint(const std::filesystem::path& path, const std::string& hash, std::size_t shards,
               std::vector<ShardResult>& results)
        : path_(path) {
        std::ifstream in(path);
        std::string line;
        if (in && std::getline(in, line)) {
            std::istringstream head(line);
            std::string v, h;
            head >> v >> h;
            if (v != version) throw SearchError("resume file version mismatch: expected " + std::string(version));
            if (h != hash) throw SearchError("resume file belongs to a different search configuration");
            std::size_t lineno = 1;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.empty()) continue;
                std::istringstream rec(line);
                std::string word, tallies, hits;
                std::size_t id = 0;
                rec >> word >> id >> tallies >> hits;
                if (!rec || word != "done" || id >= shards || hits.rfind("hits=", 0) != 0)
                    throw SearchError("malformed checkpoint line " + std::to_string(lineno));
                auto& r = results[id];
                r.done = true;
                r.tallies = parse_tallies(tallies);
                std::istringstream list(hits.substr(5));
                for (std::string k; std::getline(list, k, ',');)
                    if (!k.empty()) r.hits.push_back(k);
                ++resumed_;
            }
        } else {
            std::ofstream out(path, std::ios::trunc);
            if (!out) throw SearchError("cannot create resume file " + path.string());
            out << version << ' ' << hash << '\n';
        }
    }

    void record(std::size_t id, const ShardResult& r) {
        std::lock_guard lock(mu_);
        std::ofstream out(path_, std::ios::app);
        out << "done " << id << ' ' << format_tallies(r.tallies) << " hits=";
        for (std::size_t i = 0; i < r.hits.size(); ++i) out << (i ? "," : "") << r.hits[i];
        out << '\n';
        out.flush();
        if (!out) throw SearchError("cannot write resume file " + path_.string());
    }

    std::size_t resumed() const { return resumed_; }

  private:
    std::filesystem::path path_;
    std::mutex mu_;
    std::size_t resumed_ = 0;
};

}  // namespace detail

// Stable identity of a search configuration; jobs does not take part.
inline std::string config_hash(const SearchConfig& cfg) {
    const auto& c = cfg.constraints;
    auto opt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("-"); };
    std::ostringstream s;
    s << "n_min=" << cfg.n_min << ";n_max=" << cfg.n_max << ";connected=" << c.connected
      << ";bipartite=" << c.bipartite << ";planar=" << c.planar << ";girth_min=" << opt(c.girth_min)
      << ";girth_exact=" << opt(c.girth_exact) << ";max_degree=" << opt(c.max_degree)
      << ";predicate=" << cfg.predicate.name << ";depth=" << cfg.effective_depth()
      << ";shards=" << cfg.shard_count;
    return detail::fnv1a_hex(s.str());
}

// Visits one representative of every isomorphism class on n vertices that
// satisfies the constraints. Returns tallies for orders 1..n.
inline Tallies enumerate(std::size_t n, const Constraints& constraints,
                         const std::function<void(const Graph&)>& visitor) {
    if (n < 1) throw std::invalid_argument("enumerate needs n >= 1");
    if (n > max_search_order) throw std::invalid_argument("n too large for enumeration");
    constraints.validate();
    const auto pred = SearchPredicate::custom("visit", [&](const Graph& g) {
        visitor(g);
        return true;
    });
    detail::Generator gen(constraints, pred, n, n);
    gen.screen_last_ = false;
    gen.walk(gen.root());
    return gen.tallies();
}

inline SearchResult search_squco(const SearchConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::size_t depth = cfg.effective_depth();

    // Sequential prefix: every level up to the shard depth.
    detail::Generator prefix(cfg.constraints, cfg.predicate, cfg.n_min, cfg.n_max);
    std::vector<detail::Node> level{prefix.root()};
    for (std::size_t k = 1; k < depth; ++k) {
        std::vector<detail::Node> next;
        const bool last = k + 1 == cfg.n_max;
        for (const auto& node : level)
            prefix.expand(node, last, [&](const detail::Node& child) {
                prefix.visit(child);
                next.push_back(child);
            });
        level = std::move(next);
    }
    Tallies counts = prefix.tallies();
    std::vector<std::string> keys = prefix.hits();

    SearchResult result;
    if (depth < cfg.n_max) {
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
        const std::size_t shards = cfg.shard_count;
        std::vector<detail::ShardResult> results(shards);
        std::optional<detail::Checkpoint> checkpoint;
        if (cfg.resume_path) checkpoint.emplace(*cfg.resume_path, config_hash(cfg), shards, results);

        std::atomic<std::size_t> next{0};
        std::mutex err_mu;
        std::exception_ptr error;
        auto worker = [&] {
            for (std::size_t id; (id = next.fetch_add(1)) < shards;) {
                if (results[id].done) continue;
                try {
                    detail::Generator gen(cfg.constraints, cfg.predicate, cfg.n_min, cfg.n_max);
                    for (std::size_t i = id; i < level.size(); i += shards) gen.walk(level[i]);
                    detail::ShardResult r{true, std::move(gen.tallies()), std::move(gen.hits())};
                    if (checkpoint) checkpoint->record(id, r);
                    results[id] = std::move(r);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!error) error = std::current_exception();
                    next = shards;
                }
            }
        };
        const std::size_t threads = std::min(cfg.jobs, shards);
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (error) std::rethrow_exception(error);
        for (auto& r : results) {
            for (const auto& [n, t] : r.tallies) counts[n] += t;
            keys.insert(keys.end(), r.hits.begin(), r.hits.end());
        }
        result.shards_total = shards;
        result.shards_resumed = checkpoint ? checkpoint->resumed() : 0;
    }

    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw std::logic_error("search produced a duplicate isomorphism class");
    for (auto& k : keys) {
        SearchHit hit{k, std::nullopt};
        if (cfg.predicate.is_squco()) hit.report = is_squco(from_graph6(k));
        result.hits.push_back(std::move(hit));
    }
    for (std::size_t n = 1; n <= cfg.n_max; ++n) counts.try_emplace(n);
    result.counts = std::move(counts);
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

enum class MalformedPolicy { skip, fail };

struct FilterStats {
    std::size_t records = 0;
    std::size_t matched = 0;
    std::size_t malformed = 0;
};

class StreamError : public std::runtime_error {
  public:
    StreamError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Copies to out every graph6 line of in whose graph satisfies pred, in input
// order. Malformed lines go to diag (when given) and are skipped, or throw
// StreamError under MalformedPolicy::fail. Blank lines are ignored.
inline FilterStats filter_stream(std::istream& in, std::ostream& out, const SearchPredicate& pred,
                                 MalformedPolicy policy = MalformedPolicy::skip, std::ostream* diag = nullptr) {
    FilterStats stats;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = from_graph6(line);
        } catch (const ParseError& e) {
            ++stats.malformed;
            if (policy == MalformedPolicy::fail) throw StreamError(lineno, e.what());
            if (diag) *diag << "line " << lineno << ": " << e.what() << '\n';
            continue;
        }
        ++stats.records;
        const bool ok = pred.is_squco() ? is_squco(g).is_squco : pred.test(g);
        if (ok) {
            ++stats.matched;
            out << line << '\n';
        }
    }
    return stats;
}

}  // namespace squco
