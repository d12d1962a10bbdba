#pragma once

// Command-line front end: check, construct, search, reduce, filter.
// Exit codes: 0 success, 1 runtime failure, 2 usage or parse error,
// 3 negative decision (reduce on non-isomorphic inputs).

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "squco/construct.hpp"
#include "squco/graph.hpp"
#include "squco/graph6.hpp"
#include "squco/metrics.hpp"
#include "squco/planar.hpp"
#include "squco/reduction.hpp"
#include "squco/report.hpp"
#include "squco/search.hpp"
#include "squco/squco.hpp"

namespace squco::cli {

enum Exit : int { ok = 0, failure = 1, usage = 2, negative = 3 };

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::size_t parse_count(const std::string& s, const std::string& what) {
    std::size_t v = 0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end) throw UsageError(what + " must be a non-negative integer, got '" + s + "'");
    return v;
}

// --jobs wins, then SQUCO_JOBS, then the hardware thread count.
inline std::size_t resolve_jobs(std::optional<std::size_t> flag, const char* env) {
    if (flag) {
        if (*flag == 0) throw UsageError("--jobs must be at least 1");
        return *flag;
    }
    if (env && *env) {
        const std::size_t j = parse_count(env, "SQUCO_JOBS");
        if (j == 0) throw UsageError("SQUCO_JOBS must be at least 1");
        return j;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Constructed {
    Graph graph;
    std::optional<std::vector<bool>> in_b;
    std::optional<std::vector<Vertex>> embedding;
};

inline BipartiteGraph require_bipartite(const std::string& g6) {
    auto bg = bipartition(from_graph6(g6));
    if (!bg) throw UsageError("graph " + g6 + " is not bipartite");
    return *bg;
}

inline Constructed construct(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw UsageError("missing construction name");
    const std::string& name = tokens[0];
    const std::vector<std::string> args(tokens.begin() + 1, tokens.end());
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw UsageError(name + " expects " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
    };
    auto from_bip = [](BipartiteGraph bg) { return Constructed{bg.graph(), bg.sides(), std::nullopt}; };

    if (name == "franklin") {
        need(0);
        return from_bip(h_construction(two_k2(), two_k2()).h);
    }
    if (name == "cycle") {
        need(1);
        return {cycle_graph(parse_count(args[0], "cycle length")), std::nullopt, std::nullopt};
    }
    if (name == "circulant") {
        if (args.size() < 2) throw UsageError("circulant expects N and at least one connection");
        std::set<std::size_t> s;
        for (std::size_t i = 1; i < args.size(); ++i) s.insert(parse_count(args[i], "connection"));
        return {circulant(parse_count(args[0], "order"), s), std::nullopt, std::nullopt};
    }
    if (name == "blowup") {
        if (args.empty()) throw UsageError("blowup expects a base graph and multiplicities");
        std::vector<std::size_t> mult;
        for (std::size_t i = 1; i < args.size(); ++i) mult.push_back(parse_count(args[i], "multiplicity"));
        return {blowup(from_graph6(args[0]), mult), std::nullopt, std::nullopt};
    }
    if (name == "ext") {
        need(1);
        return from_bip(ext(require_bipartite(args[0])));
    }
    if (name == "hcons") {
        need(2);
        return from_bip(h_construction(require_bipartite(args[0]), require_bipartite(args[1])).h);
    }
    if (name == "incidence") {
        need(1);
        return from_bip(incidence_graph(from_graph6(args[0])));
    }
    if (name == "joink2") {
        need(1);
        return {join_k2(from_graph6(args[0])), std::nullopt, std::nullopt};
    }
    if (name == "squco-super") {
        need(1);
        auto s = make_squco_supergraph(require_bipartite(args[0]));
        return {s.h.graph(), s.h.sides(), s.embedding};
    }
    throw UsageError("unknown construction '" + name + "'");
}

// Non-empty lines of a graph6 stream; parse errors name the line.
inline std::vector<Graph> read_graphs(std::istream& in, const std::string& source) {
    std::vector<Graph> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const ParseError& e) {
            throw UsageError(source + " line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline Graph read_single_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    auto gs = read_graphs(f, path);
    if (gs.size() != 1) throw UsageError(path + " must hold exactly one graph6 record");
    return gs.front();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_check(std::ostream& out, const Graph& g, const SqucoReport& r) {
    auto row = [&](const char* k, const std::string& v) { out << std::left << std::setw(11) << k << v << '\n'; };
    row("graph", to_graph6(g));
    row("order", std::to_string(r.n));
    row("size", std::to_string(r.m));
    row("girth", r.girth.str());
    row("radius", r.radius.str());
    row("diameter", r.diameter.str());
    row("connected", yes_no(is_connected(g)));
    row("bipartite", yes_no(is_bipartite(g)));
    row("planar", yes_no(is_planar(g).planar));
    std::string fs;
    for (const auto& f : r.filters) fs += (fs.empty() ? "" : " ") + f.name + ":" + to_string(f.verdict);
    row("filters", fs);
    row("squco", yes_no(r.is_squco));
    if (r.witness) {
        std::string w;
        for (Vertex v : *r.witness) w += (w.empty() ? "" : " ") + std::to_string(v);
        row("witness", w);
    }
}

inline SearchPredicate named_predicate(const std::string& name) {
    if (name == "squco") return SearchPredicate::squco();
    if (name == "any") return SearchPredicate::any();
    if (name == "connected") return SearchPredicate::custom(name, [](const Graph& g) { return is_connected(g); });
    if (name == "bipartite") return SearchPredicate::custom(name, [](const Graph& g) { return is_bipartite(g); });
    if (name == "planar") return SearchPredicate::custom(name, [](const Graph& g) { return is_planar(g).planar; });
    throw UsageError("unknown predicate '" + name + "'");
}

inline const std::vector<std::string>& predicate_names() {
    static const std::vector<std::string> names{"squco", "any", "connected", "bipartite", "planar"};
    return names;
}

inline int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"Square-complementary graph toolkit", "squco"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "Report metrics, filters and the squco verdict");
    std::string check_g6, check_file;
    std::vector<std::string> check_construct;
    bool check_json = false, no_filters = false;
    auto* o_g6 = check->add_option("--g6", check_g6, "graph6 string");
    auto* o_file = check->add_option("--file", check_file, "file with graph6 records");
    auto* o_con = check->add_option("--construct", check_construct, "construction, e.g. 'cycle 7'")->expected(1, -1);
    o_g6->excludes(o_file, o_con);
    o_file->excludes(o_con);
    check->add_flag("--json", check_json, "emit JSON documents");
    check->add_flag("--no-filters", no_filters, "run the isomorphism test even when a filter fails");

    // construct
    auto* cons = app.add_subcommand("construct", "Build a graph and print it as graph6");
    std::vector<std::string> cons_tokens;
    bool cons_json = false;
    cons->add_option("spec", cons_tokens,
                     "franklin | cycle N | circulant N S.. | blowup G6 K.. | ext G6 | hcons G6 G6 | "
                     "incidence G6 | joink2 G6 | squco-super G6")
        ->required()
        ->expected(1, -1);
    cons->add_flag("--json", cons_json, "emit JSON");

    // search
    auto* srch = app.add_subcommand("search", "Exhaustive isomorph-free search");
    SearchConfig cfg;
    cfg.n_min = 1;
    std::optional<std::size_t> jobs, girth_min, girth_exact, max_deg;
    std::string predicate = "squco", resume;
    bool search_json = false;
    srch->add_option("--n-min", cfg.n_min, "smallest order")->capture_default_str();
    srch->add_option("--n-max", cfg.n_max, "largest order")->required();
    srch->add_flag("--connected", cfg.constraints.connected);
    srch->add_flag("--bipartite", cfg.constraints.bipartite);
    srch->add_flag("--planar", cfg.constraints.planar);
    srch->add_option("--girth-min", girth_min);
    srch->add_option("--girth-exact", girth_exact);
    srch->add_option("--max-degree", max_deg);
    srch->add_option("--predicate", predicate)->check(CLI::IsMember(predicate_names()))->capture_default_str();
    srch->add_option("--jobs", jobs, "worker threads (default: SQUCO_JOBS or hardware threads)");
    srch->add_option("--resume", resume, "checkpoint file");
    srch->add_option("--shard-depth", cfg.shard_depth, "order of the subtree roots (0 = automatic)");
    srch->add_option("--shards", cfg.shard_count, "number of shards")->capture_default_str();
    srch->add_flag("--json", search_json, "emit JSON");

    // reduce
    auto* red = app.add_subcommand("reduce", "Decide isomorphism through the squco reduction");
    std::string g1_path, g2_path;
    bool red_json = false, emit = false;
    red->add_option("--g1", g1_path, "file with the first graph")->required();
    red->add_option("--g2", g2_path, "file with the second graph")->required();
    red->add_flag("--emit-instance", emit, "print the instance graph as graph6");
    red->add_flag("--json", red_json, "emit JSON");

    // filter
    auto* filt = app.add_subcommand("filter", "Copy graph6 records satisfying a predicate");
    std::string filt_pred = "squco", filt_file;
    bool strict = false;
    filt->add_option("--predicate", filt_pred)->check(CLI::IsMember(predicate_names()))->capture_default_str();
    filt->add_option("--file", filt_file, "input file (default: stdin)");
    filt->add_flag("--strict", strict, "fail on the first malformed line");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return Exit::usage;
    }

    try {
        if (*check) {
            std::vector<Graph> graphs;
            if (!check_g6.empty()) {
                graphs.push_back(from_graph6(check_g6));
            } else if (!check_construct.empty()) {
                graphs.push_back(construct(check_construct).graph);
            } else if (!check_file.empty()) {
                std::ifstream f(check_file);
                if (!f) throw UsageError("cannot open " + check_file);
                graphs = read_graphs(f, check_file);
            } else {
                graphs = read_graphs(in, "stdin");
            }
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                const auto report = is_squco(graphs[i], {.use_filters = !no_filters});
                if (check_json) {
                    out << check_report_json(graphs[i], report).dump(2) << '\n';
                } else {
                    if (i) out << '\n';
                    print_check(out, graphs[i], report);
                }
            }
            return Exit::ok;
        }

        if (*cons) {
            const auto c = construct(cons_tokens);
            if (!cons_json) {
                out << to_graph6(c.graph) << '\n';
                return Exit::ok;
            }
            Json doc;
            doc["schema"] = report_schema;
            doc["kind"] = "construct";
            doc["spec"] = cons_tokens;
            doc["graph"] = to_graph6(c.graph);
            doc["n"] = c.graph.order();
            doc["m"] = c.graph.size();
            if (c.in_b) {
                std::vector<Vertex> part_b;
                for (Vertex v = 0; v < c.in_b->size(); ++v)
                    if ((*c.in_b)[v]) part_b.push_back(v);
                doc["part_b"] = part_b;
            }
            if (c.embedding) doc["embedding"] = *c.embedding;
            out << doc.dump(2) << '\n';
            return Exit::ok;
        }

        if (*srch) {
            cfg.constraints.girth_min = girth_min;
            cfg.constraints.girth_exact = girth_exact;
            cfg.constraints.max_degree = max_deg;
            cfg.predicate = named_predicate(predicate);
            cfg.jobs = resolve_jobs(jobs, std::getenv("SQUCO_JOBS"));
            if (!resume.empty()) cfg.resume_path = resume;
            try {
                cfg.validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const auto res = search_squco(cfg);
            if (search_json) {
                out << search_result_json(cfg, res).dump(2) << '\n';
            } else {
                out << predicate << " hits for " << cfg.n_min << " <= n <= " << cfg.n_max
                    << " (constraints: " << cfg.constraints.describe() << "): " << res.hits.size() << '\n';
                for (const auto& h : res.hits) {
                    const Graph g = from_graph6(h.graph6);
                    out << "  " << std::left << std::setw(16) << h.graph6 << " n=" << g.order() << " m=" << g.size()
                        << '\n';
                }
                out << std::right << std::setw(4) << "n" << std::setw(14) << "candidates" << std::setw(12)
                    << "pruned" << std::setw(12) << "generated" << std::setw(12) << "tested" << std::setw(6)
                    << "hits" << '\n';
                for (const auto& [n, t] : res.counts)
                    out << std::setw(4) << n << std::setw(14) << t.candidates << std::setw(12) << t.pruned
                        << std::setw(12) << (t.generated ? std::to_string(*t.generated) : "-") << std::setw(12)
                        << t.tested << std::setw(6) << t.hits << '\n';
                err << "elapsed " << std::fixed << std::setprecision(2) << res.elapsed.count() << " s, "
                    << cfg.jobs << " job(s)";
                if (res.shards_resumed) err << ", " << res.shards_resumed << " shard(s) resumed";
                err << '\n';
            }
            return Exit::ok;
        }

        if (*red) {
            const Graph g1 = read_single_graph(g1_path), g2 = read_single_graph(g2_path);
            const bool iso = decide_iso_via_squco(g1, g2);
            std::optional<ReductionInstance> inst;
            if (emit || red_json) {
                try {
                    inst = build_reduction_instance(g1, g2);
                } catch (const ReductionError& e) {
                    err << "note: " << e.what() << '\n';
                }
            }
            if (red_json) {
                Json doc;
                doc["schema"] = report_schema;
                doc["kind"] = "reduce";
                doc["isomorphic"] = iso;
                doc["n_prime"] = inst ? Json(inst->n_prime) : Json(nullptr);
                doc["m_prime"] = inst ? Json(inst->m_prime) : Json(nullptr);
                doc["instance"] = inst && emit ? Json(to_graph6(inst->h.h.graph())) : Json(nullptr);
                out << doc.dump(2) << '\n';
            } else {
                if (emit && inst) out << "instance " << to_graph6(inst->h.h.graph()) << '\n';
                out << (iso ? "isomorphic" : "not isomorphic") << '\n';
            }
            return iso ? Exit::ok : Exit::negative;
        }

        if (*filt) {
            const auto pred = named_predicate(filt_pred);
            const auto policy = strict ? MalformedPolicy::fail : MalformedPolicy::skip;
            if (filt_file.empty()) {
                filter_stream(in, out, pred, policy, &err);
            } else {
                std::ifstream f(filt_file);
                if (!f) throw UsageError("cannot open " + filt_file);
                filter_stream(f, out, pred, policy, &err);
            }
            return Exit::ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    } catch (const StreamError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Exit::failure;
    }
    return Exit::usage;
}

}  // namespace squco::cli
