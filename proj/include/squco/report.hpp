#pragma once

// JSON documents for check and search results. Key order is fixed so that
// identical inputs serialize byte-for-byte identically.

#include <nlohmann/json.hpp>

#include <string>

#include "squco/graph.hpp"
#include "squco/graph6.hpp"
#include "squco/metrics.hpp"
#include "squco/planar.hpp"
#include "squco/search.hpp"
#include "squco/squco.hpp"

namespace squco {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "squco-report-v1";

// Infinite lengths (girth of a forest, diameter of a disconnected graph)
// serialize as the string "inf".
inline Json length_json(const Length& l) { return l.is_finite() ? Json(l.value()) : Json("inf"); }

inline Json check_report_json(const Graph& g, const SqucoReport& r) {
    Json doc;
    doc["schema"] = report_schema;
    doc["graph"] = to_graph6(g);
    doc["n"] = r.n;
    doc["m"] = r.m;
    doc["metrics"] = {{"girth", length_json(r.girth)},
                      {"radius", length_json(r.radius)},
                      {"diameter", length_json(r.diameter)},
                      {"connected", is_connected(g)},
                      {"bipartite", is_bipartite(g)},
                      {"planar", is_planar(g).planar}};
    Json filters = Json::object();
    for (const auto& f : r.filters) filters[f.name] = to_string(f.verdict);
    doc["filters"] = filters;
    doc["squco"] = r.is_squco;
    doc["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    return doc;
}

inline Json tally_json(std::size_t n, const Tally& t) {
    return {{"n", n},
            {"candidates", t.candidates},
            {"pruned", t.pruned},
            {"generated", t.generated ? Json(*t.generated) : Json(nullptr)},
            {"tested", t.tested},
            {"hits", t.hits}};
}

// Wall time and worker count are left out: the document depends only on the
// search configuration.
inline Json search_result_json(const SearchConfig& cfg, const SearchResult& res) {
    Json doc;
    doc["schema"] = report_schema;
    doc["kind"] = "search";
    doc["config"] = {{"n_min", cfg.n_min},
                     {"n_max", cfg.n_max},
                     {"constraints", cfg.constraints.describe()},
                     {"predicate", cfg.predicate.name}};
    Json hits = Json::array();
    for (const auto& h : res.hits) {
        const Graph g = from_graph6(h.graph6);
        if (h.report) {
            hits.push_back(check_report_json(g, *h.report));
        } else {
            hits.push_back({{"schema", report_schema}, {"graph", h.graph6}, {"n", g.order()}, {"m", g.size()}});
        }
    }
    doc["hits"] = hits;
    Json counts = Json::array();
    for (const auto& [n, t] : res.counts) counts.push_back(tally_json(n, t));
    doc["counts"] = counts;
    return doc;
}

}  // namespace squco
