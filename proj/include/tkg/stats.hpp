#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tkg/centrality.hpp"
#include "tkg/graph.hpp"
#include "tkg/kendall.hpp"

namespace tkg {

inline ComponentKind component_kind_of(StatKind k) {
    switch (k) {
        case StatKind::NodeCount:
        case StatKind::NodeBtwUnw:
        case StatKind::NodeBtwW: return ComponentKind::Node;
        case StatKind::PairCount:
        case StatKind::EdgeBtwUnw:
        case StatKind::EdgeBtwW: return ComponentKind::Pair;
        case StatKind::TriangleCount: return ComponentKind::Triangle;
    }
    return ComponentKind::Node;
}

inline bool is_betweenness_kind(StatKind k) {
    return k == StatKind::NodeBtwUnw || k == StatKind::NodeBtwW || k == StatKind::EdgeBtwUnw ||
           k == StatKind::EdgeBtwW;
}

// Computes the requested statistics for one period's records in a single
// pass, sharing the graph build and betweenness runs across kinds. Empty
// record lists yield empty value maps (the period simply has no components).
inline std::map<StatKind, ComponentStats> compute_stats_bundle(std::span<const PaperRecord> records,
                                                               const std::string& period_label,
                                                               const std::set<StatKind>& kinds) {
    std::map<StatKind, ComponentStats> out;
    if (records.empty()) {
        for (StatKind k : kinds) out[k] = ComponentStats{component_kind_of(k), period_label, {}};
        return out;
    }

    auto [graph, table] = build_period_graph(records, period_label);
    const bool need_unw = kinds.count(StatKind::NodeBtwUnw) || kinds.count(StatKind::EdgeBtwUnw);
    const bool need_w = kinds.count(StatKind::NodeBtwW) || kinds.count(StatKind::EdgeBtwW);
    BetweennessScores unw, wtd;
    if (need_unw) unw = betweenness(graph, /*weighted=*/false);
    if (need_w) wtd = betweenness(graph, /*weighted=*/true);

    for (StatKind k : kinds) {
        switch (k) {
            case StatKind::NodeCount: out[k] = node_occurrences(table); break;
            case StatKind::PairCount: out[k] = pair_cooccurrences(table); break;
            case StatKind::TriangleCount: out[k] = triangle_counts(table); break;
            case StatKind::NodeBtwUnw: {
                ComponentStats s{ComponentKind::Node, period_label, {}};
                for (const auto& [code, b] : unw.node) s.values[ComponentKey::node(code)] = b;
                out[k] = std::move(s);
                break;
            }
            case StatKind::NodeBtwW: {
                ComponentStats s{ComponentKind::Node, period_label, {}};
                for (const auto& [code, b] : wtd.node) s.values[ComponentKey::node(code)] = b;
                out[k] = std::move(s);
                break;
            }
            case StatKind::EdgeBtwUnw: {
                ComponentStats s{ComponentKind::Pair, period_label, {}};
                for (const auto& [edge, b] : unw.edge) s.values[edge.key()] = b;
                out[k] = std::move(s);
                break;
            }
            case StatKind::EdgeBtwW: {
                ComponentStats s{ComponentKind::Pair, period_label, {}};
                for (const auto& [edge, b] : wtd.edge) s.values[edge.key()] = b;
                out[k] = std::move(s);
                break;
            }
        }
    }
    return out;
}

inline ComponentStats stats_for_records(std::span<const PaperRecord> records, const std::string& period_label,
                                        StatKind kind) {
    return compute_stats_bundle(records, period_label, {kind}).at(kind);
}

// Empirical quantile with linear interpolation between order statistics
// (the same convention as numpy's default percentile).
inline double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
    if (sorted.size() == 1) return sorted[0];
    q = std::clamp(q, 0.0, 1.0);
    const double h = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline std::pair<double, double> percentile_interval(std::vector<double> values, double level) {
    std::sort(values.begin(), values.end());
    const double alpha = 1.0 - level;
    return {quantile_sorted(values, alpha / 2.0), quantile_sorted(values, 1.0 - alpha / 2.0)};
}

}  // namespace tkg
