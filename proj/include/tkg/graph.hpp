#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tkg/category.hpp"
#include "tkg/corpus.hpp"
#include "tkg/errors.hpp"

namespace tkg {

// Unordered cross-partition edge with canonical endpoint order (u < v).
struct Edge {
    CategoryCode u;
    CategoryCode v;

    static Edge make(CategoryCode a, CategoryCode b) {
        if (b < a) std::swap(a, b);
        return Edge{a, b};
    }

    auto operator<=>(const Edge&) const = default;

    ComponentKey key() const { return ComponentKey::pair(u, v); }
};

// One period's tripartite weighted undirected graph. Edges connect only codes
// of different partitions; weights are paper counts. Nodes exist only through
// incident edges, so degree >= 1 holds for every node.
class PeriodGraph {
public:
    explicit PeriodGraph(std::string label) : label_(std::move(label)) {}

    void add_edge(CategoryCode a, CategoryCode b, int weight) {
        if (a.partition == b.partition)
            throw DomainError("NotTripartite", "edge " + a.str() + "-" + b.str() +
                                                   " connects codes of the same partition");
        if (weight <= 0) throw DomainError("BadWeight", "edge weights must be positive");
        adj_[a][b] += weight;
        adj_[b][a] += weight;
    }

    // Records which paper produced an edge occurrence (kept only on request).
    void add_edge_paper(CategoryCode a, CategoryCode b, const std::string& paper_id) {
        edge_papers_[Edge::make(a, b)].push_back(paper_id);
    }

    const std::string& label() const { return label_; }

    bool has_node(CategoryCode x) const { return adj_.count(x) > 0; }

    int weight(CategoryCode a, CategoryCode b) const {
        auto it = adj_.find(a);
        if (it == adj_.end()) return 0;
        auto jt = it->second.find(b);
        return jt == it->second.end() ? 0 : jt->second;
    }

    int node_count() const { return static_cast<int>(adj_.size()); }

    std::vector<CategoryCode> nodes() const {
        std::vector<CategoryCode> out;
        out.reserve(adj_.size());
        for (const auto& [code, nbrs] : adj_) out.push_back(code);
        return out;
    }

    const std::map<CategoryCode, int>& neighbors(CategoryCode x) const {
        auto it = adj_.find(x);
        if (it == adj_.end()) throw DomainError("UnknownNode", x.str() + " is not in the graph");
        return it->second;
    }

    // Canonically ordered edge list.
    std::vector<std::pair<Edge, int>> edges() const {
        std::vector<std::pair<Edge, int>> out;
        for (const auto& [u, nbrs] : adj_)
            for (const auto& [v, w] : nbrs)
                if (u < v) out.emplace_back(Edge{u, v}, w);
        return out;
    }

    int edge_count() const {
        int total = 0;
        for (const auto& [u, nbrs] : adj_) total += static_cast<int>(nbrs.size());
        return total / 2;
    }

    long long total_weight() const {
        long long total = 0;
        for (const auto& [u, nbrs] : adj_)
            for (const auto& [v, w] : nbrs) total += w;
        return total / 2;
    }

    const std::map<Edge, std::vector<std::string>>& edge_papers() const { return edge_papers_; }

    // Per-period weight contributions, populated on aggregate graphs only.
    const std::map<Edge, std::map<std::string, int>>& period_weights() const { return period_weights_; }

    void add_period_weight(Edge e, const std::string& period, int w) { period_weights_[e][period] += w; }

private:
    std::string label_;
    std::map<CategoryCode, std::map<CategoryCode, int>> adj_;
    std::map<Edge, std::vector<std::string>> edge_papers_;
    std::map<Edge, std::map<std::string, int>> period_weights_;
};

struct Triangle {
    CategoryCode m;
    CategoryCode d;
    CategoryCode r;

    auto operator<=>(const Triangle&) const = default;

    ComponentKey key() const { return ComponentKey::triangle(m, d, r); }
};

// Unique (measure, data type, rq type) triplets of a period with paper counts.
// Counts sum to the number of papers in the period.
struct TriangleTable {
    std::string period_label;
    std::map<Triangle, int> counts;

    long long total() const {
        long long t = 0;
        for (const auto& [tri, c] : counts) t += c;
        return t;
    }
};

enum class ComponentKind { Node, Pair, Triangle };

// Per-period values keyed by node, pair, or triangle.
struct ComponentStats {
    ComponentKind kind{ComponentKind::Node};
    std::string period_label;
    std::map<ComponentKey, double> values;
};

// Builds the period graph and triangle table from one period's records.
// Each paper contributes weight 1 to its (M,D), (D,R) and (R,M) edges;
// repeated contributions collapse into summed weights.
inline std::pair<PeriodGraph, TriangleTable> build_period_graph(std::span<const PaperRecord> records,
                                                                const std::string& period_label,
                                                                bool track_papers = false) {
    if (records.empty()) throw DomainError("EmptyPeriod", "no records in period " + period_label);
    PeriodGraph graph(period_label);
    TriangleTable table{period_label, {}};
    for (const auto& r : records) {
        graph.add_edge(r.measure, r.data_type, 1);
        graph.add_edge(r.data_type, r.rq_type, 1);
        graph.add_edge(r.rq_type, r.measure, 1);
        if (track_papers) {
            graph.add_edge_paper(r.measure, r.data_type, r.paper_id);
            graph.add_edge_paper(r.data_type, r.rq_type, r.paper_id);
            graph.add_edge_paper(r.rq_type, r.measure, r.paper_id);
        }
        ++table.counts[Triangle{r.measure, r.data_type, r.rq_type}];
    }
    return {std::move(graph), std::move(table)};
}

// Number of papers containing each node; equals strength/2 because each paper
// contributes two incident edges per contained node.
inline ComponentStats node_occurrences(const TriangleTable& table) {
    ComponentStats stats{ComponentKind::Node, table.period_label, {}};
    for (const auto& [tri, count] : table.counts) {
        stats.values[ComponentKey::node(tri.m)] += count;
        stats.values[ComponentKey::node(tri.d)] += count;
        stats.values[ComponentKey::node(tri.r)] += count;
    }
    return stats;
}

// Number of papers containing both codes of each cross-partition pair;
// identical to the corresponding edge weight.
inline ComponentStats pair_cooccurrences(const TriangleTable& table) {
    ComponentStats stats{ComponentKind::Pair, table.period_label, {}};
    for (const auto& [tri, count] : table.counts) {
        stats.values[ComponentKey::pair(tri.m, tri.d)] += count;
        stats.values[ComponentKey::pair(tri.d, tri.r)] += count;
        stats.values[ComponentKey::pair(tri.r, tri.m)] += count;
    }
    return stats;
}

inline ComponentStats triangle_counts(const TriangleTable& table) {
    ComponentStats stats{ComponentKind::Triangle, table.period_label, {}};
    for (const auto& [tri, count] : table.counts) stats.values[tri.key()] = count;
    return stats;
}

// Union of nodes, edge weights summed across periods. Per-period weight
// contributions are kept as an edge annotation for drill-down.
inline PeriodGraph aggregate_graph(std::span<const PeriodGraph> graphs, const std::string& label = "ALL") {
    if (graphs.empty()) throw DomainError("EmptyInput", "aggregate_graph needs at least one graph");
    PeriodGraph out(label);
    for (const auto& g : graphs)
        for (const auto& [edge, w] : g.edges()) {
            out.add_edge(edge.u, edge.v, w);
            out.add_period_weight(edge, g.label(), w);
        }
    return out;
}

struct ConnectivityReport {
    bool is_connected{};
    std::vector<int> component_sizes;  // descending
};

inline ConnectivityReport connectivity_report(const PeriodGraph& graph) {
    if (graph.node_count() == 0) throw DomainError("EmptyGraph", "connectivity on an empty graph");
    std::map<CategoryCode, bool> visited;
    ConnectivityReport report;
    for (CategoryCode start : graph.nodes()) {
        if (visited[start]) continue;
        int size = 0;
        std::vector<CategoryCode> stack{start};
        visited[start] = true;
        while (!stack.empty()) {
            CategoryCode x = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& [nbr, w] : graph.neighbors(x))
                if (!visited[nbr]) {
                    visited[nbr] = true;
                    stack.push_back(nbr);
                }
        }
        report.component_sizes.push_back(size);
    }
    std::sort(report.component_sizes.rbegin(), report.component_sizes.rend());
    report.is_connected = report.component_sizes.size() == 1;
    return report;
}

}  // namespace tkg
