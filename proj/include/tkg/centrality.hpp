#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tkg/graph.hpp"

namespace tkg {

// Number of distinct neighbors of x.
inline int degree(const PeriodGraph& graph, CategoryCode x) {
    return static_cast<int>(graph.neighbors(x).size());
}

// Sum of incident edge weights (weighted degree).
inline int strength(const PeriodGraph& graph, CategoryCode x) {
    int s = 0;
    for (const auto& [nbr, w] : graph.neighbors(x)) s += w;
    return s;
}

// k_u + k_v - 2: nodes adjacent to the edge's endpoints, endpoints excluded.
inline int edge_degree(const PeriodGraph& graph, Edge e) {
    if (graph.weight(e.u, e.v) == 0)
        throw DomainError("UnknownEdge", e.u.str() + "-" + e.v.str() + " is not in the graph");
    return degree(graph, e.u) + degree(graph, e.v) - 2;
}

struct BetweennessScores {
    std::map<CategoryCode, double> node;
    std::map<Edge, double> edge;
    // n < 3 makes the 2/((n-1)(n-2)) constant undefined; raw unordered-pair
    // sums are reported instead and this flag is set.
    bool degenerate_normalization{false};
    // Pairs in different components contribute nothing; flagged because the
    // analyzed graphs are expected to be connected.
    bool disconnected{false};
};

namespace detail {

// Exact shortest-path distances for the weighted variant. Edge length is
// 1/w with integer w, so path lengths are sums of unit fractions; comparing
// them in floating point misclassifies ties, which changes path counts.
using Rational = boost::multiprecision::cpp_rational;

struct CompactGraph {
    std::vector<CategoryCode> nodes;                       // sorted
    std::vector<Edge> edges;                               // canonical order
    std::vector<std::vector<std::array<int, 3>>> adj;      // {neighbor, weight, edge_id}

    explicit CompactGraph(const PeriodGraph& g) {
        nodes = g.nodes();
        std::map<CategoryCode, int> index;
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i) index[nodes[i]] = i;
        adj.resize(nodes.size());
        for (const auto& [edge, w] : g.edges()) {
            const int ui = index[edge.u];
            const int vi = index[edge.v];
            const int eid = static_cast<int>(edges.size());
            edges.push_back(edge);
            adj[ui].push_back({vi, w, eid});
            adj[vi].push_back({ui, w, eid});
        }
    }
};

// One Brandes single-source pass: fills sigma/preds and the visit order,
// then accumulates path dependencies into node_acc/edge_acc. The sums are
// over ordered (s,t) pairs; callers halve them for the unordered convention.
struct SsspResult {
    std::vector<double> sigma;
    std::vector<std::vector<int>> preds;
    std::vector<int> order;  // non-decreasing distance from the source
    int reached{0};
};

inline SsspResult sssp_unweighted(const CompactGraph& g, int s) {
    const int n = static_cast<int>(g.nodes.size());
    SsspResult r{std::vector<double>(n, 0.0), std::vector<std::vector<int>>(n), {}, 0};
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    r.sigma[s] = 1.0;
    q.push(s);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        r.order.push_back(v);
        for (const auto& [u, w, eid] : g.adj[v]) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
            if (dist[u] == dist[v] + 1) {
                r.sigma[u] += r.sigma[v];
                r.preds[u].push_back(v);
            }
        }
    }
    r.reached = static_cast<int>(r.order.size());
    return r;
}

inline SsspResult sssp_weighted(const CompactGraph& g, int s) {
    const int n = static_cast<int>(g.nodes.size());
    SsspResult r{std::vector<double>(n, 0.0), std::vector<std::vector<int>>(n), {}, 0};
    std::vector<Rational> dist(n);
    std::vector<bool> have_dist(n, false), done(n, false);

    struct Item {
        Rational dist;
        int node;
    };
    struct Greater {
        bool operator()(const Item& a, const Item& b) const {
            if (a.dist != b.dist) return b.dist < a.dist;
            return a.node > b.node;
        }
    };
    std::priority_queue<Item, std::vector<Item>, Greater> pq;

    dist[s] = 0;
    have_dist[s] = true;
    r.sigma[s] = 1.0;
    pq.push({Rational(0), s});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = true;
        r.order.push_back(v);
        for (const auto& [u, w, eid] : g.adj[v]) {
            Rational nd = dist[v] + Rational(1, w);
            if (!have_dist[u] || nd < dist[u]) {
                dist[u] = nd;
                have_dist[u] = true;
                r.sigma[u] = r.sigma[v];
                r.preds[u] = {v};
                pq.push({std::move(nd), u});
            } else if (!done[u] && nd == dist[u]) {
                r.sigma[u] += r.sigma[v];
                r.preds[u].push_back(v);
            }
        }
    }
    r.reached = static_cast<int>(r.order.size());
    return r;
}

}  // namespace detail

// Node and edge betweenness in one pass (Brandes dependency accumulation).
// Sums run over unordered source-target pairs and are normalized by
// 2/((n-1)(n-2)); the weighted variant uses 1/w edge distances with exact
// rational comparisons so that tied shortest paths are counted exactly.
inline BetweennessScores betweenness(const PeriodGraph& graph, bool weighted) {
    const detail::CompactGraph g(graph);
    const int n = static_cast<int>(g.nodes.size());
    BetweennessScores out;
    if (n == 0) return out;

    std::vector<double> node_acc(n, 0.0);
    std::vector<double> edge_acc(g.edges.size(), 0.0);
    for (int s = 0; s < n; ++s) {
        const auto r = weighted ? detail::sssp_weighted(g, s) : detail::sssp_unweighted(g, s);
        if (r.reached < n) out.disconnected = true;

        std::vector<double> delta(n, 0.0);
        for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
            const int v = *it;
            for (int p : r.preds[v]) {
                const double c = r.sigma[p] / r.sigma[v] * (1.0 + delta[v]);
                delta[p] += c;
                // find the edge id joining p and v
                for (const auto& [u, w, eid] : g.adj[p])
                    if (u == v) {
                        edge_acc[eid] += c;
                        break;
                    }
            }
            if (v != s) node_acc[v] += delta[v];
        }
    }

    // Ordered-pair sums count every unordered pair twice. With n >= 3 the
    // normalization folds into a single division; below that the constant is
    // undefined and raw unordered sums are reported.
    double divisor;
    if (n >= 3) {
        divisor = static_cast<double>(n - 1) * static_cast<double>(n - 2);
    } else {
        divisor = 2.0;
        out.degenerate_normalization = true;
    }
    for (int i = 0; i < n; ++i) out.node[g.nodes[i]] = node_acc[i] / divisor;
    for (std::size_t e = 0; e < g.edges.size(); ++e) out.edge[g.edges[e]] = edge_acc[e] / divisor;
    return out;
}

inline std::map<CategoryCode, double> node_betweenness(const PeriodGraph& graph, bool weighted) {
    return betweenness(graph, weighted).node;
}

inline std::map<Edge, double> edge_betweenness(const PeriodGraph& graph, bool weighted) {
    return betweenness(graph, weighted).edge;
}

namespace detail {

inline void require_capacitance_size(const PeriodGraph& graph) {
    if (graph.node_count() < 3)
        throw DomainError("TooSmallGraph", "capacitance needs at least 3 nodes, got " +
                                               std::to_string(graph.node_count()));
}

}  // namespace detail

// R_x = B_x / (k_x / k_max): normalized unweighted betweenness over degree
// normalized by the maximum degree in the graph. The center of a star graph
// scores exactly 1 regardless of size.
inline std::map<CategoryCode, double> capacitance_node_unweighted(const PeriodGraph& graph) {
    detail::require_capacitance_size(graph);
    const auto btw = betweenness(graph, /*weighted=*/false);
    int k_max = 0;
    for (CategoryCode x : graph.nodes()) k_max = std::max(k_max, degree(graph, x));
    std::map<CategoryCode, double> out;
    for (CategoryCode x : graph.nodes()) {
        const double norm_degree = static_cast<double>(degree(graph, x)) / k_max;
        out[x] = btw.node.at(x) / norm_degree;
    }
    return out;
}

// R_x^(w) = B_x^(w) / (s_x / s_max), the strength-normalized variant.
inline std::map<CategoryCode, double> capacitance_node_weighted(const PeriodGraph& graph) {
    detail::require_capacitance_size(graph);
    const auto btw = betweenness(graph, /*weighted=*/true);
    int s_max = 0;
    for (CategoryCode x : graph.nodes()) s_max = std::max(s_max, strength(graph, x));
    std::map<CategoryCode, double> out;
    for (CategoryCode x : graph.nodes()) {
        const double norm_strength = static_cast<double>(strength(graph, x)) / s_max;
        out[x] = btw.node.at(x) / norm_strength;
    }
    return out;
}

// R_e = B_e / ((k_u + k_v - 2) / (2(n-2))) with unweighted edge betweenness.
// An edge whose endpoints have no other neighbors (possible only in
// disconnected fixtures) has a zero denominator and is reported as NaN.
inline std::map<Edge, double> capacitance_edge(const PeriodGraph& graph) {
    detail::require_capacitance_size(graph);
    const auto btw = betweenness(graph, /*weighted=*/false);
    const double denom_scale = 2.0 * (graph.node_count() - 2);
    std::map<Edge, double> out;
    for (const auto& [edge, w] : graph.edges()) {
        const int k_e = edge_degree(graph, edge);
        if (k_e == 0) {
            out[edge] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        out[edge] = btw.edge.at(edge) / (static_cast<double>(k_e) / denom_scale);
    }
    return out;
}

// Everything the report CSVs need for one period, computed in one place so
// the two betweenness passes are shared across measures.
struct CentralityReport {
    std::string period_label;
    std::map<CategoryCode, int> degree;
    std::map<CategoryCode, int> strength;
    std::map<Edge, int> edge_degree;
    std::map<CategoryCode, double> node_btw_unw;
    std::map<CategoryCode, double> node_btw_w;
    std::map<Edge, double> edge_btw_unw;
    std::map<Edge, double> edge_btw_w;
    std::map<CategoryCode, double> cap_unw;   // NaN when n < 3
    std::map<CategoryCode, double> cap_w;     // NaN when n < 3
    std::map<Edge, double> cap_edge;          // NaN when n < 3 or k_e == 0
    bool degenerate_normalization{false};
    bool disconnected{false};
};

inline CentralityReport compute_centrality_report(const PeriodGraph& graph) {
    CentralityReport rep;
    rep.period_label = graph.label();
    const auto unw = betweenness(graph, /*weighted=*/false);
    const auto wtd = betweenness(graph, /*weighted=*/true);
    rep.node_btw_unw = unw.node;
    rep.node_btw_w = wtd.node;
    rep.edge_btw_unw = unw.edge;
    rep.edge_btw_w = wtd.edge;
    rep.degenerate_normalization = unw.degenerate_normalization;
    rep.disconnected = unw.disconnected || wtd.disconnected;

    const int n = graph.node_count();
    int k_max = 0, s_max = 0;
    for (CategoryCode x : graph.nodes()) {
        rep.degree[x] = degree(graph, x);
        rep.strength[x] = strength(graph, x);
        k_max = std::max(k_max, rep.degree[x]);
        s_max = std::max(s_max, rep.strength[x]);
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (CategoryCode x : graph.nodes()) {
        rep.cap_unw[x] = n >= 3 ? unw.node.at(x) / (static_cast<double>(rep.degree[x]) / k_max) : nan;
        rep.cap_w[x] = n >= 3 ? wtd.node.at(x) / (static_cast<double>(rep.strength[x]) / s_max) : nan;
    }
    for (const auto& [edge, w] : graph.edges()) {
        const int k_e = rep.degree[edge.u] + rep.degree[edge.v] - 2;
        rep.edge_degree[edge] = k_e;
        if (n >= 3 && k_e > 0)
            rep.cap_edge[edge] = unw.edge.at(edge) / (static_cast<double>(k_e) / (2.0 * (n - 2)));
        else
            rep.cap_edge[edge] = nan;
    }
    return rep;
}

// ComponentStats views over a report, keyed for rank comparisons.
inline ComponentStats node_betweenness_stats(const CentralityReport& rep, bool weighted) {
    ComponentStats stats{ComponentKind::Node, rep.period_label, {}};
    for (const auto& [code, b] : (weighted ? rep.node_btw_w : rep.node_btw_unw))
        stats.values[ComponentKey::node(code)] = b;
    return stats;
}

inline ComponentStats edge_betweenness_stats(const CentralityReport& rep, bool weighted) {
    ComponentStats stats{ComponentKind::Pair, rep.period_label, {}};
    for (const auto& [edge, b] : (weighted ? rep.edge_btw_w : rep.edge_btw_unw))
        stats.values[edge.key()] = b;
    return stats;
}

}  // namespace tkg
