#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tkg/graph.hpp"

namespace tkg {

enum class StatKind {
    NodeCount,
    PairCount,
    TriangleCount,
    NodeBtwUnw,
    NodeBtwW,
    EdgeBtwUnw,
    EdgeBtwW,
};

inline std::string stat_kind_name(StatKind k) {
    switch (k) {
        case StatKind::NodeCount: return "node_count";
        case StatKind::PairCount: return "pair_count";
        case StatKind::TriangleCount: return "triangle_count";
        case StatKind::NodeBtwUnw: return "node_btw_unw";
        case StatKind::NodeBtwW: return "node_btw_w";
        case StatKind::EdgeBtwUnw: return "edge_btw_unw";
        case StatKind::EdgeBtwW: return "edge_btw_w";
    }
    return "?";
}

constexpr std::array<StatKind, 7> kAllStatKinds = {
    StatKind::NodeCount,  StatKind::PairCount,  StatKind::TriangleCount, StatKind::NodeBtwUnw,
    StatKind::NodeBtwW,   StatKind::EdgeBtwUnw, StatKind::EdgeBtwW,
};

inline std::optional<StatKind> parse_stat_kind(const std::string& name) {
    for (StatKind k : kAllStatKinds)
        if (stat_kind_name(k) == name) return k;
    return std::nullopt;
}

// How the component set for a rank comparison is formed: keys present in both
// maps, or the union with missing values treated as zero.
enum class CommonSetMode { Intersection, Union };

namespace detail {

// Merge sort that counts inversions of `seq` in place.
inline std::uint64_t count_inversions(std::vector<double>& seq, std::vector<double>& scratch,
                                      std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t count = count_inversions(seq, scratch, lo, mid) + count_inversions(seq, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (seq[j] < seq[i]) {
            count += mid - i;
            scratch[k++] = seq[j++];
        } else {
            scratch[k++] = seq[i++];
        }
    }
    while (i < mid) scratch[k++] = seq[i++];
    while (j < hi) scratch[k++] = seq[j++];
    std::copy(scratch.begin() + lo, scratch.begin() + hi, seq.begin() + lo);
    return count;
}

inline std::uint64_t tie_pairs(std::span<const double> sorted) {
    std::uint64_t pairs = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
            ++run;
        } else {
            pairs += static_cast<std::uint64_t>(run) * (run - 1) / 2;
            run = 1;
        }
    }
    return pairs;
}

}  // namespace detail

// Tie-adjusted Kendall rank correlation over paired samples:
//
//   tau_B = (n_c - n_d) / sqrt((n_0 - n_1)(n_0 - n_2))
//
// with n_0 = n(n-1)/2 and n_1/n_2 the tie-pair counts of each ranking.
// Returns nullopt when either ranking is fully tied (denominator zero) or
// fewer than two pairs are given. Computed via Knight's sort-and-merge
// scheme rather than pairwise enumeration.
inline std::optional<double> kendall_tau_b(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size()) throw DomainError("LengthMismatch", "paired samples differ in length");
    if (n < 2) return std::nullopt;

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return y[a] < y[b];
    });

    const std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    // Tie counts in x, and joint ties, from the sorted order.
    std::uint64_t n1 = 0, n3 = 0;
    {
        std::size_t run_x = 1, run_xy = 1;
        for (std::size_t i = 1; i <= n; ++i) {
            const bool same_x = i < n && x[idx[i]] == x[idx[i - 1]];
            const bool same_xy = same_x && y[idx[i]] == y[idx[i - 1]];
            if (same_x) ++run_x;
            else {
                n1 += static_cast<std::uint64_t>(run_x) * (run_x - 1) / 2;
                run_x = 1;
            }
            if (same_xy) ++run_xy;
            else {
                n3 += static_cast<std::uint64_t>(run_xy) * (run_xy - 1) / 2;
                run_xy = 1;
            }
        }
    }

    std::vector<double> y_seq(n);
    for (std::size_t i = 0; i < n; ++i) y_seq[i] = y[idx[i]];
    std::vector<double> scratch(n);
    const std::uint64_t n_d = detail::count_inversions(y_seq, scratch, 0, n);
    // y_seq is now sorted
    const std::uint64_t n2 = detail::tie_pairs(y_seq);

    if (n0 == n1 || n0 == n2) return std::nullopt;

    const std::uint64_t n_c = n0 - n1 - n2 + n3 - n_d;
    const double numer = static_cast<double>(n_c) - static_cast<double>(n_d);
    const double denom = std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
    return numer / denom;
}

// Map overload: pairs values over the common key set (intersection by
// default; union treats missing components as zero).
inline std::optional<double> kendall_tau_b(const std::map<ComponentKey, double>& a,
                                           const std::map<ComponentKey, double>& b,
                                           CommonSetMode mode = CommonSetMode::Intersection) {
    std::vector<double> x, y;
    if (mode == CommonSetMode::Intersection) {
        for (const auto& [key, va] : a) {
            auto it = b.find(key);
            if (it == b.end()) continue;
            x.push_back(va);
            y.push_back(it->second);
        }
    } else {
        std::map<ComponentKey, std::pair<double, double>> joined;
        for (const auto& [key, va] : a) joined[key].first = va;
        for (const auto& [key, vb] : b) joined[key].second = vb;
        for (const auto& [key, vals] : joined) {
            x.push_back(vals.first);
            y.push_back(vals.second);
        }
    }
    return kendall_tau_b(std::span<const double>(x), std::span<const double>(y));
}

struct TauComparison {
    std::string period_a;
    std::string period_b;
    std::optional<double> tau;
    std::optional<std::pair<double, double>> ci;
    std::size_t n_common{0};
};

struct TauSeries {
    StatKind kind{StatKind::NodeCount};
    std::vector<TauComparison> comparisons;
    std::optional<double> global_mean;
    std::optional<std::pair<double, double>> global_ci;
};

namespace detail {

inline std::size_t common_size(const std::map<ComponentKey, double>& a,
                               const std::map<ComponentKey, double>& b, CommonSetMode mode) {
    if (mode == CommonSetMode::Union) {
        std::size_t n = a.size();
        for (const auto& [key, v] : b)
            if (!a.count(key)) ++n;
        return n;
    }
    std::size_t n = 0;
    for (const auto& [key, v] : a)
        if (b.count(key)) ++n;
    return n;
}

}  // namespace detail

// One tau per consecutive period pair; undefined comparisons are recorded
// but excluded from the global mean.
inline TauSeries consecutive_tau_series(std::span<const ComponentStats> per_period, StatKind kind,
                                        CommonSetMode mode = CommonSetMode::Intersection) {
    if (per_period.size() < 2)
        throw DomainError("TooFewPeriods", "tau series needs at least two periods");
    TauSeries series;
    series.kind = kind;
    double sum = 0.0;
    std::size_t defined = 0;
    for (std::size_t i = 0; i + 1 < per_period.size(); ++i) {
        TauComparison cmp;
        cmp.period_a = per_period[i].period_label;
        cmp.period_b = per_period[i + 1].period_label;
        cmp.n_common = detail::common_size(per_period[i].values, per_period[i + 1].values, mode);
        cmp.tau = kendall_tau_b(per_period[i].values, per_period[i + 1].values, mode);
        if (cmp.tau) {
            sum += *cmp.tau;
            ++defined;
        }
        series.comparisons.push_back(std::move(cmp));
    }
    if (defined > 0) series.global_mean = sum / static_cast<double>(defined);
    return series;
}

}  // namespace tkg
