#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tkg/errors.hpp"

namespace tkg {

// The three disjoint node partitions of the tripartite graph.
enum class Partition : std::uint8_t { Measure = 0, DataType = 1, RqType = 2 };

inline char partition_prefix(Partition p) {
    switch (p) {
        case Partition::Measure: return 'M';
        case Partition::DataType: return 'D';
        case Partition::RqType: return 'R';
    }
    return '?';
}

inline std::string_view partition_name(Partition p) {
    switch (p) {
        case Partition::Measure: return "measure";
        case Partition::DataType: return "data_type";
        case Partition::RqType: return "rq_type";
    }
    return "?";
}

// One category code, e.g. M1 or D13. Ordering is (partition, index), which is
// the canonical order used for edge keys and serialized output.
struct CategoryCode {
    Partition partition{Partition::Measure};
    int index{1};  // 1-based within the partition

    auto operator<=>(const CategoryCode&) const = default;

    std::string str() const { return partition_prefix(partition) + std::to_string(index); }
};

// Parses "M3", "D13", "R4". Returns nullopt on anything else.
inline std::optional<CategoryCode> try_parse_code(std::string_view text) {
    if (text.size() < 2) return std::nullopt;
    Partition p;
    switch (text[0]) {
        case 'M': p = Partition::Measure; break;
        case 'D': p = Partition::DataType; break;
        case 'R': p = Partition::RqType; break;
        default: return std::nullopt;
    }
    int index = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') return std::nullopt;
        index = index * 10 + (c - '0');
        if (index > 1000000) return std::nullopt;
    }
    if (index < 1) return std::nullopt;
    return CategoryCode{p, index};
}

inline CategoryCode parse_code(std::string_view text) {
    auto code = try_parse_code(text);
    if (!code) throw ValidationError("BadCategoryCode", "cannot parse category code '" + std::string(text) + "'");
    return *code;
}

// A node, cross-partition pair, or (M,D,R) triangle, in canonical order.
// Used as the ranking key for counts and betweenness statistics.
struct ComponentKey {
    std::uint8_t arity{1};
    std::array<CategoryCode, 3> codes{};

    static ComponentKey node(CategoryCode a) { return ComponentKey{1, {a, {}, {}}}; }

    static ComponentKey pair(CategoryCode a, CategoryCode b) {
        if (b < a) std::swap(a, b);
        return ComponentKey{2, {a, b, {}}};
    }

    static ComponentKey triangle(CategoryCode m, CategoryCode d, CategoryCode r) {
        return ComponentKey{3, {m, d, r}};
    }

    auto operator<=>(const ComponentKey&) const = default;

    std::string str() const {
        std::string out = codes[0].str();
        for (std::uint8_t i = 1; i < arity; ++i) out += "-" + codes[i].str();
        return out;
    }
};

}  // namespace tkg
