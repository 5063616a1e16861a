#pragma once

#include <map>
#include <span>

#include "tkg/category.hpp"
#include "tkg/errors.hpp"

namespace tkg {

// Unweighted two-rater Cohen's kappa over category labels from one partition.
//
//   kappa = (p_o - p_e) / (1 - p_e)
//
// where p_o is the observed agreement proportion and p_e the chance agreement
// from the two marginal label distributions. The degenerate case p_e == 1 can
// only arise when both raters always emit the same single label, hence p_o == 1
// and the result is 1.
inline double cohens_kappa(std::span<const CategoryCode> labels_a, std::span<const CategoryCode> labels_b) {
    if (labels_a.empty()) throw DomainError("EmptyInput", "cohens_kappa needs at least one label pair");
    if (labels_a.size() != labels_b.size())
        throw DomainError("LengthMismatch", "label vectors differ in length");

    const Partition partition = labels_a.front().partition;
    for (std::span<const CategoryCode> side : {labels_a, labels_b})
        for (CategoryCode c : side)
            if (c.partition != partition)
                throw DomainError("MixedPartitions", "all labels must come from one partition");

    const double n = static_cast<double>(labels_a.size());
    std::map<CategoryCode, std::size_t> marg_a, marg_b;
    std::size_t agree = 0;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        if (labels_a[i] == labels_b[i]) ++agree;
        ++marg_a[labels_a[i]];
        ++marg_b[labels_b[i]];
    }

    const double p_o = static_cast<double>(agree) / n;
    double p_e = 0.0;
    for (const auto& [code, count_a] : marg_a) {
        auto it = marg_b.find(code);
        if (it == marg_b.end()) continue;
        p_e += (static_cast<double>(count_a) / n) * (static_cast<double>(it->second) / n);
    }

    if (p_e >= 1.0) return 1.0;
    return (p_o - p_e) / (1.0 - p_e);
}

}  // namespace tkg
