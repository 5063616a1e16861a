#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tkg/category.hpp"
#include "tkg/errors.hpp"

namespace tkg {

// The three disjoint category sets plus display labels. Immutable once built.
class Taxonomy {
public:
    Taxonomy(std::vector<std::pair<CategoryCode, std::string>> entries) {
        for (auto& [code, label] : entries) {
            if (labels_.count(code))
                throw ValidationError("DuplicateCode", "duplicate taxonomy code " + code.str());
            labels_.emplace(code, std::move(label));
        }
        if (labels_.empty()) throw ValidationError("EmptyTaxonomy", "taxonomy has no codes");
    }

    bool contains(CategoryCode code) const { return labels_.count(code) > 0; }

    const std::string& label(CategoryCode code) const {
        auto it = labels_.find(code);
        if (it == labels_.end())
            throw ValidationError("UnknownCategory", code.str() + " is not in the taxonomy");
        return it->second;
    }

    std::vector<CategoryCode> codes(Partition p) const {
        std::vector<CategoryCode> out;
        for (const auto& [code, label] : labels_)
            if (code.partition == p) out.push_back(code);
        return out;
    }

    std::size_t size() const { return labels_.size(); }

    const std::map<CategoryCode, std::string>& all() const { return labels_; }

private:
    std::map<CategoryCode, std::string> labels_;
};

// Built-in category set: 8 measures, 14 data types, 9 research-question types.
inline Taxonomy default_taxonomy() {
    using P = Partition;
    std::vector<std::pair<CategoryCode, std::string>> entries = {
        {{P::Measure, 1}, "Regression-based Measures"},
        {{P::Measure, 2}, "Rank-based Measures"},
        {{P::Measure, 3}, "Transition Matrix / Probability Measures"},
        {{P::Measure, 4}, "Absolute Mobility Measures"},
        {{P::Measure, 5}, "Multigenerational Measures"},
        {{P::Measure, 6}, "Decomposition / Structural Approaches"},
        {{P::Measure, 7}, "Non-parametric Approaches"},
        {{P::Measure, 8}, "Others_Measure"},
        {{P::DataType, 1}, "Panel/Longitudinal Surveys"},
        {{P::DataType, 2}, "Administrative/Registry Data"},
        {{P::DataType, 3}, "National Survey Data"},
        {{P::DataType, 4}, "Opportunity Atlas"},
        {{P::DataType, 5}, "Natural/Experimental Data"},
        {{P::DataType, 6}, "Linked Administrative Data"},
        {{P::DataType, 7}, "International Panel Data"},
        {{P::DataType, 8}, "Rich List Data"},
        {{P::DataType, 9}, "University/Institution Data"},
        {{P::DataType, 10}, "Pseudo-Panel/Household Budget Survey"},
        {{P::DataType, 11}, "Archival/Historical Data"},
        {{P::DataType, 12}, "Big Data"},
        {{P::DataType, 13}, "No dataset"},
        {{P::DataType, 14}, "Others_DataType"},
        {{P::RqType, 1}, "Measurement and Methodological Advances"},
        {{P::RqType, 2}, "Empirical Estimates and Determinants"},
        {{P::RqType, 3}, "Policy, Institutional, and Geographic Impacts"},
        {{P::RqType, 4}, "Intergenerational Wealth Mobility and Inheritance"},
        {{P::RqType, 5}, "Demographic Differences in Mobility (Race, Gender, etc.)"},
        {{P::RqType, 6}, "Mobility and Non-Income Outcomes (Health, Wellbeing, etc.)"},
        {{P::RqType, 7}, "Theoretical and Structural Models"},
        {{P::RqType, 8}, "Perceptions of Mobility and Attitudes"},
        {{P::RqType, 9}, "Others_RqType"},
    };
    return Taxonomy(std::move(entries));
}

// Loads a taxonomy file: a JSON object with arrays "measures", "data_types"
// and "rq_types", each holding {"code": "M1", "label": "..."} entries.
inline Taxonomy load_taxonomy(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("MalformedJson", e.what());
    }
    if (!doc.is_object()) throw ParseError("MalformedJson", "taxonomy root must be an object");

    std::vector<std::pair<CategoryCode, std::string>> entries;
    const std::vector<std::pair<std::string, Partition>> sections = {
        {"measures", Partition::Measure},
        {"data_types", Partition::DataType},
        {"rq_types", Partition::RqType},
    };
    for (const auto& [key, partition] : sections) {
        if (!doc.contains(key) || !doc[key].is_array())
            throw ParseError("MalformedJson", "taxonomy is missing array '" + key + "'");
        for (const auto& item : doc[key]) {
            if (!item.is_object() || !item.contains("code") || !item.contains("label"))
                throw ParseError("MalformedJson", "taxonomy entries need 'code' and 'label'");
            const CategoryCode code = parse_code(item["code"].get<std::string>());
            if (code.partition != partition)
                throw ValidationError("WrongPartition", "code " + code.str() + " listed under '" + key + "'");
            entries.emplace_back(code, item["label"].get<std::string>());
        }
    }
    return Taxonomy(std::move(entries));
}

}  // namespace tkg
