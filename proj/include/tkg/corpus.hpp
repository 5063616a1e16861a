#pragma once

#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tkg/category.hpp"
#include "tkg/csv.hpp"
#include "tkg/errors.hpp"
#include "tkg/taxonomy.hpp"

namespace tkg {

// One publication: identifier, calendar year, and its category triplet.
struct PaperRecord {
    std::string paper_id;
    int year{};
    CategoryCode measure;
    CategoryCode data_type;
    CategoryCode rq_type;
};

struct Period {
    std::string label;
    int year_min{};
    int year_max{};
};

// Ordered, non-overlapping, contiguous year intervals covering the corpus range.
class PeriodSpec {
public:
    explicit PeriodSpec(std::vector<Period> periods) : periods_(std::move(periods)) {
        if (periods_.empty()) throw ValidationError("EmptyPeriodSpec", "no periods given");
        std::set<std::string> labels;
        for (std::size_t i = 0; i < periods_.size(); ++i) {
            const auto& p = periods_[i];
            if (p.year_min > p.year_max)
                throw ValidationError("BadPeriod", "period " + p.label + " has year_min > year_max");
            if (!labels.insert(p.label).second)
                throw ValidationError("DuplicatePeriodLabel", "duplicate period label " + p.label);
            if (i > 0 && p.year_min != periods_[i - 1].year_max + 1)
                throw ValidationError("PeriodGap",
                                      "periods " + periods_[i - 1].label + " and " + p.label +
                                          " are not contiguous ascending intervals");
        }
    }

    const std::vector<Period>& periods() const { return periods_; }
    int year_min() const { return periods_.front().year_min; }
    int year_max() const { return periods_.back().year_max; }

    bool covers(int year) const { return year >= year_min() && year <= year_max(); }

    const std::string& label_for(int year) const {
        for (const auto& p : periods_)
            if (year >= p.year_min && year <= p.year_max) return p.label;
        throw DomainError("YearOutOfRange", std::to_string(year) + " is outside the period coverage");
    }

private:
    std::vector<Period> periods_;
};

// T1 pre-2000 (from 1976) through T6 2021-2025.
inline PeriodSpec default_period_spec() {
    return PeriodSpec({
        {"T1", 1976, 2000},
        {"T2", 2001, 2005},
        {"T3", 2006, 2010},
        {"T4", 2011, 2015},
        {"T5", 2016, 2020},
        {"T6", 2021, 2025},
    });
}

// Loads a JSON array of {"label": "T1", "year_min": 1976, "year_max": 2000}.
inline PeriodSpec load_period_spec(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("MalformedJson", e.what());
    }
    if (!doc.is_array()) throw ParseError("MalformedJson", "period spec must be a JSON array");
    std::vector<Period> periods;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("label") || !item.contains("year_min") ||
            !item.contains("year_max"))
            throw ParseError("MalformedJson", "period entries need label, year_min, year_max");
        periods.push_back(Period{item["label"].get<std::string>(), item["year_min"].get<int>(),
                                 item["year_max"].get<int>()});
    }
    return PeriodSpec(std::move(periods));
}

// Validated immutable corpus. Records keep their input order.
struct Corpus {
    std::vector<PaperRecord> records;
    Taxonomy taxonomy;
    PeriodSpec period_spec;
};

enum class CorpusFormat { Csv, Json };

namespace detail {

inline void validate_record(const PaperRecord& r, const Taxonomy& taxonomy, const PeriodSpec& spec,
                            std::set<std::string>& seen_ids, std::size_t line) {
    if (r.paper_id.empty()) throw ParseError("MalformedRow", "empty paper_id", line);
    for (CategoryCode c : {r.measure, r.data_type, r.rq_type})
        if (!taxonomy.contains(c))
            throw ValidationError("UnknownCategory",
                                  "'" + c.str() + "' (paper " + r.paper_id + ") is not in the taxonomy");
    if (r.measure.partition != Partition::Measure || r.data_type.partition != Partition::DataType ||
        r.rq_type.partition != Partition::RqType)
        throw ValidationError("WrongPartition", "paper " + r.paper_id + " has a code in the wrong column");
    if (!spec.covers(r.year))
        throw ValidationError("YearOutOfRange", "paper " + r.paper_id + " year " + std::to_string(r.year) +
                                                    " is outside " + std::to_string(spec.year_min()) + "-" +
                                                    std::to_string(spec.year_max()));
    if (!seen_ids.insert(r.paper_id).second)
        throw ValidationError("DuplicatePaperId", "duplicate paper_id '" + r.paper_id + "'");
}

inline int parse_year(const std::string& text, std::size_t line) {
    if (text.empty()) throw ParseError("MalformedRow", "empty year field", line);
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw ParseError("MalformedRow", "bad year '" + text + "'", line);
        value = value * 10 + (c - '0');
        if (value > 1000000) throw ParseError("MalformedRow", "bad year '" + text + "'", line);
    }
    return value;
}

inline CategoryCode parse_code_field(const std::string& text, const char* field, std::size_t line) {
    auto code = try_parse_code(text);
    if (!code) throw ParseError("MalformedRow", std::string("bad ") + field + " code '" + text + "'", line);
    return *code;
}

inline Corpus load_corpus_csv(std::istream& in, Taxonomy taxonomy, PeriodSpec spec) {
    static const std::vector<std::string> kHeader = {"paper_id", "year", "measure", "data_type", "rq_type"};
    auto rows = csv::read_all(in);
    if (rows.empty()) throw ParseError("MalformedRow", "missing header row");
    {
        std::vector<std::string> got;
        for (const auto& f : rows.front().fields) got.push_back(csv::trim(f));
        if (got != kHeader)
            throw ParseError("MalformedRow", "header must be paper_id,year,measure,data_type,rq_type",
                             rows.front().line_no);
    }

    std::vector<PaperRecord> records;
    std::set<std::string> seen_ids;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.fields.size() != 5)
            throw ParseError("MalformedRow",
                             "expected 5 fields, got " + std::to_string(row.fields.size()), row.line_no);
        PaperRecord r;
        r.paper_id = csv::trim(row.fields[0]);
        r.year = parse_year(csv::trim(row.fields[1]), row.line_no);
        r.measure = parse_code_field(csv::trim(row.fields[2]), "measure", row.line_no);
        r.data_type = parse_code_field(csv::trim(row.fields[3]), "data_type", row.line_no);
        r.rq_type = parse_code_field(csv::trim(row.fields[4]), "rq_type", row.line_no);
        validate_record(r, taxonomy, spec, seen_ids, row.line_no);
        records.push_back(std::move(r));
    }
    return Corpus{std::move(records), std::move(taxonomy), std::move(spec)};
}

inline Corpus load_corpus_json(std::istream& in, Taxonomy taxonomy, PeriodSpec spec) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("MalformedJson", e.what());
    }
    if (!doc.is_array()) throw ParseError("MalformedJson", "corpus must be a JSON array");

    std::vector<PaperRecord> records;
    std::set<std::string> seen_ids;
    std::size_t index = 0;
    for (const auto& item : doc) {
        ++index;
        for (const char* key : {"paper_id", "year", "measure", "data_type", "rq_type"})
            if (!item.contains(key))
                throw ParseError("MalformedRow", "record " + std::to_string(index) + " is missing '" + key + "'");
        PaperRecord r;
        r.paper_id = item["paper_id"].get<std::string>();
        if (!item["year"].is_number_integer())
            throw ParseError("MalformedRow", "record " + std::to_string(index) + " has a non-integer year");
        r.year = item["year"].get<int>();
        r.measure = parse_code_field(item["measure"].get<std::string>(), "measure", index);
        r.data_type = parse_code_field(item["data_type"].get<std::string>(), "data_type", index);
        r.rq_type = parse_code_field(item["rq_type"].get<std::string>(), "rq_type", index);
        validate_record(r, taxonomy, spec, seen_ids, index);
        records.push_back(std::move(r));
    }
    return Corpus{std::move(records), std::move(taxonomy), std::move(spec)};
}

}  // namespace detail

inline Corpus load_corpus(std::istream& in, CorpusFormat format, Taxonomy taxonomy, PeriodSpec spec) {
    switch (format) {
        case CorpusFormat::Csv: return detail::load_corpus_csv(in, std::move(taxonomy), std::move(spec));
        case CorpusFormat::Json: return detail::load_corpus_json(in, std::move(taxonomy), std::move(spec));
    }
    throw DomainError("BadFormat", "unknown corpus format");
}

// Buckets records by period, preserving input order inside each bucket.
// Every record lands in exactly one bucket (validation guarantees coverage).
inline std::map<std::string, std::vector<PaperRecord>> partition_by_period(const Corpus& corpus) {
    std::map<std::string, std::vector<PaperRecord>> buckets;
    for (const auto& p : corpus.period_spec.periods()) buckets[p.label];
    for (const auto& r : corpus.records) buckets[corpus.period_spec.label_for(r.year)].push_back(r);
    return buckets;
}

}  // namespace tkg
