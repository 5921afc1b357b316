#include "nepsent/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nepsent {

const char* to_string(SentimentClass c) {
    switch (c) {
        case SentimentClass::Negative:
            return "negative";
        case SentimentClass::Neutral:
            return "neutral";
        case SentimentClass::Positive:
            return "positive";
    }
    return "?";
}

std::optional<SentimentClass> parse_label(std::string_view token) {
    std::string lower;
    lower.reserve(token.size());
    for (char c : token)
        lower.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(c))));
    // trim surrounding blanks
    const auto b = lower.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::nullopt;
    const auto e = lower.find_last_not_of(" \t\r\n");
    lower = lower.substr(b, e - b + 1);

    if (lower == "negative" || lower == "0") return SentimentClass::Negative;
    if (lower == "neutral" || lower == "1") return SentimentClass::Neutral;
    if (lower == "positive" || lower == "2") return SentimentClass::Positive;
    return std::nullopt;
}

namespace {

// Reads one delimited record (RFC-4180 style quoting, so fields may span
// physical lines). `line_no` tracks the physical line where the record
// starts; on return it points past the record's last line.
bool read_record(std::istream& in, char delimiter, std::vector<std::string>& fields,
                 std::size_t& line_no) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;

    std::string field;
    bool in_quotes = false;
    bool any = false;
    while (true) {
        if (c == EOF) {
            fields.push_back(std::move(field));
            return true;
        }
        any = true;
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++line_no;
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty()) {
            in_quotes = true;
        } else if (ch == delimiter) {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\r') {
            if (in.peek() == '\n') in.get();
            ++line_no;
            fields.push_back(std::move(field));
            return true;
        } else if (ch == '\n') {
            ++line_no;
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
        }
        c = in.get();
    }
    (void)any;
}

std::size_t find_column(const std::vector<std::string>& header,
                        const std::string& name, const std::string& path) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::string h = header[i];
        // tolerate a UTF-8 BOM on the first header cell
        if (i == 0 && h.size() >= 3 && static_cast<unsigned char>(h[0]) == 0xEF &&
            static_cast<unsigned char>(h[1]) == 0xBB &&
            static_cast<unsigned char>(h[2]) == 0xBF)
            h = h.substr(3);
        if (h == name) return i;
    }
    throw DataError(path + ": header has no column named '" + name + "'");
}

}  // namespace

LabeledCorpus load_dataset(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open dataset file: " + path);

    std::size_t line_no = 1;
    std::vector<std::string> fields;
    if (!read_record(in, schema.delimiter, fields, line_no))
        throw DataError(path + ": empty file, expected a header row");

    const std::size_t text_idx = find_column(fields, schema.text_column, path);
    const std::size_t label_idx = find_column(fields, schema.label_column, path);
    const std::size_t width = fields.size();

    LabeledCorpus corpus;
    while (true) {
        const std::size_t record_line = line_no;
        if (!read_record(in, schema.delimiter, fields, line_no)) break;
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        if (fields.size() != width) {
            std::ostringstream os;
            os << path << ": line " << record_line << ": expected " << width
               << " fields, found " << fields.size();
            throw DataError(os.str());
        }
        const auto label = parse_label(fields[label_idx]);
        if (!label) {
            std::ostringstream os;
            os << path << ": line " << record_line << ": unknown label token '"
               << fields[label_idx] << "'";
            throw DataError(os.str());
        }
        corpus.class_counts[static_cast<int>(*label)]++;
        corpus.records.push_back({std::move(fields[text_idx]), *label});
    }
    return corpus;
}

SplitPlan stratified_splits(const LabeledCorpus& corpus, double ratio,
                            std::size_t n_folds, std::uint64_t seed) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("split ratio must lie in (0, 1)");
    if (n_folds < 1) throw std::invalid_argument("n_folds must be >= 1");
    for (int c = 0; c < kNumClasses; ++c) {
        if (corpus.class_counts[c] < 2) {
            throw DataError(std::string("class '") +
                            to_string(static_cast<SentimentClass>(c)) +
                            "' has fewer than 2 records; cannot split");
        }
    }

    std::array<std::vector<std::size_t>, kNumClasses> by_class;
    for (std::size_t i = 0; i < corpus.records.size(); ++i)
        by_class[static_cast<int>(corpus.records[i].label)].push_back(i);

    SplitPlan plan;
    plan.ratio = ratio;
    plan.seed = seed;
    plan.folds.reserve(n_folds);
    for (std::size_t f = 0; f < n_folds; ++f) {
        Rng rng(seed + f);
        Fold fold;
        for (int c = 0; c < kNumClasses; ++c) {
            std::vector<std::size_t> indices = by_class[c];
            rng.shuffle(indices);
            // round to nearest, ties toward train
            const auto train_n = static_cast<std::size_t>(
                std::floor(ratio * static_cast<double>(indices.size()) + 0.5));
            fold.train_indices.insert(fold.train_indices.end(), indices.begin(),
                                      indices.begin() + train_n);
            fold.test_indices.insert(fold.test_indices.end(),
                                     indices.begin() + train_n, indices.end());
        }
        std::sort(fold.train_indices.begin(), fold.train_indices.end());
        std::sort(fold.test_indices.begin(), fold.test_indices.end());
        plan.folds.push_back(std::move(fold));
    }
    return plan;
}

}  // namespace nepsent
