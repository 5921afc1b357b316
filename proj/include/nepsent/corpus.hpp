#ifndef NEPSENT_CORPUS_HPP
#define NEPSENT_CORPUS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nepsent/common.hpp"

namespace nepsent {

/// Sentiment classes in their canonical index order. Every probability
/// vector, confusion matrix axis and label column in the project follows
/// this order.
enum class SentimentClass : int { Negative = 0, Neutral = 1, Positive = 2 };

inline constexpr int kNumClasses = 3;

const char* to_string(SentimentClass c);

/// Accepts case-insensitive class names or the numeric codes 0/1/2
/// (0=Negative, 1=Neutral, 2=Positive). Returns nullopt for anything else.
std::optional<SentimentClass> parse_label(std::string_view token);

struct LabeledRecord {
    std::string text;
    SentimentClass label;
};

struct LabeledCorpus {
    std::vector<LabeledRecord> records;
    std::array<std::size_t, kNumClasses> class_counts{};

    std::size_t size() const { return records.size(); }
};

/// Column layout of a delimited dataset file. Header row is required.
struct CsvSchema {
    std::string text_column = "text";
    std::string label_column = "label";
    char delimiter = ',';
};

/// Reads a labeled tweet dataset from a CSV/TSV file. Quoted fields may
/// contain the delimiter and embedded newlines. Rows with a missing column
/// or an unknown label abort the load with the offending line number.
LabeledCorpus load_dataset(const std::string& path, const CsvSchema& schema);

struct Fold {
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
};

struct SplitPlan {
    std::vector<Fold> folds;
    double ratio = 0.7;
    std::uint64_t seed = 0;
};

/// Draws n_folds independent stratified shuffles. Per class, the train share
/// is round(ratio * class_size) with ties toward train; fold i is seeded with
/// seed + i so any fold can be regenerated on its own. Index lists are sorted.
SplitPlan stratified_splits(const LabeledCorpus& corpus, double ratio,
                            std::size_t n_folds, std::uint64_t seed);

}  // namespace nepsent

#endif
