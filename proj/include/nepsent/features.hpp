#ifndef NEPSENT_FEATURES_HPP
#define NEPSENT_FEATURES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "nepsent/corpus.hpp"
#include "nepsent/preprocess.hpp"

namespace nepsent {

/// 403-dimensional tweet representation under the default configuration
/// (300 embedding + 100 bag-of-words + 3 class-probability entries).
using HybridVector = std::vector<double>;

struct EmbeddingTable {
    std::size_t dimension = 0;
    std::unordered_map<std::string, std::vector<double>> vectors;
    // provenance, recorded in serialized feature models
    std::string source_path;
    std::uint64_t source_hash = 0;
};

/// Parses a word-vector text file: header "count dim", then one token and
/// `dim` reals per line. Duplicate tokens keep their first occurrence;
/// wrong arity or non-finite values abort with the line number.
EmbeddingTable load_embeddings(const std::string& path,
                               std::size_t expected_dim);

struct BowModel {
    std::vector<std::string> vocabulary;  // frequency desc, ties lexicographic
    std::vector<double> idf;              // aligned with vocabulary
    std::size_t doc_count = 0;
    std::unordered_map<std::string, std::size_t> index;

    void rebuild_index();
};

struct DsModel {
    /// token -> p(class | token), order Negative, Neutral, Positive.
    std::unordered_map<std::string, std::array<double, kNumClasses>> table;
    double smoothing_alpha = 1.0;
};

struct FeatureModel {
    EmbeddingTable embeddings;
    BowModel bow;
    DsModel ds;

    std::size_t hybrid_dimension() const {
        return embeddings.dimension + bow.vocabulary.size() + kNumClasses;
    }
};

struct TokenizedDoc {
    TokenList tokens;
    SentimentClass label;
};

/// Fits vocabulary/idf and the per-token class-probability table on the
/// training documents only; embeddings pass through unchanged. If fewer
/// distinct tokens exist than bow_size, the vocabulary shrinks with a
/// warning on stderr and the hybrid dimension adjusts.
FeatureModel fit_feature_model(const std::vector<TokenizedDoc>& train,
                               EmbeddingTable embeddings, std::size_t bow_size,
                               double alpha);

/// Mean of the embedding vectors of known tokens; zero vector if none are
/// known. Accumulation runs in sorted-token order, so the result is exactly
/// invariant under permutations of the token list.
std::vector<double> ft_features(const TokenList& tokens,
                                const FeatureModel& model);

/// tf * idf over the fitted vocabulary, L2-normalized unless the norm is 0.
std::vector<double> bow_features(const TokenList& tokens,
                                 const FeatureModel& model);

/// Mean of per-token class-probability rows; uniform (1/3,1/3,1/3) when no
/// token is known.
std::array<double, kNumClasses> ds_features(const TokenList& tokens,
                                            const FeatureModel& model);

/// Concatenation [ft | bow | ds], in that fixed order.
HybridVector hybrid_features(const TokenList& tokens,
                             const FeatureModel& model);

/// JSON round trip. Embedding vectors are stored by reference (path + FNV-1a
/// content hash), not inline.
nlohmann::json feature_model_to_json(const FeatureModel& model);
FeatureModel feature_model_from_json(const nlohmann::json& j,
                                     EmbeddingTable embeddings);
/// Loads the model and re-reads the embeddings from the recorded path,
/// verifying the content hash.
FeatureModel load_feature_model(const std::string& json_path,
                                const std::string& embeddings_override = "");

}  // namespace nepsent

#endif
