#ifndef NEPSENT_PREPROCESS_HPP
#define NEPSENT_PREPROCESS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace nepsent {

/// Tokens that survived the cleaning pipeline. Never contains whitespace,
/// stopwords, or characters from the strip classes.
using TokenList = std::vector<std::string>;

struct PreprocessConfig {
    std::unordered_set<std::string> stopwords;
    /// Strippable suffixes, longest first (codepoints, ties by bytes).
    std::vector<std::string> suffixes;
    std::size_t min_stem_length = 2;  // codepoints that must remain after stripping

    /// Sorts the suffix list into its canonical longest-first order.
    void normalize();
};

/// Loads stopwords.txt / suffixes.txt resources: UTF-8, one entry per line,
/// '#' starts a comment, blank lines ignored.
std::vector<std::string> load_token_lines(const std::string& path);
PreprocessConfig load_preprocess_config(const std::string& stopwords_path,
                                        const std::string& suffixes_path,
                                        std::size_t min_stem_length = 2);

/// Strips the single longest matching suffix, provided the remainder keeps at
/// least min_stem_length codepoints. Applied at most once, never iterated.
std::string stem(const std::string& token, const PreprocessConfig& config);

/// Full cleaning pipeline, in fixed order: whitespace tokenization, stopword
/// removal, character stripping (Latin alphanumerics, digits, punctuation,
/// symbols/emoji; URLs and @mentions dissolve entirely), then stemming.
/// Tokens emptied by stripping are dropped, as is a lone combining mark.
TokenList preprocess(std::string_view raw, const PreprocessConfig& config);

}  // namespace nepsent

#endif
