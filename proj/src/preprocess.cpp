#include "nepsent/preprocess.hpp"

#include <algorithm>
#include <fstream>

#include "nepsent/common.hpp"
#include "nepsent/utf8.hpp"

namespace nepsent {

namespace {

// Devanagari sentence punctuation, digits and the abbreviation sign are
// stripped along with the generic punctuation classes; the rest of the
// block (letters and dependent signs) is retained.
bool keep_codepoint(char32_t cp) {
    if (utf8::is_devanagari(cp)) {
        if (cp == 0x0964 || cp == 0x0965 || cp == 0x0970) return false;  // danda etc.
        if (cp >= 0x0966 && cp <= 0x096F) return false;                  // digits
        return true;
    }
    if (cp < 0x80) return false;                      // all ASCII
    if (cp >= 0x2000 && cp <= 0x206F) return false;   // general punctuation
    if (cp >= 0x2190 && cp <= 0x2BFF) return false;   // arrows, symbols, dingbats
    if (cp >= 0x3000 && cp <= 0x303F) return false;   // CJK punctuation
    if (cp >= 0xFE00 && cp <= 0xFE0F) return false;   // variation selectors
    if (cp >= 0x1F000 && cp <= 0x1FAFF) return false; // emoji planes
    if (cp == utf8::kReplacement) return false;
    return true;
}

std::string strip_token(const std::string& token) {
    const auto cps = utf8::decode(token);
    std::vector<char32_t> kept;
    kept.reserve(cps.size());
    for (char32_t cp : cps)
        if (keep_codepoint(cp)) kept.push_back(cp);
    if (kept.empty()) return {};
    if (kept.size() == 1 && utf8::is_devanagari_combining(kept[0])) return {};
    return utf8::encode(kept);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void PreprocessConfig::normalize() {
    std::sort(suffixes.begin(), suffixes.end(),
              [](const std::string& a, const std::string& b) {
                  const auto la = utf8::codepoint_count(a);
                  const auto lb = utf8::codepoint_count(b);
                  if (la != lb) return la > lb;
                  return a < b;
              });
    suffixes.erase(std::unique(suffixes.begin(), suffixes.end()),
                   suffixes.end());
}

std::vector<std::string> load_token_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open resource file: " + path);
    std::vector<std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        entries.push_back(line.substr(b, e - b + 1));
    }
    return entries;
}

PreprocessConfig load_preprocess_config(const std::string& stopwords_path,
                                        const std::string& suffixes_path,
                                        std::size_t min_stem_length) {
    if (min_stem_length < 1)
        throw std::invalid_argument("min_stem_length must be >= 1");
    PreprocessConfig config;
    for (auto& w : load_token_lines(stopwords_path))
        config.stopwords.insert(std::move(w));
    config.suffixes = load_token_lines(suffixes_path);
    config.min_stem_length = min_stem_length;
    config.normalize();
    return config;
}

std::string stem(const std::string& token, const PreprocessConfig& config) {
    const std::size_t token_len = utf8::codepoint_count(token);
    for (const auto& suffix : config.suffixes) {
        if (!ends_with(token, suffix)) continue;
        const std::size_t suffix_len = utf8::codepoint_count(suffix);
        if (token_len < suffix_len + config.min_stem_length) continue;
        return token.substr(0, token.size() - suffix.size());
    }
    return token;
}

TokenList preprocess(std::string_view raw, const PreprocessConfig& config) {
    // 1. whitespace tokenization
    std::vector<std::string> tokens;
    {
        const auto cps = utf8::decode(raw);
        std::vector<char32_t> current;
        for (char32_t cp : cps) {
            if (utf8::is_whitespace(cp)) {
                if (!current.empty()) {
                    tokens.push_back(utf8::encode(current));
                    current.clear();
                }
            } else {
                current.push_back(cp);
            }
        }
        if (!current.empty()) tokens.push_back(utf8::encode(current));
    }

    TokenList out;
    out.reserve(tokens.size());
    for (auto& token : tokens) {
        // 2. stopword removal on the raw token
        if (config.stopwords.count(token)) continue;
        // 3. character stripping
        std::string stripped = strip_token(token);
        if (stripped.empty()) continue;
        // 4. stemming
        std::string stemmed = stem(stripped, config);
        // a cleaned token may have collapsed onto a stopword; those are
        // uninformative by definition, so they are dropped here too
        if (config.stopwords.count(stemmed)) continue;
        out.push_back(std::move(stemmed));
    }
    return out;
}

}  // namespace nepsent
