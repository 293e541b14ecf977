#ifndef XULOSA_NORMALIZER_HPP
#define XULOSA_NORMALIZER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xulosa {

/// A normalized word with provenance. Offsets are Unicode codepoint
/// positions (not bytes) into the text the token was produced from;
/// tokens coming out of analyze() always refer to the raw input text.
struct Token {
  std::string surface;
  std::size_t char_start = 0;
  std::size_t char_end = 0;    // exclusive
  std::size_t orig_index = 0;  // position in the original token sequence

  friend bool operator==(const Token&, const Token&) = default;
};

/// Half-open interval.
struct Range {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin >= end; }
  friend bool operator==(const Range&, const Range&) = default;
};

struct Sentence {
  std::size_t char_start = 0;
  std::size_t char_end = 0;  // exclusive, codepoint offsets into raw text
  Range token_range;         // orig_index interval, filled by map_tokens_to_sentences
};

/// Normalized text plus, per output codepoint, the index of the source
/// codepoint it came from (composition can merge two source codepoints;
/// the merged character maps to its base).
struct NormalizedText {
  std::string text;
  std::vector<std::size_t> source_offsets;
};

/// Lowercases, unifies apostrophe-like characters after o/g into the Uzbek
/// modifier letter U+02BB, and canonically composes combining marks so that
/// equal-looking letters compare equal. Throws Error(EncodingError) on
/// invalid UTF-8.
std::string normalize_text(std::string_view raw);

/// Same as normalize_text but keeps the output-to-source offset map.
NormalizedText normalize_text_mapped(std::string_view raw);

/// Splits normalized text into word tokens. A word is a maximal run of
/// ASCII letters and the U+02BB modifier; everything else (digits included)
/// is a separator. Spans are codepoint offsets into `normalized`.
std::vector<Token> tokenize(std::string_view normalized);

/// Sentence boundaries are at `.`, `!`, `?`, `…` runs followed by whitespace
/// or end of text; a trailing fragment without a terminator forms a final
/// sentence. Returned token_range fields are empty until mapped.
std::vector<Sentence> split_sentences(std::string_view raw);

/// Fills each sentence's token_range from tokens carrying raw-text spans.
/// Every token lands in exactly one sentence.
void map_tokens_to_sentences(std::vector<Sentence>& sentences,
                             std::span<const Token> tokens);

/// normalize + tokenize with token spans remapped to the raw input text.
std::vector<Token> analyze(std::string_view raw);

}  // namespace xulosa

#endif  // XULOSA_NORMALIZER_HPP
