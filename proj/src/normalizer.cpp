#include "xulosa/normalizer.hpp"

#include <algorithm>

#include "xulosa/error.hpp"
#include "xulosa/utf8.hpp"
#include "unicode_data.hpp"

namespace xulosa {

namespace {

constexpr char32_t kUzbekModifier = 0x02BB;  // ʻ as in oʻ / gʻ

bool is_apostrophe_like(char32_t cp) {
  return cp == 0x0027 || cp == 0x2018 || cp == 0x2019 || cp == 0x0060 ||
         cp == 0x02BC;
}

bool is_combining_mark(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

bool is_word_char(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || cp == kUzbekModifier;
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == 0x00A0;
}

bool is_terminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;
}

struct NormalizedCps {
  std::vector<char32_t> cps;
  std::vector<std::size_t> src;
};

NormalizedCps normalize_codepoints(std::string_view raw) {
  const auto input = utf8::decode(raw);
  NormalizedCps out;
  out.cps.reserve(input.size());
  out.src.reserve(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    char32_t cp = input[i];
    // Canonical composition: fold a combining mark into the preceding
    // character when a precomposed form exists.
    if (!out.cps.empty() && is_combining_mark(cp)) {
      if (char32_t composed = detail::compose_pair(out.cps.back(), cp)) {
        out.cps.back() = composed;
        continue;
      }
    }
    cp = detail::to_lower(cp);
    if (is_apostrophe_like(cp) && !out.cps.empty() &&
        (out.cps.back() == U'o' || out.cps.back() == U'g')) {
      cp = kUzbekModifier;
    }
    out.cps.push_back(cp);
    out.src.push_back(i);
  }
  return out;
}

}  // namespace

std::string normalize_text(std::string_view raw) {
  return utf8::encode(normalize_codepoints(raw).cps);
}

NormalizedText normalize_text_mapped(std::string_view raw) {
  auto norm = normalize_codepoints(raw);
  return {utf8::encode(norm.cps), std::move(norm.src)};
}

std::vector<Token> tokenize(std::string_view normalized) {
  const auto cps = utf8::decode(normalized);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!is_word_char(cps[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    std::string surface;
    while (i < cps.size() && is_word_char(cps[i])) {
      utf8::append(surface, cps[i]);
      ++i;
    }
    tokens.push_back(
        {std::move(surface), start, i, tokens.size()});
  }
  return tokens;
}

std::vector<Sentence> split_sentences(std::string_view raw) {
  const auto cps = utf8::decode(raw);
  std::vector<Sentence> sentences;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i])) {
      ++i;
    }
    if (i >= cps.size()) {
      break;
    }
    const std::size_t start = i;
    std::size_t end = 0;
    bool terminated = false;
    while (i < cps.size()) {
      if (is_terminator(cps[i])) {
        std::size_t run_end = i;
        while (run_end < cps.size() && is_terminator(cps[run_end])) {
          ++run_end;
        }
        if (run_end >= cps.size() || is_space(cps[run_end])) {
          end = run_end;
          i = run_end;
          terminated = true;
          break;
        }
        i = run_end;  // e.g. "3.14" or "A.Qodiriy": not a boundary
      } else {
        ++i;
      }
    }
    if (!terminated) {
      // Trailing fragment: trim whitespace off the end.
      end = cps.size();
      while (end > start && is_space(cps[end - 1])) {
        --end;
      }
    }
    if (end > start) {
      sentences.push_back({start, end, {}});
    }
  }
  return sentences;
}

void map_tokens_to_sentences(std::vector<Sentence>& sentences,
                             std::span<const Token> tokens) {
  std::size_t t = 0;
  for (auto& sentence : sentences) {
    while (t < tokens.size() && tokens[t].char_start < sentence.char_start) {
      ++t;
    }
    const std::size_t first = t;
    while (t < tokens.size() && tokens[t].char_start < sentence.char_end) {
      ++t;
    }
    sentence.token_range = {first, t};
  }
}

std::vector<Token> analyze(std::string_view raw) {
  const auto norm = normalize_text_mapped(raw);
  auto tokens = tokenize(norm.text);
  for (auto& token : tokens) {
    // Word characters are never produced by composition, so each maps 1:1
    // to a source codepoint and spans stay contiguous.
    token.char_end = norm.source_offsets[token.char_end - 1] + 1;
    token.char_start = norm.source_offsets[token.char_start];
  }
  return tokens;
}

}  // namespace xulosa
