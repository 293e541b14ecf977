#include "xulosa/summarizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "xulosa/utf8.hpp"

namespace xulosa {

namespace {

constexpr const char* kGramSeparator = " … ";  // " … "

std::vector<std::string> window(std::span<const Token> tokens,
                                std::size_t start, std::size_t len) {
  std::vector<std::string> words;
  words.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    words.push_back(tokens[start + i].surface);
  }
  return words;
}

/// Emits the first min(budget, |segment|) tokens; used when the segment is
/// too short to hold a single gram or the budget too small for one.
Summary emit_plain_tokens(std::span<const Token> segment, std::size_t budget,
                          SummaryMode mode) {
  Summary summary;
  summary.mode = mode;
  summary.budget = budget;
  const std::size_t take = std::min(budget, segment.size());
  std::string text;
  for (std::size_t i = 0; i < take; ++i) {
    if (i > 0) text += ' ';
    text += segment[i].surface;
  }
  summary.text = std::move(text);
  summary.word_count = take;
  summary.truncated = take < segment.size();
  if (take > 0) {
    summary.selected.push_back(
        {segment[0].char_start, segment[take - 1].char_end});
  }
  return summary;
}

}  // namespace

std::size_t NgramModel::count(std::span<const std::string> gram) const {
  auto it = counts.find(std::vector<std::string>(gram.begin(), gram.end()));
  return it == counts.end() ? 0 : it->second;
}

NgramModel build_ngram_model(std::span<const Token> segment, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("gram order must be >= 1");
  }
  if (segment.empty()) {
    throw std::invalid_argument("segment must not be empty");
  }
  NgramModel model;
  model.n = n;
  model.total_tokens = segment.size();
  std::set<std::string> distinct;
  for (const auto& token : segment) {
    distinct.insert(token.surface);
  }
  model.vocab_size = distinct.size();
  for (std::size_t len = 1; len <= n && len <= segment.size(); ++len) {
    for (std::size_t i = 0; i + len <= segment.size(); ++i) {
      ++model.counts[window(segment, i, len)];
    }
  }
  return model;
}

double gram_score(const NgramModel& model,
                  std::span<const std::string> gram) {
  if (gram.size() != model.n) {
    throw std::invalid_argument("gram length does not match model order");
  }
  const double vocab = static_cast<double>(model.vocab_size);
  if (model.n == 1) {
    const double c = static_cast<double>(model.count(gram));
    return std::log((c + 1.0) /
                    (static_cast<double>(model.total_tokens) + vocab));
  }
  double score = 0.0;
  for (std::size_t j = 2; j <= model.n; ++j) {
    const double extended =
        static_cast<double>(model.count(gram.subspan(0, j)));
    const double context =
        static_cast<double>(model.count(gram.subspan(0, j - 1)));
    score += std::log((extended + 1.0) / (context + vocab));
  }
  return score;
}

Summary summarize_tokens(std::span<const Token> segment,
                         const NgramModel& model, std::size_t budget) {
  if (budget < 1) {
    throw std::invalid_argument("budget must be >= 1");
  }
  if (!model.has_grams() || budget < model.n) {
    return emit_plain_tokens(segment, budget, SummaryMode::token);
  }
  const std::size_t n = model.n;

  // Distinct grams anchored at their first occurrence.
  struct Candidate {
    std::size_t first_pos;
    double score;
  };
  std::map<std::vector<std::string>, std::size_t> first_seen;
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i + n <= segment.size(); ++i) {
    auto key = window(segment, i, n);
    if (first_seen.emplace(std::move(key), i).second) {
      candidates.push_back({i, 0.0});
    }
  }
  for (auto& candidate : candidates) {
    const auto words = window(segment, candidate.first_pos, n);
    candidate.score = gram_score(model, words);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.first_pos < b.first_pos;
            });

  std::vector<bool> occupied(segment.size(), false);
  std::vector<std::size_t> accepted;
  std::size_t words_used = 0;
  for (const auto& candidate : candidates) {
    bool overlaps = false;
    for (std::size_t i = candidate.first_pos;
         i < candidate.first_pos + n && !overlaps; ++i) {
      overlaps = occupied[i];
    }
    if (overlaps) {
      continue;
    }
    if (words_used + n > budget) {
      break;
    }
    for (std::size_t i = candidate.first_pos; i < candidate.first_pos + n; ++i) {
      occupied[i] = true;
    }
    accepted.push_back(candidate.first_pos);
    words_used += n;
  }
  std::sort(accepted.begin(), accepted.end());

  Summary summary;
  summary.mode = SummaryMode::token;
  summary.budget = budget;
  summary.word_count = words_used;
  for (std::size_t a = 0; a < accepted.size(); ++a) {
    const std::size_t start = accepted[a];
    if (a > 0) summary.text += kGramSeparator;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) summary.text += ' ';
      summary.text += segment[start + i].surface;
    }
    summary.selected.push_back(
        {segment[start].char_start, segment[start + n - 1].char_end});
  }
  return summary;
}

Summary summarize_sentences(const SegmentDecision& decision,
                            std::span<const Sentence> sentences,
                            std::span<const Token> tokens,
                            std::string_view raw_text,
                            const NgramModel& model, std::size_t budget) {
  if (budget < 1) {
    throw std::invalid_argument("budget must be >= 1");
  }
  constexpr double kUnscorable = -std::numeric_limits<double>::infinity();

  struct Candidate {
    std::size_t index;       // position in the sentence list
    const Sentence* sentence;
    std::size_t words;
    double score;
  };
  std::vector<Candidate> candidates;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto& sentence = sentences[s];
    const bool overlaps = sentence.char_start < decision.char_range.end &&
                          decision.char_range.begin < sentence.char_end;
    if (!overlaps) {
      continue;
    }
    const auto range = sentence.token_range;
    const std::size_t words = range.size();
    double score = kUnscorable;
    if (words >= model.n) {
      const auto sentence_tokens = tokens.subspan(range.begin, words);
      double sum = 0.0;
      std::size_t grams = 0;
      for (std::size_t i = 0; i + model.n <= words; ++i) {
        sum += gram_score(model, window(sentence_tokens, i, model.n));
        ++grams;
      }
      score = sum / static_cast<double>(grams);
    }
    candidates.push_back({s, &sentence, words, score});
  }

  std::vector<const Candidate*> ranked;
  for (const auto& candidate : candidates) {
    ranked.push_back(&candidate);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const Candidate* a, const Candidate* b) {
              if (a->score != b->score) return a->score > b->score;
              return a->index < b->index;
            });

  std::vector<const Candidate*> accepted;
  std::size_t words_used = 0;
  for (const Candidate* candidate : ranked) {
    if (candidate->score == kUnscorable) {
      continue;
    }
    if (candidate->words > 0 && words_used + candidate->words <= budget) {
      accepted.push_back(candidate);
      words_used += candidate->words;
    }
  }
  if (accepted.empty()) {
    // Short sentences are only considered when nothing scoreable fits.
    for (const Candidate* candidate : ranked) {
      if (candidate->score != kUnscorable) {
        continue;
      }
      if (candidate->words > 0 && words_used + candidate->words <= budget) {
        accepted.push_back(candidate);
        words_used += candidate->words;
      }
    }
  }

  Summary summary;
  summary.mode = SummaryMode::sentence;
  summary.budget = budget;

  if (accepted.empty()) {
    // Nothing fits: truncate the best candidate to the budget.
    const Candidate* best = nullptr;
    for (const Candidate* candidate : ranked) {
      if (candidate->words > 0) {
        best = candidate;
        break;
      }
    }
    if (best == nullptr) {
      return summary;
    }
    const auto range = best->sentence->token_range;
    const std::size_t take = std::min(budget, best->words);
    const std::size_t end_char = take > 0
        ? tokens[range.begin + take - 1].char_end
        : best->sentence->char_end;
    summary.text = utf8::slice(raw_text, best->sentence->char_start, end_char);
    summary.word_count = take;
    summary.truncated = true;
    summary.selected.push_back({best->sentence->char_start, end_char});
    return summary;
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const Candidate* a, const Candidate* b) {
              return a->index < b->index;
            });
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    const auto& sentence = *accepted[i]->sentence;
    if (i > 0) summary.text += ' ';
    summary.text +=
        utf8::slice(raw_text, sentence.char_start, sentence.char_end);
    summary.selected.push_back({sentence.char_start, sentence.char_end});
  }
  summary.word_count = words_used;
  return summary;
}

}  // namespace xulosa
