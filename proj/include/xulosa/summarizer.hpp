#ifndef XULOSA_SUMMARIZER_HPP
#define XULOSA_SUMMARIZER_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xulosa/normalizer.hpp"
#include "xulosa/selector.hpp"

namespace xulosa {

enum class SummaryMode { token, sentence };

/// Sliding-window gram counts over a token segment. Counts are kept for
/// every window length 1..n so conditional chains can be evaluated with
/// add-one smoothing.
struct NgramModel {
  std::size_t n = 3;
  std::map<std::vector<std::string>, std::size_t> counts;
  std::size_t vocab_size = 0;   // distinct words in the segment
  std::size_t total_tokens = 0;

  std::size_t count(std::span<const std::string> gram) const;
  bool has_grams() const { return total_tokens >= n; }
};

struct Summary {
  std::string text;
  std::size_t word_count = 0;
  SummaryMode mode = SummaryMode::token;
  std::size_t budget = 0;
  bool truncated = false;
  std::vector<Range> selected;  // original-text char ranges, ascending
};

NgramModel build_ngram_model(std::span<const Token> segment, std::size_t n);

/// Log-probability of an n-word gram under the model. For n >= 2 this is
/// the forward conditional chain sum over j = 2..n of
/// ln (count(w_1..w_j) + 1) / (count(w_1..w_{j-1}) + vocab_size);
/// for n = 1 it is the add-one unigram log-probability, so scores reduce to
/// term-frequency ranking.
double gram_score(const NgramModel& model, std::span<const std::string> gram);

/// Ranks the segment's distinct grams by score (ties: earlier first
/// occurrence), greedily accepts non-overlapping ones within the budget and
/// emits them in text order separated by " … ". A model with zero grams
/// falls back to emitting the segment's tokens up to the budget.
Summary summarize_tokens(std::span<const Token> segment,
                         const NgramModel& model, std::size_t budget);

/// Readable mode: scores each sentence overlapping the decision's char
/// range by the mean gram score of its token grams, then re-emits the
/// highest-scoring ones in original order within the budget. When no
/// sentence fits, the best one is truncated to the budget and flagged.
Summary summarize_sentences(const SegmentDecision& decision,
                            std::span<const Sentence> sentences,
                            std::span<const Token> tokens,
                            std::string_view raw_text,
                            const NgramModel& model, std::size_t budget);

}  // namespace xulosa

#endif  // XULOSA_SUMMARIZER_HPP
