#include "xulosa/pipeline.hpp"

#include <cmath>

#include "xulosa/error.hpp"

namespace xulosa {

void validate_config(const PipelineConfig& config) {
  if (!(config.ratio > 0.0 && config.ratio <= 1.0)) {
    throw Error(ErrorCode::ConfigError, "ratio must be in (0, 1]");
  }
  if (config.n < 1) {
    throw Error(ErrorCode::ConfigError, "gram order must be >= 1");
  }
  if (!(config.skew_epsilon >= 0.0)) {
    throw Error(ErrorCode::ConfigError, "skew epsilon must be >= 0");
  }
}

std::size_t summary_budget(double ratio, std::size_t original_tokens,
                           std::size_t segment_length) {
  const auto raw = static_cast<std::size_t>(
      std::floor(ratio * static_cast<double>(original_tokens)));
  return std::max<std::size_t>(1, std::min(raw, segment_length));
}

namespace {

struct Analyzed {
  std::vector<Token> tokens;
  FilteredText filtered;
  WeightedVocabulary vocab;
  DistributionStats stats;
};

Analyzed run_until_stats(std::string_view raw, const PipelineConfig& config,
                         const StopwordSet& stopwords,
                         const CorpusIndex& index) {
  validate_config(config);
  Analyzed a;
  a.tokens = analyze(raw);
  if (a.tokens.empty()) {
    throw Error(ErrorCode::EmptyInput, "input contains no word tokens");
  }
  a.filtered = filter(a.tokens, stopwords, config.collocation_fixpoint);
  if (a.filtered.tokens.empty()) {
    throw Error(ErrorCode::EmptyAfterFiltering,
                "all tokens were stop words");
  }
  a.vocab = build_weighted_vocabulary(
      a.filtered, index, {config.tf, config.idf, config.ordering});
  a.stats = distribution_stats(a.vocab,
                               {config.rounding, config.skew_epsilon});
  if (a.stats.degenerate && !config.allow_degenerate) {
    throw Error(ErrorCode::DegenerateDistribution,
                "distribution has zero deviation (single unique word)");
  }
  return a;
}

PipelineCounts counts_of(const Analyzed& a) {
  return {a.tokens.size(), a.filtered.tokens.size(), a.vocab.size()};
}

}  // namespace

SummaryReport summarize(std::string_view raw, const PipelineConfig& config,
                        const StopwordSet& stopwords,
                        const CorpusIndex& index) {
  Analyzed a = run_until_stats(raw, config, stopwords, index);

  SummaryReport report;
  report.decision = select_segment(
      a.stats, a.vocab, a.filtered,
      {config.skew_epsilon, config.boundaries_in}, a.tokens);

  const auto segment = std::span<const Token>(a.filtered.tokens)
                           .subspan(report.decision.token_range.begin,
                                    report.decision.token_range.size());
  const std::size_t budget =
      summary_budget(config.ratio, a.tokens.size(), segment.size());
  const NgramModel model = build_ngram_model(segment, config.n);

  if (config.mode == SummaryMode::token) {
    report.summary = summarize_tokens(segment, model, budget);
  } else {
    auto sentences = split_sentences(raw);
    map_tokens_to_sentences(sentences, a.tokens);
    report.summary = summarize_sentences(report.decision, sentences, a.tokens,
                                         raw, model, budget);
  }

  report.stats = std::move(a.stats);
  report.counts = counts_of(a);
  report.config = config;
  return report;
}

StatsReport stats_report(std::string_view raw, const PipelineConfig& config,
                         const StopwordSet& stopwords,
                         const CorpusIndex& index) {
  Analyzed a = run_until_stats(raw, config, stopwords, index);
  return {std::move(a.stats), counts_of(a), config};
}

}  // namespace xulosa
