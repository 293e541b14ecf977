#ifndef XULOSA_PIPELINE_HPP
#define XULOSA_PIPELINE_HPP

#include <string_view>

#include "xulosa/corpus.hpp"
#include "xulosa/moments.hpp"
#include "xulosa/selector.hpp"
#include "xulosa/stopwords.hpp"
#include "xulosa/summarizer.hpp"
#include "xulosa/weighting.hpp"

namespace xulosa {

/// Every tunable of the method lives here as a named switch; the defaults
/// are the documented behavior of the tool.
struct PipelineConfig {
  std::size_t n = 3;
  double ratio = 0.30;
  double skew_epsilon = 1e-9;
  Rounding rounding = Rounding::nearest;
  VocabOrdering ordering = VocabOrdering::first_occurrence;
  IdfVariant idf = IdfVariant::smoothed;
  TfVariant tf = TfVariant::ratio;
  SummaryMode mode = SummaryMode::token;
  bool allow_degenerate = false;
  BoundaryMode boundaries_in = BoundaryMode::filtered;
  bool collocation_fixpoint = false;
};

/// Throws ConfigError unless 0 < ratio <= 1, n >= 1 and skew_epsilon >= 0.
void validate_config(const PipelineConfig& config);

struct PipelineCounts {
  std::size_t original_tokens = 0;
  std::size_t filtered_tokens = 0;
  std::size_t unique_words = 0;
};

struct SummaryReport {
  Summary summary;
  DistributionStats stats;
  SegmentDecision decision;
  PipelineCounts counts;
  PipelineConfig config;
};

struct StatsReport {
  DistributionStats stats;
  PipelineCounts counts;
  PipelineConfig config;
};

/// Runs the whole chain: normalize, tokenize, stop-word filtering, TF-IDF
/// probabilities, distribution statistics, skewness segment selection,
/// n-gram model, summary assembly under the compression budget.
SummaryReport summarize(std::string_view raw, const PipelineConfig& config,
                        const StopwordSet& stopwords, const CorpusIndex& index);

/// Same chain, stopping after the distribution statistics.
StatsReport stats_report(std::string_view raw, const PipelineConfig& config,
                         const StopwordSet& stopwords,
                         const CorpusIndex& index);

/// The effective summary budget: floor(ratio * original_tokens), at least 1,
/// capped by the segment length.
std::size_t summary_budget(double ratio, std::size_t original_tokens,
                           std::size_t segment_length);

}  // namespace xulosa

#endif  // XULOSA_PIPELINE_HPP
