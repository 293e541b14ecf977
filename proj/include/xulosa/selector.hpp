#ifndef XULOSA_SELECTOR_HPP
#define XULOSA_SELECTOR_HPP

#include <optional>
#include <span>
#include <string>

#include "xulosa/moments.hpp"
#include "xulosa/stopwords.hpp"
#include "xulosa/weighting.hpp"

namespace xulosa {

enum class SegmentKind { prefix, suffix, middle, whole };

/// Where boundary words are located: their first occurrence in the filtered
/// text (default) or in the original token sequence.
enum class BoundaryMode { filtered, original };

struct SelectorOptions {
  double skew_epsilon = 1e-9;
  BoundaryMode boundaries_in = BoundaryMode::filtered;
};

/// The retained span of the filtered text chosen by the skewness rule.
/// token_range is a non-empty half-open interval of filtered positions;
/// char_range is the matching original-text span from token provenance.
struct SegmentDecision {
  SegmentKind kind = SegmentKind::whole;
  std::optional<std::size_t> k1;  // boundary positions in the filtered text
  std::optional<std::size_t> m1;
  Range token_range;
  Range char_range;
  std::string k_word;
  std::string m_word;
};

const char* segment_kind_name(SegmentKind kind);

/// First occurrence (within the filtered text) of the vocabulary entry at
/// the given 1-based position. Throws BoundaryOutOfRange.
std::size_t locate_boundary(const WeightedVocabulary& vocab,
                            std::size_t boundary_idx);

/// Applies the skewness rule: As > eps keeps the prefix up to and including
/// the k-boundary word; As < -eps keeps the suffix from the m-boundary word;
/// |As| <= eps keeps the middle, boundary words inclusive. A degenerate
/// distribution keeps the whole filtered text. `original_tokens` is only
/// consulted in BoundaryMode::original.
SegmentDecision select_segment(const DistributionStats& stats,
                               const WeightedVocabulary& vocab,
                               const FilteredText& filtered,
                               const SelectorOptions& options = {},
                               std::span<const Token> original_tokens = {});

}  // namespace xulosa

#endif  // XULOSA_SELECTOR_HPP
