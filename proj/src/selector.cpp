#include "xulosa/selector.hpp"

#include <algorithm>

#include "xulosa/error.hpp"

namespace xulosa {

namespace {

/// Position of the boundary word in the coordinate space picked by the
/// options: its first filtered occurrence, or its first occurrence in the
/// original token sequence (which may be a removed stop word).
std::size_t boundary_position(const WeightedVocabulary& vocab,
                              std::size_t boundary_idx,
                              const SelectorOptions& options,
                              std::span<const Token> original_tokens) {
  const std::size_t filtered_pos = locate_boundary(vocab, boundary_idx);
  if (options.boundaries_in == BoundaryMode::filtered) {
    return filtered_pos;
  }
  const auto& word = vocab.entries[boundary_idx - 1].word;
  for (const auto& token : original_tokens) {
    if (token.surface == word) {
      return token.orig_index;
    }
  }
  // The word survived filtering, so it exists in the original sequence;
  // reachable only when original_tokens was not supplied.
  throw Error(ErrorCode::BoundaryOutOfRange,
              "boundary word '" + word + "' not in original token sequence");
}

// Filtered positions whose orig_index lies in [first, last].
Range orig_window_to_filtered(const FilteredText& filtered, std::size_t first,
                              std::size_t last) {
  const auto& tokens = filtered.tokens;
  auto lo = std::lower_bound(tokens.begin(), tokens.end(), first,
                             [](const Token& t, std::size_t v) {
                               return t.orig_index < v;
                             });
  auto hi = std::upper_bound(tokens.begin(), tokens.end(), last,
                             [](std::size_t v, const Token& t) {
                               return v < t.orig_index;
                             });
  return {static_cast<std::size_t>(lo - tokens.begin()),
          static_cast<std::size_t>(hi - tokens.begin())};
}

}  // namespace

const char* segment_kind_name(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::prefix: return "prefix";
    case SegmentKind::suffix: return "suffix";
    case SegmentKind::middle: return "middle";
    case SegmentKind::whole: return "whole";
  }
  return "unknown";
}

std::size_t locate_boundary(const WeightedVocabulary& vocab,
                            std::size_t boundary_idx) {
  if (boundary_idx < 1 || boundary_idx > vocab.size()) {
    throw Error(ErrorCode::BoundaryOutOfRange,
                "vocabulary position " + std::to_string(boundary_idx) +
                    " out of range 1.." + std::to_string(vocab.size()));
  }
  return vocab.entries[boundary_idx - 1].first_pos;
}

SegmentDecision select_segment(const DistributionStats& stats,
                               const WeightedVocabulary& vocab,
                               const FilteredText& filtered,
                               const SelectorOptions& options,
                               std::span<const Token> original_tokens) {
  const std::size_t n = filtered.tokens.size();
  if (n == 0) {
    throw Error(ErrorCode::EmptyInput, "filtered text is empty");
  }
  SegmentDecision decision;

  if (stats.degenerate) {
    decision.kind = SegmentKind::whole;
    decision.token_range = {0, n};
  } else {
    const bool in_filtered =
        options.boundaries_in == BoundaryMode::filtered;
    const std::size_t k_pos =
        boundary_position(vocab, *stats.k_idx, options, original_tokens);
    const std::size_t m_pos =
        boundary_position(vocab, *stats.m_idx, options, original_tokens);
    decision.k_word = vocab.entries[*stats.k_idx - 1].word;
    decision.m_word = vocab.entries[*stats.m_idx - 1].word;
    // Reported boundary positions are always in filtered coordinates;
    // in original mode the cut itself is made in original coordinates.
    decision.k1 = locate_boundary(vocab, *stats.k_idx);
    decision.m1 = locate_boundary(vocab, *stats.m_idx);

    const double as = *stats.skew;
    if (as > options.skew_epsilon) {
      decision.kind = SegmentKind::prefix;
      decision.token_range =
          in_filtered ? Range{0, k_pos + 1}
                      : Range{0, orig_window_to_filtered(filtered, 0, k_pos).end};
    } else if (as < -options.skew_epsilon) {
      decision.kind = SegmentKind::suffix;
      decision.token_range =
          in_filtered
              ? Range{m_pos, n}
              : Range{orig_window_to_filtered(filtered, m_pos,
                                              filtered.original_token_count)
                          .begin,
                      n};
    } else {
      decision.kind = SegmentKind::middle;
      if (in_filtered) {
        const std::size_t lo = std::min(k_pos, m_pos);
        const std::size_t hi = std::max(k_pos, m_pos);
        decision.token_range = {lo, hi + 1};
      } else {
        decision.token_range =
            orig_window_to_filtered(filtered, std::min(k_pos, m_pos),
                                    std::max(k_pos, m_pos));
      }
    }

    // Keep at least one token; an empty cut can only arise in original
    // coordinates when the boundary occurrence was itself removed.
    if (decision.token_range.empty()) {
      const std::size_t anchor = std::min(*decision.k1, n - 1);
      decision.token_range = {anchor, anchor + 1};
    }
  }

  decision.char_range = {
      filtered.tokens[decision.token_range.begin].char_start,
      filtered.tokens[decision.token_range.end - 1].char_end};
  return decision;
}

}  // namespace xulosa
