#ifndef XULOSA_WEIGHTING_HPP
#define XULOSA_WEIGHTING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "xulosa/corpus.hpp"
#include "xulosa/stopwords.hpp"

namespace xulosa {

enum class TfVariant { ratio, raw_count };
enum class IdfVariant { smoothed, plain };
enum class VocabOrdering { first_occurrence, by_weight, alphabetical };

struct WeightingOptions {
  TfVariant tf = TfVariant::ratio;
  IdfVariant idf = IdfVariant::smoothed;
  VocabOrdering ordering = VocabOrdering::first_occurrence;
};

struct VocabEntry {
  std::string word;
  std::size_t first_pos = 0;  // first occurrence within the filtered text
  double weight = 0.0;
  double prob = 0.0;
};

/// The ordered unique-word list with TF-IDF weights and the probability
/// distribution derived from them. Vocabulary position i (1-based) is the
/// index variable the distribution statistics run over.
struct WeightedVocabulary {
  std::vector<VocabEntry> entries;
  VocabOrdering ordering = VocabOrdering::first_occurrence;

  std::size_t size() const { return entries.size(); }
};

/// count(term) / |filtered|. Throws EmptyInput on an empty filtered text.
double term_frequency(const FilteredText& filtered, std::string_view term);

/// Smoothed IDF: ln((1 + N) / (1 + df)) + 1, always positive. The plain
/// variant is ln(N / max(df, 1)) and can reach zero.
double inverse_document_frequency(const CorpusIndex& index,
                                  std::string_view term,
                                  IdfVariant variant = IdfVariant::smoothed);

/// Recomputes prob = weight / sum(weights) over the entries in order.
/// With smoothed IDF the sum is strictly positive; with the plain variant an
/// all-zero sum falls back to the uniform distribution.
void normalize_probabilities(std::vector<VocabEntry>& entries,
                             IdfVariant variant = IdfVariant::smoothed);

WeightedVocabulary build_weighted_vocabulary(const FilteredText& filtered,
                                             const CorpusIndex& index,
                                             const WeightingOptions& options = {});

}  // namespace xulosa

#endif  // XULOSA_WEIGHTING_HPP
