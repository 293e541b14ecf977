#include "xulosa/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "xulosa/error.hpp"

namespace xulosa {

double term_frequency(const FilteredText& filtered, std::string_view term) {
  if (filtered.tokens.empty()) {
    throw Error(ErrorCode::EmptyInput, "filtered text is empty");
  }
  std::size_t count = 0;
  for (const auto& token : filtered.tokens) {
    if (token.surface == term) {
      ++count;
    }
  }
  return static_cast<double>(count) /
         static_cast<double>(filtered.tokens.size());
}

double inverse_document_frequency(const CorpusIndex& index,
                                  std::string_view term, IdfVariant variant) {
  const double n = static_cast<double>(index.num_docs);
  const double df = static_cast<double>(document_frequency(index, term));
  if (variant == IdfVariant::smoothed) {
    return std::log((1.0 + n) / (1.0 + df)) + 1.0;
  }
  return std::log(n / std::max(df, 1.0));
}

void normalize_probabilities(std::vector<VocabEntry>& entries,
                             IdfVariant variant) {
  double sum = 0.0;
  for (const auto& entry : entries) {
    sum += entry.weight;
  }
  if (sum <= 0.0) {
    if (variant == IdfVariant::smoothed) {
      // tf > 0 and smoothed idf > 0 for every present word.
      throw std::logic_error("zero weight sum under smoothed IDF");
    }
    const double uniform = 1.0 / static_cast<double>(entries.size());
    for (auto& entry : entries) {
      entry.prob = uniform;
    }
    return;
  }
  for (auto& entry : entries) {
    entry.prob = entry.weight / sum;
  }
}

WeightedVocabulary build_weighted_vocabulary(const FilteredText& filtered,
                                             const CorpusIndex& index,
                                             const WeightingOptions& options) {
  if (filtered.tokens.empty()) {
    throw Error(ErrorCode::EmptyInput, "filtered text is empty");
  }

  struct Occurrence {
    std::size_t count = 0;
    std::size_t first_pos = 0;
  };
  std::vector<VocabEntry> entries;
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<Occurrence> occurrences;
  for (std::size_t pos = 0; pos < filtered.tokens.size(); ++pos) {
    const auto& surface = filtered.tokens[pos].surface;
    auto [it, inserted] = slot.try_emplace(surface, entries.size());
    if (inserted) {
      entries.push_back({surface, pos, 0.0, 0.0});
      occurrences.push_back({1, pos});
    } else {
      ++occurrences[it->second].count;
    }
  }

  const double total = static_cast<double>(filtered.tokens.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double count = static_cast<double>(occurrences[i].count);
    const double tf =
        options.tf == TfVariant::ratio ? count / total : count;
    entries[i].weight =
        tf * inverse_document_frequency(index, entries[i].word, options.idf);
  }

  switch (options.ordering) {
    case VocabOrdering::first_occurrence:
      break;  // already in first-occurrence order
    case VocabOrdering::by_weight:
      std::stable_sort(entries.begin(), entries.end(),
                       [](const VocabEntry& a, const VocabEntry& b) {
                         if (a.weight != b.weight) return a.weight > b.weight;
                         return a.first_pos < b.first_pos;
                       });
      break;
    case VocabOrdering::alphabetical:
      std::sort(entries.begin(), entries.end(),
                [](const VocabEntry& a, const VocabEntry& b) {
                  return a.word < b.word;
                });
      break;
  }

  normalize_probabilities(entries, options.idf);
  return {std::move(entries), options.ordering};
}

}  // namespace xulosa
