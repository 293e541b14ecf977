#ifndef XULOSA_CORPUS_HPP
#define XULOSA_CORPUS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace xulosa {

/// Background document-frequency index backing IDF. Documents are
/// normalized and tokenized without stop-word removal; df counts per-document
/// presence, never raw occurrences.
struct CorpusIndex {
  std::uint64_t num_docs = 0;
  std::map<std::string, std::uint64_t> doc_freq;
  std::string fingerprint;  // order-insensitive content hash of the inputs

  friend bool operator==(const CorpusIndex&, const CorpusIndex&) = default;
};

/// Builds an index over the given documents. Throws EmptyCorpus when the
/// sequence is empty.
CorpusIndex build_corpus_index(std::span<const std::string> documents);

/// Persists the index as a single JSON document with sorted terms so the
/// bytes are reproducible.
void save_index(const CorpusIndex& index, const std::string& path);

/// Loads and validates an index. Version mismatch -> IndexVersionError;
/// anything structurally broken (bad JSON, missing fields, df out of range)
/// -> IndexCorrupt.
CorpusIndex load_index(const std::string& path);

CorpusIndex parse_index_json(std::string_view bytes);
std::string index_to_json(const CorpusIndex& index);

/// Stored df, or 0 for unknown terms.
std::uint64_t document_frequency(const CorpusIndex& index,
                                 std::string_view term);

}  // namespace xulosa

#endif  // XULOSA_CORPUS_HPP
