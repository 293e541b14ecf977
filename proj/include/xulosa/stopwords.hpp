#ifndef XULOSA_STOPWORDS_HPP
#define XULOSA_STOPWORDS_HPP

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xulosa/normalizer.hpp"

namespace xulosa {

/// Stop-word resources for the three removal stages: two-word collocations,
/// unigrams, and the rule-base category lexicon. All entries are stored in
/// normalized form.
struct StopwordSet {
  std::set<std::string> unigrams;
  std::set<std::pair<std::string, std::string>> collocations;
  std::map<std::string, std::string> rulebase;  // word -> category ("" if untagged)

  bool empty() const {
    return unigrams.empty() && collocations.empty() && rulebase.empty();
  }
};

/// Token sequence after stop-word removal. Survivors keep their provenance;
/// orig_index stays strictly increasing.
struct FilteredText {
  std::vector<Token> tokens;
  std::size_t original_token_count = 0;
};

/// Loads the three stop-word files. An empty path means "no such resource";
/// a non-empty path that does not exist raises ResourceMissing. File format:
/// UTF-8, one entry per line, `#` starts a comment line, blank lines are
/// ignored; collocation entries are two words separated by a space; rulebase
/// entries are `word` or `word<TAB>category`. Malformed lines raise
/// MalformedEntry with the line number.
StopwordSet load_stopword_set(const std::string& unigram_path,
                              const std::string& collocation_path,
                              const std::string& rulebase_path);

/// Directory convention used by the CLI: unigrams.txt, collocations.txt and
/// rulebase.txt inside `dir`, each optional. The directory itself must exist.
StopwordSet load_stopword_dir(const std::string& dir);

/// Three-stage removal: (1) adjacent pairs matching a collocation, removed
/// leftmost-first and non-overlapping in a single pass (or repeated to a
/// fixpoint when `collocation_fixpoint` is set); (2) unigram matches;
/// (3) rulebase matches. An empty result is legal here.
FilteredText filter(std::span<const Token> tokens, const StopwordSet& set,
                    bool collocation_fixpoint = false);

}  // namespace xulosa

#endif  // XULOSA_STOPWORDS_HPP
