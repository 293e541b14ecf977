#include "xulosa/stopwords.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "xulosa/error.hpp"

namespace xulosa {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ResourceMissing, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  if (content.size() >= 3 && content.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    content.erase(0, 3);  // UTF-8 BOM
  }
  return content;
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::vector<std::string> entry_words(const std::string& text) {
  std::vector<std::string> words;
  for (auto& token : tokenize(normalize_text(text))) {
    words.push_back(std::move(token.surface));
  }
  return words;
}

void for_each_line(const std::string& content,
                   const std::function<void(std::size_t, std::string)>& fn) {
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (is_blank_or_comment(line)) {
      continue;
    }
    fn(lineno, line);
  }
}

[[noreturn]] void malformed(const std::string& path, std::size_t lineno,
                            const std::string& what) {
  throw Error(ErrorCode::MalformedEntry,
              path + ":" + std::to_string(lineno) + ": " + what, lineno);
}

void load_unigrams(const std::string& path, std::set<std::string>& out) {
  for_each_line(read_file(path), [&](std::size_t lineno, std::string line) {
    auto words = entry_words(line);
    if (words.size() != 1) {
      malformed(path, lineno, "expected exactly one word");
    }
    out.insert(std::move(words.front()));
  });
}

void load_collocations(const std::string& path,
                       std::set<std::pair<std::string, std::string>>& out) {
  for_each_line(read_file(path), [&](std::size_t lineno, std::string line) {
    auto words = entry_words(line);
    if (words.size() != 2) {
      malformed(path, lineno, "expected exactly two words");
    }
    out.emplace(std::move(words[0]), std::move(words[1]));
  });
}

void load_rulebase(const std::string& path,
                   std::map<std::string, std::string>& out) {
  for_each_line(read_file(path), [&](std::size_t lineno, std::string line) {
    std::string word_part = line;
    std::string category;
    if (auto tab = line.find('\t'); tab != std::string::npos) {
      word_part = line.substr(0, tab);
      category = normalize_text(line.substr(tab + 1));
      while (!category.empty() && category.back() == ' ') category.pop_back();
    }
    auto words = entry_words(word_part);
    if (words.size() != 1) {
      malformed(path, lineno, "expected exactly one word");
    }
    out[std::move(words.front())] = std::move(category);
  });
}

}  // namespace

StopwordSet load_stopword_set(const std::string& unigram_path,
                              const std::string& collocation_path,
                              const std::string& rulebase_path) {
  StopwordSet set;
  if (!unigram_path.empty()) load_unigrams(unigram_path, set.unigrams);
  if (!collocation_path.empty()) load_collocations(collocation_path, set.collocations);
  if (!rulebase_path.empty()) load_rulebase(rulebase_path, set.rulebase);
  return set;
}

StopwordSet load_stopword_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::ResourceMissing,
                "stop-word directory not found: " + dir);
  }
  auto path_if_present = [&](const char* name) -> std::string {
    fs::path p = fs::path(dir) / name;
    return fs::exists(p) ? p.string() : std::string();
  };
  return load_stopword_set(path_if_present("unigrams.txt"),
                           path_if_present("collocations.txt"),
                           path_if_present("rulebase.txt"));
}

FilteredText filter(std::span<const Token> tokens, const StopwordSet& set,
                    bool collocation_fixpoint) {
  std::vector<Token> current(tokens.begin(), tokens.end());

  // Stage 1: collocations, leftmost-first, non-overlapping.
  bool removed_any = true;
  while (removed_any) {
    removed_any = false;
    std::vector<Token> next;
    next.reserve(current.size());
    std::size_t i = 0;
    while (i < current.size()) {
      if (i + 1 < current.size() &&
          set.collocations.contains(
              {current[i].surface, current[i + 1].surface})) {
        i += 2;
        removed_any = true;
      } else {
        next.push_back(std::move(current[i]));
        ++i;
      }
    }
    current = std::move(next);
    if (!collocation_fixpoint) {
      break;
    }
  }

  // Stages 2 and 3: unigram and rulebase matches.
  std::vector<Token> survivors;
  survivors.reserve(current.size());
  for (auto& token : current) {
    if (set.unigrams.contains(token.surface)) continue;
    if (set.rulebase.contains(token.surface)) continue;
    survivors.push_back(std::move(token));
  }
  return {std::move(survivors), tokens.size()};
}

}  // namespace xulosa
