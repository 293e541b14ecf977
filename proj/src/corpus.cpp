#include "xulosa/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "xulosa/error.hpp"
#include "xulosa/normalizer.hpp"

namespace xulosa {

namespace {

constexpr int kIndexVersion = 1;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

}  // namespace

CorpusIndex build_corpus_index(std::span<const std::string> documents) {
  if (documents.empty()) {
    throw Error(ErrorCode::EmptyCorpus, "corpus has no documents");
  }
  CorpusIndex index;
  index.num_docs = documents.size();
  // XOR of per-document hashes keeps the fingerprint insensitive to
  // document order, matching the df semantics.
  std::uint64_t fp = fnv1a64("xulosa-corpus-v1");
  for (const auto& doc : documents) {
    fp ^= fnv1a64(doc);
    std::set<std::string> seen;
    for (auto& token : analyze(doc)) {
      seen.insert(std::move(token.surface));
    }
    for (const auto& term : seen) {
      ++index.doc_freq[term];
    }
  }
  index.fingerprint = to_hex(fp ^ index.num_docs);
  return index;
}

std::string index_to_json(const CorpusIndex& index) {
  nlohmann::json j;
  j["version"] = kIndexVersion;
  j["num_docs"] = index.num_docs;
  j["fingerprint"] = index.fingerprint;
  j["doc_freq"] = nlohmann::json::object();
  for (const auto& [term, df] : index.doc_freq) {
    j["doc_freq"][term] = df;
  }
  return j.dump(2);
}

CorpusIndex parse_index_json(std::string_view bytes) {
  nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::IndexCorrupt, "index file is not valid JSON");
  }
  if (!j.contains("version") || !j["version"].is_number_integer()) {
    throw Error(ErrorCode::IndexCorrupt, "index file has no version field");
  }
  if (j["version"].get<int>() != kIndexVersion) {
    throw Error(ErrorCode::IndexVersionError,
                "unsupported index version " + j["version"].dump());
  }
  if (!j.contains("num_docs") || !j["num_docs"].is_number_unsigned() ||
      !j.contains("fingerprint") || !j["fingerprint"].is_string() ||
      !j.contains("doc_freq") || !j["doc_freq"].is_object()) {
    throw Error(ErrorCode::IndexCorrupt, "index file is missing fields");
  }
  CorpusIndex index;
  index.num_docs = j["num_docs"].get<std::uint64_t>();
  index.fingerprint = j["fingerprint"].get<std::string>();
  if (index.num_docs < 1) {
    throw Error(ErrorCode::IndexCorrupt, "index num_docs must be >= 1");
  }
  for (const auto& [term, df] : j["doc_freq"].items()) {
    if (!df.is_number_unsigned()) {
      throw Error(ErrorCode::IndexCorrupt,
                  "document frequency for '" + term + "' is not a count");
    }
    const auto value = df.get<std::uint64_t>();
    if (value < 1 || value > index.num_docs) {
      throw Error(ErrorCode::IndexCorrupt,
                  "document frequency for '" + term + "' out of range");
    }
    index.doc_freq[term] = value;
  }
  return index;
}

void save_index(const CorpusIndex& index, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path);
  }
  out << index_to_json(index) << '\n';
  if (!out) {
    throw Error(ErrorCode::IoError, "write failed: " + path);
  }
}

CorpusIndex load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ResourceMissing, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_index_json(buf.str());
}

std::uint64_t document_frequency(const CorpusIndex& index,
                                 std::string_view term) {
  auto it = index.doc_freq.find(std::string(term));
  return it == index.doc_freq.end() ? 0 : it->second;
}

}  // namespace xulosa
