#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "testutil.hpp"
#include "xulosa/corpus.hpp"
#include "xulosa/error.hpp"

using namespace xulosa;
using testutil::TempDir;

TEST_SUITE("corpus") {

TEST_CASE("build_corpus_index") {
  SUBCASE("single document") {
    const std::vector<std::string> docs = {"olma nok"};
    const auto index = build_corpus_index(docs);
    CHECK(index.num_docs == 1);
    CHECK(document_frequency(index, "olma") == 1);
    CHECK(document_frequency(index, "nok") == 1);
  }

  SUBCASE("three documents") {
    const std::vector<std::string> docs = {"olma nok", "olma uzum", "anor"};
    const auto index = build_corpus_index(docs);
    CHECK(index.num_docs == 3);
    CHECK(document_frequency(index, "olma") == 2);
    CHECK(document_frequency(index, "nok") == 1);
    CHECK(document_frequency(index, "uzum") == 1);
    CHECK(document_frequency(index, "anor") == 1);
    CHECK(document_frequency(index, "zzz") == 0);
  }

  SUBCASE("df counts per-document presence, not occurrences") {
    const std::vector<std::string> docs = {"a a a"};
    const auto index = build_corpus_index(docs);
    CHECK(index.num_docs == 1);
    CHECK(document_frequency(index, "a") == 1);
  }

  SUBCASE("documents are normalized like input text") {
    const std::vector<std::string> docs = {"O'zbek TILI"};
    const auto index = build_corpus_index(docs);
    CHECK(document_frequency(index, "o\xCA\xBBzbek") == 1);
    CHECK(document_frequency(index, "tili") == 1);
  }

  SUBCASE("empty corpus") {
    try {
      build_corpus_index({});
      FAIL("expected EmptyCorpus");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyCorpus);
    }
  }
}

TEST_CASE("index is insensitive to document order") {
  const std::vector<std::string> forward = {"olma nok", "olma uzum", "anor"};
  const std::vector<std::string> backward = {"anor", "olma uzum", "olma nok"};
  const auto a = build_corpus_index(forward);
  const auto b = build_corpus_index(backward);
  CHECK(a == b);
  CHECK(index_to_json(a) == index_to_json(b));
}

TEST_CASE("save and load round-trip") {
  TempDir dir;
  const std::vector<std::string> docs = {"olma nok", "olma uzum", "anor"};
  const auto index = build_corpus_index(docs);
  const auto path = (dir.path() / "index.json").string();

  save_index(index, path);
  const auto loaded = load_index(path);
  CHECK(loaded == index);

  // building and saving again gives the same bytes and fingerprint
  const auto rebuilt = build_corpus_index(docs);
  CHECK(rebuilt.fingerprint == index.fingerprint);
  const auto path2 = (dir.path() / "index2.json").string();
  save_index(rebuilt, path2);
  std::ifstream f1(path), f2(path2);
  std::string c1((std::istreambuf_iterator<char>(f1)), {});
  std::string c2((std::istreambuf_iterator<char>(f2)), {});
  CHECK(c1 == c2);
}

TEST_CASE("randomized round-trips") {
  TempDir dir;
  std::mt19937 rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    const auto index = testutil::random_index(rng);
    const auto path = (dir.path() / "rt.json").string();
    save_index(index, path);
    CHECK(load_index(path) == index);
  }
}

TEST_CASE("built indexes keep df within bounds regardless of order") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 50; ++iter) {
    std::uniform_int_distribution<std::size_t> doc_count(1, 8);
    std::vector<std::string> docs;
    const std::size_t n = doc_count(rng);
    for (std::size_t d = 0; d < n; ++d) {
      docs.push_back(testutil::random_text(rng, 20, 12));
    }
    const auto index = build_corpus_index(docs);
    CHECK(index.num_docs == docs.size());
    for (const auto& [term, df] : index.doc_freq) {
      CHECK(df >= 1);
      CHECK(df <= index.num_docs);
    }
    std::shuffle(docs.begin(), docs.end(), rng);
    CHECK(build_corpus_index(docs) == index);
  }
}

TEST_CASE("corrupt files never load silently") {
  TempDir dir;
  const auto index =
      build_corpus_index(std::vector<std::string>{"olma nok", "anor behi"});
  const std::string good = index_to_json(index);

  SUBCASE("truncations") {
    for (std::size_t len : {std::size_t{0}, good.size() / 4, good.size() / 2,
                            good.size() - 2}) {
      try {
        parse_index_json(good.substr(0, len));
        FAIL("expected IndexCorrupt for length ", len);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexCorrupt);
      }
    }
  }

  SUBCASE("wrong version") {
    std::string bad = good;
    const auto pos = bad.find("\"version\": 1");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 12, "\"version\": 9");
    try {
      parse_index_json(bad);
      FAIL("expected IndexVersionError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexVersionError);
    }
  }

  SUBCASE("df out of range") {
    for (const char* body : {
             R"({"version":1,"num_docs":2,"fingerprint":"x","doc_freq":{"a":3}})",
             R"({"version":1,"num_docs":2,"fingerprint":"x","doc_freq":{"a":0}})",
             R"({"version":1,"num_docs":0,"fingerprint":"x","doc_freq":{}})",
             R"({"version":1,"num_docs":2,"fingerprint":"x","doc_freq":{"a":-1}})",
         }) {
      try {
        parse_index_json(body);
        FAIL("expected IndexCorrupt: ", body);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexCorrupt);
      }
    }
  }

  SUBCASE("missing fields and wrong types") {
    for (const char* body : {
             R"({})",
             R"([1,2,3])",
             R"({"version":1,"num_docs":"two","fingerprint":"x","doc_freq":{}})",
             R"({"version":1,"num_docs":2,"fingerprint":"x"})",
             R"({"version":1,"num_docs":2,"fingerprint":"x","doc_freq":{"a":"b"}})",
             R"({"version":"1","num_docs":2,"fingerprint":"x","doc_freq":{}})",
         }) {
      CHECK_THROWS_AS(parse_index_json(body), Error);
    }
  }

  SUBCASE("missing file is ResourceMissing") {
    try {
      load_index((dir.path() / "ghost.json").string());
      FAIL("expected ResourceMissing");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ResourceMissing);
    }
  }
}

}  // TEST_SUITE
