#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "oracle.hpp"
#include "testutil.hpp"
#include "xulosa/error.hpp"
#include "xulosa/weighting.hpp"

using namespace xulosa;
using testutil::make_tokens;
using testutil::toy_index;

namespace {

FilteredText toy_filtered() {
  return {make_tokens({"olma", "olma", "anor"}), 3};
}

}  // namespace

TEST_SUITE("weighting") {

TEST_CASE("term_frequency") {
  CHECK(term_frequency({make_tokens({"olma"}), 1}, "olma") == 1.0);
  const FilteredText three{make_tokens({"olma", "olma", "anor"}), 3};
  CHECK(term_frequency(three, "olma") == doctest::Approx(2.0 / 3.0));
  CHECK(term_frequency(three, "nok") == 0.0);
  CHECK_THROWS_AS(term_frequency({{}, 0}, "olma"), Error);
}

TEST_CASE("inverse_document_frequency") {
  const auto index = toy_index();
  // Values frozen from the independent oracle: ln((1+N)/(1+df)) + 1.
  CHECK(inverse_document_frequency(index, "olma") ==
        doctest::Approx(1.2876820724517808).epsilon(1e-12));
  CHECK(inverse_document_frequency(index, "zzz") ==
        doctest::Approx(2.386294361119891).epsilon(1e-12));
  CorpusIndex saturated;
  saturated.num_docs = 3;
  saturated.doc_freq = {{"olma", 3}};
  CHECK(inverse_document_frequency(saturated, "olma") == doctest::Approx(1.0));

  SUBCASE("plain variant") {
    CHECK(inverse_document_frequency(index, "olma", IdfVariant::plain) ==
          doctest::Approx(std::log(1.5)).epsilon(1e-12));
    // df = 0 is clamped to 1 to stay finite
    CHECK(inverse_document_frequency(index, "zzz", IdfVariant::plain) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-12));
  }
}

TEST_CASE("build_weighted_vocabulary on the toy fixture") {
  const auto vocab = build_weighted_vocabulary(toy_filtered(), toy_index());
  REQUIRE(vocab.size() == 2);
  CHECK(vocab.entries[0].word == "olma");
  CHECK(vocab.entries[0].first_pos == 0);
  CHECK(vocab.entries[1].word == "anor");
  CHECK(vocab.entries[1].first_pos == 2);
  // Frozen from the oracle: w = tf * idf, p = w / sum(w).
  CHECK(vocab.entries[0].weight ==
        doctest::Approx(0.8584547149678539).epsilon(1e-12));
  CHECK(vocab.entries[1].weight ==
        doctest::Approx(0.5643823935199818).epsilon(1e-12));
  CHECK(vocab.entries[0].prob ==
        doctest::Approx(0.6033401222436512).epsilon(1e-12));
  CHECK(vocab.entries[1].prob ==
        doctest::Approx(0.39665987775634887).epsilon(1e-12));
}

TEST_CASE("single unseen word gets probability one") {
  const FilteredText filtered{make_tokens({"xyzzy"}), 1};
  const auto vocab = build_weighted_vocabulary(filtered, toy_index());
  REQUIRE(vocab.size() == 1);
  CHECK(vocab.entries[0].prob == 1.0);
}

TEST_CASE("identical tf and df split evenly") {
  const FilteredText filtered{make_tokens({"nok", "uzum"}), 2};
  const auto vocab = build_weighted_vocabulary(filtered, toy_index());
  REQUIRE(vocab.size() == 2);
  CHECK(vocab.entries[0].prob == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(vocab.entries[1].prob == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("empty filtered text is an error") {
  CHECK_THROWS_AS(build_weighted_vocabulary({{}, 5}, toy_index()), Error);
}

TEST_CASE("orderings") {
  const auto filtered = FilteredText{
      make_tokens({"behi", "olma", "olma", "anor", "behi", "olma"}), 6};
  const auto index = toy_index();

  const auto by_first = build_weighted_vocabulary(filtered, index);
  REQUIRE(by_first.size() == 3);
  CHECK(by_first.entries[0].word == "behi");
  CHECK(by_first.entries[1].word == "olma");
  CHECK(by_first.entries[2].word == "anor");
  for (std::size_t i = 1; i < by_first.size(); ++i) {
    CHECK(by_first.entries[i].first_pos > by_first.entries[i - 1].first_pos);
  }

  const auto by_weight = build_weighted_vocabulary(
      filtered, index, {TfVariant::ratio, IdfVariant::smoothed,
                        VocabOrdering::by_weight});
  for (std::size_t i = 1; i < by_weight.size(); ++i) {
    CHECK(by_weight.entries[i].weight <= by_weight.entries[i - 1].weight);
  }

  const auto alpha = build_weighted_vocabulary(
      filtered, index, {TfVariant::ratio, IdfVariant::smoothed,
                        VocabOrdering::alphabetical});
  CHECK(alpha.entries[0].word == "anor");
  CHECK(alpha.entries[1].word == "behi");
  CHECK(alpha.entries[2].word == "olma");
}

TEST_CASE("raw-count TF changes weights but not probabilities") {
  const auto filtered = toy_filtered();
  const auto index = toy_index();
  const auto ratio = build_weighted_vocabulary(filtered, index);
  const auto counts = build_weighted_vocabulary(
      filtered, index,
      {TfVariant::raw_count, IdfVariant::smoothed,
       VocabOrdering::first_occurrence});
  CHECK(counts.entries[0].weight ==
        doctest::Approx(3.0 * ratio.entries[0].weight).epsilon(1e-12));
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    CHECK(counts.entries[i].prob ==
          doctest::Approx(ratio.entries[i].prob).epsilon(1e-12));
  }
}

TEST_CASE("plain IDF with every word saturated falls back to uniform") {
  CorpusIndex index;
  index.num_docs = 2;
  index.doc_freq = {{"olma", 2}, {"anor", 2}};
  const FilteredText filtered{make_tokens({"olma", "anor"}), 2};
  const auto vocab = build_weighted_vocabulary(
      filtered, index,
      {TfVariant::ratio, IdfVariant::plain, VocabOrdering::first_occurrence});
  CHECK(vocab.entries[0].weight == 0.0);
  CHECK(vocab.entries[0].prob == 0.5);
  CHECK(vocab.entries[1].prob == 0.5);
}

TEST_CASE("properties: distribution validity and scaling invariance") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const auto text = testutil::random_text(rng, 60, 12);
    const auto index = testutil::random_index(rng);
    const auto tokens = analyze(text);
    const FilteredText filtered{tokens, tokens.size()};
    const auto vocab = build_weighted_vocabulary(filtered, index);

    double sum = 0.0;
    for (const auto& entry : vocab.entries) {
      CHECK(entry.prob >= 0.0);
      sum += entry.prob;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-9);
    CHECK(vocab.size() <= tokens.size());

    // Power-of-two scaling is exact in binary floating point, so the
    // normalized probabilities are bit-identical.
    for (const double scale : {2.0, 0.5, 1024.0, 0.0078125}) {
      auto scaled = vocab.entries;
      for (auto& entry : scaled) {
        entry.weight *= scale;
      }
      normalize_probabilities(scaled);
      for (std::size_t i = 0; i < scaled.size(); ++i) {
        CHECK(std::memcmp(&scaled[i].prob, &vocab.entries[i].prob,
                          sizeof(double)) == 0);
      }
    }
    // Arbitrary positive constants agree to within rounding.
    for (const double scale : {3.0, 7.5}) {
      auto scaled = vocab.entries;
      for (auto& entry : scaled) {
        entry.weight *= scale;
      }
      normalize_probabilities(scaled);
      for (std::size_t i = 0; i < scaled.size(); ++i) {
        CHECK(oracle::close(scaled[i].prob, vocab.entries[i].prob, 1e-12));
      }
    }

    // Determinism: rebuilding gives bit-identical results.
    const auto again = build_weighted_vocabulary(filtered, index);
    REQUIRE(again.size() == vocab.size());
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      CHECK(std::memcmp(&again.entries[i].prob, &vocab.entries[i].prob,
                        sizeof(double)) == 0);
      CHECK(std::memcmp(&again.entries[i].weight, &vocab.entries[i].weight,
                        sizeof(double)) == 0);
    }

    // Agreement with the independent oracle.
    const auto expected = oracle::vocabulary(testutil::surfaces(tokens),
                                             index.num_docs, index.doc_freq);
    REQUIRE(expected.words.size() == vocab.size());
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      CHECK(vocab.entries[i].word == expected.words[i]);
      CHECK(vocab.entries[i].first_pos == expected.first_pos[i]);
      CHECK(oracle::close(vocab.entries[i].prob, expected.probs[i]));
    }
  }
}

}  // TEST_SUITE
