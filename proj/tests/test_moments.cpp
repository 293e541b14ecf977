#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "testutil.hpp"
#include "xulosa/error.hpp"
#include "xulosa/moments.hpp"

using namespace xulosa;

namespace {

/// Vocabulary with the given probabilities and trivial words, for feeding
/// distribution_stats directly.
WeightedVocabulary vocab_with_probs(const std::vector<double>& probs) {
  WeightedVocabulary vocab;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    vocab.entries.push_back({"w" + std::to_string(i), i, probs[i], probs[i]});
  }
  return vocab;
}

WeightedVocabulary toy_vocab() {
  const auto filtered =
      FilteredText{testutil::make_tokens({"olma", "olma", "anor"}), 3};
  return build_weighted_vocabulary(filtered, testutil::toy_index());
}

std::vector<double> random_distribution(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> mass(0.01, 1.0);
  std::vector<double> weights(n);
  double sum = 0.0;
  for (auto& w : weights) {
    w = mass(rng);
    sum += w;
  }
  for (auto& w : weights) {
    w /= sum;
  }
  return weights;
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("raw_moment") {
  CHECK(raw_moment(std::vector<double>{1.0}, 1) == 1.0);
  CHECK(raw_moment(std::vector<double>{0.5, 0.5}, 2) == doctest::Approx(2.5));
  // Frozen from the oracle over the toy distribution.
  const auto vocab = toy_vocab();
  const std::vector<double> p{vocab.entries[0].prob, vocab.entries[1].prob};
  CHECK(raw_moment(p, 3) == doctest::Approx(3.7766191442944423).epsilon(1e-12));
  CHECK_THROWS_AS(raw_moment(std::vector<double>{}, 1), Error);
}

TEST_CASE("third_central_moment") {
  CHECK(third_central_moment(1.5, 2.5, 4.5) == doctest::Approx(0.0));
  // Novel-scale raw moments; E3 only good to 6 significant digits.
  CHECK(third_central_moment(4379.22, 35196780.35, 3.40214e11) ==
        doctest::Approx(45776660238.0).epsilon(5e-4));
  // Frozen from the oracle on the toy distribution.
  CHECK(third_central_moment(1.396659877756349, 2.1899796332690467,
                             3.7766191442944423) ==
        doctest::Approx(0.04946288540965593).epsilon(1e-9));
}

TEST_CASE("skewness") {
  CHECK(skewness(0.0, 0.5) == 0.0);
  CHECK(skewness(45776660238.0, 4002.4) == doctest::Approx(0.714).epsilon(0.003));
  CHECK(skewness(0.04946288540965593, 0.4892042713781915) ==
        doctest::Approx(0.42248250184947606).epsilon(1e-12));
  CHECK_THROWS_AS(skewness(1.0, 0.0), Error);
  try {
    skewness(1.0, 0.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateDistribution);
  }
}

TEST_CASE("boundary_index") {
  CHECK(boundary_index(376.82, Rounding::nearest, 13740) == 377);
  CHECK(boundary_index(4379.22 - 4002.4, Rounding::nearest, 13740) == 377);
  CHECK(boundary_index(376.82, Rounding::floor_mode, 13740) == 376);
  CHECK(boundary_index(376.82, Rounding::ceil_mode, 13740) == 377);
  CHECK(boundary_index(2.5, Rounding::nearest, 10) == 3);  // half away from zero
  CHECK(boundary_index(-7.9, Rounding::nearest, 10) == 1);  // clamped low
  CHECK(boundary_index(99.2, Rounding::nearest, 10) == 10);  // clamped high
}

TEST_CASE("distribution_stats on tiny fixtures") {
  SUBCASE("point mass is degenerate") {
    const auto stats = distribution_stats(vocab_with_probs({1.0}));
    CHECK(stats.expectation == 1.0);
    CHECK(stats.dispersion == 0.0);
    CHECK(stats.degenerate);
    CHECK(!stats.skew.has_value());
    CHECK(!stats.k_idx.has_value());
    CHECK(!stats.m_idx.has_value());
  }

  SUBCASE("symmetric two-point distribution") {
    const auto stats = distribution_stats(vocab_with_probs({0.5, 0.5}));
    CHECK(stats.expectation == doctest::Approx(1.5));
    CHECK(stats.dispersion == doctest::Approx(0.25));
    CHECK(stats.sigma == doctest::Approx(0.5));
    CHECK(*stats.skew == doctest::Approx(0.0));
    CHECK(*stats.k_idx == 1);
    CHECK(*stats.m_idx == 2);
  }

  SUBCASE("toy vocabulary, frozen oracle values") {
    const auto stats = distribution_stats(toy_vocab());
    CHECK(stats.expectation ==
          doctest::Approx(1.396659877756349).epsilon(1e-12));
    CHECK(stats.dispersion ==
          doctest::Approx(0.23932081913466724).epsilon(1e-12));
    CHECK(stats.sigma == doctest::Approx(0.4892042713781915).epsilon(1e-12));
    CHECK(stats.e2 == doctest::Approx(2.1899796332690467).epsilon(1e-12));
    CHECK(stats.e3 == doctest::Approx(3.7766191442944423).epsilon(1e-12));
    CHECK(stats.mu3 == doctest::Approx(0.04946288540965593).epsilon(1e-9));
    CHECK(*stats.skew == doctest::Approx(0.42248250184947606).epsilon(1e-9));
    CHECK(*stats.k_idx == 1);
    CHECK(*stats.m_idx == 2);
    CHECK(!stats.degenerate);
  }

  SUBCASE("empty vocabulary") {
    CHECK_THROWS_AS(distribution_stats(WeightedVocabulary{}), Error);
  }
}

TEST_CASE("heavily skewed distribution clamps the lower boundary") {
  // Mass at the ends: E - sigma goes negative and must clamp to 1.
  std::vector<double> probs(100, 0.0);
  probs[0] = 0.99;
  probs[99] = 0.01;
  const auto stats = distribution_stats(vocab_with_probs(probs));
  CHECK(stats.expectation < stats.sigma);  // E - sigma < 0
  CHECK(*stats.k_idx == 1);
  CHECK(*stats.m_idx >= *stats.k_idx);
}

TEST_CASE("properties against the oracle") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::size_t> size_dist(1, 1000);

  for (int iter = 0; iter < 200; ++iter) {
    const auto probs = random_distribution(rng, size_dist(rng));
    const auto stats = distribution_stats(vocab_with_probs(probs));
    const auto expected = oracle::stats_of(probs);

    CHECK(oracle::close(stats.expectation, expected.e));
    CHECK(oracle::close(stats.dispersion, expected.d));
    CHECK(oracle::close(stats.sigma, expected.sigma));
    CHECK(oracle::close(stats.e2, expected.e2));
    CHECK(oracle::close(stats.e3, expected.e3));
    CHECK(oracle::close(stats.mu3, expected.mu3));
    CHECK(stats.degenerate == expected.degenerate);
    if (!stats.degenerate) {
      CHECK(oracle::close(*stats.skew, *expected.skew));
      CHECK(*stats.k_idx == *expected.k_idx);
      CHECK(*stats.m_idx == *expected.m_idx);
      CHECK(*stats.k_idx <= *stats.m_idx);
    }

    // Identity D = E2 - E1^2 within 1e-6 relative.
    const double identity = stats.e2 - stats.expectation * stats.expectation;
    CHECK(std::abs(identity - stats.dispersion) <=
          1e-6 * std::max(1.0, std::abs(stats.dispersion)));
  }
}

TEST_CASE("symmetric distributions have vanishing skewness") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> half_dist(1, 100);
  for (int iter = 0; iter < 50; ++iter) {
    // build a symmetric probability sequence
    const std::size_t half = half_dist(rng);
    const bool odd_center = iter % 2 == 0;
    std::uniform_real_distribution<double> mass(0.01, 1.0);
    std::vector<double> weights;
    for (std::size_t i = 0; i < half; ++i) {
      weights.push_back(mass(rng));
    }
    std::vector<double> full(weights);
    if (odd_center) full.push_back(mass(rng));
    full.insert(full.end(), weights.rbegin(), weights.rend());
    double sum = 0.0;
    for (double w : full) sum += w;
    for (double& w : full) w /= sum;

    const auto stats = distribution_stats(vocab_with_probs(full));
    REQUIRE(!stats.degenerate);
    CHECK(std::abs(*stats.skew) < 1e-12);
  }
}

TEST_CASE("mirroring a distribution negates the skewness") {
  std::mt19937 rng(2025);
  std::uniform_int_distribution<std::size_t> size_dist(2, 400);
  for (int iter = 0; iter < 100; ++iter) {
    const auto probs = random_distribution(rng, size_dist(rng));
    std::vector<double> mirrored(probs.rbegin(), probs.rend());
    const auto forward = distribution_stats(vocab_with_probs(probs));
    const auto backward = distribution_stats(vocab_with_probs(mirrored));
    REQUIRE(!forward.degenerate);
    CHECK(oracle::close(*backward.skew, -*forward.skew));
  }
}

}  // TEST_SUITE
