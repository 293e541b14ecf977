#include "xulosa/moments.hpp"

#include <cmath>

#include "xulosa/error.hpp"

namespace xulosa {

namespace {

double int_power(double x, int order) {
  double value = x;
  for (int k = 1; k < order; ++k) {
    value *= x;
  }
  return value;
}

}  // namespace

double raw_moment(std::span<const double> probs, int order) {
  if (probs.empty()) {
    throw Error(ErrorCode::EmptyInput, "empty distribution");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    sum += probs[i] * int_power(static_cast<double>(i + 1), order);
  }
  return sum;
}

double third_central_moment(double e1, double e2, double e3) {
  return e3 - 3.0 * e1 * e2 + 2.0 * e1 * e1 * e1;
}

std::size_t boundary_index(double value, Rounding mode, std::size_t n) {
  double rounded;
  switch (mode) {
    case Rounding::floor_mode: rounded = std::floor(value); break;
    case Rounding::ceil_mode: rounded = std::ceil(value); break;
    case Rounding::nearest:
    default: rounded = std::round(value); break;  // half away from zero
  }
  if (rounded < 1.0) return 1;
  if (rounded > static_cast<double>(n)) return n;
  return static_cast<std::size_t>(rounded);
}

double skewness(double mu3, double sigma) {
  if (sigma <= 0.0) {
    throw Error(ErrorCode::DegenerateDistribution,
                "skewness undefined for sigma = 0");
  }
  return mu3 / (sigma * sigma * sigma);
}

DistributionStats distribution_stats(const WeightedVocabulary& vocab,
                                     const MomentOptions& options) {
  const std::size_t n = vocab.size();
  if (n == 0) {
    throw Error(ErrorCode::EmptyInput, "empty vocabulary");
  }

  DistributionStats stats;
  stats.vocab_size = n;

  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    e += static_cast<double>(i + 1) * vocab.entries[i].prob;
  }
  stats.expectation = e;

  // Dispersion from the definitional sum, not the raw-moment identity;
  // the identity D = E2 - E1^2 is checked by the tests instead.
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double delta = static_cast<double>(i + 1) - e;
    d += delta * delta * vocab.entries[i].prob;
  }
  stats.dispersion = d;
  stats.sigma = std::sqrt(d);

  double e2 = 0.0;
  double e3 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double idx = static_cast<double>(i + 1);
    e2 += vocab.entries[i].prob * idx * idx;
    e3 += vocab.entries[i].prob * idx * idx * idx;
  }
  stats.e2 = e2;
  stats.e3 = e3;
  stats.mu3 = third_central_moment(e, e2, e3);

  stats.degenerate = (stats.sigma == 0.0);
  if (!stats.degenerate) {
    stats.skew = stats.mu3 / (stats.sigma * stats.sigma * stats.sigma);
    stats.k_idx = boundary_index(e - stats.sigma, options.rounding, n);
    stats.m_idx = boundary_index(e + stats.sigma, options.rounding, n);
  }
  return stats;
}

}  // namespace xulosa
