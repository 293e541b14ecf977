#ifndef XULOSA_MOMENTS_HPP
#define XULOSA_MOMENTS_HPP

#include <optional>
#include <span>

#include "xulosa/weighting.hpp"

namespace xulosa {

enum class Rounding { nearest, floor_mode, ceil_mode };

struct MomentOptions {
  Rounding rounding = Rounding::nearest;
  double skew_epsilon = 1e-9;
};

/// Distribution statistics of the unique-word index variable i = 1..n.
/// When sigma is exactly zero the distribution is degenerate: skewness and
/// the boundary indices are unset and the flag governs pipeline behavior.
struct DistributionStats {
  double expectation = 0.0;  // E = E1
  double dispersion = 0.0;   // D, computed from the definitional sum
  double sigma = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double mu3 = 0.0;
  std::optional<double> skew;         // As = mu3 / sigma^3
  std::optional<std::size_t> k_idx;   // round(E - sigma), clamped to [1, n]
  std::optional<std::size_t> m_idx;   // round(E + sigma), clamped to [1, n]
  bool degenerate = false;
  std::size_t vocab_size = 0;
};

/// Sum of p_i * i^k with i starting at 1, sequential in index order.
/// Throws EmptyInput on an empty distribution.
double raw_moment(std::span<const double> probs, int order);

/// mu3 = E3 - 3*E1*E2 + 2*E1^3.
double third_central_moment(double e1, double e2, double e3);

/// Rounds a boundary value E±σ to an integer vocabulary position and clamps
/// it to [1, n]. Nearest mode rounds halves away from zero.
std::size_t boundary_index(double value, Rounding mode, std::size_t n);

/// As = mu3 / sigma^3. Throws DegenerateDistribution when sigma <= 0.
double skewness(double mu3, double sigma);

DistributionStats distribution_stats(const WeightedVocabulary& vocab,
                                     const MomentOptions& options = {});

}  // namespace xulosa

#endif  // XULOSA_MOMENTS_HPP
