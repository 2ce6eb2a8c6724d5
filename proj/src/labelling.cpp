#include "labelling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jasa {

long long guarded_ceil(double x) {
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x)))
    return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(x));
}

int saturating_ceil(double x) {
  // Demands beyond any representable budget saturate instead of overflowing:
  // a count this side of a billion still fails every feasibility check the
  // same way the true value would.
  return static_cast<int>(std::min<long long>(guarded_ceil(x), 1'000'000'000));
}

double exact_rlep(double error_prob, int size) {
  if (size < 1 || size % 2 == 0)
    throw std::invalid_argument("majority-vote cluster size must be odd and positive");
  if (error_prob < 0.0 || error_prob > 1.0)
    throw std::invalid_argument("error probability must lie in [0, 1]");

  const double e = error_prob;
  if (e == 0.0) return 0.0;
  if (e == 1.0) return 1.0;

  const int first = (size + 1) / 2;
  double sum = 0.0;
  if (size <= 50) {
    // Binomial coefficients up to C(50, 25) are exact in a double.
    for (int i = first; i <= size; ++i) {
      double binom = 1.0;
      for (int j = 0; j < i; ++j) binom = binom * (size - j) / (j + 1);
      sum += binom * std::pow(e, i) * std::pow(1.0 - e, size - i);
    }
  } else {
    // Larger clusters: seed the leading term in log space, then walk the
    // term ratio so nothing overflows.
    double term = std::exp(std::lgamma(size + 1.0) - std::lgamma(first + 1.0) -
                           std::lgamma(size - first + 1.0) + first * std::log(e) +
                           (size - first) * std::log1p(-e));
    const double odds = e / (1.0 - e);
    for (int i = first; i <= size; ++i) {
      sum += term;
      term *= odds * (size - i) / (i + 1.0);
    }
  }
  return std::clamp(sum, 0.0, 1.0);
}

double approx_rlep(double error_prob, int size) {
  if (size < 1) throw std::invalid_argument("cluster size must be positive");
  if (error_prob < 0.0 || error_prob > 1.0)
    throw std::invalid_argument("error probability must lie in [0, 1]");
  return std::pow(4.0 * error_prob * (1.0 - error_prob), size / 2.0);
}

int cluster_size(double error_prob, double target) {
  if (!(error_prob > 0.0))
    throw std::invalid_argument("error probability must be positive");
  if (error_prob >= 0.5)
    throw std::invalid_argument("no finite cluster reaches the target at error probability >= 0.5");
  if (!(target > 0.0 && target < 1.0))
    throw std::invalid_argument("target RLEP must lie in (0, 1)");

  const double ratio = 2.0 * std::log(target) / std::log(4.0 * error_prob * (1.0 - error_prob));
  return std::max(1, saturating_ceil(ratio));
}

int cluster_size_odd(double error_prob, double target) {
  const int k = cluster_size(error_prob, target);
  return k % 2 == 0 ? k + 1 : k;
}

}  // namespace jasa
