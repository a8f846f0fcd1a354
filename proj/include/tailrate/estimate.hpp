#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "tailrate/gpd.hpp"
#include "tailrate/preprocess.hpp"

namespace tailrate {

/// Fits with fewer exceedances than this are refused: the standard
/// errors become unusable below ~30 points.
inline constexpr std::size_t kMinExceedances = 30;

/// Result of a maximum-likelihood GPD fit to one exceedance set.
struct TailFit {
  double threshold = 0.0;  // u, trace units
  GpdParams params;
  std::size_t n_exceedances = 0;
  double tail_fraction = 0.0;
  double log_likelihood = 0.0;
  // From the inverse observed information (central differences); NaN
  // when the information matrix is not positive definite at the optimum.
  double shape_se = std::numeric_limits<double>::quiet_NaN();
  double scale_se = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;
};

/// Maximum-likelihood fit via derivative-free simplex search in
/// (ln scale, shape), multi-started from a moment-based seed and from
/// shape in {-0.2, 0, 0.2}, keeping the best likelihood. Deterministic:
/// the same exceedances always produce a bit-identical TailFit.
/// Throws std::invalid_argument with fewer than kMinExceedances points;
/// non-convergence is reported through the flag, never silently.
TailFit fit_gpd_mle(const ExceedanceSet& exceedances);

/// PP plot data: i-th sorted exceedance maps to
/// (i/(n+1), gpd_cdf(y_(i), params)).
std::vector<std::pair<double, double>> pp_points(const ExceedanceSet& exceedances,
                                                 const TailFit& fit);

/// QQ plot data: (gpd_quantile(i/(n+1), params), y_(i)).
std::vector<std::pair<double, double>> qq_points(const ExceedanceSet& exceedances,
                                                 const TailFit& fit);

}  // namespace tailrate
