#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tailrate {

/// Parameters of a generalized Pareto distribution: shape (any finite
/// sign) and scale (strictly positive, same units as the exceedances).
struct GpdParams {
  double shape = 0.0;
  double scale = 1.0;
};

/// |shape| below this switches the GPD formulas to their exponential
/// limits; avoids cancellation in (1 + shape*y/scale)^(-1/shape).
inline constexpr double kShapeZeroTol = 1e-8;

bool valid(const GpdParams& p);

/// Throws std::invalid_argument unless scale > 0 and shape is finite.
void require_valid(const GpdParams& p);

/// Upper endpoint of the support: -scale/shape for shape < 0, +inf otherwise.
double support_upper(const GpdParams& p);

/// Analytic mean scale/(1 - shape); requires shape < 1.
double gpd_mean(const GpdParams& p);

/// F(y) = 1 - (1 + shape*y/scale)^(-1/shape) for y >= 0.
/// Throws std::domain_error for y < 0 or y beyond the support endpoint.
double gpd_cdf(double y, const GpdParams& p);

/// Inverse of gpd_cdf on p_level in [0, 1).
double gpd_quantile(double p_level, const GpdParams& p);

/// Quantile addressed by survival probability q in (0, 1]: equals
/// gpd_quantile(1 - q) but stays accurate for q near 0 (deep tail).
double gpd_quantile_tail(double q, const GpdParams& p);

/// Sum over points of -ln(scale) - (1 + 1/shape)*ln(1 + shape*y/scale).
/// Points outside the support yield -infinity instead of an error so
/// that unconstrained optimizers can penalize infeasible iterates.
/// Throws on empty input or invalid parameters.
double gpd_log_likelihood(const std::vector<double>& exceedances,
                          const GpdParams& p);

/// n i.i.d. draws by inverse-transform sampling; deterministic per seed.
std::vector<double> gpd_sample(const GpdParams& p, std::size_t n,
                               std::uint64_t seed);

}  // namespace tailrate
