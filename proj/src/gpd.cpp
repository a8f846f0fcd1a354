#include "tailrate/gpd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tailrate/rng.hpp"

namespace tailrate {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool valid(const GpdParams& p) {
  return std::isfinite(p.shape) && std::isfinite(p.scale) && p.scale > 0.0;
}

void require_valid(const GpdParams& p) {
  if (!valid(p)) {
    throw std::invalid_argument("GpdParams: scale must be > 0 and shape finite (shape=" +
                                std::to_string(p.shape) + ", scale=" + std::to_string(p.scale) + ")");
  }
}

double support_upper(const GpdParams& p) {
  require_valid(p);
  return p.shape < 0.0 ? -p.scale / p.shape : kInf;
}

double gpd_mean(const GpdParams& p) {
  require_valid(p);
  if (p.shape >= 1.0) throw std::domain_error("gpd_mean: undefined for shape >= 1");
  return p.scale / (1.0 - p.shape);
}

double gpd_cdf(double y, const GpdParams& p) {
  require_valid(p);
  if (!(y >= 0.0)) throw std::domain_error("gpd_cdf: y must be >= 0");
  if (std::abs(p.shape) < kShapeZeroTol) {
    return -std::expm1(-y / p.scale);
  }
  const double t = p.shape * y / p.scale;
  if (t <= -1.0) {
    // shape < 0: y at or beyond the finite endpoint -scale/shape.
    if (t == -1.0) return 1.0;
    throw std::domain_error("gpd_cdf: y exceeds the support endpoint -scale/shape");
  }
  return -std::expm1(-std::log1p(t) / p.shape);
}

double gpd_quantile(double p_level, const GpdParams& p) {
  if (!(p_level >= 0.0 && p_level < 1.0)) {
    throw std::domain_error("gpd_quantile: probability must lie in [0, 1)");
  }
  require_valid(p);
  if (std::abs(p.shape) < kShapeZeroTol) {
    return -p.scale * std::log1p(-p_level);
  }
  // (scale/shape)*((1-p)^(-shape) - 1), evaluated in the log domain.
  return p.scale / p.shape * std::expm1(-p.shape * std::log1p(-p_level));
}

double gpd_quantile_tail(double q, const GpdParams& p) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::domain_error("gpd_quantile_tail: survival probability must lie in (0, 1]");
  }
  require_valid(p);
  if (std::abs(p.shape) < kShapeZeroTol) {
    return -p.scale * std::log(q);
  }
  return p.scale / p.shape * std::expm1(-p.shape * std::log(q));
}

double gpd_log_likelihood(const std::vector<double>& exceedances, const GpdParams& p) {
  require_valid(p);
  if (exceedances.empty()) {
    throw std::invalid_argument("gpd_log_likelihood: empty exceedance sequence");
  }
  const double log_scale = std::log(p.scale);
  if (std::abs(p.shape) < kShapeZeroTol) {
    double acc = 0.0;
    for (double y : exceedances) {
      if (!(y >= 0.0)) return -kInf;
      acc += -log_scale - y / p.scale;
    }
    return acc;
  }
  const double a = p.shape / p.scale;
  const double c = 1.0 + 1.0 / p.shape;
  double acc = 0.0;
  for (double y : exceedances) {
    const double t = a * y;
    if (!(y >= 0.0) || t <= -1.0) return -kInf;  // support violation sentinel
    acc += -log_scale - c * std::log1p(t);
  }
  return acc;
}

std::vector<double> gpd_sample(const GpdParams& p, std::size_t n, std::uint64_t seed) {
  require_valid(p);
  if (n == 0) throw std::invalid_argument("gpd_sample: n must be >= 1");
  std::mt19937_64 gen(seed);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = gpd_quantile_tail(uniform_open(gen), p);
  }
  return out;
}

}  // namespace tailrate
