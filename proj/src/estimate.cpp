#include "tailrate/estimate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tailrate {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sum of log1p(a*y_i), or +inf if any 1 + a*y_i <= 0. Multiplies the
// factors in blocks of 16 so one log call covers 16 points; blocks that
// overflow, underflow, or contain an infeasible point are redone with
// log1p. This is the optimizer's hot loop.
double sum_log1p_scaled(const double* y, std::size_t n, double a) {
  double acc = 0.0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    double p0 = 1.0, p1 = 1.0, p2 = 1.0, p3 = 1.0;
    for (std::size_t k = 0; k < 16; k += 4) {
      p0 *= 1.0 + a * y[i + k + 0];
      p1 *= 1.0 + a * y[i + k + 1];
      p2 *= 1.0 + a * y[i + k + 2];
      p3 *= 1.0 + a * y[i + k + 3];
    }
    const double prod = (p0 * p1) * (p2 * p3);
    if (prod > 0.0 && std::isfinite(prod)) {
      acc += std::log(prod);
      continue;
    }
    for (std::size_t k = i; k < i + 16; ++k) {
      const double t = a * y[k];
      if (t <= -1.0) return kInf;
      acc += std::log1p(t);
    }
  }
  for (; i < n; ++i) {
    const double t = a * y[i];
    if (t <= -1.0) return kInf;
    acc += std::log1p(t);
  }
  return acc;
}

// Negative log-likelihood in x = (ln scale, shape) for data z with
// precomputed sum(z). +inf outside the support.
struct NllObjective {
  const std::vector<double>& z;
  double sum_z;

  double operator()(double ln_scale, double shape) const {
    const double n = static_cast<double>(z.size());
    const double scale = std::exp(ln_scale);
    if (std::abs(shape) < kShapeZeroTol) {
      return n * ln_scale + sum_z / scale;
    }
    const double s = sum_log1p_scaled(z.data(), z.size(), shape / scale);
    if (!std::isfinite(s)) return kInf;
    return n * ln_scale + (1.0 + 1.0 / shape) * s;
  }
};

struct SimplexResult {
  std::array<double, 2> x{0.0, 0.0};
  double f = kInf;
  bool converged = false;
};

// Plain Nelder-Mead in two dimensions. Terminates when the simplex
// diameter drops below diam_tol in parameter space.
template <typename F>
SimplexResult nelder_mead_2d(const F& fn, std::array<double, 2> start, double step,
                             double diam_tol, int max_iter) {
  using Vec = std::array<double, 2>;
  struct Vertex {
    Vec x;
    double f;
  };
  auto eval = [&fn](const Vec& v) { return fn(v[0], v[1]); };
  std::array<Vertex, 3> s{Vertex{start, eval(start)},
                          Vertex{{start[0] + step, start[1]}, 0.0},
                          Vertex{{start[0], start[1] + step}, 0.0}};
  s[1].f = eval(s[1].x);
  s[2].f = eval(s[2].x);

  auto order = [&s]() {
    std::sort(s.begin(), s.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  auto diameter = [&s]() {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        d = std::max(d, std::hypot(s[i].x[0] - s[j].x[0], s[i].x[1] - s[j].x[1]));
    return d;
  };

  SimplexResult res;
  for (int it = 0; it < max_iter; ++it) {
    order();
    if (diameter() < diam_tol) {
      res.converged = true;
      break;
    }
    const Vec centroid{0.5 * (s[0].x[0] + s[1].x[0]), 0.5 * (s[0].x[1] + s[1].x[1])};
    auto along = [&centroid, &s](double c) {
      return Vec{centroid[0] + c * (centroid[0] - s[2].x[0]),
                 centroid[1] + c * (centroid[1] - s[2].x[1])};
    };
    const Vec xr = along(1.0);
    const double fr = eval(xr);
    if (fr < s[0].f) {
      const Vec xe = along(2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        s[2] = {xe, fe};
      } else {
        s[2] = {xr, fr};
      }
      continue;
    }
    if (fr < s[1].f) {
      s[2] = {xr, fr};
      continue;
    }
    const bool outside = fr < s[2].f;
    const Vec xc = along(outside ? 0.5 : -0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : s[2].f)) {
      s[2] = {xc, fc};
      continue;
    }
    // shrink toward the best vertex
    for (int i = 1; i < 3; ++i) {
      s[i].x = {s[0].x[0] + 0.5 * (s[i].x[0] - s[0].x[0]),
                s[0].x[1] + 0.5 * (s[i].x[1] - s[0].x[1])};
      s[i].f = eval(s[i].x);
    }
  }
  order();
  res.x = s[0].x;
  res.f = s[0].f;
  return res;
}

// Observed-information standard errors in (scale, shape) coordinates,
// central differences with relative step 1e-5. Returns {scale_se,
// shape_se}, NaN when the Hessian is not positive definite.
std::pair<double, double> observed_info_se(const NllObjective& nll, double scale,
                                           double shape) {
  const double hs = 1e-5 * scale;
  const double hx = 1e-5 * (std::abs(shape) + 1.0);
  auto f = [&nll](double sc, double sh) { return nll(std::log(sc), sh); };
  const double f0 = f(scale, shape);
  const double dss = (f(scale + hs, shape) - 2.0 * f0 + f(scale - hs, shape)) / (hs * hs);
  const double dxx = (f(scale, shape + hx) - 2.0 * f0 + f(scale, shape - hx)) / (hx * hx);
  const double dsx = (f(scale + hs, shape + hx) - f(scale + hs, shape - hx) -
                      f(scale - hs, shape + hx) + f(scale - hs, shape - hx)) /
                     (4.0 * hs * hx);
  const double det = dss * dxx - dsx * dsx;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (!(det > 0.0) || !(dss > 0.0)) return {nan, nan};
  return {std::sqrt(dxx / det), std::sqrt(dss / det)};
}

}  // namespace

TailFit fit_gpd_mle(const ExceedanceSet& exceedances) {
  const std::vector<double>& y = exceedances.values;
  if (y.size() < kMinExceedances) {
    throw std::invalid_argument("fit_gpd_mle: need at least " +
                                std::to_string(kMinExceedances) + " exceedances, got " +
                                std::to_string(y.size()));
  }
  double y_max = 0.0;
  for (double v : y) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("fit_gpd_mle: exceedances must be finite and >= 0");
    }
    y_max = std::max(y_max, v);
  }
  if (!(y_max > 0.0)) {
    throw std::invalid_argument("fit_gpd_mle: all exceedances are zero");
  }

  // Normalize by the largest exceedance. The optimizer then sees the
  // same numbers for any exactly-scaled copy of the input, which makes
  // the fitted scale exactly equivariant; y_max multiplies back in at
  // the end.
  std::vector<double> z(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) z[i] = y[i] / y_max;
  const double sum_z = std::accumulate(z.begin(), z.end(), 0.0);
  const double n = static_cast<double>(z.size());
  const double mean = sum_z / n;
  double var = 0.0;
  for (double v : z) var += (v - mean) * (v - mean);
  var /= n;

  const NllObjective nll{z, sum_z};

  std::vector<double> shape_seeds;
  if (var > 0.0) {
    // Moment relations: mean = s/(1-k), var = s^2/((1-k)^2 (1-2k)), so
    // k0 = (1 - mean^2/var)/2 and s0 = mean*(1-k0).
    const double k0 = 0.5 * (1.0 - mean * mean / var);
    if (std::isfinite(k0)) shape_seeds.push_back(std::clamp(k0, -5.0, 0.95));
  }
  shape_seeds.insert(shape_seeds.end(), {-0.2, 0.0, 0.2});

  SimplexResult best;
  bool have = false;
  for (double k : shape_seeds) {
    const double s0 = mean * (1.0 - std::min(k, 0.95));
    const SimplexResult r = nelder_mead_2d(
        [&nll](double a, double b) { return nll(a, b); },
        {std::log(s0), k}, 0.1, 1e-8, 500);
    if (!have || r.f < best.f) {
      best = r;
      have = true;
    }
  }

  TailFit fit;
  fit.threshold = exceedances.threshold;
  fit.n_exceedances = y.size();
  fit.tail_fraction = exceedances.source_count > 0
                          ? n / static_cast<double>(exceedances.source_count)
                          : 1.0;
  fit.converged = best.converged && std::isfinite(best.f);

  const double scale_z = std::exp(best.x[0]);
  fit.params.shape = best.x[1];
  fit.params.scale = scale_z * y_max;
  fit.log_likelihood = gpd_log_likelihood(y, fit.params);

  const auto [se_scale_z, se_shape] = observed_info_se(nll, scale_z, best.x[1]);
  fit.scale_se = se_scale_z * y_max;
  fit.shape_se = se_shape;
  return fit;
}

namespace {

std::vector<double> sorted_values(const ExceedanceSet& ex) {
  std::vector<double> s = ex.values;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<std::pair<double, double>> pp_points(const ExceedanceSet& exceedances,
                                                 const TailFit& fit) {
  const std::vector<double> s = sorted_values(exceedances);
  const double denom = static_cast<double>(s.size()) + 1.0;
  std::vector<std::pair<double, double>> pts;
  pts.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    pts.emplace_back(static_cast<double>(i + 1) / denom, gpd_cdf(s[i], fit.params));
  }
  return pts;
}

std::vector<std::pair<double, double>> qq_points(const ExceedanceSet& exceedances,
                                                 const TailFit& fit) {
  const std::vector<double> s = sorted_values(exceedances);
  const double denom = static_cast<double>(s.size()) + 1.0;
  std::vector<std::pair<double, double>> pts;
  pts.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    pts.emplace_back(gpd_quantile(static_cast<double>(i + 1) / denom, fit.params), s[i]);
  }
  return pts;
}

}  // namespace tailrate
