#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tailrate/estimate.hpp"

namespace tailrate {

/// Mean-excess row for one candidate threshold.
struct MrlRow {
  double threshold = 0.0;
  double mean_excess = 0.0;
  double std_error = 0.0;  // sample std / sqrt(count)
  std::size_t count = 0;
};

/// Shape / modified-scale row for one candidate threshold. For the
/// lower-tail orientation used here the threshold-invariant combination
/// is scale + shape * threshold.
struct StabilityRow {
  double threshold = 0.0;
  double shape = 0.0;
  double shape_se = 0.0;
  double modified_scale = 0.0;
  std::size_t count = 0;
  bool ok = false;  // false when the per-candidate fit failed
};

struct ThresholdDiagnostics {
  std::vector<double> candidates;  // strictly monotone
  std::vector<MrlRow> mrl;
  std::vector<StabilityRow> stability;
  std::optional<double> selected;
};

struct ThresholdChoice {
  double threshold = 0.0;
  bool fallback = false;  // no stability plateau; variance minimizer used
};

/// Candidate grid: `count` evenly spaced quantile levels between the
/// 25th and 1st percentile of the samples, ordered least- to
/// most-extreme (decreasing threshold).
std::vector<double> default_candidate_grid(const std::vector<double>& samples,
                                           std::size_t count = 50);

/// Mean excess e(v) = mean{v - x : x < v} per candidate; candidates
/// retaining fewer than min_exceedances points are omitted.
/// Throws when every candidate ends up empty.
std::vector<MrlRow> mean_residual_life(const std::vector<double>& samples,
                                       const std::vector<double>& candidates,
                                       std::size_t min_exceedances = kMinExceedances);

/// GPD fit per candidate threshold; failed fits are flagged, not fatal.
std::vector<StabilityRow> parameter_stability(const std::vector<double>& samples,
                                              const std::vector<double>& candidates,
                                              std::size_t min_exceedances = kMinExceedances);

/// Picks the least-extreme candidate whose next `window` shape
/// estimates stay within one pooled standard error (a stability
/// plateau). Falls back to the window with the smallest shape variance
/// when no plateau exists. Throws when fewer than `window` usable
/// stability rows are available.
ThresholdChoice select_threshold(const ThresholdDiagnostics& diagnostics,
                                 std::size_t window);

/// Convenience wrapper producing the full diagnostics bundle.
ThresholdDiagnostics threshold_diagnostics(const std::vector<double>& samples,
                                           const std::vector<double>& candidates,
                                           std::size_t min_exceedances = kMinExceedances);

}  // namespace tailrate
