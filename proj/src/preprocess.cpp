#include "tailrate/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tailrate {

void validate_trace(const ChannelTrace& trace) {
  if (trace.samples.empty()) throw std::invalid_argument("trace: no samples");
  if (!(trace.sample_period_ms > 0.0)) {
    throw std::invalid_argument("trace: sample period must be > 0");
  }
  for (double x : trace.samples) {
    if (!std::isfinite(x)) throw std::invalid_argument("trace: non-finite sample");
    if (trace.unit == Unit::linear_mw && !(x > 0.0)) {
      throw std::invalid_argument("trace: linear powers must be > 0 mW");
    }
  }
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) {
  if (!(mw > 0.0)) throw std::domain_error("mw_to_dbm: power must be > 0 mW");
  return 10.0 * std::log10(mw);
}

ChannelTrace convert_units(const ChannelTrace& trace, Unit target) {
  validate_trace(trace);
  if (trace.unit == target) return trace;
  ChannelTrace out = trace;
  out.unit = target;
  if (target == Unit::linear_mw) {
    for (double& x : out.samples) x = dbm_to_mw(x);
  } else {
    for (double& x : out.samples) x = mw_to_dbm(x);
  }
  return out;
}

std::vector<WindowLabel> split_stationary_groups(const ChannelTrace& trace,
                                                 std::size_t window, double level) {
  validate_trace(trace);
  if (window == 0) throw std::invalid_argument("split_stationary_groups: window must be >= 1");
  const std::size_t n = trace.samples.size();
  std::vector<WindowLabel> labels;
  labels.reserve(n / window + 1);
  for (std::size_t begin = 0, index = 0; begin < n; begin += window, ++index) {
    const std::size_t end = std::min(begin + window, n);
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = begin; i < end; ++i) lo = std::min(lo, trace.samples[i]);
    labels.push_back({index, begin, end, lo >= level ? 1 : 2, end - begin < window});
  }
  return labels;
}

std::vector<double> group_samples(const ChannelTrace& trace,
                                  const std::vector<WindowLabel>& labels, int group) {
  std::vector<double> out;
  for (const WindowLabel& w : labels) {
    if (w.group != group) continue;
    out.insert(out.end(), trace.samples.begin() + static_cast<std::ptrdiff_t>(w.begin),
               trace.samples.begin() + static_cast<std::ptrdiff_t>(w.end));
  }
  return out;
}

ExceedanceSet extract_exceedances(const std::vector<double>& samples, double threshold) {
  ExceedanceSet out;
  out.threshold = threshold;
  out.source_count = samples.size();
  for (double x : samples) {
    if (x < threshold) out.values.push_back(threshold - x);
  }
  return out;
}

ExceedanceSet decluster(const std::vector<double>& samples, double threshold,
                        std::size_t run_length) {
  ExceedanceSet out;
  out.threshold = threshold;
  out.source_count = samples.size();
  out.declustered = true;

  // gap = consecutive above-threshold samples since the last fade; a fade
  // arriving after gap >= run_length opens a new cluster.
  std::size_t gap = std::numeric_limits<std::size_t>::max();
  bool open = false;
  double deepest = 0.0;
  for (double x : samples) {
    if (x < threshold) {
      const double y = threshold - x;
      if (!open || gap >= run_length) {
        if (open) out.values.push_back(deepest);
        open = true;
        deepest = y;
      } else {
        deepest = std::max(deepest, y);
      }
      gap = 0;
    } else if (gap != std::numeric_limits<std::size_t>::max()) {
      ++gap;
    }
  }
  if (open) out.values.push_back(deepest);
  return out;
}

}  // namespace tailrate
