#pragma once

#include <cstddef>
#include <vector>

namespace tailrate {

enum class Unit { dbm, linear_mw };

/// Time-ordered received-power trace.
struct ChannelTrace {
  std::vector<double> samples;
  Unit unit = Unit::dbm;
  double sample_period_ms = 2.0;
};

/// Throws std::invalid_argument on an empty trace, non-finite samples,
/// non-positive linear powers, or a non-positive sample period.
void validate_trace(const ChannelTrace& trace);

double dbm_to_mw(double dbm);

/// Throws std::domain_error for mw <= 0.
double mw_to_dbm(double mw);

ChannelTrace convert_units(const ChannelTrace& trace, Unit target);

/// One grouping window. Group 1 holds windows whose minimum stays at or
/// above the grouping level; anything dipping below goes to group 2.
struct WindowLabel {
  std::size_t index = 0;
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last sample
  int group = 1;
  bool partial = false;  // trailing window shorter than the nominal width
};

/// Partitions the trace into consecutive windows of `window` samples and
/// labels each one. A trailing partial window is kept and flagged.
std::vector<WindowLabel> split_stationary_groups(const ChannelTrace& trace,
                                                 std::size_t window, double level);

/// Samples belonging to one group, concatenated in window order.
std::vector<double> group_samples(const ChannelTrace& trace,
                                  const std::vector<WindowLabel>& labels, int group);

/// Lower-tail exceedances y = u - x of samples x below threshold u.
struct ExceedanceSet {
  double threshold = 0.0;       // u, in trace units
  std::vector<double> values;   // all >= 0, original order
  std::size_t source_count = 0; // samples before extraction
  bool declustered = false;

  double tail_fraction() const {
    return source_count == 0 ? 0.0
                             : static_cast<double>(values.size()) /
                                   static_cast<double>(source_count);
  }
};

ExceedanceSet extract_exceedances(const std::vector<double>& samples, double threshold);

/// Runs declustering: below-threshold samples separated by fewer than
/// run_length above-threshold samples merge into one cluster, and each
/// cluster keeps only its deepest fade. run_length = 0 degenerates to
/// extract_exceedances.
ExceedanceSet decluster(const std::vector<double>& samples, double threshold,
                        std::size_t run_length);

}  // namespace tailrate
