#include "iondecay/envelope.hpp"

#include <algorithm>
#include <cmath>

namespace iondecay {

namespace {

Extremum refine(const TimeSeries& s, std::size_t i, bool is_max) {
  const double d1 = s.times[i] - s.times[i - 1];
  const double d2 = s.times[i + 1] - s.times[i];
  const double s1 = (s.p_down[i] - s.p_down[i - 1]) / d1;
  const double s2 = (s.p_down[i + 1] - s.p_down[i]) / d2;
  const double curv = (s2 - s1) / (d1 + d2);            // f''/2
  const double slope = (s1 * d2 + s2 * d1) / (d1 + d2); // f' at t_i
  if (curv == 0.0) return {s.times[i], s.p_down[i], is_max};
  const double delta = -slope / (2.0 * curv);
  return {s.times[i] + delta, s.p_down[i] - slope * slope / (4.0 * curv), is_max};
}

}  // namespace

std::vector<Extremum> find_extrema(const TimeSeries& series, double t_limit) {
  std::vector<Extremum> out;
  for (std::size_t i = 1; i + 1 < series.size(); ++i) {
    if (series.times[i] > t_limit) break;
    const double prev = series.p_down[i - 1];
    const double here = series.p_down[i];
    const double next = series.p_down[i + 1];
    if (here > prev && here >= next) {
      out.push_back(refine(series, i, true));
    } else if (here < prev && here <= next) {
      out.push_back(refine(series, i, false));
    }
  }
  // Enforce max/min alternation, keeping the more extreme of any duplicates.
  std::vector<Extremum> alternating;
  for (const Extremum& e : out) {
    if (!alternating.empty() && alternating.back().is_max == e.is_max) {
      const bool replace = e.is_max ? e.value > alternating.back().value
                                    : e.value < alternating.back().value;
      if (replace) alternating.back() = e;
    } else {
      alternating.push_back(e);
    }
  }
  return alternating;
}

double envelope_asymmetry(const TimeSeries& series, double baseline, double t_limit) {
  const std::vector<Extremum> ext = find_extrema(series, t_limit);
  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < ext.size(); ++j) {
    const Extremum& left = ext[j - 1];
    const Extremum& mid = ext[j];
    const Extremum& right = ext[j + 1];

    const double a_left = std::abs(left.value - baseline);
    const double a_right = std::abs(right.value - baseline);
    const double frac = (mid.t - left.t) / (right.t - left.t);

    double opposite;  // opposite-envelope value interpolated to mid.t
    if (a_left > 0.0 && a_right > 0.0) {
      // Exponential interpolation: exact for equal-rate decaying envelopes.
      const double amp = std::exp(std::log(a_left) +
                                  frac * (std::log(a_right) - std::log(a_left)));
      opposite = mid.is_max ? baseline - amp : baseline + amp;
    } else {
      opposite = left.value + frac * (right.value - left.value);
    }
    worst = std::max(worst, std::abs(0.5 * (opposite + mid.value) - baseline));
  }
  return worst;
}

}  // namespace iondecay
