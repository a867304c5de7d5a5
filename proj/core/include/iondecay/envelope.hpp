// envelope.hpp — oscillation envelope extraction and the midline asymmetry
// metric that separates symmetric from asymmetric Rabi decay

#pragma once

#include <limits>
#include <vector>

#include "iondecay/states.hpp"

namespace iondecay {

struct Extremum {
  double t;
  double value;
  bool is_max;
};

// Interior extrema of p_down(t), refined by a local parabolic fit.
std::vector<Extremum> find_extrema(const TimeSeries& series,
                                   double t_limit = std::numeric_limits<double>::infinity());

// For every minimum framed by two maxima (and vice versa), compares the
// opposite-envelope amplitude geometrically interpolated to the extremum time
// against the extremum's own amplitude about the baseline. Equal-rate
// exponential envelopes give zero; a drifting midline gives the drift size.
// Returns the largest |midline - baseline| over extrema up to t_limit.
double envelope_asymmetry(const TimeSeries& series, double baseline = 0.5,
                          double t_limit = std::numeric_limits<double>::infinity());

}  // namespace iondecay
