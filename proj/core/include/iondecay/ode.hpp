// ode.hpp — adaptive embedded Runge-Kutta 4(5), Dormand-Prince coefficients

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <utility>

#include "iondecay/errors.hpp"

namespace iondecay {

struct OdeOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  double h_min = 1e-18;
  double h_max = std::numeric_limits<double>::infinity();
  double h_init = 0.0;  // 0 = pick from the first sample interval
};

namespace detail {

// Scaled max-norm of the embedded error estimate. Works for any Eigen dense
// type (real or complex); <= 1 means the step passes.
template <class State>
double error_ratio(const State& err, const State& y0, const State& y1,
                   double atol, double rtol) {
  const auto scale = (atol + rtol * y0.cwiseAbs().cwiseMax(y1.cwiseAbs()).array());
  return (err.cwiseAbs().array() / scale).maxCoeff();
}

}  // namespace detail

// Integrates dy/dt = rhs(t, y) through the strictly increasing sample times,
// invoking sink(t, y) at every sample (the first sample must equal t0 and is
// emitted immediately). Steps are clamped so samples land exactly.
template <class State, class Rhs, class Sink>
void integrate_adaptive(Rhs&& rhs, State y, std::span<const double> samples,
                        const OdeOptions& opt, Sink&& sink) {
  if (samples.empty()) return;

  double t = samples.front();
  sink(t, y);
  if (samples.size() == 1) return;

  const double t_end = samples.back();
  double h = opt.h_init > 0.0 ? opt.h_init
                              : std::min((samples[1] - samples[0]) * 0.1,
                                         (t_end - t) * 1e-3);
  h = std::min(h, opt.h_max);

  State k1 = rhs(t, y);
  std::size_t next = 1;

  while (next < samples.size()) {
    const double t_stop = samples[next];
    bool hit_stop = false;
    double h_step = h;
    if (t + h_step >= t_stop) {
      h_step = t_stop - t;
      hit_stop = true;
    }

    // Dormand-Prince 5(4) stages.
    State k2 = rhs(t + h_step * (1.0 / 5.0), (y + h_step * (1.0 / 5.0) * k1).eval());
    State k3 = rhs(t + h_step * (3.0 / 10.0),
                   (y + h_step * (3.0 / 40.0) * k1 + h_step * (9.0 / 40.0) * k2).eval());
    State k4 = rhs(t + h_step * (4.0 / 5.0),
                   (y + h_step * (44.0 / 45.0) * k1 - h_step * (56.0 / 15.0) * k2 +
                    h_step * (32.0 / 9.0) * k3)
                       .eval());
    State k5 = rhs(t + h_step * (8.0 / 9.0),
                   (y + h_step * (19372.0 / 6561.0) * k1 -
                    h_step * (25360.0 / 2187.0) * k2 +
                    h_step * (64448.0 / 6561.0) * k3 - h_step * (212.0 / 729.0) * k4)
                       .eval());
    State k6 = rhs(t + h_step,
                   (y + h_step * (9017.0 / 3168.0) * k1 - h_step * (355.0 / 33.0) * k2 +
                    h_step * (46732.0 / 5247.0) * k3 + h_step * (49.0 / 176.0) * k4 -
                    h_step * (5103.0 / 18656.0) * k5)
                       .eval());
    State y5 = (y + h_step * (35.0 / 384.0) * k1 + h_step * (500.0 / 1113.0) * k3 +
                h_step * (125.0 / 192.0) * k4 - h_step * (2187.0 / 6784.0) * k5 +
                h_step * (11.0 / 84.0) * k6)
                   .eval();
    State k7 = rhs(t + h_step, y5);

    State err = (h_step * (71.0 / 57600.0) * k1 - h_step * (71.0 / 16695.0) * k3 +
                 h_step * (71.0 / 1920.0) * k4 - h_step * (17253.0 / 339200.0) * k5 +
                 h_step * (22.0 / 525.0) * k6 - h_step * (1.0 / 40.0) * k7)
                    .eval();

    const double ratio = detail::error_ratio(err, y, y5, opt.atol, opt.rtol);
    if (ratio <= 1.0) {
      t = hit_stop ? t_stop : t + h_step;
      y = std::move(y5);
      k1 = std::move(k7);  // first-same-as-last
      if (hit_stop) {
        sink(t, y);
        ++next;
      }
      const double grow =
          ratio > 0.0 ? std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0) : 5.0;
      h = std::min(h_step * grow, opt.h_max);
    } else {
      double shrink = 0.2;
      if (std::isfinite(ratio)) {
        shrink = std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 0.9);
      }
      h = h_step * shrink;
    }
    if (h < opt.h_min) {
      throw StepSizeUnderflow("integrate_adaptive: step size below minimum");
    }
  }
}

}  // namespace iondecay
