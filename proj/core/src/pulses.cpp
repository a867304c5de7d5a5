#include "iondecay/pulses.hpp"

#include <cmath>

#include "iondecay/errors.hpp"

namespace iondecay {

PulseParams::PulseParams(double area_, double phase_) : area(area_), phase(phase_) {
  if (!std::isfinite(area)) throw DomainError("PulseParams: area must be finite");
  if (!std::isfinite(phase)) throw DomainError("PulseParams: phase must be finite");
  phase = std::fmod(phase, two_pi);
  if (phase < 0.0) phase += two_pi;
}

FockSpinVector apply_carrier(const FockSpinVector& state, const PulseParams& p) {
  const double c = std::cos(p.area);
  const double s = std::sin(p.area);
  const complexd to_up = -imag_unit * std::exp(complexd(0.0, -p.phase)) * s;
  const complexd to_down = -imag_unit * std::exp(complexd(0.0, p.phase)) * s;

  FockSpinVector out(state.n_max());
  for (int n = 0; n <= state.n_max(); ++n) {
    const complexd down = state.amplitude(n, Spin::down);
    const complexd up = state.amplitude(n, Spin::up);
    out.amplitude(n, Spin::down) = c * down + to_down * up;
    out.amplitude(n, Spin::up) = c * up + to_up * down;
  }
  return out;
}

namespace {

void check_top_amplitude(const FockSpinVector& state, Spin s, const char* what) {
  if (std::abs(state.amplitude(state.n_max(), s)) >
      detail::truncation_leakage_threshold) {
    throw TruncationLeakage(what);
  }
}

}  // namespace

FockSpinVector apply_jc(const FockSpinVector& state, const PulseParams& p) {
  // |n_max, up> would couple to |n_max+1, down>, outside the basis.
  check_top_amplitude(state, Spin::up,
                      "apply_jc: top Fock amplitude too large for truncation");

  const complexd em = std::exp(complexd(0.0, -p.phase));
  const complexd ep = std::exp(complexd(0.0, p.phase));

  FockSpinVector out = state;
  for (int n = 0; n + 1 <= state.n_max(); ++n) {
    const double theta = p.area * std::sqrt(static_cast<double>(n + 1));
    const double cn = std::cos(theta);
    const double sn = std::sin(theta);
    const complexd up_n = state.amplitude(n, Spin::up);
    const complexd down_n1 = state.amplitude(n + 1, Spin::down);
    out.amplitude(n, Spin::up) = cn * up_n + ep * sn * down_n1;
    out.amplitude(n + 1, Spin::down) = cn * down_n1 - em * sn * up_n;
  }
  // |0,down> is dark; the unpaired top amplitude is left in place.
  return out;
}

FockSpinVector apply_ajc(const FockSpinVector& state, const PulseParams& p) {
  check_top_amplitude(state, Spin::down,
                      "apply_ajc: top Fock amplitude too large for truncation");

  const complexd em = std::exp(complexd(0.0, -p.phase));
  const complexd ep = std::exp(complexd(0.0, p.phase));

  FockSpinVector out = state;
  for (int n = 0; n + 1 <= state.n_max(); ++n) {
    const double theta = p.area * std::sqrt(static_cast<double>(n + 1));
    const double cn = std::cos(theta);
    const double sn = std::sin(theta);
    const complexd down_n = state.amplitude(n, Spin::down);
    const complexd up_n1 = state.amplitude(n + 1, Spin::up);
    out.amplitude(n, Spin::down) = cn * down_n - ep * sn * up_n1;
    out.amplitude(n + 1, Spin::up) = cn * up_n1 + em * sn * down_n;
  }
  // |0,up> is dark.
  return out;
}

complexd displacement_matrix_element(double eta, int m, int l) {
  if (m < 0 || l < 0) throw DomainError("displacement_matrix_element: negative index");
  if (eta < 0.0) throw DomainError("displacement_matrix_element: eta must be >= 0");
  if (m + l > 300) {
    throw std::overflow_error("displacement_matrix_element: m + l > 300");
  }
  if (eta == 0.0) return m == l ? 1.0 : 0.0;

  // exp(i eta (a + a^dag)) is the displacement by alpha = i eta, whose matrix
  // elements reduce to associated Laguerre polynomials. With alpha purely
  // imaginary the (m, l) element is symmetric, so only |m - l| enters.
  const int k = std::abs(m - l);
  const int n = std::min(m, l);
  const double x = eta * eta;

  // L_n^{(k)}(x) by the three-term recurrence; magnitudes stay within double
  // range for m + l <= 300, the scale factor is applied in log space.
  double lag_prev = 1.0;
  double lag = 1.0 + k - x;
  if (n == 0) lag = lag_prev;
  for (int j = 1; j < n; ++j) {
    const double lag_next =
        ((2.0 * j + 1.0 + k - x) * lag - (j + k) * lag_prev) / (j + 1.0);
    lag_prev = lag;
    lag = lag_next;
  }
  if (lag == 0.0) return 0.0;

  const double log_scale = k * std::log(eta) - 0.5 * x +
                           0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + k + 1.0));
  const double magnitude = std::exp(log_scale + std::log(std::abs(lag)));
  const double signed_value = std::copysign(magnitude, lag);

  // i^k
  switch (k % 4) {
    case 0: return {signed_value, 0.0};
    case 1: return {0.0, signed_value};
    case 2: return {-signed_value, 0.0};
    default: return {0.0, -signed_value};
  }
}

}  // namespace iondecay
