// pulses.hpp — closed-form resonant pulse maps (carrier, red/blue sideband)

#pragma once

#include "iondecay/states.hpp"

namespace iondecay {

// Dimensionless pulse area (Omega*tau for the carrier, g*tau for sidebands)
// and laser phase, reduced to [0, 2*pi).
struct PulseParams {
  double area = 0.0;
  double phase = 0.0;

  PulseParams() = default;
  PulseParams(double area_, double phase_);
};

// Rotates the electronic levels only; Fock populations are untouched.
FockSpinVector apply_carrier(const FockSpinVector& state, const PulseParams& p);

// First red sideband, |n,down> <-> |n-1,up>. Throws TruncationLeakage when the
// top Fock amplitude exceeds 1e-10.
FockSpinVector apply_jc(const FockSpinVector& state, const PulseParams& p);

// First blue sideband, |n,down> <-> |n+1,up>.
FockSpinVector apply_ajc(const FockSpinVector& state, const PulseParams& p);

// <m| exp(i eta (a + a^dag)) |l>, exact via the associated-Laguerre closed
// form evaluated in log space. Guards m + l > 300.
complexd displacement_matrix_element(double eta, int m, int l);

namespace detail {
// Amplitude threshold at the top Fock level above which sideband maps refuse
// to act (they would push population out of the truncated basis).
inline constexpr double truncation_leakage_threshold = 1e-10;
}  // namespace detail

}  // namespace iondecay
