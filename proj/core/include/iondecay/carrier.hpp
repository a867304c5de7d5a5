// carrier.hpp — carrier-regime motional dynamics via the Gaussian conditional
// P distribution: damped phase-space propagator, thermal dispersion, grids

#pragma once

#include <Eigen/Dense>

#include "iondecay/constants.hpp"
#include "iondecay/errors.hpp"

namespace iondecay {

struct CarrierParams {
  double gamma = 0.0;  // damping constant [1/s]
  double nu = 1.0;     // trap frequency [rad/s]
  double nbar = 0.0;   // reservoir thermal occupation

  void validate() const {
    if (gamma < 0.0) throw DomainError("CarrierParams: gamma must be >= 0");
    if (nu <= 0.0) throw DomainError("CarrierParams: nu must be > 0");
    if (nbar < 0.0) throw DomainError("CarrierParams: nbar must be >= 0");
  }
};

// Damped-rotation propagator u(t) = exp(-(gamma/2 + i nu) t), u(0) = 1.
complexd propagator_u(const CarrierParams& p, double t);

// Response of the motional mode to one reservoir mode of frequency omega_k
// with coupling gk; v_k(0) = 0. The removable singularity at
// gamma = 0, omega_k = nu is evaluated by series.
complexd coupling_response_vk(const CarrierParams& p, double gk, double omega_k,
                              double t);

// Thermal dispersion D(t) = nbar (1 - exp(-gamma t)).
double dispersion_D(const CarrierParams& p, double t);

// Conditional Gaussian P distribution for the representative coherent-state
// pair |alpha1><alpha2| at time t.
struct GaussianPState {
  complexd alpha1;
  complexd alpha2;
  double t = 0.0;
  complexd u;          // propagator value u(t)
  double dispersion = 0.0;  // D(t)
  complexd prefactor;  // <alpha1|alpha2> / (pi D)
};

GaussianPState make_gaussian_pstate(const CarrierParams& p, complexd alpha1,
                                    complexd alpha2, double t);

// Pointwise value at phase-space point gamma. Throws DegenerateDispersion in
// the delta-function limit (D <= 1e-300); use the moment formulas there.
complexd conditional_P(const GaussianPState& s, complexd gamma_point);

// <a^dag a>(t) for an initial coherent state alpha: |u(t) alpha|^2 + D(t).
double mean_excitation(const CarrierParams& p, complexd alpha, double t);

struct GridSpec {
  int n_re = 201;
  int n_im = 201;
  double re_min = -1.0, re_max = 1.0;
  double im_min = -1.0, im_max = 1.0;

  static GridSpec centered(double half_span, int n = 201) {
    return {n, n, -half_span, half_span, -half_span, half_span};
  }

  double re_at(int i) const { return re_min + (re_max - re_min) * i / (n_re - 1); }
  double im_at(int j) const { return im_min + (im_max - im_min) * j / (n_im - 1); }
  double cell_area() const {
    return (re_max - re_min) / (n_re - 1) * (im_max - im_min) / (n_im - 1);
  }
};

// Sampled P on a rectangular Re/Im grid for the physical slice alpha1 = alpha2.
struct PGrid {
  GridSpec spec;
  Eigen::MatrixXd values;  // values(i, j) = P(re_at(i) + i*im_at(j))

  double mass() const;                    // trapezoid integral of P
  complexd mean() const;                  // first moment / mass
  double central_second_moment() const;   // E|gamma - mean|^2
};

// Default grid spans +/- (|alpha| + 4 sqrt(nbar + 1)) at 201 x 201.
GridSpec default_grid(const CarrierParams& p, complexd alpha, int n = 201);

PGrid pgrid(const CarrierParams& p, complexd alpha, double t, const GridSpec& spec);
PGrid pgrid(const CarrierParams& p, complexd alpha, double t);

}  // namespace iondecay
