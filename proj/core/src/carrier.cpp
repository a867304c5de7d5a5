#include "iondecay/carrier.hpp"

#include <cmath>

namespace iondecay {

complexd propagator_u(const CarrierParams& p, double t) {
  p.validate();
  if (t < 0.0) throw DomainError("propagator_u: t must be >= 0");
  return std::exp(complexd(-0.5 * p.gamma * t, -p.nu * t));
}

complexd coupling_response_vk(const CarrierParams& p, double gk, double omega_k,
                              double t) {
  p.validate();
  if (t < 0.0) throw DomainError("coupling_response_vk: t must be >= 0");
  if (gk == 0.0 || t == 0.0) return 0.0;

  const complexd s(0.5 * p.gamma, -(omega_k - p.nu));
  const complexd st = s * t;
  complexd ramp;  // (1 - exp(-s t)) / s
  if (std::abs(st) < 1e-4) {
    // Series in s t around the removable singularity at s = 0.
    ramp = t * (1.0 - st / 2.0 + st * st / 6.0 - st * st * st / 24.0);
  } else {
    ramp = (1.0 - std::exp(-st)) / s;
  }
  return -gk * std::exp(complexd(0.0, -omega_k * t)) * ramp;
}

double dispersion_D(const CarrierParams& p, double t) {
  p.validate();
  if (t < 0.0) throw DomainError("dispersion_D: t must be >= 0");
  return p.nbar * (-std::expm1(-p.gamma * t));
}

GaussianPState make_gaussian_pstate(const CarrierParams& p, complexd alpha1,
                                    complexd alpha2, double t) {
  GaussianPState s;
  s.alpha1 = alpha1;
  s.alpha2 = alpha2;
  s.t = t;
  s.u = propagator_u(p, t);
  s.dispersion = dispersion_D(p, t);
  const complexd overlap = std::exp(-0.5 * std::norm(alpha1) -
                                    0.5 * std::norm(alpha2) +
                                    std::conj(alpha1) * alpha2);
  s.prefactor = s.dispersion > 0.0 ? overlap / (pi * s.dispersion) : complexd(0.0);
  return s;
}

complexd conditional_P(const GaussianPState& s, complexd gamma_point) {
  if (s.dispersion <= 1e-300) {
    throw DegenerateDispersion(
        "conditional_P: dispersion ~ 0 (delta-function limit); use moments");
  }
  const complexd left = std::conj(gamma_point) - std::conj(s.u) * std::conj(s.alpha1);
  const complexd right = gamma_point - s.u * s.alpha2;
  return s.prefactor * std::exp(-left * right / s.dispersion);
}

double mean_excitation(const CarrierParams& p, complexd alpha, double t) {
  return std::norm(propagator_u(p, t) * alpha) + dispersion_D(p, t);
}

namespace {

inline double trapezoid_weight(int i, int n) {
  return (i == 0 || i == n - 1) ? 0.5 : 1.0;
}

}  // namespace

double PGrid::mass() const {
  double sum = 0.0;
  for (int i = 0; i < spec.n_re; ++i) {
    const double wi = trapezoid_weight(i, spec.n_re);
    for (int j = 0; j < spec.n_im; ++j) {
      sum += wi * trapezoid_weight(j, spec.n_im) * values(i, j);
    }
  }
  return sum * spec.cell_area();
}

complexd PGrid::mean() const {
  complexd first = 0.0;
  double total = 0.0;
  for (int i = 0; i < spec.n_re; ++i) {
    const double wi = trapezoid_weight(i, spec.n_re);
    for (int j = 0; j < spec.n_im; ++j) {
      const double w = wi * trapezoid_weight(j, spec.n_im) * values(i, j);
      first += w * complexd(spec.re_at(i), spec.im_at(j));
      total += w;
    }
  }
  return first / total;
}

double PGrid::central_second_moment() const {
  const complexd center = mean();
  double second = 0.0;
  double total = 0.0;
  for (int i = 0; i < spec.n_re; ++i) {
    const double wi = trapezoid_weight(i, spec.n_re);
    for (int j = 0; j < spec.n_im; ++j) {
      const double w = wi * trapezoid_weight(j, spec.n_im) * values(i, j);
      second += w * std::norm(complexd(spec.re_at(i), spec.im_at(j)) - center);
      total += w;
    }
  }
  return second / total;
}

GridSpec default_grid(const CarrierParams& p, complexd alpha, int n) {
  return GridSpec::centered(std::abs(alpha) + 4.0 * std::sqrt(p.nbar + 1.0), n);
}

PGrid pgrid(const CarrierParams& p, complexd alpha, double t, const GridSpec& spec) {
  const GaussianPState state = make_gaussian_pstate(p, alpha, alpha, t);
  if (state.dispersion <= 1e-300) {
    throw DegenerateDispersion("pgrid: dispersion ~ 0; use moment formulas");
  }
  PGrid grid{spec, Eigen::MatrixXd(spec.n_re, spec.n_im)};
  const complexd center = state.u * alpha;
  const double norm = 1.0 / (pi * state.dispersion);
  for (int i = 0; i < spec.n_re; ++i) {
    for (int j = 0; j < spec.n_im; ++j) {
      const complexd gamma_point(spec.re_at(i), spec.im_at(j));
      // Real Gaussian on the physical slice alpha1 = alpha2.
      grid.values(i, j) =
          norm * std::exp(-std::norm(gamma_point - center) / state.dispersion);
    }
  }
  return grid;
}

PGrid pgrid(const CarrierParams& p, complexd alpha, double t) {
  return pgrid(p, alpha, t, default_grid(p, alpha));
}

}  // namespace iondecay
