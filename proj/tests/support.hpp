// support.hpp — independent test oracles: quadrature K1, spectral matrix
// exponentials, random low-occupation states

#pragma once

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "iondecay/states.hpp"

namespace testsupport {

// K1 oracle from the integral representation
//   K1(x) = int_0^inf exp(-x cosh t) cosh t dt,
// evaluated in scaled form exp(-x) * int exp(-x (cosh t - 1)) cosh t dt so the
// quadrature stays in the normal double range out to x ~ 700.
inline double k1_quadrature(double x) {
  const auto scaled = [x](double t) {
    const double c = std::cosh(t);
    return std::exp(-x * (c - 1.0)) * c;
  };
  const double t_max = std::acosh(1.0 + 760.0 / x);
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      scaled, 0.0, t_max, 12, 1e-13);
  return std::exp(-x) * integral;
}

// exp(-i H tau) for Hermitian H via spectral decomposition.
inline Eigen::MatrixXcd hermitian_propagator(const Eigen::MatrixXcd& h, double tau) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(iondecay::complexd(0.0, -es.eigenvalues()[i] * tau));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Normalized random state with geometrically decaying Fock amplitudes and the
// top `top_clear` levels empty, so sideband maps stay inside the truncation.
inline iondecay::FockSpinVector random_state(int n_max, std::mt19937& rng,
                                             int top_clear = 3) {
  std::normal_distribution<double> gauss;
  iondecay::FockSpinVector psi(n_max);
  for (int n = 0; n + top_clear <= n_max; ++n) {
    const double envelope = std::exp(-0.4 * n);
    for (iondecay::Spin s : {iondecay::Spin::down, iondecay::Spin::up}) {
      psi.amplitude(n, s) = envelope * iondecay::complexd(gauss(rng), gauss(rng));
    }
  }
  psi.normalize();
  return psi;
}

inline double max_abs_diff(const iondecay::FockSpinVector& a,
                           const iondecay::FockSpinVector& b) {
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

}  // namespace testsupport
