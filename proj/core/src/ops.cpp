#include "iondecay/ops.hpp"

#include <cmath>

#include "iondecay/errors.hpp"

namespace iondecay {

Eigen::MatrixXcd annihilation(int n_max) {
  const int d = basis_dim(n_max);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 1; n <= n_max; ++n) {
    const double amp = std::sqrt(static_cast<double>(n));
    for (Spin s : {Spin::down, Spin::up}) {
      a(flatten(n - 1, s), flatten(n, s)) = amp;
    }
  }
  return a;
}

Eigen::MatrixXcd creation(int n_max) { return annihilation(n_max).adjoint(); }

Eigen::MatrixXcd number_op(int n_max) {
  const int d = basis_dim(n_max);
  Eigen::MatrixXcd n_op = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n <= n_max; ++n) {
    for (Spin s : {Spin::down, Spin::up}) {
      n_op(flatten(n, s), flatten(n, s)) = static_cast<double>(n);
    }
  }
  return n_op;
}

Eigen::MatrixXcd sigma_z_op(int n_max) {
  const int d = basis_dim(n_max);
  Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n <= n_max; ++n) {
    sz(flatten(n, Spin::down), flatten(n, Spin::down)) = -1.0;
    sz(flatten(n, Spin::up), flatten(n, Spin::up)) = 1.0;
  }
  return sz;
}

Eigen::MatrixXcd sigma_plus_op(int n_max) {
  const int d = basis_dim(n_max);
  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n <= n_max; ++n) {
    sp(flatten(n, Spin::up), flatten(n, Spin::down)) = 1.0;
  }
  return sp;
}

Eigen::MatrixXcd sigma_minus_op(int n_max) { return sigma_plus_op(n_max).adjoint(); }

Eigen::MatrixXcd motional_annihilation(int n_max) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Eigen::MatrixXcd carrier_hamiltonian(double omega, double phi, int n_max) {
  const complexd phase = std::exp(complexd(0.0, -phi));
  Eigen::MatrixXcd h = omega * (phase * sigma_plus_op(n_max));
  return h + h.adjoint().eval();
}

Eigen::MatrixXcd jc_hamiltonian(double g, double phi, int n_max) {
  const complexd phase = std::exp(complexd(0.0, -phi));
  Eigen::MatrixXcd h =
      imag_unit * g * (phase * (sigma_plus_op(n_max) * annihilation(n_max)));
  return h + h.adjoint().eval();
}

Eigen::MatrixXcd ajc_hamiltonian(double g, double phi, int n_max) {
  const complexd phase = std::exp(complexd(0.0, -phi));
  Eigen::MatrixXcd h =
      imag_unit * g * (phase * (sigma_plus_op(n_max) * creation(n_max)));
  return h + h.adjoint().eval();
}

Eigen::MatrixXcd motional_moment_op(int order, int n_max) {
  if (order < 0) throw DomainError("motional_moment_op: order must be >= 0");
  const int d = basis_dim(n_max);
  // (a^dag)^k a^k is diagonal with entries n!/(n-k)!.
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n <= n_max; ++n) {
    double falling = 1.0;
    for (int j = 0; j < order; ++j) falling *= static_cast<double>(n - j);
    if (n < order) falling = 0.0;
    for (Spin s : {Spin::down, Spin::up}) {
      op(flatten(n, s), flatten(n, s)) = falling;
    }
  }
  return op;
}

Eigen::MatrixXcd cross_term_op(int order, double phi, int n_max) {
  if (order < 1) throw DomainError("cross_term_op: order must be >= 1");
  const Eigen::MatrixXcd a = annihilation(n_max);
  const Eigen::MatrixXcd adag = creation(n_max);
  Eigen::MatrixXcd left = Eigen::MatrixXcd::Identity(basis_dim(n_max), basis_dim(n_max));
  for (int j = 0; j < order; ++j) left = left * adag;
  for (int j = 0; j < order - 1; ++j) left = left * a;
  const complexd phase = std::exp(complexd(0.0, -phi));
  Eigen::MatrixXcd half = phase * (sigma_plus_op(n_max) * left);
  return half + half.adjoint().eval();
}

}  // namespace iondecay
