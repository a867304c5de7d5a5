#include "iondecay/states.hpp"

#include <algorithm>
#include <cmath>

namespace iondecay {

FockSpinVector FockSpinVector::basis_state(int n_max, int n, Spin s) {
  if (n < 0 || n > n_max) throw DomainError("basis_state: Fock index out of range");
  FockSpinVector psi(n_max);
  psi.amplitude(n, s) = 1.0;
  return psi;
}

FockSpinVector FockSpinVector::coherent(int n_max, complexd alpha, Spin s) {
  FockSpinVector psi(n_max);
  complexd c = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n <= n_max; ++n) {
    psi.amplitude(n, s) = c;
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return psi;
}

DensityMatrix DensityMatrix::thermal(int n_max, double nbar, Spin s) {
  if (nbar < 0.0) throw DomainError("thermal: nbar must be >= 0");
  DensityMatrix rho(n_max);
  // Geometric Fock distribution, renormalized on the truncated basis.
  double weight = 1.0 / (1.0 + nbar);
  double total = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    rho.elements()(flatten(n, s), flatten(n, s)) = weight;
    total += weight;
    weight *= nbar / (1.0 + nbar);
  }
  rho.elements() /= total;
  return rho;
}

DensityMatrix DensityMatrix::embedded(int new_n_max) const {
  if (new_n_max < n_max_) throw DomainError("embedded: target basis is smaller");
  DensityMatrix out(new_n_max);
  out.elements().topLeftCorner(dim(), dim()) = elements_;
  return out;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd sym = 0.5 * (elements_ + elements_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate(double herm_tol, double trace_tol, double eig_tol) const {
  if (hermiticity_defect() > herm_tol) {
    throw NumericError("DensityMatrix: Hermiticity defect exceeds tolerance");
  }
  if (std::abs(trace_real() - 1.0) > trace_tol) {
    throw NumericError("DensityMatrix: trace drifted from one");
  }
  if (min_eigenvalue() < -eig_tol) {
    throw NumericError("DensityMatrix: negative eigenvalue beyond tolerance");
  }
}

namespace {

// Observables on numerically Hermitian states are real; keep the residue honest.
double real_checked(complexd value, double imag_tol = 1e-10) {
  if (std::abs(value.imag()) > imag_tol) {
    throw NumericError("observable has non-negligible imaginary part");
  }
  return value.real();
}

}  // namespace

double expect_sigma_z(const FockSpinVector& state) {
  double value = 0.0;
  for (int n = 0; n <= state.n_max(); ++n) {
    value += std::norm(state.amplitude(n, Spin::up)) -
             std::norm(state.amplitude(n, Spin::down));
  }
  return value;
}

double expect_sigma_z(const DensityMatrix& state) {
  complexd value = 0.0;
  for (int n = 0; n <= state.n_max(); ++n) {
    value += state.elements()(flatten(n, Spin::up), flatten(n, Spin::up)) -
             state.elements()(flatten(n, Spin::down), flatten(n, Spin::down));
  }
  return real_checked(value);
}

double expect_number(const FockSpinVector& state) {
  double value = 0.0;
  for (int n = 1; n <= state.n_max(); ++n) {
    value += n * (std::norm(state.amplitude(n, Spin::down)) +
                  std::norm(state.amplitude(n, Spin::up)));
  }
  return value;
}

double expect_number(const DensityMatrix& state) {
  complexd value = 0.0;
  for (int n = 1; n <= state.n_max(); ++n) {
    value += static_cast<double>(n) *
             (state.elements()(flatten(n, Spin::down), flatten(n, Spin::down)) +
              state.elements()(flatten(n, Spin::up), flatten(n, Spin::up)));
  }
  return real_checked(value);
}

namespace {

double p_down_from_sigma_z(double sz) {
  double p = 0.5 * (1.0 - sz);
  if (p < -1e-9 || p > 1.0 + 1e-9) {
    throw NumericError("p_down outside [0,1] beyond clamp tolerance");
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

double p_down(const FockSpinVector& state) {
  return p_down_from_sigma_z(expect_sigma_z(state));
}

double p_down(const DensityMatrix& state) {
  return p_down_from_sigma_z(expect_sigma_z(state));
}

void TimeSeries::append(double t, double sigma_z_value, double mean_n_value,
                        double clamp_tol) {
  if (sigma_z_value < -1.0 - clamp_tol || sigma_z_value > 1.0 + clamp_tol) {
    throw NumericError("TimeSeries: sigma_z outside [-1,1] beyond clamp tolerance");
  }
  double sz = std::clamp(sigma_z_value, -1.0, 1.0);
  if (!std::isnan(mean_n_value)) {
    if (mean_n_value < -clamp_tol) {
      throw NumericError("TimeSeries: negative mean_n beyond clamp tolerance");
    }
    mean_n_value = std::max(mean_n_value, 0.0);
  }
  times.push_back(t);
  sigma_z.push_back(sz);
  p_down.push_back(0.5 * (1.0 - sz));
  mean_n.push_back(mean_n_value);
}

void TimeSeries::validate() const {
  if (times.size() != p_down.size() || times.size() != sigma_z.size() ||
      times.size() != mean_n.size()) {
    throw NumericError("TimeSeries: column lengths differ");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (std::abs(p_down[i] - 0.5 * (1.0 - sigma_z[i])) > 1e-12) {
      throw NumericError("TimeSeries: p_down and sigma_z inconsistent");
    }
  }
}

}  // namespace iondecay
