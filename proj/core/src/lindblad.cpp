#include "iondecay/lindblad.hpp"

#include <cmath>

#include "iondecay/errors.hpp"
#include "iondecay/ops.hpp"

namespace iondecay {

int LindbladGenerator::minimum_n_max(double nbar, double tail_tol) {
  if (nbar < 0.0) throw DomainError("minimum_n_max: nbar must be >= 0");
  int n = 4;
  if (nbar > 0.0) {
    const double q = nbar / (1.0 + nbar);
    // Geometric tail above n has mass q^(n+1).
    while (std::pow(q, n + 1) > tail_tol) ++n;
  }
  return n;
}

LindbladGenerator::LindbladGenerator(const OracleParams& p) : params_(p) {
  if (params_.gamma < 0.0) throw DomainError("OracleParams: gamma must be >= 0");
  if (params_.nbar < 0.0) throw DomainError("OracleParams: nbar must be >= 0");
  params_.n_max = std::max(params_.n_max, minimum_n_max(params_.nbar));

  const int n_max = params_.n_max;
  const Eigen::MatrixXcd a = annihilation(n_max);
  const Eigen::MatrixXcd adag = creation(n_max);
  ham_ = params_.mode == OracleMode::ajc_drive
             ? ajc_hamiltonian(params_.g, params_.phi, n_max)
             : Eigen::MatrixXcd::Zero(dim(), dim());
  ham_sp_ = ham_.sparseView();
  a_sp_ = a.sparseView();
  adag_sp_ = adag.sparseView();

  const double down_rate = params_.gamma * (params_.nbar + 1.0);
  const double up_rate = params_.gamma * params_.nbar;
  decay_diag_ = 0.5 * (down_rate * (adag * a).diagonal().real() +
                       up_rate * (a * adag).diagonal().real());
}

Eigen::MatrixXcd LindbladGenerator::apply(const Eigen::MatrixXcd& rho) const {
  const double down_rate = params_.gamma * (params_.nbar + 1.0);
  const double up_rate = params_.gamma * params_.nbar;

  Eigen::MatrixXcd drho = -imag_unit * (ham_sp_ * rho - rho * ham_sp_);
  if (params_.gamma > 0.0) {
    drho += down_rate * (a_sp_ * rho * adag_sp_);
    drho += up_rate * (adag_sp_ * rho * a_sp_);
    // Anticommutator with the diagonal part of both dissipators.
    drho -= decay_diag_.asDiagonal() * rho;
    drho -= rho * decay_diag_.asDiagonal();
  }
  return drho;
}

TimeSeries evolve(const LindbladGenerator& gen, const DensityMatrix& rho0,
                  std::span<const double> t_grid, const OdeOptions& opt,
                  const DensityObserver& observer) {
  if (t_grid.empty()) throw DomainError("evolve: empty sample grid");
  if (rho0.n_max() > gen.n_max()) {
    throw DomainError("evolve: initial state larger than the generator basis");
  }

  DensityMatrix start = rho0.n_max() == gen.n_max() ? rho0 : rho0.embedded(gen.n_max());
  start.validate(1e-12, 1e-9, 1e-8);
  const int top = gen.n_max();
  if (start.fock_population(top) + start.fock_population(top - 1) > 1e-8) {
    throw TailLeakage("evolve: initial state carries mass at the basis edge");
  }

  auto rhs = [&gen](double, const Eigen::MatrixXcd& rho) { return gen.apply(rho); };

  TimeSeries series;
  integrate_adaptive(rhs, Eigen::MatrixXcd(start.elements()), t_grid, opt,
                     [&](double t, const Eigen::MatrixXcd& rho) {
                       DensityMatrix state(gen.n_max(), rho);
                       if (state.fock_population(top) +
                               state.fock_population(top - 1) >
                           1e-6) {
                         throw TailLeakage(
                             "evolve: top Fock levels populated; raise n_max");
                       }
                       state.validate(1e-9, 1e-9, 1e-8);
                       series.append(t, expect_sigma_z(state), expect_number(state));
                       if (observer) observer(t, state);
                     });
  return series;
}

HierarchyState moments_from_density(const DensityMatrix& rho, int truncation,
                                    double phi, double t) {
  const int n_max = rho.n_max();
  const Eigen::MatrixXcd sz = sigma_z_op(n_max);
  HierarchyState s;
  s.t = t;
  s.P = Eigen::VectorXd::Zero(truncation + 1);
  s.Q = Eigen::VectorXd::Zero(truncation + 1);
  s.R = Eigen::VectorXd::Zero(truncation + 2);
  for (int n = 0; n <= truncation; ++n) {
    const Eigen::MatrixXcd moment = motional_moment_op(n, n_max);
    s.P[n] = (rho.elements() * moment).trace().real();
    s.Q[n] = (rho.elements() * moment * sz).trace().real();
  }
  for (int n = 1; n <= truncation + 1; ++n) {
    s.R[n] = (rho.elements() * cross_term_op(n, phi, n_max)).trace().real();
  }
  return s;
}

}  // namespace iondecay
