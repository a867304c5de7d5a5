// lindblad.hpp — full density-matrix oracle: blue-sideband drive plus the
// thermal single-mode dissipator whose moment flow matches the c-number
// hierarchy

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <span>

#include "iondecay/hierarchy.hpp"
#include "iondecay/ode.hpp"
#include "iondecay/states.hpp"

namespace iondecay {

enum class OracleMode { ajc_drive, carrier_free };

struct OracleParams {
  double g = 0.0;      // sideband coupling [rad/s]; ignored in carrier_free mode
  double phi = 0.0;    // laser phase [rad]
  double gamma = 0.0;  // damping constant [1/s]
  double nbar = 0.0;   // reservoir thermal occupation
  int n_max = 12;      // requested Fock truncation
  OracleMode mode = OracleMode::ajc_drive;
};

// Right-hand side of drho/dt: -i[H, rho] plus the thermal dissipator with
// rates gamma (nbar + 1) on a and gamma nbar on a^dag. Construction raises
// n_max until the thermal tail above it is <= 1e-5 (and at least 4).
class LindbladGenerator {
 public:
  explicit LindbladGenerator(const OracleParams& p);

  const OracleParams& params() const { return params_; }
  int n_max() const { return params_.n_max; }
  int dim() const { return basis_dim(params_.n_max); }

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;

  const Eigen::MatrixXcd& hamiltonian() const { return ham_; }

  // Smallest truncation whose thermal tail mass stays below tail_tol.
  static int minimum_n_max(double nbar, double tail_tol = 1e-5);

 private:
  OracleParams params_;
  Eigen::MatrixXcd ham_;  // dense copy for spectral checks
  // The drive and ladder operators only couple neighboring Fock levels, so
  // the right-hand side runs on sparse forms.
  Eigen::SparseMatrix<complexd> ham_sp_;
  Eigen::SparseMatrix<complexd> a_sp_;
  Eigen::SparseMatrix<complexd> adag_sp_;
  Eigen::VectorXd decay_diag_;  // (down_rate n + up_rate (n+1)) / 2
};

using DensityObserver = std::function<void(double t, const DensityMatrix&)>;

// Propagates rho0 (zero-padded onto the generator's basis when smaller) over
// the sample grid. Checks trace, positivity, and Fock-tail occupation at each
// sample; throws TailLeakage when the top two levels exceed 1e-6.
TimeSeries evolve(const LindbladGenerator& gen, const DensityMatrix& rho0,
                  std::span<const double> t_grid, const OdeOptions& opt = {},
                  const DensityObserver& observer = {});

// Hierarchy-variable shadows of a density matrix: P_n, Q_n for n <= truncation
// and R_n for n <= truncation + 1, evaluated as operator expectations.
HierarchyState moments_from_density(const DensityMatrix& rho, int truncation,
                                    double phi, double t = 0.0);

}  // namespace iondecay
