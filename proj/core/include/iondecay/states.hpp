// states.hpp — Fock-spin basis conventions, state containers, observables

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "iondecay/constants.hpp"
#include "iondecay/errors.hpp"

namespace iondecay {

// Electronic qubit level. sigma_z eigenvalue: -1 for down, +1 for up.
enum class Spin : int { down = 0, up = 1 };

inline constexpr double sigma_z_eigenvalue(Spin s) {
  return s == Spin::down ? -1.0 : 1.0;
}

// Canonical flat ordering of |n, s>: Fock index is the slow axis.
inline constexpr int flatten(int n, Spin s) { return 2 * n + static_cast<int>(s); }

struct BasisLabel {
  int n;
  Spin s;
};

inline constexpr BasisLabel unflatten(int index) {
  return {index / 2, static_cast<Spin>(index % 2)};
}

inline constexpr int basis_dim(int n_max) { return 2 * (n_max + 1); }

// Pure state on the truncated Fock (x) spin basis.
class FockSpinVector {
 public:
  explicit FockSpinVector(int n_max)
      : n_max_(n_max), amp_(Eigen::VectorXcd::Zero(basis_dim(n_max))) {
    if (n_max < 0) throw DomainError("FockSpinVector: n_max must be >= 0");
  }

  FockSpinVector(int n_max, Eigen::VectorXcd amplitudes)
      : n_max_(n_max), amp_(std::move(amplitudes)) {
    if (amp_.size() != basis_dim(n_max)) {
      throw DomainError("FockSpinVector: amplitude size does not match n_max");
    }
  }

  // |n, s>
  static FockSpinVector basis_state(int n_max, int n, Spin s);

  // |alpha> (x) |s>, amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!)
  static FockSpinVector coherent(int n_max, complexd alpha, Spin s);

  int n_max() const { return n_max_; }
  int dim() const { return static_cast<int>(amp_.size()); }

  complexd amplitude(int n, Spin s) const { return amp_[flatten(n, s)]; }
  complexd& amplitude(int n, Spin s) { return amp_[flatten(n, s)]; }

  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Eigen::VectorXcd& amplitudes() { return amp_; }

  double squared_norm() const { return amp_.squaredNorm(); }
  void normalize() { amp_.normalize(); }

 private:
  int n_max_;
  Eigen::VectorXcd amp_;
};

// Hermitian trace-one operator on the same basis.
class DensityMatrix {
 public:
  explicit DensityMatrix(int n_max)
      : n_max_(n_max),
        elements_(Eigen::MatrixXcd::Zero(basis_dim(n_max), basis_dim(n_max))) {
    if (n_max < 0) throw DomainError("DensityMatrix: n_max must be >= 0");
  }

  DensityMatrix(int n_max, Eigen::MatrixXcd elements)
      : n_max_(n_max), elements_(std::move(elements)) {
    if (elements_.rows() != basis_dim(n_max) || elements_.cols() != basis_dim(n_max)) {
      throw DomainError("DensityMatrix: matrix size does not match n_max");
    }
  }

  static DensityMatrix pure(const FockSpinVector& psi) {
    return {psi.n_max(), psi.amplitudes() * psi.amplitudes().adjoint()};
  }

  // thermal(nbar) on motion (x) |s><s| on spin
  static DensityMatrix thermal(int n_max, double nbar, Spin s);

  int n_max() const { return n_max_; }
  int dim() const { return static_cast<int>(elements_.rows()); }

  const Eigen::MatrixXcd& elements() const { return elements_; }
  Eigen::MatrixXcd& elements() { return elements_; }

  double trace_real() const { return elements_.trace().real(); }

  // Population of Fock level n, summed over spin.
  double fock_population(int n) const {
    return elements_(flatten(n, Spin::down), flatten(n, Spin::down)).real() +
           elements_(flatten(n, Spin::up), flatten(n, Spin::up)).real();
  }

  // Zero-pad onto a larger basis; exact embedding.
  DensityMatrix embedded(int new_n_max) const;

  double hermiticity_defect() const {
    return (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
  }

  double min_eigenvalue() const;

  // Throws NumericError when Hermiticity, trace, or positivity drift past the
  // stated tolerances.
  void validate(double herm_tol = 1e-12, double trace_tol = 1e-9,
                double eig_tol = 1e-8) const;

 private:
  int n_max_;
  Eigen::MatrixXcd elements_;
};

double expect_sigma_z(const FockSpinVector& state);
double expect_sigma_z(const DensityMatrix& state);

double expect_number(const FockSpinVector& state);
double expect_number(const DensityMatrix& state);

double p_down(const FockSpinVector& state);
double p_down(const DensityMatrix& state);

// Sampled observables shared by every evolver. p_down is derived from sigma_z
// on append, so the (1 - sigma_z)/2 identity holds by construction.
struct TimeSeries {
  std::vector<double> times;    // s
  std::vector<double> p_down;   // in [0, 1]
  std::vector<double> sigma_z;  // in [-1, 1]
  std::vector<double> mean_n;   // >= 0, or NaN when the model has no motional column

  // Clamps sigma_z into [-1, 1] and mean_n to >= 0; refuses drift beyond tol.
  void append(double t, double sigma_z_value, double mean_n_value, double clamp_tol = 1e-9);

  std::size_t size() const { return times.size(); }
  void validate() const;
};

}  // namespace iondecay
