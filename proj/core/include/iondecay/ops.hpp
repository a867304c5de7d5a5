// ops.hpp — dense operator builders on the truncated Fock (x) spin basis

#pragma once

#include <Eigen/Dense>

#include "iondecay/states.hpp"

namespace iondecay {

// Annihilation operator acting on the motional mode, identity on spin.
Eigen::MatrixXcd annihilation(int n_max);
Eigen::MatrixXcd creation(int n_max);
Eigen::MatrixXcd number_op(int n_max);

Eigen::MatrixXcd sigma_z_op(int n_max);
Eigen::MatrixXcd sigma_plus_op(int n_max);   // |up><down| per Fock level
Eigen::MatrixXcd sigma_minus_op(int n_max);

// Motion-only ladder operator on the (n_max + 1)-dimensional Fock basis.
Eigen::MatrixXcd motional_annihilation(int n_max);

// Resonant drive Hamiltonians in the rotating frame (rad/s).
Eigen::MatrixXcd carrier_hamiltonian(double omega, double phi, int n_max);
Eigen::MatrixXcd jc_hamiltonian(double g, double phi, int n_max);
Eigen::MatrixXcd ajc_hamiltonian(double g, double phi, int n_max);

// Normally ordered motional moment (a^dag)^n a^n.
Eigen::MatrixXcd motional_moment_op(int order, int n_max);

// sigma_+ (a^dag)^n a^(n-1) e^{-i phi} + h.c., the Hermitian drive cross term.
Eigen::MatrixXcd cross_term_op(int order, double phi, int n_max);

}  // namespace iondecay
