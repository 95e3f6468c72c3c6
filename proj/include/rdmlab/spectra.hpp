#pragma once

#include <Eigen/Dense>

#include "rdmlab/pauli.hpp"
#include "rdmlab/state.hpp"

namespace rdmlab {

/// Full spectrum of a Hermitian Pauli sum.  Eigenvalues ascend; eigenvector
/// columns match and are orthonormal, each rotated to a canonical phase.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  double residual_bound = 0.0;  // max_i ||H v_i - lambda_i v_i||
};

Spectrum eig(const PauliSum& h);

/// Threshold below which two eigenvalues count as the same level.  Scales
/// with the coefficient 1-norm so O(1) physical gaps are never clustered.
double degeneracy_cluster_tol(const PauliSum& h);

/// Evidence that a state is (or is not) a non-degenerate eigenstate.
///
/// eigenvalue   Rayleigh quotient <psi|H|psi>
/// multiplicity size of the eigenvalue's cluster in the spectrum
/// gap          distance from the cluster to the nearest distinct level
/// fidelity     norm of psi's projection onto the cluster eigenspace
/// residual     ||H psi - eigenvalue psi||
/// index_below  count of eigenvalues strictly below the cluster
struct EigCertificate {
  double eigenvalue = 0.0;
  int multiplicity = 0;
  double gap = 0.0;
  double fidelity = 0.0;
  double residual = 0.0;
  int index_below = 0;
  bool pass = false;
  std::string status;  // "pass", "DegenerateLevel", "GroundSpaceDegenerate",
                       // "NotGroundState", "LowFidelity"
};

/// Certifies that psi is a non-degenerate eigenstate of h.  Throws
/// NotEigenstateError when the residual exceeds tol; otherwise returns a
/// certificate whose pass flag requires multiplicity 1 and fidelity
/// >= 1 - tol.
EigCertificate certify_nondegenerate_eigenstate(const PauliSum& h,
                                                const StateVector& psi,
                                                double tol = 1e-10);

/// As above, additionally requiring index_below == 0.
EigCertificate certify_unique_ground_state(const PauliSum& h,
                                           const StateVector& psi,
                                           double tol = 1e-10);

/// Number of eigenvalues within cluster_tol of lambda.
int eigenspace_dimension(const PauliSum& h, double lambda, double cluster_tol);

}  // namespace rdmlab
