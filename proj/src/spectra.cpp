#include "rdmlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace rdmlab {

namespace {

struct Cluster {
  int lo = 0, hi = 0;  // inclusive eigenvalue index range
};

// Maximal run of eigenvalues chained by consecutive gaps <= ctol around the
// entry nearest to lambda.
Cluster cluster_around(const Eigen::VectorXd& eigs, double lambda, double ctol) {
  int j = 0;
  double best = std::abs(eigs[0] - lambda);
  for (int i = 1; i < eigs.size(); ++i) {
    const double d = std::abs(eigs[i] - lambda);
    if (d < best) {
      best = d;
      j = i;
    }
  }
  Cluster c{j, j};
  while (c.lo > 0 && eigs[c.lo] - eigs[c.lo - 1] <= ctol) --c.lo;
  while (c.hi + 1 < eigs.size() && eigs[c.hi + 1] - eigs[c.hi] <= ctol) ++c.hi;
  return c;
}

EigCertificate certify_impl(const PauliSum& h, const StateVector& psi,
                            double tol, bool require_ground) {
  if (h.n() != psi.n())
    fail(ErrorCode::DimensionMismatch,
         "Hamiltonian on " + std::to_string(h.n()) + " qubits, state on " +
             std::to_string(psi.n()));
  const Eigen::VectorXcd hpsi = h.apply(psi.amps());
  const double lambda = psi.amps().dot(hpsi).real();
  const double residual = (hpsi - lambda * psi.amps()).norm();
  if (residual > tol)
    throw NotEigenstateError(
        residual, "state is not an eigenstate: residual " +
                      std::to_string(residual) + " exceeds tol " + std::to_string(tol));

  const Spectrum sp = eig(h);
  const double ctol = degeneracy_cluster_tol(h);
  const Cluster c = cluster_around(sp.eigenvalues, lambda, ctol);

  EigCertificate cert;
  cert.eigenvalue = lambda;
  cert.residual = residual;
  cert.multiplicity = c.hi - c.lo + 1;
  cert.index_below = c.lo;
  const int dim = static_cast<int>(sp.eigenvalues.size());
  double gap = std::numeric_limits<double>::infinity();
  if (c.lo > 0) gap = std::min(gap, sp.eigenvalues[c.lo] - sp.eigenvalues[c.lo - 1]);
  if (c.hi + 1 < dim) gap = std::min(gap, sp.eigenvalues[c.hi + 1] - sp.eigenvalues[c.hi]);
  cert.gap = std::isfinite(gap) ? gap : 0.0;  // cluster spans the whole spectrum
  // Projection of psi onto the cluster eigenspace; equals |<psi|v>| when the
  // level is simple, and is basis-independent when it is not.
  cert.fidelity =
      (sp.eigenvectors.middleCols(c.lo, cert.multiplicity).adjoint() * psi.amps())
          .norm();
  cert.fidelity = std::min(cert.fidelity, 1.0);

  if (cert.multiplicity != 1) {
    cert.pass = false;
    cert.status = require_ground ? "GroundSpaceDegenerate" : "DegenerateLevel";
  } else if (require_ground && cert.index_below != 0) {
    cert.pass = false;
    cert.status = "NotGroundState";
  } else if (cert.fidelity < 1.0 - tol) {
    cert.pass = false;
    cert.status = "LowFidelity";
  } else {
    cert.pass = true;
    cert.status = "pass";
  }
  return cert;
}

}  // namespace

Spectrum eig(const PauliSum& h) {
  const Eigen::MatrixXcd H = h.to_matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::NumericalFailure, "Hermitian eigensolver did not converge");
  Spectrum sp;
  sp.eigenvalues = es.eigenvalues();
  sp.eigenvectors = es.eigenvectors();
  for (int i = 0; i < sp.eigenvectors.cols(); ++i)
    sp.eigenvectors.col(i) = canonical_phase(sp.eigenvectors.col(i));
  const Eigen::MatrixXcd R =
      H * sp.eigenvectors - sp.eigenvectors * sp.eigenvalues.asDiagonal();
  sp.residual_bound = 0.0;
  for (int i = 0; i < R.cols(); ++i)
    sp.residual_bound = std::max(sp.residual_bound, R.col(i).norm());
  if (sp.residual_bound > 1e-10 * std::max(1.0, h.coeff_one_norm()))
    fail(ErrorCode::NumericalFailure,
         "eigendecomposition residual " + std::to_string(sp.residual_bound) +
             " too large");
  return sp;
}

double degeneracy_cluster_tol(const PauliSum& h) {
  return std::max(1e-9, 1e-9 * h.coeff_one_norm());
}

EigCertificate certify_nondegenerate_eigenstate(const PauliSum& h,
                                                const StateVector& psi,
                                                double tol) {
  return certify_impl(h, psi, tol, false);
}

EigCertificate certify_unique_ground_state(const PauliSum& h,
                                           const StateVector& psi, double tol) {
  return certify_impl(h, psi, tol, true);
}

int eigenspace_dimension(const PauliSum& h, double lambda, double cluster_tol) {
  const Spectrum sp = eig(h);
  int count = 0;
  for (int i = 0; i < sp.eigenvalues.size(); ++i)
    if (std::abs(sp.eigenvalues[i] - lambda) <= cluster_tol) ++count;
  return count;
}

}  // namespace rdmlab
