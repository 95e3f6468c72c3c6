#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "rdmlab/pauli.hpp"

namespace rdmlab {

/// A normalized pure state on n qubits.  Qubit 0 is the least significant
/// bit of the amplitude index.  Construction normalizes; it never rotates
/// the global phase (named constructors below produce states whose first
/// nonzero amplitude is already real positive).
class StateVector {
public:
  StateVector(int n, Eigen::VectorXcd amps);

  static StateVector basis_state(int n, std::uint64_t index);

  int n() const { return n_; }
  std::int64_t dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amps() const { return amps_; }

  std::complex<double> inner(const StateVector& other) const;
  /// |<this|other>|, insensitive to global phase.
  double overlap(const StateVector& other) const;

private:
  int n_;
  Eigen::VectorXcd amps_;
};

/// Rotates v so its largest-magnitude entry is real positive.
Eigen::VectorXcd canonical_phase(Eigen::VectorXcd v);

/// A Hermitian, unit-trace matrix.  Hermiticity (1e-12) and trace (1e-10)
/// are enforced at construction; positivity is checked by validate(), which
/// costs an eigendecomposition.
class DensityMatrix {
public:
  explicit DensityMatrix(Eigen::MatrixXcd m);

  std::int64_t dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  double min_eigenvalue() const;
  /// Checks min eigenvalue >= -tol; throws NumericalFailure otherwise.
  void validate(double tol = 1e-10) const;

private:
  Eigen::MatrixXcd m_;
};

DensityMatrix projector(const StateVector& psi);

/// Traces out every qubit not in `keep`.  `keep` must be a duplicate-free
/// subset of {0..n-1}; it is sorted internally, and the reduced operator
/// keeps the relative qubit order.
DensityMatrix partial_trace(const DensityMatrix& rho, int n,
                            std::vector<int> keep);

/// Reduced density matrix of |psi><psi| on the kept qubits, computed from
/// amplitudes without forming the full projector.
DensityMatrix rdm_of_state(const StateVector& psi, std::vector<int> keep);

/// All C(n,k) k-qubit marginals of a pure state, keyed by the sorted index
/// tuple in lexicographic order.
class RdmSet {
public:
  RdmSet(int n, int k, std::map<std::vector<int>, DensityMatrix> rdms);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::map<std::vector<int>, DensityMatrix>& rdms() const { return rdms_; }

  /// Max over subsets of the max-entry absolute difference.
  double max_deviation(const RdmSet& other) const;

  /// Checks that tracing any entry down one qubit reproduces the matching
  /// (k-1)-subset marginal of the same entry set, to tol.  Returns the worst
  /// deviation observed.
  double consistency_deviation() const;

private:
  int n_, k_;
  std::map<std::vector<int>, DensityMatrix> rdms_;
};

RdmSet k_rdms(const StateVector& psi, int k);

double rdm_max_deviation(const RdmSet& a, const RdmSet& b);

/// alpha |0...0> + beta e^{i theta} |1...1> with alpha, beta > 0 and
/// alpha^2 + beta^2 = 1.
StateVector ghz(int n, double alpha, double beta, double theta);

inline StateVector ghz(int n) { return ghz(n, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0); }

/// Equal-weight superposition of all weight-i basis states.
StateVector dicke(int n, int i);

/// Sum over pairs j < k of SWAP_{jk} = (I + XX + YY + ZZ)/2.
PauliSum swap_sum(int n);

/// Single transposition SWAP_{jk} as a Pauli sum.
PauliSum swap_pair(int n, int j, int k);

/// Sum of Z over all qubits.
PauliSum s_z(int n);

}  // namespace rdmlab
