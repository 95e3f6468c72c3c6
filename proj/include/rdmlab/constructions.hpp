#pragma once

#include <optional>
#include <vector>

#include "rdmlab/pauli.hpp"
#include "rdmlab/spectra.hpp"
#include "rdmlab/state.hpp"

namespace rdmlab {

/// A logical operator m factored into two Pauli strings a, b on disjoint
/// supports with balanced weights, together with the 2-local-style splitting
/// term a - sign*b that annihilates the target eigenstate.
struct SplitPair {
  PauliString a;
  PauliString b;
  PauliSum splitting_term;
};

/// Factors m (with m|target> = sign|target>, sign = +-1) into a*b on
/// disjoint supports, max(weight(a), weight(b)) <= ceil(weight(m)/2).
/// Throws NotEigenstateError if the target is not a sign-eigenvector of m.
SplitPair split_logical(const PauliString& m, const StateVector& target, int sign);

struct CouplingScanPoint {
  double c = 0.0;
  bool pass = false;
  std::string status;
  double gap = 0.0;
  double eigenvalue = 0.0;
  int multiplicity = 0;
};

struct CouplingChoice {
  double c = 0.0;
  EigCertificate certificate;
  std::vector<CouplingScanPoint> scanned;
};

enum class CouplingMode { Eigenstate, Ground };

/// The fixed coupling scan grid, +-{0.125, 0.25, 0.5, 1, 2, 4, 8}, in scan
/// order (ascending magnitude, positive sign first).
std::vector<double> coupling_scan_grid();

/// Certifies h0 + c*h1 against psi for every grid point and returns the c
/// with the largest certified gap (ties: smaller |c|, then scan order).
/// Requires psi to sit in the kernel of h1 so its eigenvalue is independent
/// of c.  Throws NoValidCoupling when every point fails.
CouplingChoice choose_coupling(const PauliSum& h0, const PauliSum& h1,
                               const StateVector& psi, CouplingMode mode,
                               double tol = 1e-10);

/// -Z0Z1 - Z1Z2 + c (X0X1 - X2) on three qubits.
PauliSum ghz3_hamiltonian(double c);

/// The weighted three-qubit construction around alpha|000> + beta|111>.
/// The operator uses a single-qubit diagonal correction D on qubit 0 and is
/// not Hermitian unless alpha == beta, so the verdicts below come from a
/// general (complex) eigensolver.
struct WeightedGhzReport {
  Eigen::MatrixXcd op;                  // a Z0Z1 + b Z1Z2 + c (D X0X1 - X2)
  double identity_residual = 0.0;       // ||D X0X1X2 psi - psi||, D = diag(a/b, b/a)
  double flipped_identity_residual = 0.0;  // same with the entries swapped
  std::complex<double> eigenvalue;
  double eigen_residual = 0.0;
  int multiplicity = 0;
  double gap = 0.0;
  bool nondegenerate = false;
};

WeightedGhzReport weighted_ghz3_operator(double alpha, double beta, double a,
                                         double b, double c);

/// Searches the real span of weight <= k Pauli strings for a Hermitian
/// Hamiltonian with psi as a certified non-degenerate eigenstate.  The
/// eigenvector condition is linear, so candidates are drawn from the
/// nullspace of the projected constraint matrix.
struct ParentSearchResult {
  std::optional<PauliSum> parent;
  std::optional<EigCertificate> certificate;
  int nullspace_dim = 0;
  int basis_size = 0;
  int trials_used = 0;
};

ParentSearchResult hermitian_parent_search(const StateVector& psi, int k,
                                           int trials, std::uint64_t seed,
                                           double tol = 1e-10);

/// Compass-model Hamiltonian on the periodic 3x3 lattice:
/// -jx sum XX (vertical pairs) - jz sum ZZ (horizontal pairs), 18 terms.
/// Qubit (row r, col c), 0-based, sits at index 3r + c.
PauliSum bacon_shor_h0(double jx, double jz);

/// The logical Z string Z at (0,0), (1,0), (2,0).
PauliString bacon_shor_logical_z();

/// Ground space data of the compass Hamiltonian.  The codewords c0/c1 (the
/// +1/-1 eigenvectors of logical Z within the ground space) are present only
/// when the ground space is exactly two-dimensional.
struct BaconShorGroundSpace {
  double ground_energy = 0.0;
  int ground_dim = 0;
  double gap_above = 0.0;  // distance from ground cluster to the next level
  std::optional<StateVector> c0;
  std::optional<StateVector> c1;
};

BaconShorGroundSpace bacon_shor_ground_space(double jx, double jz);

/// Open-chain ZZ terms plus c (X on the first half - X on the second half);
/// n must be even and >= 4; locality is n/2.
PauliSum ghz_n_hamiltonian(int n, double c);

/// (S_z + (2i - n) I)^2 - c * swap_sum(n); 2-local, annihilating-then-
/// splitting parent of the Dicke state |W_n(i)>.
PauliSum dicke_parent(int n, int i, double c);

/// The zero-eigenvalue part alone: S_z + (2i - n) I.
PauliSum dicke_h0(int n, int i);

}  // namespace rdmlab
