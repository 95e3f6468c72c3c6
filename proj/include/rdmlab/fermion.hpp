#pragma once

#include <complex>
#include <map>

#include "rdmlab/pauli.hpp"
#include "rdmlab/spectra.hpp"
#include "rdmlab/state.hpp"

namespace rdmlab {

// Qubit-to-fermion encoding: each source qubit i owns two modes a_i, b_i,
// interleaved as a_0, b_0, a_1, b_1, ... so mode (i, a) sits at Jordan-Wigner
// position 2i and mode (i, b) at 2i + 1.  The Jordan-Wigner representation
// places mode m on auxiliary qubit m; bit m of a basis index is the
// occupation of mode m.  With this interleaving, the image of a single-site
// spin operator touches only the site's own two positions.

struct ModeIndex {
  int site = 0;
  enum class Kind { a, b } kind = Kind::a;
  int linear() const { return 2 * site + (kind == Kind::b ? 1 : 0); }
};

/// Complex-weighted sum of Pauli strings: the working representation of
/// ladder-operator polynomials, which are not Hermitian term by term.
class LadderOp {
public:
  explicit LadderOp(int n_qubits);

  static LadderOp identity(int n_qubits);
  /// Jordan-Wigner annihilator of the given mode, acting on total_modes qubits.
  static LadderOp annihilator(int mode, int total_modes);
  static LadderOp creator(int mode, int total_modes);
  /// Occupation number operator of the mode.
  static LadderOp number(int mode, int total_modes);

  static LadderOp annihilator(ModeIndex m, int total_modes) {
    return annihilator(m.linear(), total_modes);
  }
  static LadderOp creator(ModeIndex m, int total_modes) {
    return creator(m.linear(), total_modes);
  }
  static LadderOp number(ModeIndex m, int total_modes) {
    return number(m.linear(), total_modes);
  }

  int n() const { return n_; }
  const std::map<PauliString, std::complex<double>>& terms() const { return terms_; }

  void add(const PauliString& p, std::complex<double> coeff);
  LadderOp dagger() const;

  LadderOp& operator+=(const LadderOp& other);
  LadderOp& operator-=(const LadderOp& other);
  LadderOp& operator*=(std::complex<double> scale);
  friend LadderOp operator+(LadderOp a, const LadderOp& b) { return a += b; }
  friend LadderOp operator-(LadderOp a, const LadderOp& b) { return a -= b; }
  friend LadderOp operator*(LadderOp a, std::complex<double> s) { return a *= s; }
  friend LadderOp operator*(std::complex<double> s, LadderOp a) { return a *= s; }
  friend LadderOp operator*(const LadderOp& a, const LadderOp& b);

  /// Conversion to the Hermitian real-coefficient form; throws
  /// NumericalFailure if any imaginary part survives.
  PauliSum hermitian() const;

  Eigen::MatrixXcd to_matrix() const;

private:
  int n_;
  std::map<PauliString, std::complex<double>> terms_;
};

/// Fock index whose occupied modes encode the computational basis state
/// `bits`: mode a_i occupied iff bit i is 0, mode b_i iff it is 1.
std::uint64_t encoded_occupation(std::uint64_t bits, int n);

/// Isometry from the n-qubit space into the single-occupancy sector of the
/// 2n-mode Fock space.  Basis states map to Fock states with no sign, so the
/// extension is plain index relabeling.
Eigen::VectorXcd encode_vector(const Eigen::VectorXcd& v, int n);
StateVector encode_state(const StateVector& psi);

/// Image of a single-site Pauli under a -> a^dag b + b^dag a etc.
PauliSum map_pauli(int site, char axis, int n);

/// Multiplicative extension to strings and linear extension to sums.
PauliSum map_pauli_string(const PauliString& p);
PauliSum map_hamiltonian(const PauliSum& h_spin);

/// (2 n_a - I)(2 n_b - I) for the site; equals Z Z on the site's two
/// positions and takes the value -1 on the single-occupancy sector.
PauliSum penalty(int site, int n);

/// map_hamiltonian(h_spin) + lambda * sum_i (I + penalty(i)).  The penalty
/// combination vanishes on the single-occupancy sector and adds 2*lambda per
/// violated site, so the sector spectrum equals the spin spectrum.
PauliSum full_map(const PauliSum& h_spin, double lambda);

/// Default penalty weight: 20x the coefficient 1-norm of the spin
/// Hamiltonian (validated by the dominance check rather than trusted).
double default_penalty_weight(const PauliSum& h_spin);

/// The 2^n x 2^n block of a Fock-space operator on the single-occupancy
/// sector, ordered by the source basis state it encodes.
Eigen::MatrixXcd sector_restrict(const Eigen::MatrixXcd& h_fock, int n);

/// Eigenvalues of the mapped Hamiltonian restricted to the sector.
Eigen::VectorXd sector_spectrum(const PauliSum& h_fock, int n);

/// c_p applied to a Fock-space vector, by index arithmetic.
Eigen::VectorXcd annihilate(int mode, const Eigen::VectorXcd& v);

/// One- and two-particle expectation tables of a Fock-space state:
/// one(p, q)          = <c_p^dag c_q>
/// two[(p,q),(r,s)]   = <c_p^dag c_q^dag c_s c_r>,  p < q, r < s
/// Pairs are indexed lexicographically; antisymmetry in p<->q and r<->s is
/// implied by the ordering.  The trace over the full (ordered-pair) index
/// set, i.e. twice the stored diagonal sum, equals N(N-1) for an N-fermion
/// state.
class TwoMatrix {
public:
  TwoMatrix(int modes, Eigen::MatrixXcd one, Eigen::MatrixXcd two);

  int modes() const { return modes_; }
  int pair_count() const { return modes_ * (modes_ - 1) / 2; }
  const Eigen::MatrixXcd& one() const { return one_; }
  const Eigen::MatrixXcd& two() const { return two_; }

  static int pair_index(int p, int q, int modes);

  /// Trace over ordered pairs: 2 * sum of the stored diagonal.
  double trace() const;
  double hermiticity_defect() const;
  double max_deviation(const TwoMatrix& other) const;

private:
  int modes_;
  Eigen::MatrixXcd one_;
  Eigen::MatrixXcd two_;
};

TwoMatrix two_matrix(const Eigen::VectorXcd& psi_fock, int modes);
inline TwoMatrix two_matrix(const StateVector& psi_fock) {
  return two_matrix(psi_fock.amps(), psi_fock.n());
}

}  // namespace rdmlab
