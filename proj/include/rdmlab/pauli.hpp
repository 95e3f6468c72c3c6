#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rdmlab/error.hpp"

namespace rdmlab {

// Maximum qubit count for dense materialization (to_matrix / eig).
inline constexpr int kDenseLimit = 12;

// Mask-based operators support up to 63 qubits; everything here is far below.
inline constexpr int kMaskLimit = 63;

// Coefficients with magnitude below this are dropped when sums are combined.
inline constexpr double kCoeffPruneThreshold = 1e-12;

/// An n-qubit Pauli string stored as a pair of bit masks.
///
/// Bit q of x_mask set means an X factor on qubit q, bit q of z_mask a Z
/// factor; both set means Y under the fixed convention Y = i X Z.  The
/// string itself carries no phase: the matrix it denotes is
/// i^{popcount(x&z)} X^x Z^z, which is Hermitian.  Qubit 0 is the least
/// significant bit of a basis-state index.
class PauliString {
public:
  PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliString identity(int n) { return PauliString(n, 0, 0); }
  /// Single-qubit factor; axis is one of 'X', 'Y', 'Z'.
  static PauliString single(int n, int qubit, char axis);
  /// Product of single-qubit factors on distinct qubits.
  static PauliString from_factors(int n,
                                  const std::vector<std::pair<int, char>>& factors);

  int n() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  /// Number of qubits acted on non-trivially.
  int weight() const;
  /// 'I', 'X', 'Y' or 'Z' at the given qubit.
  char axis_at(int qubit) const;
  std::vector<int> support() const;

  /// The 2^n x 2^n matrix of this string (n <= kDenseLimit).
  Eigen::MatrixXcd to_matrix() const;

  /// out += coeff * P * in, computed by index arithmetic.
  void accumulate(const Eigen::VectorXcd& in, Eigen::VectorXcd& out,
                  std::complex<double> coeff) const;

  /// Token form used by the text format, e.g. "X@0 Z@2"; identity is "I".
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    return std::tie(a.n_, a.x_, a.z_) <=> std::tie(b.n_, b.x_, b.z_);
  }

private:
  int n_;
  std::uint64_t x_, z_;
};

struct PauliProduct {
  std::complex<double> phase;  // exactly one of +1, -1, +i, -i
  PauliString string;
};

/// Matrix product p * q as (phase, string); the phase is exact.
PauliProduct multiply(const PauliString& p, const PauliString& q);

/// True iff p and q commute (symplectic form vanishes mod 2).
bool commutes(const PauliString& p, const PauliString& q);

/// A real-weighted sum of Pauli strings: a Hermitian operator by
/// construction.  Terms with coefficients below kCoeffPruneThreshold are
/// not stored.
class PauliSum {
public:
  explicit PauliSum(int n);

  static PauliSum zero(int n) { return PauliSum(n); }
  static PauliSum identity(int n, double coeff = 1.0);
  static PauliSum term(const PauliString& p, double coeff);

  int n() const { return n_; }
  const std::map<PauliString, double>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds coeff * p, combining with an existing term and pruning the result.
  void add(const PauliString& p, double coeff);

  double coefficient(const PauliString& p) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double scale);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, double s) { return a *= s; }
  friend PauliSum operator*(double s, PauliSum a) { return a *= s; }
  friend PauliSum operator-(PauliSum a) { return a *= -1.0; }

  /// Operator product a * b.  Throws NumericalFailure if the result fails to
  /// be Hermitian (imaginary coefficients do not cancel), which cannot happen
  /// when a and b commute termwise, e.g. for disjoint supports.
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  bool operator==(const PauliSum&) const = default;

  /// Max term weight; 0 for the zero or pure-identity sum.
  int locality() const;

  /// Sum of coefficient magnitudes; cheap upper bound on the operator norm.
  double coeff_one_norm() const;

  /// Symbolic square h*h with like terms combined.  Anticommuting cross
  /// terms cancel exactly and are never accumulated, so the result is real
  /// by construction.
  PauliSum squared() const;

  /// Same qubit strings on a wider register (m >= n).
  PauliSum embedded(int m) const;

  /// Dense Hermitian matrix, 2^n x 2^n (n <= kDenseLimit).
  Eigen::MatrixXcd to_matrix() const;

  /// Matrix-free action on a state vector of dimension 2^n.
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

private:
  int n_;
  std::map<PauliString, double> terms_;
};

}  // namespace rdmlab
