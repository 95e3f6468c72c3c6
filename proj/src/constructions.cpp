#include "rdmlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace rdmlab {

namespace {

Eigen::MatrixXcd kron2(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Three-qubit operator from per-qubit 2x2 factors, qubit 0 least significant.
Eigen::MatrixXcd op3(const Eigen::Matrix2cd& q0, const Eigen::Matrix2cd& q1,
                     const Eigen::Matrix2cd& q2) {
  return kron2(kron2(q2, q1), q0);
}

const Eigen::Matrix2cd kId2 = Eigen::Matrix2cd::Identity();
const Eigen::Matrix2cd kPauliX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();

// Enumerates all Pauli strings of weight <= k on n qubits, identity first,
// in (weight, support, axes) order.
std::vector<PauliString> weight_limited_basis(int n, int k) {
  std::vector<PauliString> basis;
  basis.push_back(PauliString::identity(n));
  for (int w = 1; w <= k; ++w) {
    // Iterative subset enumeration in lexicographic order.
    std::vector<int> idx(w);
    for (int i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      int combos = 1;
      for (int i = 0; i < w; ++i) combos *= 3;
      for (int a = 0; a < combos; ++a) {
        int rest = a;
        std::vector<std::pair<int, char>> factors;
        for (int i = 0; i < w; ++i) {
          factors.emplace_back(idx[i], "XYZ"[rest % 3]);
          rest /= 3;
        }
        basis.push_back(PauliString::from_factors(n, factors));
      }
      int i = w - 1;
      while (i >= 0 && idx[i] == n - w + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return basis;
}

}  // namespace

SplitPair split_logical(const PauliString& m, const StateVector& target, int sign) {
  if (m.is_identity())
    fail(ErrorCode::InvalidArgument, "cannot split the identity operator");
  if (sign != 1 && sign != -1)
    fail(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  if (m.n() != target.n())
    fail(ErrorCode::DimensionMismatch, "operator and target qubit counts differ");
  const PauliSum m_sum = PauliSum::term(m, 1.0);
  const Eigen::VectorXcd mpsi = m_sum.apply(target.amps());
  const double residual = (mpsi - static_cast<double>(sign) * target.amps()).norm();
  if (residual > 1e-10)
    throw NotEigenstateError(residual,
                             "target is not a " + std::to_string(sign) +
                                 " eigenvector of " + m.to_string() +
                                 " (residual " + std::to_string(residual) + ")");

  const std::vector<int> support = m.support();
  const int w = static_cast<int>(support.size());
  const int first_half = (w + 1) / 2;
  std::uint64_t half_mask = 0;
  for (int i = 0; i < first_half; ++i) half_mask |= 1ULL << support[i];
  PauliString a(m.n(), m.x_mask() & half_mask, m.z_mask() & half_mask);
  PauliString b(m.n(), m.x_mask() & ~half_mask, m.z_mask() & ~half_mask);

  PauliSum term = PauliSum::term(a, 1.0);
  term.add(b, -static_cast<double>(sign));
  return SplitPair{a, b, std::move(term)};
}

std::vector<double> coupling_scan_grid() {
  std::vector<double> grid;
  for (double mag : {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    grid.push_back(mag);
    grid.push_back(-mag);
  }
  return grid;
}

CouplingChoice choose_coupling(const PauliSum& h0, const PauliSum& h1,
                               const StateVector& psi, CouplingMode mode,
                               double tol) {
  if (h0.n() != h1.n() || h0.n() != psi.n())
    fail(ErrorCode::DimensionMismatch, "coupling scan inputs disagree on n");
  const double kernel_residual = h1.apply(psi.amps()).norm();
  if (kernel_residual > 1e-10)
    fail(ErrorCode::InvalidArgument,
         "state is not annihilated by the splitting term (residual " +
             std::to_string(kernel_residual) + ")");

  CouplingChoice choice;
  bool found = false;
  // Gaps within this margin count as tied, so last-ulp noise cannot beat the
  // smaller-|c| preference.
  const double gap_tie = std::max(1e-9, 1e-9 * (h0.coeff_one_norm() +
                                                8.0 * h1.coeff_one_norm()));
  for (double c : coupling_scan_grid()) {
    const PauliSum h = h0 + c * h1;
    CouplingScanPoint point;
    point.c = c;
    try {
      const EigCertificate cert = mode == CouplingMode::Ground
                                      ? certify_unique_ground_state(h, psi, tol)
                                      : certify_nondegenerate_eigenstate(h, psi, tol);
      point.pass = cert.pass;
      point.status = cert.status;
      point.gap = cert.gap;
      point.eigenvalue = cert.eigenvalue;
      point.multiplicity = cert.multiplicity;
      const bool better =
          cert.pass &&
          (!found || cert.gap > choice.certificate.gap + gap_tie ||
           (cert.gap > choice.certificate.gap - gap_tie &&
            std::abs(c) < std::abs(choice.c)));
      if (better) {
        choice.c = c;
        choice.certificate = cert;
        found = true;
      }
    } catch (const NotEigenstateError& e) {
      point.pass = false;
      point.status = "NotEigenstate";
    }
    choice.scanned.push_back(point);
  }
  if (!found)
    fail(ErrorCode::NoValidCoupling,
         "no grid coupling produced a certified spectrum");
  return choice;
}

PauliSum ghz3_hamiltonian(double c) {
  PauliSum h(3);
  h.add(PauliString::from_factors(3, {{0, 'Z'}, {1, 'Z'}}), -1.0);
  h.add(PauliString::from_factors(3, {{1, 'Z'}, {2, 'Z'}}), -1.0);
  h.add(PauliString::from_factors(3, {{0, 'X'}, {1, 'X'}}), c);
  h.add(PauliString::single(3, 2, 'X'), -c);
  return h;
}

WeightedGhzReport weighted_ghz3_operator(double alpha, double beta, double a,
                                         double b, double c) {
  if (!(alpha > 0.0) || !(beta > 0.0) ||
      std::abs(alpha * alpha + beta * beta - 1.0) > 1e-10)
    fail(ErrorCode::InvalidArgument,
         "weights must be positive with alpha^2 + beta^2 = 1");

  const StateVector psi = ghz(3, alpha, beta, 0.0);
  Eigen::Matrix2cd diag_corr = Eigen::Matrix2cd::Zero();
  diag_corr(0, 0) = alpha / beta;
  diag_corr(1, 1) = beta / alpha;
  Eigen::Matrix2cd diag_flip = Eigen::Matrix2cd::Zero();
  diag_flip(0, 0) = beta / alpha;
  diag_flip(1, 1) = alpha / beta;

  WeightedGhzReport report;
  const Eigen::MatrixXcd x0x1x2 = op3(kPauliX, kPauliX, kPauliX);
  const Eigen::MatrixXcd d0 = op3(diag_corr, kId2, kId2);
  report.identity_residual = (d0 * x0x1x2 * psi.amps() - psi.amps()).norm();
  report.flipped_identity_residual =
      (op3(diag_flip, kId2, kId2) * x0x1x2 * psi.amps() - psi.amps()).norm();

  const Eigen::MatrixXcd zz01 =
      PauliString::from_factors(3, {{0, 'Z'}, {1, 'Z'}}).to_matrix();
  const Eigen::MatrixXcd zz12 =
      PauliString::from_factors(3, {{1, 'Z'}, {2, 'Z'}}).to_matrix();
  const Eigen::MatrixXcd dx0x1 = op3(diag_corr * kPauliX, kPauliX, kId2);
  const Eigen::MatrixXcd x2 = PauliString::single(3, 2, 'X').to_matrix();
  report.op = a * zz01 + b * zz12 + c * (dx0x1 - x2);

  const Eigen::VectorXcd hpsi = report.op * psi.amps();
  report.eigenvalue = psi.amps().dot(hpsi);
  report.eigen_residual = (hpsi - report.eigenvalue * psi.amps()).norm();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(report.op, false);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::NumericalFailure, "complex eigensolver did not converge");
  const Eigen::VectorXcd evals = es.eigenvalues();
  // Cluster in the complex plane around psi's eigenvalue.
  const double ctol = std::max(1e-9, 1e-9 * (std::abs(a) + std::abs(b) +
                                             std::abs(c) * (1.0 / (alpha * beta))));
  report.multiplicity = 0;
  report.gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < evals.size(); ++i) {
    const double d = std::abs(evals[i] - report.eigenvalue);
    if (d <= ctol)
      ++report.multiplicity;
    else
      report.gap = std::min(report.gap, d);
  }
  if (!std::isfinite(report.gap)) report.gap = 0.0;
  report.nondegenerate = report.multiplicity == 1 && report.eigen_residual <= 1e-10;
  return report;
}

ParentSearchResult hermitian_parent_search(const StateVector& psi, int k,
                                           int trials, std::uint64_t seed,
                                           double tol) {
  if (k < 1 || k >= psi.n())
    fail(ErrorCode::InvalidArgument,
         "locality k must satisfy 1 <= k < n");
  const std::vector<PauliString> basis = weight_limited_basis(psi.n(), k);
  const int m = static_cast<int>(basis.size());
  const std::int64_t dim = psi.dim();

  // h|psi> parallel to |psi>  <=>  (I - |psi><psi|) h |psi> = 0, a real
  // linear condition on the coefficient vector.
  Eigen::MatrixXd constraint(2 * dim, m);
  for (int t = 0; t < m; ++t) {
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(dim);
    basis[t].accumulate(psi.amps(), col, 1.0);
    col -= psi.amps() * psi.amps().dot(col);
    constraint.col(t).head(dim) = col.real();
    constraint.col(t).tail(dim) = col.imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraint,
                                        Eigen::ComputeThinU | Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double sv_tol = 1e-10 * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > sv_tol) ++rank;
  const int null_dim = m - rank;

  ParentSearchResult result;
  result.nullspace_dim = null_dim;
  result.basis_size = m;
  if (null_dim == 0) {
    result.trials_used = 0;
    return result;
  }
  const Eigen::MatrixXd null_basis = svd.matrixV().rightCols(null_dim);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd g(null_dim);
    for (int i = 0; i < null_dim; ++i) g[i] = gauss(rng);
    Eigen::VectorXd theta = null_basis * g;
    const double scale = theta.norm();
    if (scale < 1e-12) continue;
    theta /= scale;
    PauliSum h(psi.n());
    for (int t = 0; t < m; ++t)
      if (std::abs(theta[t]) >= kCoeffPruneThreshold) h.add(basis[t], theta[t]);
    if (h.locality() == 0) continue;  // multiple of the identity
    result.trials_used = trial + 1;
    try {
      EigCertificate cert = certify_nondegenerate_eigenstate(h, psi, tol);
      if (cert.pass) {
        result.parent = std::move(h);
        result.certificate = cert;
        return result;
      }
    } catch (const NotEigenstateError&) {
      // numerically outside the kernel; keep sampling
    }
  }
  return result;
}

PauliSum bacon_shor_h0(double jx, double jz) {
  if (!(jx > 0.0) || !(jz > 0.0))
    fail(ErrorCode::InvalidArgument, "couplings must satisfy jx, jz > 0");
  const int n = 9;
  auto idx = [](int row, int col) { return 3 * ((row + 3) % 3) + ((col + 3) % 3); };
  PauliSum h(n);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      h.add(PauliString::from_factors(n, {{idx(r, c), 'X'}, {idx(r + 1, c), 'X'}}), -jx);
      h.add(PauliString::from_factors(n, {{idx(r, c), 'Z'}, {idx(r, c + 1), 'Z'}}), -jz);
    }
  return h;
}

PauliString bacon_shor_logical_z() {
  return PauliString::from_factors(9, {{0, 'Z'}, {3, 'Z'}, {6, 'Z'}});
}

BaconShorGroundSpace bacon_shor_ground_space(double jx, double jz) {
  const PauliSum h0 = bacon_shor_h0(jx, jz);
  const Spectrum sp = eig(h0);
  const double ctol = degeneracy_cluster_tol(h0);
  int hi = 0;
  while (hi + 1 < sp.eigenvalues.size() &&
         sp.eigenvalues[hi + 1] - sp.eigenvalues[hi] <= ctol)
    ++hi;

  BaconShorGroundSpace gs;
  gs.ground_energy = sp.eigenvalues[0];
  gs.ground_dim = hi + 1;
  gs.gap_above = hi + 1 < sp.eigenvalues.size()
                     ? sp.eigenvalues[hi + 1] - sp.eigenvalues[hi]
                     : 0.0;
  if (gs.ground_dim != 2) return gs;

  // Diagonalize logical Z restricted to the ground plane; eigenvalues +-1
  // name the codewords.
  const Eigen::MatrixXcd v = sp.eigenvectors.leftCols(2);
  const Eigen::MatrixXcd zbar = PauliSum::term(bacon_shor_logical_z(), 1.0).to_matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(v.adjoint() * zbar * v);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::NumericalFailure, "logical-Z restriction failed to diagonalize");
  // Ascending eigenvalues: column 0 is the -1 word, column 1 the +1 word.
  const Eigen::VectorXcd minus = canonical_phase(v * es.eigenvectors().col(0));
  const Eigen::VectorXcd plus = canonical_phase(v * es.eigenvectors().col(1));
  gs.c0 = StateVector(9, plus);
  gs.c1 = StateVector(9, minus);
  return gs;
}

PauliSum ghz_n_hamiltonian(int n, double c) {
  if (n < 4 || n % 2 != 0)
    fail(ErrorCode::InvalidArgument,
         "construction is defined for even n >= 4, got n = " + std::to_string(n));
  if (n > kDenseLimit)
    fail(ErrorCode::DenseLimitExceeded, "n exceeds the dense cap");
  PauliSum h(n);
  for (int q = 0; q + 1 < n; ++q)
    h.add(PauliString::from_factors(n, {{q, 'Z'}, {q + 1, 'Z'}}), -1.0);
  std::vector<std::pair<int, char>> first_half, second_half;
  for (int q = 0; q < n / 2; ++q) first_half.emplace_back(q, 'X');
  for (int q = n / 2; q < n; ++q) second_half.emplace_back(q, 'X');
  h.add(PauliString::from_factors(n, first_half), c);
  h.add(PauliString::from_factors(n, second_half), -c);
  return h;
}

PauliSum dicke_h0(int n, int i) {
  if (i < 0 || i > n)
    fail(ErrorCode::InvalidArgument, "Dicke weight out of range");
  PauliSum h = s_z(n);
  h.add(PauliString::identity(n), static_cast<double>(2 * i - n));
  return h;
}

PauliSum dicke_parent(int n, int i, double c) {
  if (!(c > 0.0))
    fail(ErrorCode::InvalidArgument, "splitting coupling must be positive");
  if (n < 2) fail(ErrorCode::InvalidArgument, "need n >= 2");
  return dicke_h0(n, i).squared() - c * swap_sum(n);
}

}  // namespace rdmlab
