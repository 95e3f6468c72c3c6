#include "rdmlab/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace rdmlab {

namespace {

// Index with the bits of `value` deposited at the positions listed in `where`.
std::uint64_t deposit_bits(std::uint64_t value, const std::vector<int>& where) {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < where.size(); ++j)
    if (value >> j & 1) out |= 1ULL << where[j];
  return out;
}

std::vector<int> sorted_subset(std::vector<int> keep, int n) {
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    fail(ErrorCode::InvalidArgument, "qubit subset contains duplicates");
  if (!keep.empty() && (keep.front() < 0 || keep.back() >= n))
    fail(ErrorCode::InvalidArgument, "qubit subset exceeds register of size " +
                                         std::to_string(n));
  return keep;
}

std::vector<int> complement_of(const std::vector<int>& keep, int n) {
  std::vector<int> out;
  std::size_t j = 0;
  for (int q = 0; q < n; ++q) {
    if (j < keep.size() && keep[j] == q) {
      ++j;
    } else {
      out.push_back(q);
    }
  }
  return out;
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int j = 1; j <= k; ++j) v = v * (n - k + j) / j;
  return v;
}

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int q = start; q <= n - (k - static_cast<int>(cur.size())); ++q) {
    cur.push_back(q);
    subsets_rec(n, k, q + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(n, k, 0, cur, out);
  return out;
}

}  // namespace

StateVector::StateVector(int n, Eigen::VectorXcd amps) : n_(n), amps_(std::move(amps)) {
  if (n < 1 || n > kMaskLimit)
    fail(ErrorCode::InvalidArgument, "bad qubit count " + std::to_string(n));
  if (amps_.size() != (1LL << n))
    fail(ErrorCode::DimensionMismatch,
         "amplitude count " + std::to_string(amps_.size()) + " is not 2^" +
             std::to_string(n));
  const double norm = amps_.norm();
  if (norm < 1e-12)
    fail(ErrorCode::InvalidArgument, "cannot normalize a (near-)zero vector");
  amps_ /= norm;
}

StateVector StateVector::basis_state(int n, std::uint64_t index) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1LL << n);
  v[static_cast<std::int64_t>(index)] = 1.0;
  return StateVector(n, std::move(v));
}

std::complex<double> StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_)
    fail(ErrorCode::DimensionMismatch, "inner product across registers");
  return amps_.dot(other.amps_);  // conjugates the left argument
}

double StateVector::overlap(const StateVector& other) const {
  return std::abs(inner(other));
}

Eigen::VectorXcd canonical_phase(Eigen::VectorXcd v) {
  std::int64_t best = 0;
  double best_mag = 0.0;
  for (std::int64_t i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > best_mag) {
      best_mag = m;
      best = i;
    }
  }
  if (best_mag > 0.0) v *= std::conj(v[best]) / std::abs(v[best]);
  return v;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    fail(ErrorCode::DimensionMismatch, "density matrix must be square");
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12)
    fail(ErrorCode::NumericalFailure,
         "density matrix not Hermitian, defect " + std::to_string(herm));
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > 1e-10)
    fail(ErrorCode::NumericalFailure,
         "density matrix trace " + std::to_string(tr) + " != 1");
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate(double tol) const {
  const double lo = min_eigenvalue();
  if (lo < -tol)
    fail(ErrorCode::NumericalFailure,
         "density matrix has eigenvalue " + std::to_string(lo) + " < -tol");
}

DensityMatrix projector(const StateVector& psi) {
  return DensityMatrix(psi.amps() * psi.amps().adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, int n, std::vector<int> keep) {
  if (rho.dim() != (1LL << n))
    fail(ErrorCode::DimensionMismatch, "density matrix is not on 2^n states");
  keep = sorted_subset(std::move(keep), n);
  const std::vector<int> traced = complement_of(keep, n);
  const std::int64_t dk = 1LL << keep.size();
  const std::int64_t dt = 1LL << traced.size();
  std::vector<std::uint64_t> keep_idx(dk), trace_idx(dt);
  for (std::int64_t i = 0; i < dk; ++i) keep_idx[i] = deposit_bits(i, keep);
  for (std::int64_t t = 0; t < dt; ++t) trace_idx[t] = deposit_bits(t, traced);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j < dk; ++j) {
      std::complex<double> acc = 0.0;
      for (std::int64_t t = 0; t < dt; ++t)
        acc += rho.matrix()(keep_idx[i] | trace_idx[t], keep_idx[j] | trace_idx[t]);
      out(i, j) = acc;
    }
  return DensityMatrix(std::move(out));
}

DensityMatrix rdm_of_state(const StateVector& psi, std::vector<int> keep) {
  keep = sorted_subset(std::move(keep), psi.n());
  const std::vector<int> traced = complement_of(keep, psi.n());
  const std::int64_t dk = 1LL << keep.size();
  const std::int64_t dt = 1LL << traced.size();
  std::vector<std::uint64_t> keep_idx(dk), trace_idx(dt);
  for (std::int64_t i = 0; i < dk; ++i) keep_idx[i] = deposit_bits(i, keep);
  for (std::int64_t t = 0; t < dt; ++t) trace_idx[t] = deposit_bits(t, traced);

  const Eigen::VectorXcd& a = psi.amps();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j <= i; ++j) {
      std::complex<double> acc = 0.0;
      for (std::int64_t t = 0; t < dt; ++t)
        acc += a[keep_idx[i] | trace_idx[t]] * std::conj(a[keep_idx[j] | trace_idx[t]]);
      out(i, j) = acc;
      out(j, i) = std::conj(acc);
    }
  // Clean the diagonal: it is real by construction.
  for (std::int64_t i = 0; i < dk; ++i) out(i, i) = out(i, i).real();
  return DensityMatrix(std::move(out));
}

RdmSet::RdmSet(int n, int k, std::map<std::vector<int>, DensityMatrix> rdms)
    : n_(n), k_(k), rdms_(std::move(rdms)) {
  const auto expected = static_cast<std::size_t>(binomial(n, k) + 0.5);
  if (rdms_.size() != expected)
    fail(ErrorCode::InvalidArgument,
         "RDM set must contain all C(n,k) subsets, got " +
             std::to_string(rdms_.size()));
}

double RdmSet::max_deviation(const RdmSet& other) const {
  if (other.n_ != n_ || other.k_ != k_)
    fail(ErrorCode::DimensionMismatch, "RDM sets have different (n, k)");
  double worst = 0.0;
  auto it = rdms_.begin();
  auto jt = other.rdms_.begin();
  for (; it != rdms_.end(); ++it, ++jt) {
    const double d =
        (it->second.matrix() - jt->second.matrix()).cwiseAbs().maxCoeff();
    worst = std::max(worst, d);
  }
  return worst;
}

double RdmSet::consistency_deviation() const {
  if (k_ < 2) return 0.0;
  double worst = 0.0;
  // Compare every traced-down (k-1)-marginal across all parents that share it.
  std::map<std::vector<int>, Eigen::MatrixXcd> reference;
  for (const auto& [subset, rho] : rdms_) {
    for (int drop = 0; drop < k_; ++drop) {
      std::vector<int> sub;
      std::vector<int> local_keep;
      for (int j = 0; j < k_; ++j)
        if (j != drop) {
          sub.push_back(subset[j]);
          local_keep.push_back(j);
        }
      DensityMatrix reduced = partial_trace(rho, k_, local_keep);
      auto [it, inserted] = reference.try_emplace(sub, reduced.matrix());
      if (!inserted)
        worst = std::max(worst,
                         (it->second - reduced.matrix()).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

RdmSet k_rdms(const StateVector& psi, int k) {
  if (k < 1 || k > psi.n())
    fail(ErrorCode::InvalidArgument,
         "k = " + std::to_string(k) + " out of range for n = " + std::to_string(psi.n()));
  std::map<std::vector<int>, DensityMatrix> rdms;
  for (const auto& subset : all_subsets(psi.n(), k))
    rdms.emplace(subset, rdm_of_state(psi, subset));
  return RdmSet(psi.n(), k, std::move(rdms));
}

double rdm_max_deviation(const RdmSet& a, const RdmSet& b) {
  return a.max_deviation(b);
}

StateVector ghz(int n, double alpha, double beta, double theta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    fail(ErrorCode::InvalidArgument, "GHZ weights must be positive");
  if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-10)
    fail(ErrorCode::InvalidArgument, "GHZ weights must satisfy alpha^2 + beta^2 = 1");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1LL << n);
  v[0] = alpha;
  v[(1LL << n) - 1] = beta * std::exp(std::complex<double>(0.0, theta));
  return StateVector(n, std::move(v));
}

StateVector dicke(int n, int i) {
  if (i < 0 || i > n)
    fail(ErrorCode::InvalidArgument,
         "Dicke weight " + std::to_string(i) + " out of range for n = " +
             std::to_string(n));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1LL << n);
  const double amp = 1.0 / std::sqrt(binomial(n, i));
  for (std::int64_t b = 0; b < (1LL << n); ++b)
    if (std::popcount(static_cast<std::uint64_t>(b)) == i) v[b] = amp;
  return StateVector(n, std::move(v));
}

PauliSum swap_pair(int n, int j, int k) {
  if (j == k || j < 0 || k < 0 || j >= n || k >= n)
    fail(ErrorCode::InvalidArgument, "bad SWAP pair");
  PauliSum s(n);
  s.add(PauliString::identity(n), 0.5);
  for (char axis : {'X', 'Y', 'Z'})
    s.add(PauliString::from_factors(n, {{j, axis}, {k, axis}}), 0.5);
  return s;
}

PauliSum swap_sum(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "swap_sum needs n >= 2");
  PauliSum s(n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) s += swap_pair(n, j, k);
  return s;
}

PauliSum s_z(int n) {
  PauliSum s(n);
  for (int j = 0; j < n; ++j) s.add(PauliString::single(n, j, 'Z'), 1.0);
  return s;
}

}  // namespace rdmlab
