#include "rdmlab/fermion.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace rdmlab {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

// Fermionic paths are capped at 4 sites (8 modes, 256-dimensional Fock
// space); everything of interest happens at n = 3.
constexpr int kFermionSiteCap = 4;

void check_mode(int mode, int total) {
  if (mode < 0 || mode >= total)
    fail(ErrorCode::InvalidArgument,
         "mode index " + std::to_string(mode) + " out of range for " +
             std::to_string(total) + " modes");
}

void check_site_cap(int n) {
  if (n < 1 || n > kFermionSiteCap)
    fail(ErrorCode::InvalidArgument,
         "fermionic paths support 1 <= n <= " + std::to_string(kFermionSiteCap) +
             " sites, got " + std::to_string(n));
}

}  // namespace

LadderOp::LadderOp(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaskLimit)
    fail(ErrorCode::InvalidArgument, "bad qubit count for ladder algebra");
}

LadderOp LadderOp::identity(int n_qubits) {
  LadderOp op(n_qubits);
  op.add(PauliString::identity(n_qubits), 1.0);
  return op;
}

LadderOp LadderOp::annihilator(int mode, int total_modes) {
  check_mode(mode, total_modes);
  // c_m = (prod_{j<m} Z_j) (X_m + i Y_m)/2, which lowers |1> to |0>.
  const std::uint64_t prefix = (1ULL << mode) - 1;
  const std::uint64_t bit = 1ULL << mode;
  LadderOp op(total_modes);
  op.add(PauliString(total_modes, bit, prefix), 0.5);
  op.add(PauliString(total_modes, bit, prefix | bit), 0.5 * kImag);
  return op;
}

LadderOp LadderOp::creator(int mode, int total_modes) {
  return annihilator(mode, total_modes).dagger();
}

LadderOp LadderOp::number(int mode, int total_modes) {
  return creator(mode, total_modes) * annihilator(mode, total_modes);
}

void LadderOp::add(const PauliString& p, std::complex<double> coeff) {
  if (p.n() != n_)
    fail(ErrorCode::DimensionMismatch, "ladder term register mismatch");
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < kCoeffPruneThreshold) terms_.erase(it);
}

LadderOp LadderOp::dagger() const {
  LadderOp out(n_);
  // Pauli strings are Hermitian, so only coefficients conjugate.
  for (const auto& [p, c] : terms_) out.add(p, std::conj(c));
  return out;
}

LadderOp& LadderOp::operator+=(const LadderOp& other) {
  if (other.n_ != n_) fail(ErrorCode::DimensionMismatch, "ladder register mismatch");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

LadderOp& LadderOp::operator-=(const LadderOp& other) {
  if (other.n_ != n_) fail(ErrorCode::DimensionMismatch, "ladder register mismatch");
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

LadderOp& LadderOp::operator*=(std::complex<double> scale) {
  std::map<PauliString, std::complex<double>> scaled;
  for (const auto& [p, c] : terms_)
    if (std::abs(c * scale) >= kCoeffPruneThreshold) scaled.emplace(p, c * scale);
  terms_ = std::move(scaled);
  return *this;
}

LadderOp operator*(const LadderOp& a, const LadderOp& b) {
  if (a.n() != b.n()) fail(ErrorCode::DimensionMismatch, "ladder register mismatch");
  LadderOp out(a.n());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      PauliProduct prod = multiply(p, q);
      out.add(prod.string, cp * cq * prod.phase);
    }
  return out;
}

PauliSum LadderOp::hermitian() const {
  PauliSum out(n_);
  for (const auto& [p, c] : terms_) {
    if (std::abs(c.imag()) > 1e-10 * std::max(1.0, std::abs(c.real())))
      fail(ErrorCode::NumericalFailure,
           "operator is not Hermitian: imaginary coefficient on " + p.to_string());
    out.add(p, c.real());
  }
  return out;
}

Eigen::MatrixXcd LadderOp::to_matrix() const {
  if (n_ > kDenseLimit)
    fail(ErrorCode::DenseLimitExceeded, "dense materialization cap exceeded");
  const std::int64_t dim = 1LL << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(dim);
  for (std::int64_t b = 0; b < dim; ++b) {
    unit[b] = 1.0;
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(dim);
    for (const auto& [p, c] : terms_) p.accumulate(unit, col, c);
    m.col(b) = col;
    unit[b] = 0.0;
  }
  return m;
}

std::uint64_t encoded_occupation(std::uint64_t bits, int n) {
  std::uint64_t occ = 0;
  for (int i = 0; i < n; ++i)
    occ |= 1ULL << (2 * i + ((bits >> i & 1) ? 1 : 0));
  return occ;
}

Eigen::VectorXcd encode_vector(const Eigen::VectorXcd& v, int n) {
  check_site_cap(n);
  if (v.size() != (1LL << n))
    fail(ErrorCode::DimensionMismatch, "vector is not on 2^n states");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(1LL << (2 * n));
  for (std::int64_t b = 0; b < v.size(); ++b)
    out[static_cast<std::int64_t>(encoded_occupation(b, n))] = v[b];
  return out;
}

StateVector encode_state(const StateVector& psi) {
  return StateVector(2 * psi.n(), encode_vector(psi.amps(), psi.n()));
}

PauliSum map_pauli(int site, char axis, int n) {
  if (site < 0 || site >= n)
    fail(ErrorCode::InvalidArgument, "site out of range");
  const int modes = 2 * n;
  const LadderOp a =
      LadderOp::annihilator(ModeIndex{site, ModeIndex::Kind::a}, modes);
  const LadderOp b =
      LadderOp::annihilator(ModeIndex{site, ModeIndex::Kind::b}, modes);
  const LadderOp ad = a.dagger(), bd = b.dagger();
  switch (axis) {
    case 'X': return (ad * b + bd * a).hermitian();
    case 'Y': return (kImag * (bd * a - ad * b)).hermitian();
    case 'Z': return (LadderOp::identity(modes) - 2.0 * (bd * b)).hermitian();
    case 'I': return PauliSum::identity(modes);
    default: fail(ErrorCode::InvalidArgument, "unknown axis");
  }
}

PauliSum map_pauli_string(const PauliString& p) {
  const int n = p.n();
  PauliSum out = PauliSum::identity(2 * n);
  // Site images live on disjoint position pairs, so the product is phase-free.
  for (int site = 0; site < n; ++site) {
    const char axis = p.axis_at(site);
    if (axis == 'I') continue;
    out = out * map_pauli(site, axis, n);
  }
  return out;
}

PauliSum map_hamiltonian(const PauliSum& h_spin) {
  PauliSum out(2 * h_spin.n());
  for (const auto& [p, c] : h_spin.terms()) out += c * map_pauli_string(p);
  return out;
}

PauliSum penalty(int site, int n) {
  if (site < 0 || site >= n)
    fail(ErrorCode::InvalidArgument, "site out of range");
  const int modes = 2 * n;
  const LadderOp na = LadderOp::number(ModeIndex{site, ModeIndex::Kind::a}, modes);
  const LadderOp nb = LadderOp::number(ModeIndex{site, ModeIndex::Kind::b}, modes);
  const LadderOp one = LadderOp::identity(modes);
  return ((2.0 * na - one) * (2.0 * nb - one)).hermitian();
}

PauliSum full_map(const PauliSum& h_spin, double lambda) {
  if (!(lambda > 0.0))
    fail(ErrorCode::InvalidArgument, "penalty weight must be positive");
  const int n = h_spin.n();
  check_site_cap(n);
  PauliSum out = map_hamiltonian(h_spin);
  for (int site = 0; site < n; ++site) {
    PauliSum block = penalty(site, n);
    block.add(PauliString::identity(2 * n), 1.0);
    out += lambda * block;
  }
  return out;
}

double default_penalty_weight(const PauliSum& h_spin) {
  return 20.0 * std::max(1.0, h_spin.coeff_one_norm());
}

Eigen::MatrixXcd sector_restrict(const Eigen::MatrixXcd& h_fock, int n) {
  if (h_fock.rows() != (1LL << (2 * n)))
    fail(ErrorCode::DimensionMismatch, "operator is not on 2n mode qubits");
  const std::int64_t dim = 1LL << n;
  Eigen::MatrixXcd block(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i)
    for (std::int64_t j = 0; j < dim; ++j)
      block(i, j) = h_fock(encoded_occupation(i, n), encoded_occupation(j, n));
  return block;
}

Eigen::VectorXd sector_spectrum(const PauliSum& h_fock, int n) {
  const Eigen::MatrixXcd block = sector_restrict(h_fock.to_matrix(), n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::NumericalFailure, "sector eigensolve failed");
  return es.eigenvalues();
}

Eigen::VectorXcd annihilate(int mode, const Eigen::VectorXcd& v) {
  const std::uint64_t bit = 1ULL << mode;
  const std::uint64_t below = bit - 1;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (std::int64_t idx = 0; idx < v.size(); ++idx) {
    const auto u = static_cast<std::uint64_t>(idx);
    if (!(u & bit)) continue;
    const double sign = (std::popcount(u & below) & 1) ? -1.0 : 1.0;
    out[static_cast<std::int64_t>(u ^ bit)] += sign * v[idx];
  }
  return out;
}

TwoMatrix::TwoMatrix(int modes, Eigen::MatrixXcd one, Eigen::MatrixXcd two)
    : modes_(modes), one_(std::move(one)), two_(std::move(two)) {
  const int pairs = pair_count();
  if (one_.rows() != modes_ || one_.cols() != modes_ || two_.rows() != pairs ||
      two_.cols() != pairs)
    fail(ErrorCode::DimensionMismatch, "expectation table shape mismatch");
}

int TwoMatrix::pair_index(int p, int q, int modes) {
  if (!(0 <= p && p < q && q < modes))
    fail(ErrorCode::InvalidArgument, "pair index requires 0 <= p < q < modes");
  // Lexicographic rank of (p, q) among ordered pairs.
  return p * modes - p * (p + 1) / 2 + (q - p - 1);
}

double TwoMatrix::trace() const { return 2.0 * two_.trace().real(); }

double TwoMatrix::hermiticity_defect() const {
  return (two_ - two_.adjoint()).cwiseAbs().maxCoeff();
}

double TwoMatrix::max_deviation(const TwoMatrix& other) const {
  if (other.modes_ != modes_)
    fail(ErrorCode::DimensionMismatch, "mode counts differ");
  return std::max((one_ - other.one_).cwiseAbs().maxCoeff(),
                  (two_ - other.two_).cwiseAbs().maxCoeff());
}

TwoMatrix two_matrix(const Eigen::VectorXcd& psi_fock, int modes) {
  if (psi_fock.size() != (1LL << modes))
    fail(ErrorCode::DimensionMismatch, "state dimension is not 2^modes");
  std::vector<Eigen::VectorXcd> single(modes);
  for (int p = 0; p < modes; ++p) single[p] = annihilate(p, psi_fock);

  Eigen::MatrixXcd one(modes, modes);
  for (int p = 0; p < modes; ++p)
    for (int q = 0; q < modes; ++q) one(p, q) = single[p].dot(single[q]);

  const int pairs = modes * (modes - 1) / 2;
  std::vector<Eigen::VectorXcd> pair_vec(pairs);
  for (int p = 0; p < modes; ++p)
    for (int q = p + 1; q < modes; ++q)
      // c_q c_p psi: the vector whose Gram matrix is the two-particle table.
      pair_vec[TwoMatrix::pair_index(p, q, modes)] = annihilate(q, single[p]);

  Eigen::MatrixXcd two(pairs, pairs);
  for (int u = 0; u < pairs; ++u)
    for (int v = 0; v < pairs; ++v) two(u, v) = pair_vec[u].dot(pair_vec[v]);
  return TwoMatrix(modes, std::move(one), std::move(two));
}

}  // namespace rdmlab
