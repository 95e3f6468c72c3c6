#include "rdmlab/pauli.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace rdmlab {

namespace {

constexpr std::complex<double> kPhaseTable[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int popcount(std::uint64_t v) { return std::popcount(v); }

void check_qubit_count(int n) {
  if (n < 1 || n > kMaskLimit)
    fail(ErrorCode::InvalidArgument,
         "qubit count must be in [1, " + std::to_string(kMaskLimit) + "], got " +
             std::to_string(n));
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DenseLimitExceeded: return "DenseLimitExceeded";
    case ErrorCode::NotEigenstate: return "NotEigenstate";
    case ErrorCode::NoValidCoupling: return "NoValidCoupling";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

PauliString::PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(n), x_(x_mask), z_(z_mask) {
  check_qubit_count(n);
  const std::uint64_t allowed = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  if ((x_ & ~allowed) || (z_ & ~allowed))
    fail(ErrorCode::InvalidArgument, "Pauli mask has bits set at or above qubit " +
                                         std::to_string(n));
}

PauliString PauliString::single(int n, int qubit, char axis) {
  if (qubit < 0 || qubit >= n)
    fail(ErrorCode::InvalidArgument,
         "qubit index " + std::to_string(qubit) + " out of range for n = " +
             std::to_string(n));
  const std::uint64_t bit = 1ULL << qubit;
  switch (axis) {
    case 'X': return PauliString(n, bit, 0);
    case 'Y': return PauliString(n, bit, bit);
    case 'Z': return PauliString(n, 0, bit);
    default:
      fail(ErrorCode::InvalidArgument,
           std::string("unknown Pauli axis '") + axis + "'");
  }
}

PauliString PauliString::from_factors(
    int n, const std::vector<std::pair<int, char>>& factors) {
  std::uint64_t x = 0, z = 0;
  std::uint64_t seen = 0;
  for (const auto& [qubit, axis] : factors) {
    PauliString f = single(n, qubit, axis);
    if (seen & (1ULL << qubit))
      fail(ErrorCode::InvalidArgument,
           "duplicate qubit index " + std::to_string(qubit));
    seen |= 1ULL << qubit;
    x |= f.x_mask();
    z |= f.z_mask();
  }
  return PauliString(n, x, z);
}

int PauliString::weight() const { return popcount(x_ | z_); }

char PauliString::axis_at(int qubit) const {
  const bool x = x_ >> qubit & 1, z = z_ >> qubit & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 0; q < n_; ++q)
    if ((x_ | z_) >> q & 1) out.push_back(q);
  return out;
}

void PauliString::accumulate(const Eigen::VectorXcd& in, Eigen::VectorXcd& out,
                             std::complex<double> coeff) const {
  // P|b> = i^{popcount(x&z)} (-1)^{popcount(z&b)} |b^x>
  const std::complex<double> base = coeff * kPhaseTable[popcount(x_ & z_) & 3];
  const std::int64_t dim = in.size();
  for (std::int64_t b = 0; b < dim; ++b) {
    const double sign = (popcount(z_ & static_cast<std::uint64_t>(b)) & 1) ? -1.0 : 1.0;
    out[static_cast<std::int64_t>(b ^ static_cast<std::int64_t>(x_))] += base * sign * in[b];
  }
}

Eigen::MatrixXcd PauliString::to_matrix() const {
  if (n_ > kDenseLimit)
    fail(ErrorCode::DenseLimitExceeded,
         "dense materialization capped at n = " + std::to_string(kDenseLimit));
  const std::int64_t dim = 1LL << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const std::complex<double> base = kPhaseTable[popcount(x_ & z_) & 3];
  for (std::int64_t b = 0; b < dim; ++b) {
    const double sign = (popcount(z_ & static_cast<std::uint64_t>(b)) & 1) ? -1.0 : 1.0;
    m(b ^ static_cast<std::int64_t>(x_), b) = base * sign;
  }
  return m;
}

std::string PauliString::to_string() const {
  if (is_identity()) return "I";
  std::ostringstream out;
  bool first = true;
  for (int q = 0; q < n_; ++q) {
    const char axis = axis_at(q);
    if (axis == 'I') continue;
    if (!first) out << ' ';
    out << axis << '@' << q;
    first = false;
  }
  return out.str();
}

PauliProduct multiply(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n())
    fail(ErrorCode::DimensionMismatch,
         "Pauli string qubit counts differ: " + std::to_string(p.n()) + " vs " +
             std::to_string(q.n()));
  const std::uint64_t x = p.x_mask() ^ q.x_mask();
  const std::uint64_t z = p.z_mask() ^ q.z_mask();
  // With P = i^{|x&z|} X^x Z^z, commuting Z^{z_p} past X^{x_q} gives
  // i^{|x_p&z_p| + |x_q&z_q| - |x&z| + 2|z_p&x_q|}.
  int k = popcount(p.x_mask() & p.z_mask()) + popcount(q.x_mask() & q.z_mask()) -
          popcount(x & z) + 2 * popcount(p.z_mask() & q.x_mask());
  k &= 3;
  return {kPhaseTable[k], PauliString(p.n(), x, z)};
}

bool commutes(const PauliString& p, const PauliString& q) {
  return ((popcount(p.x_mask() & q.z_mask()) + popcount(p.z_mask() & q.x_mask())) & 1) == 0;
}

PauliSum::PauliSum(int n) : n_(n) { check_qubit_count(n); }

PauliSum PauliSum::identity(int n, double coeff) {
  PauliSum s(n);
  s.add(PauliString::identity(n), coeff);
  return s;
}

PauliSum PauliSum::term(const PauliString& p, double coeff) {
  PauliSum s(p.n());
  s.add(p, coeff);
  return s;
}

void PauliSum::add(const PauliString& p, double coeff) {
  if (p.n() != n_)
    fail(ErrorCode::DimensionMismatch,
         "term qubit count " + std::to_string(p.n()) + " does not match sum (" +
             std::to_string(n_) + ")");
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < kCoeffPruneThreshold) terms_.erase(it);
}

double PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_)
    fail(ErrorCode::DimensionMismatch, "cannot add sums on different registers");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_ != n_)
    fail(ErrorCode::DimensionMismatch, "cannot subtract sums on different registers");
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(double scale) {
  if (scale == 0.0 || std::abs(scale) < 1.0) {
    // Rescaling can push coefficients below the pruning threshold.
    std::map<PauliString, double> scaled;
    for (const auto& [p, c] : terms_)
      if (std::abs(c * scale) >= kCoeffPruneThreshold) scaled.emplace(p, c * scale);
    terms_ = std::move(scaled);
  } else {
    for (auto& [p, c] : terms_) c *= scale;
  }
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n() != b.n())
    fail(ErrorCode::DimensionMismatch, "cannot multiply sums on different registers");
  std::map<PauliString, std::complex<double>> acc;
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      PauliProduct prod = multiply(p, q);
      acc[prod.string] += cp * cq * prod.phase;
    }
  PauliSum out(a.n());
  for (const auto& [p, c] : acc) {
    if (std::abs(c.imag()) > 1e-9 * std::max(1.0, std::abs(c.real())))
      fail(ErrorCode::NumericalFailure,
           "product is not Hermitian: imaginary coefficient " +
               std::to_string(c.imag()) + " on " + p.to_string());
    out.add(p, c.real());
  }
  return out;
}

int PauliSum::locality() const {
  int w = 0;
  for (const auto& [p, c] : terms_) w = std::max(w, p.weight());
  return w;
}

double PauliSum::coeff_one_norm() const {
  double s = 0.0;
  for (const auto& [p, c] : terms_) s += std::abs(c);
  return s;
}

PauliSum PauliSum::squared() const {
  std::vector<std::pair<PauliString, double>> t(terms_.begin(), terms_.end());
  PauliSum out(n_);
  double diag = 0.0;
  for (const auto& [p, c] : t) diag += c * c;  // every string squares to +I
  out.add(PauliString::identity(n_), diag);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      // Anticommuting pairs cancel between ij and ji; commuting pairs double
      // up with a real (+-1) phase.
      if (!commutes(t[i].first, t[j].first)) continue;
      PauliProduct prod = multiply(t[i].first, t[j].first);
      out.add(prod.string, 2.0 * t[i].second * t[j].second * prod.phase.real());
    }
  return out;
}

PauliSum PauliSum::embedded(int m) const {
  if (m < n_)
    fail(ErrorCode::InvalidArgument,
         "cannot embed an n = " + std::to_string(n_) + " sum into " +
             std::to_string(m) + " qubits");
  PauliSum out(m);
  for (const auto& [p, c] : terms_)
    out.add(PauliString(m, p.x_mask(), p.z_mask()), c);
  return out;
}

Eigen::MatrixXcd PauliSum::to_matrix() const {
  if (n_ > kDenseLimit)
    fail(ErrorCode::DenseLimitExceeded,
         "dense materialization capped at n = " + std::to_string(kDenseLimit) +
             ", sum has n = " + std::to_string(n_));
  const std::int64_t dim = 1LL << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : terms_) {
    const std::complex<double> base =
        c * kPhaseTable[popcount(p.x_mask() & p.z_mask()) & 3];
    const std::uint64_t x = p.x_mask(), z = p.z_mask();
    for (std::int64_t b = 0; b < dim; ++b) {
      const double sign = (popcount(z & static_cast<std::uint64_t>(b)) & 1) ? -1.0 : 1.0;
      m(b ^ static_cast<std::int64_t>(x), b) += base * sign;
    }
  }
  return m;
}

Eigen::VectorXcd PauliSum::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != (1LL << n_))
    fail(ErrorCode::DimensionMismatch,
         "vector dimension " + std::to_string(v.size()) + " does not match 2^" +
             std::to_string(n_));
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (const auto& [p, c] : terms_) p.accumulate(v, out, c);
  return out;
}

}  // namespace rdmlab
