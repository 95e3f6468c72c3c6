// Acceptance suite: every headline result as an executable check with its
// tolerance pinned in code.  One line of output per criterion; exit status 0
// only if all of them pass.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rdmlab/constructions.hpp"
#include "rdmlab/determinacy.hpp"
#include "rdmlab/fermion.hpp"
#include "rdmlab/io.hpp"
#include "rdmlab/report.hpp"
#include "test_helpers.hpp"

using namespace rdmlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

// 1. GHZ3 splitting Hamiltonian at c = -1: eigenvalue -2, simple, exactly one
//    level below, in under 0.1 s.
Outcome criterion_1() {
  const auto start = Clock::now();
  const EigCertificate cert =
      certify_nondegenerate_eigenstate(ghz3_hamiltonian(-1.0), ghz(3), 1e-10);
  const double seconds = elapsed(start);
  const bool pass = std::abs(cert.eigenvalue + 2.0) <= 1e-10 &&
                    cert.multiplicity == 1 && cert.index_below == 1 &&
                    cert.pass && seconds < 0.1;
  return {pass, fmt("eigenvalue %.3e+2, multiplicity %d, index_below %d, %.3f s",
                    cert.eigenvalue + 2.0, cert.multiplicity, cert.index_below,
                    seconds)};
}

// 2. GHZ3 against its theta = pi partner: equal 2-RDMs to 1e-12, orthogonal,
//    and the combined counterexample verdict passes.
Outcome criterion_2() {
  const StateVector psi = ghz(3);
  const StateVector phi = ghz(3, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), M_PI);
  const double deviation = rdm_max_deviation(k_rdms(psi, 2), k_rdms(phi, 2));
  const double overlap = psi.overlap(phi);
  const DeterminacyReport vc =
      verify_counterexample(psi, phi, ghz3_hamiltonian(-1.0), 2);
  const bool pass = deviation <= 1e-12 && overlap <= 1e-10 && vc.pass;
  return {pass, fmt("rdm deviation %.2e, overlap %.2e, verdict %s", deviation,
                    overlap, vc.pass ? "pass" : "fail")};
}

// 3. Bacon-Shor 3x3 at unit couplings: two-dimensional ground space with a
//    clear gap, equal codeword 2-RDMs, and a certified coupling from the
//    scan, all inside 30 s.
Outcome criterion_3() {
  const auto start = Clock::now();
  const BaconShorGroundSpace gs = bacon_shor_ground_space(1.0, 1.0);
  if (gs.ground_dim != 2)
    return {false, fmt("ground dimension %d != 2", gs.ground_dim)};
  const double deviation =
      rdm_max_deviation(k_rdms(*gs.c0, 2), k_rdms(*gs.c1, 2));
  const SplitPair split = split_logical(bacon_shor_logical_z(), *gs.c0, 1);
  bool coupling_ok = false;
  double chosen = 0.0;
  try {
    const CouplingChoice choice =
        choose_coupling(bacon_shor_h0(1.0, 1.0), split.splitting_term, *gs.c0,
                        CouplingMode::Eigenstate, 1e-10);
    coupling_ok = choice.certificate.pass && choice.certificate.multiplicity == 1;
    chosen = choice.c;
  } catch (const Error&) {
    coupling_ok = false;
  }
  const double seconds = elapsed(start);
  const bool pass = gs.gap_above > 1e-6 && deviation <= 1e-10 && coupling_ok &&
                    seconds < 30.0;
  return {pass, fmt("gap %.3f, rdm deviation %.2e, chosen c %.3g, %.1f s",
                    gs.gap_above, deviation, chosen, seconds)};
}

// 4. Shift-and-square on 20 random 2-local Hamiltonians with an interior
//    non-degenerate eigenpair: parent is at most 4-local, PSD with ground
//    energy 0, and certifies the eigenvector as unique ground state.
Outcome criterion_4() {
  std::mt19937_64 rng(2024);
  int done = 0, attempts = 0;
  while (done < 20) {
    if (++attempts > 200) return {false, "could not find 20 usable instances"};
    const int n = 4 + (attempts % 2);
    const PauliSum h = oracle::random_local_sum(n, 2, 2 * n, rng);
    const Spectrum sp = eig(h);
    int best = -1;
    double best_margin = 0.0;
    for (int i = 1; i + 1 < sp.eigenvalues.size(); ++i) {
      const double margin = std::min(sp.eigenvalues[i] - sp.eigenvalues[i - 1],
                                     sp.eigenvalues[i + 1] - sp.eigenvalues[i]);
      if (margin > best_margin) {
        best_margin = margin;
        best = i;
      }
    }
    if (best < 0 || best_margin < 1e-2) continue;
    const StateVector psi(n, sp.eigenvectors.col(best));
    const auto [parent, report] = squared_parent(h, psi);
    const double min_eig = report.evidence["parent_min_eigenvalue"].get<double>();
    if (!(report.pass && parent.locality() <= 4 && std::abs(min_eig) <= 1e-9 &&
          min_eig >= -1e-9))
      return {false, fmt("instance %d failed (min eig %.2e)", done, min_eig)};
    ++done;
  }
  return {true, fmt("20 instances certified in %d attempts", attempts)};
}

// 5. Tightness at k = 2: the 4-qubit GHZ state passes the counterexample
//    verdict at RDM order 3 with a certified 2-local Hamiltonian.
Outcome criterion_5() {
  const DeterminacyReport report = tightness_suite(2);
  return {report.pass,
          fmt("locality %d, rdm order %d, verdict %s",
              report.evidence["hamiltonian_locality"].get<int>(),
              report.evidence["rdm_order"].get<int>(),
              report.pass ? "pass" : "fail")};
}

// 6. Dicke suite: for every n in 2..8 and every weight, some positive c on
//    the grid certifies the unique ground state, within 60 s total.
Outcome criterion_6() {
  const auto start = Clock::now();
  int certified = 0, total = 0;
  for (int n = 2; n <= 8; ++n)
    for (int i = 0; i <= n; ++i) {
      ++total;
      const StateVector psi = dicke(n, i);
      const PauliSum h0 = dicke_h0(n, i).squared();
      PauliSum h1 = PauliSum::identity(n, n * (n - 1) / 2.0);
      h1 -= swap_sum(n);
      try {
        const CouplingChoice choice =
            choose_coupling(h0, h1, psi, CouplingMode::Ground, 1e-10);
        const EigCertificate cert =
            certify_unique_ground_state(dicke_parent(n, i, choice.c), psi, 1e-10);
        if (choice.c > 0.0 && cert.pass && cert.fidelity >= 1.0 - 1e-10 &&
            cert.gap > 0.0)
          ++certified;
      } catch (const Error&) {
        // counted as a failure below
      }
    }
  const double seconds = elapsed(start);
  const bool pass = certified == total && seconds < 60.0;
  return {pass, fmt("%d/%d weights certified, %.1f s", certified, total, seconds)};
}

// 7. Fermion transfer at n = 3: CAR to 1e-12, sector spectrum match to
//    1e-10, equal 2-matrices and orthogonal encoded partners, within 10 s.
Outcome criterion_7() {
  const auto start = Clock::now();
  const int n = 3, modes = 6;

  double car_defect = 0.0;
  {
    std::vector<Eigen::MatrixXcd> c(modes);
    for (int m = 0; m < modes; ++m)
      c[m] = LadderOp::annihilator(m, modes).to_matrix();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(1 << modes, 1 << modes);
    for (int p = 0; p < modes; ++p)
      for (int q = 0; q < modes; ++q) {
        car_defect = std::max(
            car_defect, (c[p] * c[q].adjoint() + c[q].adjoint() * c[p] -
                         (p == q ? id : 0.0 * id))
                            .cwiseAbs()
                            .maxCoeff());
        car_defect = std::max(
            car_defect, (c[p] * c[q] + c[q] * c[p]).cwiseAbs().maxCoeff());
      }
  }

  const PauliSum h_spin = ghz3_hamiltonian(-1.0);
  const PauliSum h_fock = full_map(h_spin, default_penalty_weight(h_spin));
  const double sector_dev =
      (eig(h_spin).eigenvalues - sector_spectrum(h_fock, n)).cwiseAbs().maxCoeff();

  const StateVector psi = encode_state(ghz(3));
  const StateVector phi =
      encode_state(ghz(3, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), M_PI));
  const double tm_dev = two_matrix(psi).max_deviation(two_matrix(phi));
  const double overlap = psi.overlap(phi);

  const double seconds = elapsed(start);
  const bool pass = car_defect <= 1e-12 && sector_dev <= 1e-10 &&
                    tm_dev <= 1e-10 && overlap <= 1e-10 && seconds < 10.0;
  return {pass, fmt("car %.1e, sector %.1e, 2-matrix %.1e, overlap %.1e, %.1f s",
                    car_defect, sector_dev, tm_dev, overlap, seconds)};
}

// 8. Weighted-GHZ fixing identity: diag(a/b, b/a) reproduces the state to
//    1e-12 for 10 random weight pairs, while the transposed diagonal misses
//    by more than 0.1 at alpha^2 = 0.2.
Outcome criterion_8() {
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  double worst = 0.0;
  for (int sample = 0; sample < 10; ++sample) {
    const double a2 = u(rng);
    const WeightedGhzReport report = weighted_ghz3_operator(
        std::sqrt(a2), std::sqrt(1 - a2), -1.0, -1.0, -1.0);
    worst = std::max(worst, report.identity_residual);
  }
  const WeightedGhzReport printed = weighted_ghz3_operator(
      std::sqrt(0.2), std::sqrt(0.8), -1.0, -1.0, -1.0);
  const bool pass = worst <= 1e-12 && printed.flipped_identity_residual > 0.1;
  return {pass, fmt("corrected residual %.1e, transposed residual %.3f", worst,
                    printed.flipped_identity_residual)};
}

// 9. Randomized invariant suites under a fixed seed: Pauli group laws,
//    partial-trace behavior, phase-family marginals, Dicke permutation
//    invariance; at least 1000 cases inside 60 s.
Outcome criterion_9() {
  const auto start = Clock::now();
  std::mt19937_64 rng(99);
  long cases = 0;

  // Pauli group laws
  for (int sample = 0; sample < 700; ++sample) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const PauliString a = oracle::random_string(n, rng);
    const PauliString b = oracle::random_string(n, rng);
    const PauliString c = oracle::random_string(n, rng);
    const auto aa = multiply(a, a);
    if (!aa.string.is_identity() || aa.phase != std::complex<double>(1.0, 0.0))
      return {false, "involution failed"};
    const auto ab = multiply(a, b);
    const auto ab_c = multiply(ab.string, c);
    const auto bc = multiply(b, c);
    const auto a_bc = multiply(a, bc.string);
    if (ab_c.string != a_bc.string ||
        std::abs(ab.phase * ab_c.phase - bc.phase * a_bc.phase) > 1e-15)
      return {false, "associativity failed"};
    if (ab.string.weight() > a.weight() + b.weight())
      return {false, "weight subadditivity failed"};
    ++cases;
  }

  // partial trace: trace preservation, positivity, linearity
  for (int sample = 0; sample < 60; ++sample) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const StateVector a = oracle::random_state(n, rng);
    const StateVector b = oracle::random_state(n, rng);
    std::vector<int> keep;
    for (int q = 0; q < n; ++q)
      if (rng() % 2) keep.push_back(q);
    if (keep.empty()) keep.push_back(0);
    if (static_cast<int>(keep.size()) == n) keep.pop_back();
    const DensityMatrix mix(0.5 * projector(a).matrix() + 0.5 * projector(b).matrix());
    const DensityMatrix r = partial_trace(mix, n, keep);
    if (std::abs(r.matrix().trace().real() - 1.0) > 1e-12)
      return {false, "partial trace lost trace"};
    if (r.min_eigenvalue() < -1e-10) return {false, "partial trace lost positivity"};
    const Eigen::MatrixXcd lin =
        0.5 * partial_trace(projector(a), n, keep).matrix() +
        0.5 * partial_trace(projector(b), n, keep).matrix();
    if ((r.matrix() - lin).cwiseAbs().maxCoeff() > 1e-12)
      return {false, "partial trace not linear"};
    ++cases;
  }

  // phase family: all k <= n-1 marginals agree across theta
  for (int n = 2; n <= 8; ++n) {
    const StateVector base = ghz(n, std::sqrt(0.4), std::sqrt(0.6), 0.0);
    for (double theta : {1.1, M_PI, 4.9}) {
      const StateVector rotated = ghz(n, std::sqrt(0.4), std::sqrt(0.6), theta);
      for (int k = 1; k <= n - 1; ++k) {
        if (rdm_max_deviation(k_rdms(base, k), k_rdms(rotated, k)) > 1e-13)
          return {false, fmt("phase family leak at n=%d k=%d", n, k)};
        ++cases;
      }
    }
  }

  // Dicke permutation invariance, as vectors
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i <= n; ++i) {
      const StateVector w = dicke(n, i);
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          if ((swap_pair(n, j, k).apply(w.amps()) - w.amps()).norm() > 1e-13)
            return {false, "Dicke permutation invariance failed"};
          ++cases;
        }
    }

  const double seconds = elapsed(start);
  const bool pass = cases >= 1000 && seconds < 60.0;
  return {pass, fmt("%ld randomized cases, %.1f s", cases, seconds)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"GHZ3 splitting Hamiltonian: non-degenerate first excited state at -2",
       criterion_1},
      {"GHZ3 vs pi partner: equal 2-RDMs, orthogonal, counterexample verdict",
       criterion_2},
      {"Bacon-Shor 3x3: two-fold ground space, codeword RDMs, certified coupling",
       criterion_3},
      {"shift-and-square: 20 random interior eigenpairs, 4-local PSD parents",
       criterion_4},
      {"tightness at k=2: GHZ4 counterexample at RDM order 3", criterion_5},
      {"Dicke suite: certified unique ground states for n=2..8, all weights",
       criterion_6},
      {"fermion transfer at n=3: CAR, sector spectrum, equal 2-matrices",
       criterion_7},
      {"weighted-GHZ diagonal identity and the transposed-diagonal discrepancy",
       criterion_8},
      {"randomized invariant suites (group laws, traces, phase family, Dicke)",
       criterion_9},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = elapsed(start);
    std::printf("[%s] %zu: %s  (%s; %.2f s)\n", outcome.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first.c_str(), outcome.detail.c_str(), seconds);
    if (!outcome.pass) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
