#include <doctest.h>

#include <random>

#include "rdmlab/determinacy.hpp"
#include "test_helpers.hpp"

using namespace rdmlab;

TEST_CASE("verify_counterexample: GHZ3 against its pi partner") {
  const StateVector psi = ghz(3);
  const StateVector phi = ghz(3, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), M_PI);
  const PauliSum h = ghz3_hamiltonian(-1.0);

  const DeterminacyReport report = verify_counterexample(psi, phi, h, 2);
  CHECK(report.pass);
  CHECK(report.kind == "CounterexampleVerified");
  CHECK(report.k == 2);
  CHECK(report.evidence["overlap"].get<double>() <= 1e-10);
  CHECK(report.evidence["rdm_max_deviation"].get<double>() <= 1e-12);
  CHECK(report.evidence["certificate"]["multiplicity"] == 1);

  // locality above the RDM order is a precondition violation
  CHECK_THROWS_AS(verify_counterexample(psi, phi, h, 1), Error);
  // failing certificate (degenerate level) fails the report, not the call
  const DeterminacyReport degenerate =
      verify_counterexample(psi, phi, ghz3_hamiltonian(0.0), 2);
  CHECK_FALSE(degenerate.pass);
}

TEST_CASE("counterexample conditions (ii) and (iii) are symmetric") {
  std::mt19937_64 rng(41);
  const StateVector a = oracle::random_state(3, rng);
  const StateVector b = oracle::random_state(3, rng);
  CHECK(rdm_max_deviation(k_rdms(a, 2), k_rdms(b, 2)) ==
        doctest::Approx(rdm_max_deviation(k_rdms(b, 2), k_rdms(a, 2))));
  CHECK(a.overlap(b) == doctest::Approx(b.overlap(a)));
}

TEST_CASE("squared_parent: GHZ3 pair") {
  const auto [parent, report] = squared_parent(ghz3_hamiltonian(-1.0), ghz(3));
  CHECK(report.pass);
  CHECK(report.kind == "SquaredParentCertified");
  CHECK(parent.locality() <= 4);
  CHECK(report.evidence["parent_certificate"]["index_below"] == 0);
  // the parent ground space inherits the source level's multiplicity
  CHECK(report.evidence["parent_ground_dimension"] == 1);
  CHECK(report.evidence["parent_min_eigenvalue"].get<double>() ==
        doctest::Approx(0.0));

  // parent spectrum is the shifted square of the source spectrum
  const Eigen::VectorXd src = eig(ghz3_hamiltonian(-1.0)).eigenvalues;
  Eigen::VectorXd squared(src.size());
  for (int i = 0; i < src.size(); ++i)
    squared[i] = (src[i] + 2.0) * (src[i] + 2.0);
  std::sort(squared.data(), squared.data() + squared.size());
  const Eigen::VectorXd parent_eigs = eig(parent).eigenvalues;
  CHECK((squared - parent_eigs).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(parent_eigs.minCoeff() >= -1e-9);
}

TEST_CASE("squared_parent: degenerate level reports both dimensions") {
  PauliSum chain(3);
  chain.add(PauliString::from_factors(3, {{0, 'Z'}, {1, 'Z'}}), -1.0);
  chain.add(PauliString::from_factors(3, {{1, 'Z'}, {2, 'Z'}}), -1.0);
  const auto [parent, report] = squared_parent(chain, ghz(3));
  CHECK_FALSE(report.pass);
  CHECK(report.evidence["status"] == "DegenerateLevel");
  CHECK(report.evidence["eigenspace_dimension"] == 2);
  CHECK(report.evidence["parent_ground_dimension"] == 2);

  std::mt19937_64 rng(5);
  CHECK_THROWS_AS(squared_parent(chain, oracle::random_state(3, rng)),
                  NotEigenstateError);
}

TEST_CASE("squared_parent: random interior eigenpairs certify") {
  std::mt19937_64 rng(61);
  int done = 0;
  while (done < 5) {
    const PauliSum h = oracle::random_local_sum(4, 2, 6, rng);
    const Spectrum sp = eig(h);
    // pick the interior level with the widest margin to its neighbors
    int best = -1;
    double best_gap = 0.0;
    for (int i = 1; i + 1 < sp.eigenvalues.size(); ++i) {
      const double margin = std::min(sp.eigenvalues[i] - sp.eigenvalues[i - 1],
                                     sp.eigenvalues[i + 1] - sp.eigenvalues[i]);
      if (margin > best_gap) {
        best_gap = margin;
        best = i;
      }
    }
    if (best < 0 || best_gap < 1e-2) continue;
    ++done;
    const StateVector psi(4, sp.eigenvectors.col(best));
    const auto [parent, report] = squared_parent(h, psi);
    REQUIRE(report.pass);
    REQUIRE(parent.locality() <= 4);
  }
}

TEST_CASE("uda_via_parent: Dicke states, including the W state") {
  const DeterminacyReport w22 = uda_via_parent(dicke(4, 2), dicke_parent(4, 2, 0.5));
  CHECK(w22.pass);
  CHECK(w22.k == 2);

  const DeterminacyReport w1 = uda_via_parent(dicke(5, 1), dicke_parent(5, 1, 0.5));
  CHECK(w1.pass);
  CHECK(w1.k == 2);
}

TEST_CASE("uda_via_parent: no sampled 2-local parent certifies GHZ3") {
  // statistical corroboration of the phase-family obstruction: parents that
  // do carry GHZ3 as a non-degenerate eigenstate never have it as the unique
  // ground state
  const StateVector psi = ghz(3);
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ParentSearchResult search = hermitian_parent_search(psi, 2, 32, seed);
    if (!search.parent) continue;
    ++found;
    const DeterminacyReport report = uda_via_parent(psi, *search.parent);
    REQUIRE_FALSE(report.pass);
  }
  CHECK(found >= 3);
}

TEST_CASE("tightness_suite") {
  const DeterminacyReport t2 = tightness_suite(2);
  CHECK(t2.pass);
  CHECK(t2.evidence["n"] == 4);
  CHECK(t2.evidence["hamiltonian_locality"] == 2);
  CHECK(t2.evidence["rdm_order"] == 3);

  const DeterminacyReport t3 = tightness_suite(3);
  CHECK(t3.pass);
  CHECK(t3.evidence["n"] == 6);
  CHECK(t3.evidence["hamiltonian_locality"] == 3);
  CHECK(t3.evidence["rdm_order"] == 5);

  CHECK_THROWS_AS(tightness_suite(1), Error);
}

TEST_CASE("dicke parents: degenerate at c = 0, gap grows with c") {
  // without the swap term the kernel of H0^2 is the whole S_z level
  const StateVector w = dicke(4, 2);
  const EigCertificate bare =
      certify_unique_ground_state(dicke_h0(4, 2).squared(), w);
  CHECK_FALSE(bare.pass);
  CHECK(bare.status == "GroundSpaceDegenerate");
  CHECK(bare.multiplicity == 6);  // C(4,2) weight-2 strings

  double previous = 0.0;
  for (double c : {0.125, 0.25, 0.5}) {
    const EigCertificate cert = certify_unique_ground_state(dicke_parent(4, 2, c), w);
    REQUIRE(cert.pass);
    REQUIRE(cert.gap >= previous - 1e-12);
    previous = cert.gap;
  }
}
