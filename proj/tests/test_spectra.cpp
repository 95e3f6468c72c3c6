#include <doctest.h>

#include <random>

#include "rdmlab/constructions.hpp"
#include "rdmlab/spectra.hpp"
#include "test_helpers.hpp"

using namespace rdmlab;

TEST_CASE("eig: single qubit, degenerate chain, swap") {
  const Spectrum z = eig(PauliSum::term(PauliString::single(1, 0, 'Z'), 1.0));
  CHECK(z.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(z.eigenvalues[1] == doctest::Approx(1.0));

  PauliSum chain(3);
  chain.add(PauliString::from_factors(3, {{0, 'Z'}, {1, 'Z'}}), -1.0);
  chain.add(PauliString::from_factors(3, {{1, 'Z'}, {2, 'Z'}}), -1.0);
  const Spectrum c = eig(chain);
  CHECK(c.eigenvalues[0] == doctest::Approx(-2.0));
  CHECK(c.eigenvalues[1] == doctest::Approx(-2.0));
  CHECK(c.eigenvalues[2] > -2.0 + 1e-9);

  const Spectrum s = eig(swap_pair(2, 0, 1));
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
  for (int i = 1; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(1.0));
}

TEST_CASE("eig: reconstruction and orthonormality") {
  std::mt19937_64 rng(3);
  for (int sample = 0; sample < 20; ++sample) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const PauliSum h = oracle::random_local_sum(n, 2, 6, rng);
    const Spectrum sp = eig(h);
    const Eigen::MatrixXcd rebuilt =
        sp.eigenvectors *
        sp.eigenvalues.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
        sp.eigenvectors.adjoint();
    const double scale = std::max(1.0, h.coeff_one_norm());
    REQUIRE((rebuilt - h.to_matrix()).cwiseAbs().maxCoeff() < 1e-10 * scale);
    REQUIRE((sp.eigenvectors.adjoint() * sp.eigenvectors -
             Eigen::MatrixXcd::Identity(1 << n, 1 << n))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    REQUIRE(sp.residual_bound <= 1e-10 * scale);
    for (int i = 1; i < sp.eigenvalues.size(); ++i)
      REQUIRE(sp.eigenvalues[i] >= sp.eigenvalues[i - 1]);
  }
}

TEST_CASE("eig: spectrum invariant under Pauli conjugation") {
  std::mt19937_64 rng(13);
  for (int sample = 0; sample < 10; ++sample) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const PauliSum h = oracle::random_local_sum(n, 2, 5, rng);
    const PauliString p = oracle::random_string(n, rng);
    // P T P = +-T per term, sign by (anti)commutation
    PauliSum conj(n);
    for (const auto& [t, c] : h.terms()) conj.add(t, commutes(p, t) ? c : -c);
    const Eigen::VectorXd a = eig(h).eigenvalues;
    const Eigen::VectorXd b = eig(conj).eigenvalues;
    REQUIRE((a - b).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("certify_nondegenerate_eigenstate: GHZ3 splitting") {
  const StateVector psi = ghz(3);

  const EigCertificate good = certify_nondegenerate_eigenstate(ghz3_hamiltonian(-1.0), psi);
  CHECK(good.pass);
  CHECK(good.eigenvalue == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(good.multiplicity == 1);
  CHECK(good.index_below == 1);  // first excited state
  CHECK(good.gap > 0.1);
  CHECK(good.fidelity >= 1.0 - 1e-10);

  const EigCertificate degenerate =
      certify_nondegenerate_eigenstate(ghz3_hamiltonian(0.0), psi);
  CHECK_FALSE(degenerate.pass);
  CHECK(degenerate.status == "DegenerateLevel");
  CHECK(degenerate.multiplicity == 2);

  std::mt19937_64 rng(7);
  const StateVector random = oracle::random_state(3, rng);
  CHECK_THROWS_AS(
      certify_nondegenerate_eigenstate(ghz3_hamiltonian(-1.0), random),
      NotEigenstateError);
}

TEST_CASE("certify_unique_ground_state") {
  // Dicke parent at a small positive coupling
  const EigCertificate dicke_cert =
      certify_unique_ground_state(dicke_parent(4, 2, 0.5), dicke(4, 2));
  CHECK(dicke_cert.pass);
  CHECK(dicke_cert.index_below == 0);
  CHECK(dicke_cert.gap > 0.0);

  // ferromagnetic chain: global flip symmetry, two-fold ground space
  PauliSum chain(4);
  for (int q = 0; q + 1 < 4; ++q)
    chain.add(PauliString::from_factors(4, {{q, 'Z'}, {q + 1, 'Z'}}), -1.0);
  const EigCertificate degenerate =
      certify_unique_ground_state(chain, StateVector::basis_state(4, 0));
  CHECK_FALSE(degenerate.pass);
  CHECK(degenerate.status == "GroundSpaceDegenerate");
  CHECK(degenerate.multiplicity == 2);

  // shifted square of a certified eigenpair becomes a unique ground state
  PauliSum shifted = ghz3_hamiltonian(-1.0);
  shifted.add(PauliString::identity(3), 2.0);  // h - (-2) I
  const EigCertificate squared =
      certify_unique_ground_state(shifted.squared(), ghz(3));
  CHECK(squared.pass);
  CHECK(squared.eigenvalue == doctest::Approx(0.0));
}

TEST_CASE("unique ground implies nondegenerate with index zero") {
  const PauliSum parent = dicke_parent(5, 2, 0.25);
  const StateVector w = dicke(5, 2);
  const EigCertificate ground = certify_unique_ground_state(parent, w);
  REQUIRE(ground.pass);
  const EigCertificate eigen = certify_nondegenerate_eigenstate(parent, w);
  CHECK(eigen.pass);
  CHECK(eigen.index_below == 0);
}

TEST_CASE("certificates are monotone in tol") {
  for (double tol : {1e-10, 1e-8, 1e-6}) {
    const EigCertificate cert =
        certify_nondegenerate_eigenstate(ghz3_hamiltonian(-1.0), ghz(3), tol);
    CHECK(cert.pass);
  }
}

TEST_CASE("eigenspace_dimension") {
  PauliSum z0(2);
  z0.add(PauliString::single(2, 0, 'Z'), 1.0);
  CHECK(eigenspace_dimension(z0, 1.0, 1e-9) == 2);
  CHECK(eigenspace_dimension(z0, -1.0, 1e-9) == 2);

  CHECK(eigenspace_dimension(ghz3_hamiltonian(-1.0), -2.0, 1e-9) == 1);
  CHECK(eigenspace_dimension(ghz3_hamiltonian(0.0), -2.0, 1e-9) == 2);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(certify_nondegenerate_eigenstate(ghz3_hamiltonian(-1.0), ghz(4)),
                  Error);
}
