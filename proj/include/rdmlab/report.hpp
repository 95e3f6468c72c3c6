#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rdmlab/determinacy.hpp"

namespace rdmlab {

inline constexpr const char* kReportFormat = "rdmlab/1";

struct RunOptions {
  double tol = 1e-10;            // eigenstate certification tolerance
  double rdm_tol = 1e-10;        // marginal deviation tolerance
  double distinctness = 1e-6;    // state distinctness threshold
  std::uint64_t seed = 1;        // fixes every randomized path

  DeterminacyTolerances determinacy() const {
    return DeterminacyTolerances{tol, rdm_tol, distinctness};
  }
};

/// One command execution: parameters echoed, evidence embedded, verdict
/// derived from the evidence alone.  Reports are deterministic for fixed
/// inputs and seed, except for timing_seconds.
struct RunReport {
  std::string command;
  nlohmann::json parameters;
  nlohmann::json artifacts;
  bool pass = false;
  double timing_seconds = 0.0;

  nlohmann::json to_json() const;
  std::string human() const;
};

/// Reproduces the three-qubit splitting construction end to end: the
/// Hamiltonian, the eigenstate certificate, and the phase-partner RDM check.
RunReport run_ghz3(std::optional<double> c, const RunOptions& opt = {});

/// The 3x3 compass-model code: two-fold ground degeneracy, equal codeword
/// 2-RDMs, and a certified splitting coupling.
RunReport run_bacon_shor(double jx, double jz, std::optional<double> c,
                         const RunOptions& opt = {});

/// Unique-ground-state certificates for Dicke states; i < 0 runs all
/// weights 0..n.
RunReport run_dicke(int n, int i, std::optional<double> c,
                    const RunOptions& opt = {});

/// Even-n GHZ construction with the (n-1)-RDM tightness check.
RunReport run_ghz_n(int n, std::optional<double> c, const RunOptions& opt = {});

/// Qubit-to-fermion transfer of a counterexample pair; example is "ghz3" or
/// "weighted".
RunReport run_fermion(const std::string& example, std::optional<double> penalty,
                      const RunOptions& opt = {});

/// Shift-and-square certification of an arbitrary (hamiltonian, state) pair.
RunReport run_square(const PauliSum& h, const StateVector& psi,
                     const RunOptions& opt = {});

/// Randomized search for a Hermitian k-local parent with the given state as
/// a certified non-degenerate eigenstate.
RunReport run_parent_search(const StateVector& psi, int k, int trials,
                            const RunOptions& opt = {});

/// Marginal comparison of two states at RDM order k.
RunReport run_rdm_compare(const StateVector& a, const StateVector& b, int k,
                          const RunOptions& opt = {});

}  // namespace rdmlab
