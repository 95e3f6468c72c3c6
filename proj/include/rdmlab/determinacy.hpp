#pragma once

#include <string>

#include <json.hpp>

#include "rdmlab/constructions.hpp"
#include "rdmlab/pauli.hpp"
#include "rdmlab/spectra.hpp"
#include "rdmlab/state.hpp"

namespace rdmlab {

/// Default tolerances for the determinacy verdicts.  Every number that
/// enters a pass/fail decision is also recorded in the evidence block, so a
/// report can be rechecked offline.
struct DeterminacyTolerances {
  double eig = 1e-10;           // eigenstate certification
  double rdm = 1e-10;           // marginal deviation
  double distinctness = 1e-6;   // |<psi|phi>| <= 1 - distinctness
};

struct DeterminacyReport {
  std::string kind;  // CounterexampleVerified | UdaCertified |
                     // SquaredParentCertified | TightnessVerified
  int k = 0;
  bool pass = false;
  nlohmann::json evidence;
};

nlohmann::json certificate_json(const EigCertificate& cert);

/// Checks that psi is a certified non-degenerate eigenstate of the k-local h
/// while phi is a genuinely different state with identical k-RDMs.
DeterminacyReport verify_counterexample(const StateVector& psi,
                                        const StateVector& phi, const PauliSum& h,
                                        int k,
                                        const DeterminacyTolerances& tol = {});

/// The shift-and-square construction: parent = (h - <psi|h|psi> I)^2.
/// For a non-degenerate level the parent certifies psi as its unique ground
/// state at locality <= 2 * locality(h); for a degenerate level the report
/// fails with status DegenerateLevel and records that the parent ground
/// space has the level's dimension.
struct SquaredParent {
  PauliSum parent;
  DeterminacyReport report;
};

SquaredParent squared_parent(const PauliSum& h, const StateVector& psi,
                             const DeterminacyTolerances& tol = {});

/// UDA via the unique-ground-state sufficient condition; k is the parent's
/// locality.
DeterminacyReport uda_via_parent(const StateVector& psi, const PauliSum& parent,
                                 const DeterminacyTolerances& tol = {});

/// End-to-end witness that the doubled locality bound cannot be improved:
/// the 2k-qubit GHZ state is a certified non-degenerate eigenstate of a
/// k-local Hamiltonian yet shares all (2k-1)-RDMs with its theta = pi
/// partner.
DeterminacyReport tightness_suite(int k, const DeterminacyTolerances& tol = {});

}  // namespace rdmlab
