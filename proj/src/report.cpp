#include "rdmlab/report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "rdmlab/fermion.hpp"
#include "rdmlab/io.hpp"

namespace rdmlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::json scan_json(const CouplingChoice& choice) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : choice.scanned)
    points.push_back({{"c", p.c},
                      {"pass", p.pass},
                      {"status", p.status},
                      {"gap", p.gap},
                      {"eigenvalue", p.eigenvalue},
                      {"multiplicity", p.multiplicity}});
  return {{"chosen_c", choice.c}, {"points", std::move(points)}};
}

void render(const nlohmann::json& node, std::ostream& out, int indent) {
  const std::string pad(2 * indent, ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value[0].is_object() || value[0].is_array()))) {
        out << pad << key << ":\n";
        render(value, out, indent + 1);
      } else if (value.is_string() &&
                 value.get<std::string>().find('\n') != std::string::npos) {
        out << pad << key << ": |\n";
        std::istringstream lines(value.get<std::string>());
        std::string line;
        while (std::getline(lines, line)) out << pad << "  " << line << '\n';
      } else {
        out << pad << key << ": " << value.dump() << '\n';
      }
    }
  } else if (node.is_array()) {
    for (const auto& value : node) {
      if (value.is_object() || value.is_array()) {
        out << pad << "-\n";
        render(value, out, indent + 1);
      } else {
        out << pad << "- " << value.dump() << '\n';
      }
    }
  } else {
    out << pad << node.dump() << '\n';
  }
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int j = 1; j <= k; ++j) v = v * (n - k + j) / j;
  return v;
}

// One Dicke weight: certified coupling (scanned or given) plus the literal
// parent's own ground-state certificate.
nlohmann::json dicke_instance(int n, int i, std::optional<double> c_arg,
                              const RunOptions& opt, bool& pass) {
  const StateVector psi = dicke(n, i);
  nlohmann::json entry{{"i", i}};
  double c = 0.0;
  try {
    if (c_arg) {
      c = *c_arg;
    } else {
      // Shift the swap part so psi sits in the kernel; the certificate is
      // unchanged because the shift is a multiple of the identity.
      const PauliSum h0 = dicke_h0(n, i).squared();
      PauliSum h1 = PauliSum::identity(n, binomial(n, 2));
      h1 -= swap_sum(n);
      const CouplingChoice choice =
          choose_coupling(h0, h1, psi, CouplingMode::Ground, opt.tol);
      c = choice.c;
      entry["scan"] = scan_json(choice);
    }
    const PauliSum parent = dicke_parent(n, i, c);
    const EigCertificate cert = certify_unique_ground_state(parent, psi, opt.tol);
    entry["c"] = c;
    entry["parent_locality"] = parent.locality();
    entry["parent"] = format_pauli_sum(parent);
    entry["certificate"] = certificate_json(cert);
    entry["pass"] = cert.pass && c > 0.0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoValidCoupling &&
        e.code() != ErrorCode::InvalidArgument)
      throw;
    entry["error"] = error_code_name(e.code());
    entry["message"] = e.what();
    entry["pass"] = false;
  }
  pass = pass && entry["pass"].get<bool>();
  return entry;
}

}  // namespace

nlohmann::json RunReport::to_json() const {
  return {{"format", kReportFormat}, {"command", command},
          {"parameters", parameters}, {"artifacts", artifacts},
          {"pass", pass},             {"timing_seconds", timing_seconds}};
}

std::string RunReport::human() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  out << "verdict: " << (pass ? "PASS" : "FAIL") << '\n';
  out << "parameters:\n";
  render(parameters, out, 1);
  out << "artifacts:\n";
  render(artifacts, out, 1);
  out << "timing_seconds: " << timing_seconds << '\n';
  return out.str();
}

RunReport run_ghz3(std::optional<double> c_arg, const RunOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "ghz3";
  report.parameters = {{"c", c_arg ? nlohmann::json(*c_arg) : nlohmann::json("auto")},
                       {"tol", opt.tol},
                       {"rdm_tol", opt.rdm_tol},
                       {"distinctness", opt.distinctness}};

  const StateVector psi = ghz(3);
  const StateVector phi = ghz(3, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), M_PI);
  PauliSum h0(3);
  h0.add(PauliString::from_factors(3, {{0, 'Z'}, {1, 'Z'}}), -1.0);
  h0.add(PauliString::from_factors(3, {{1, 'Z'}, {2, 'Z'}}), -1.0);
  const SplitPair split = split_logical(
      PauliString::from_factors(3, {{0, 'X'}, {1, 'X'}, {2, 'X'}}), psi, 1);

  double c = 0.0;
  if (c_arg) {
    c = *c_arg;
  } else {
    const CouplingChoice choice =
        choose_coupling(h0, split.splitting_term, psi, CouplingMode::Eigenstate, opt.tol);
    c = choice.c;
    report.artifacts["scan"] = scan_json(choice);
  }
  const PauliSum h = ghz3_hamiltonian(c);
  const DeterminacyReport vc = verify_counterexample(psi, phi, h, 2, opt.determinacy());

  report.artifacts["hamiltonian"] = format_pauli_sum(h);
  report.artifacts["c"] = c;
  report.artifacts["split"] = {{"a", split.a.to_string()},
                               {"b", split.b.to_string()},
                               {"term", format_pauli_sum(split.splitting_term)}};
  report.artifacts["counterexample"] = vc.evidence;
  report.pass = vc.pass;
  report.timing_seconds = seconds_since(start);
  return report;
}

RunReport run_bacon_shor(double jx, double jz, std::optional<double> c_arg,
                         const RunOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "bacon-shor";
  report.parameters = {{"jx", jx},
                       {"jz", jz},
                       {"c", c_arg ? nlohmann::json(*c_arg) : nlohmann::json("auto")},
                       {"tol", opt.tol},
                       {"rdm_tol", opt.rdm_tol}};

  const PauliSum h0 = bacon_shor_h0(jx, jz);
  const BaconShorGroundSpace gs = bacon_shor_ground_space(jx, jz);
  report.artifacts["h0"] = format_pauli_sum(h0);
  report.artifacts["ground"] = {{"energy", gs.ground_energy},
                                {"dimension", gs.ground_dim},
                                {"gap_above", gs.gap_above}};
  if (gs.ground_dim != 2) {
    report.pass = false;
    report.timing_seconds = seconds_since(start);
    return report;
  }

  const StateVector& c0 = *gs.c0;
  const StateVector& c1 = *gs.c1;
  const double dev = rdm_max_deviation(k_rdms(c0, 2), k_rdms(c1, 2));
  const SplitPair split = split_logical(bacon_shor_logical_z(), c0, 1);

  double c = 0.0;
  if (c_arg) {
    c = *c_arg;
  } else {
    const CouplingChoice choice = choose_coupling(h0, split.splitting_term, c0,
                                                  CouplingMode::Eigenstate, opt.tol);
    c = choice.c;
    report.artifacts["scan"] = scan_json(choice);
  }
  const PauliSum h = h0 + c * split.splitting_term;
  const DeterminacyReport vc = verify_counterexample(c0, c1, h, 2, opt.determinacy());

  report.artifacts["codeword_rdm_deviation"] = dev;
  report.artifacts["split"] = {{"a", split.a.to_string()},
                               {"b", split.b.to_string()},
                               {"term", format_pauli_sum(split.splitting_term)}};
  report.artifacts["c"] = c;
  report.artifacts["hamiltonian"] = format_pauli_sum(h);
  report.artifacts["counterexample"] = vc.evidence;
  report.pass = gs.gap_above > 1e-6 && dev <= opt.rdm_tol && vc.pass;
  report.timing_seconds = seconds_since(start);
  return report;
}

RunReport run_dicke(int n, int i, std::optional<double> c_arg,
                    const RunOptions& opt) {
  const auto start = Clock::now();
  if (n < 2 || n > kDenseLimit)
    fail(ErrorCode::InvalidArgument, "dicke run needs 2 <= n <= dense cap");
  if (i >= 0 && i > n)
    fail(ErrorCode::InvalidArgument, "Dicke weight out of range");
  RunReport report;
  report.command = "dicke";
  report.parameters = {{"n", n},
                       {"i", i < 0 ? nlohmann::json("all") : nlohmann::json(i)},
                       {"c", c_arg ? nlohmann::json(*c_arg) : nlohmann::json("auto")},
                       {"tol", opt.tol}};

  bool all_pass = true;
  nlohmann::json instances = nlohmann::json::array();
  if (i < 0) {
    for (int w = 0; w <= n; ++w)
      instances.push_back(dicke_instance(n, w, c_arg, opt, all_pass));
  } else {
    instances.push_back(dicke_instance(n, i, c_arg, opt, all_pass));
  }
  report.artifacts["instances"] = std::move(instances);
  report.pass = all_pass;
  report.timing_seconds = seconds_since(start);
  return report;
}

RunReport run_ghz_n(int n, std::optional<double> c_arg, const RunOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "ghz-n";
  report.parameters = {{"n", n},
                       {"c", c_arg ? nlohmann::json(*c_arg) : nlohmann::json("auto")},
                       {"tol", opt.tol},
                       {"rdm_tol", opt.rdm_tol}};

  const StateVector psi = ghz(n);
  const StateVector phi = ghz(n, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), M_PI);
  const PauliSum h0 = ghz_n_hamiltonian(n, 0.0);
  PauliSum h1 = ghz_n_hamiltonian(n, 1.0);
  h1 -= h0;

  double c = 0.0;
  if (c_arg) {
    c = *c_arg;
  } else {
    const CouplingChoice choice =
        choose_coupling(h0, h1, psi, CouplingMode::Eigenstate, opt.tol);
    c = choice.c;
    report.artifacts["scan"] = scan_json(choice);
  }
  const PauliSum h = ghz_n_hamiltonian(n, c);
  const DeterminacyReport vc = verify_counterexample(psi, phi, h, n - 1, opt.determinacy());

  report.artifacts["hamiltonian"] = format_pauli_sum(h);
  report.artifacts["c"] = c;
  report.artifacts["locality"] = h.locality();
  report.artifacts["rdm_order"] = n - 1;
  report.artifacts["counterexample"] = vc.evidence;
  report.pass = vc.pass && h.locality() == n / 2;
  report.timing_seconds = seconds_since(start);
  return report;
}

RunReport run_fermion(const std::string& example, std::optional<double> penalty_arg,
                      const RunOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "fermion";
  report.parameters = {
      {"example", example},
      {"penalty", penalty_arg ? nlohmann::json(*penalty_arg) : nlohmann::json("auto")},
      {"tol", opt.tol},
      {"rdm_tol", opt.rdm_tol},
      {"seed", opt.seed}};

  PauliSum h_spin(3);
  StateVector psi = ghz(3);
  StateVector phi = ghz(3, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), M_PI);
  if (example == "ghz3") {
    h_spin = ghz3_hamiltonian(-1.0);
  } else if (example == "weighted") {
    const double alpha = std::sqrt(0.2), beta = std::sqrt(0.8);
    psi = ghz(3, alpha, beta, 0.0);
    phi = ghz(3, alpha, beta, M_PI);
    const ParentSearchResult search =
        hermitian_parent_search(psi, 2, 64, opt.seed, opt.tol);
    report.artifacts["parent_search"] = {{"nullspace_dim", search.nullspace_dim},
                                         {"trials_used", search.trials_used},
                                         {"found", search.parent.has_value()}};
    if (!search.parent) {
      report.pass = false;
      report.timing_seconds = seconds_since(start);
      return report;
    }
    h_spin = *search.parent;
    report.artifacts["parent_search"]["certificate"] =
        certificate_json(*search.certificate);
  } else {
    fail(ErrorCode::InvalidArgument,
         "unknown fermion example '" + example + "' (want ghz3 or weighted)");
  }

  const int n = 3, modes = 2 * n;
  const double lambda = penalty_arg ? *penalty_arg : default_penalty_weight(h_spin);
  if (!(lambda > 0.0))
    fail(ErrorCode::InvalidArgument, "penalty weight must be positive");

  // Canonical anticommutation relations as dense identities.
  double car_defect = 0.0;
  {
    std::vector<Eigen::MatrixXcd> c(modes), cd(modes);
    for (int m = 0; m < modes; ++m) {
      c[m] = LadderOp::annihilator(m, modes).to_matrix();
      cd[m] = c[m].adjoint();
    }
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(1 << modes, 1 << modes);
    for (int p = 0; p < modes; ++p)
      for (int q = 0; q < modes; ++q) {
        const Eigen::MatrixXcd acc = c[p] * cd[q] + cd[q] * c[p];
        car_defect = std::max(car_defect,
                              (acc - (p == q ? id : 0.0 * id)).cwiseAbs().maxCoeff());
        car_defect = std::max(
            car_defect, (c[p] * c[q] + c[q] * c[p]).cwiseAbs().maxCoeff());
      }
  }

  const PauliSum mapped = map_hamiltonian(h_spin);
  const PauliSum h_fock = full_map(h_spin, lambda);

  // Sector eigenvalue of a single penalty projector factor pair, recorded so
  // the sign convention is explicit in the report.
  const double sector_penalty_value = [&] {
    const Eigen::VectorXcd enc0 = encode_vector(psi.amps(), n);
    const Eigen::VectorXcd p0 = penalty(0, n).apply(enc0);
    return p0.dot(enc0).real();
  }();

  const Eigen::VectorXd spin_eigs = eig(h_spin).eigenvalues;
  const Eigen::VectorXd sector_eigs = sector_spectrum(h_fock, n);
  const double sector_dev = (spin_eigs - sector_eigs).cwiseAbs().maxCoeff();

  // Penalty dominance: everything outside the sector sits above the sector.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> full_es(h_fock.to_matrix(),
                                                          Eigen::EigenvaluesOnly);
  std::vector<double> full_eigs(full_es.eigenvalues().data(),
                                full_es.eigenvalues().data() + (1 << modes));
  for (int i = 0; i < sector_eigs.size(); ++i) {
    auto it = std::min_element(full_eigs.begin(), full_eigs.end(),
                               [&](double a, double b) {
                                 return std::abs(a - sector_eigs[i]) <
                                        std::abs(b - sector_eigs[i]);
                               });
    full_eigs.erase(it);
  }
  const double min_outside = *std::min_element(full_eigs.begin(), full_eigs.end());
  const double max_sector = sector_eigs.maxCoeff();

  const TwoMatrix tm_psi = two_matrix(encode_state(psi));
  const TwoMatrix tm_phi = two_matrix(encode_state(phi));
  const double tm_dev = tm_psi.max_deviation(tm_phi);
  const double overlap = encode_state(psi).overlap(encode_state(phi));
  // The symmetric pair is orthogonal; the weighted pair is merely distinct,
  // with overlap |alpha^2 - beta^2|.
  const double overlap_threshold =
      example == "ghz3" ? 1e-10 : 1.0 - opt.distinctness;

  report.artifacts["hamiltonian_spin"] = format_pauli_sum(h_spin);
  report.artifacts["penalty_weight"] = lambda;
  report.artifacts["car_defect"] = car_defect;
  report.artifacts["mapped_locality"] = mapped.locality();
  report.artifacts["sector_penalty_eigenvalue"] = sector_penalty_value;
  report.artifacts["sector_spectrum_deviation"] = sector_dev;
  report.artifacts["penalty_dominance"] = {{"max_sector", max_sector},
                                           {"min_outside", min_outside}};
  report.artifacts["two_matrix_deviation"] = tm_dev;
  report.artifacts["encoded_overlap"] = overlap;
  report.artifacts["overlap_threshold"] = overlap_threshold;
  report.artifacts["two_matrix_trace"] = tm_psi.trace();
  report.artifacts["two_matrix"] = two_matrix_json(tm_psi);

  report.pass = car_defect <= 1e-12 && sector_dev <= 1e-10 &&
                min_outside > max_sector && mapped.locality() <= 4 &&
                tm_dev <= opt.rdm_tol && overlap <= overlap_threshold;
  report.timing_seconds = seconds_since(start);
  return report;
}

RunReport run_square(const PauliSum& h, const StateVector& psi,
                     const RunOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "square";
  report.parameters = {{"tol", opt.tol}, {"n", psi.n()}};
  const SquaredParent sp = squared_parent(h, psi, opt.determinacy());
  report.artifacts["hamiltonian"] = format_pauli_sum(h);
  report.artifacts["parent"] = format_pauli_sum(sp.parent);
  report.artifacts["result"] = sp.report.evidence;
  report.pass = sp.report.pass;
  report.timing_seconds = seconds_since(start);
  return report;
}

RunReport run_parent_search(const StateVector& psi, int k, int trials,
                            const RunOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "parent-search";
  report.parameters = {
      {"n", psi.n()}, {"k", k}, {"trials", trials}, {"seed", opt.seed},
      {"tol", opt.tol}};
  const ParentSearchResult result =
      hermitian_parent_search(psi, k, trials, opt.seed, opt.tol);
  report.artifacts["nullspace_dim"] = result.nullspace_dim;
  report.artifacts["basis_size"] = result.basis_size;
  report.artifacts["trials_used"] = result.trials_used;
  report.artifacts["found"] = result.parent.has_value();
  if (result.parent) {
    report.artifacts["hamiltonian"] = format_pauli_sum(*result.parent);
    report.artifacts["certificate"] = certificate_json(*result.certificate);
    report.artifacts["locality"] = result.parent->locality();
  }
  report.pass = result.parent.has_value();
  report.timing_seconds = seconds_since(start);
  return report;
}

RunReport run_rdm_compare(const StateVector& a, const StateVector& b, int k,
                          const RunOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "rdm-compare";
  report.parameters = {{"n", a.n()}, {"k", k}, {"rdm_tol", opt.rdm_tol}};
  const double dev = rdm_max_deviation(k_rdms(a, k), k_rdms(b, k));
  report.artifacts["rdm_max_deviation"] = dev;
  report.artifacts["overlap"] = a.overlap(b);
  report.pass = dev <= opt.rdm_tol;
  report.timing_seconds = seconds_since(start);
  return report;
}

}  // namespace rdmlab
