// Command-line driver.  Talks to the core exclusively through the C API in
// rdmlab/rdmlab.h; every command prints a human summary to stdout, optionally
// writes the JSON report, and exits 0 on a passing verdict, 1 on a failing
// one, 2 on input errors, 3 on numerical failures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rdmlab/rdmlab.h"

namespace {

struct CommonArgs {
  rdml_run_options opt;
  std::string json_path;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--tol", args.opt.tol,
                  "eigenstate certification tolerance (default 1e-10)");
  cmd->add_option("--rdm-tol", args.opt.rdm_tol,
                  "RDM deviation tolerance (default 1e-10)");
  cmd->add_option("--distinctness", args.opt.distinctness,
                  "distinctness threshold on |<psi|phi>| (default 1e-6)");
  cmd->add_option("--seed", args.opt.seed, "seed for randomized paths (default 1)");
  cmd->add_option("--json", args.json_path, "write the JSON report to this path");
  cmd->add_flag("--quiet", args.quiet, "suppress the human-readable summary");
}

// "auto" or a real number.
struct Coupling {
  double value = 0.0;
  bool is_auto = true;
};

void add_coupling(CLI::App* cmd, Coupling& c, const std::string& name,
                  const std::string& desc) {
  cmd->add_option_function<std::string>(
         name,
         [&c, name](const std::string& text) {
           if (text == "auto") {
             c.is_auto = true;
             return;
           }
           try {
             std::size_t pos = 0;
             c.value = std::stod(text, &pos);
             if (pos != text.size()) throw std::invalid_argument(text);
             c.is_auto = false;
           } catch (const std::exception&) {
             throw CLI::ValidationError(name + ": expected a number or 'auto'");
           }
         },
         desc)
      ->default_str("auto");
}

int finish(rdml_status status, rdml_report* report, const CommonArgs& args) {
  if (status != RDML_OK) {
    std::cerr << "error: " << rdml_last_error() << "\n";
    return rdml_status_exit_code(status);
  }
  if (!args.json_path.empty()) {
    char* json = nullptr;
    if (rdml_report_json(report, &json) == RDML_OK) {
      std::ofstream out(args.json_path, std::ios::binary);
      if (out) {
        out << json << "\n";
      } else {
        std::cerr << "error: cannot write " << args.json_path << "\n";
        rdml_string_free(json);
        rdml_report_free(report);
        return 2;
      }
      rdml_string_free(json);
    }
  }
  if (!args.quiet) {
    char* human = nullptr;
    if (rdml_report_human(report, &human) == RDML_OK) {
      std::cout << human;
      rdml_string_free(human);
    }
  }
  const int code = rdml_report_exit_code(report);
  rdml_report_free(report);
  return code;
}

int load_state_or_fail(const std::string& path, rdml_state** out) {
  const rdml_status st = rdml_state_load(path.c_str(), out);
  if (st != RDML_OK) {
    std::cerr << "error: " << rdml_last_error() << "\n";
    return rdml_status_exit_code(st);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rdmlab: exact-diagonalization certificates for the determination of "
      "eigenstates by their reduced density matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rdml_version()));

  CommonArgs args;
  rdml_run_options_init(&args.opt);

  // ghz3
  auto* ghz3 = app.add_subcommand(
      "ghz3", "three-qubit GHZ splitting construction and 2-RDM counterexample");
  Coupling ghz3_c;
  add_coupling(ghz3, ghz3_c, "--c", "splitting coupling (number or 'auto')");
  add_common(ghz3, args);

  // bacon-shor
  auto* bs = app.add_subcommand(
      "bacon-shor", "3x3 compass-model code: degeneracy, codeword RDMs, coupling");
  double jx = 1.0, jz = 1.0;
  bs->add_option("--jx", jx, "XX coupling strength (default 1)");
  bs->add_option("--jz", jz, "ZZ coupling strength (default 1)");
  Coupling bs_c;
  add_coupling(bs, bs_c, "--c", "splitting coupling (number or 'auto')");
  add_common(bs, args);

  // dicke
  auto* dk = app.add_subcommand("dicke",
                                "unique-ground-state certificates for Dicke states");
  int dicke_n = 4;
  std::string dicke_i = "all";
  dk->add_option("--n", dicke_n, "qubit count")->required();
  dk->add_option("--i", dicke_i, "excitation weight, integer or 'all' (default)");
  Coupling dk_c;
  add_coupling(dk, dk_c, "--c", "swap coupling (number or 'auto')");
  add_common(dk, args);

  // ghz-n
  auto* gn = app.add_subcommand(
      "ghz-n", "even-n GHZ construction with the (n-1)-RDM tightness check");
  int ghz_n_qubits = 4;
  gn->add_option("--n", ghz_n_qubits, "qubit count (even, >= 4)")->required();
  Coupling gn_c;
  add_coupling(gn, gn_c, "--c", "splitting coupling (number or 'auto')");
  add_common(gn, args);

  // fermion
  auto* fm = app.add_subcommand(
      "fermion", "qubit-to-fermion transfer of a counterexample pair");
  std::string example = "ghz3";
  fm->add_option("--example", example, "ghz3 or weighted (default ghz3)");
  Coupling fm_penalty;
  add_coupling(fm, fm_penalty, "--penalty",
               "single-occupancy penalty weight (number or 'auto')");
  add_common(fm, args);

  // square
  auto* sq = app.add_subcommand(
      "square", "shift-and-square parent certification of a (H, state) pair");
  std::string sq_h, sq_state;
  sq->add_option("--hamiltonian", sq_h, "Pauli-sum text file")->required();
  sq->add_option("--state", sq_state, "state JSON file")->required();
  add_common(sq, args);

  // parent-search
  auto* ps = app.add_subcommand(
      "parent-search", "randomized Hermitian k-local parent search for a state");
  std::string ps_state;
  int ps_k = 2, ps_trials = 64;
  ps->add_option("--state", ps_state, "state JSON file")->required();
  ps->add_option("--k", ps_k, "locality bound (default 2)");
  ps->add_option("--trials", ps_trials, "sample budget (default 64)");
  add_common(ps, args);

  // rdm-compare
  auto* rc = app.add_subcommand("rdm-compare",
                                "compare the k-RDM sets of two states");
  std::string rc_a, rc_b;
  int rc_k = 2;
  rc->add_option("--state-a", rc_a, "first state JSON file")->required();
  rc->add_option("--state-b", rc_b, "second state JSON file")->required();
  rc->add_option("--k", rc_k, "RDM order (default 2)");
  add_common(rc, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  rdml_report* report = nullptr;
  if (ghz3->parsed()) {
    const rdml_status st =
        rdml_run_ghz3(&args.opt, ghz3_c.value, ghz3_c.is_auto, &report);
    return finish(st, report, args);
  }

  if (bs->parsed()) {
    const rdml_status st =
        rdml_run_bacon_shor(&args.opt, jx, jz, bs_c.value, bs_c.is_auto, &report);
    return finish(st, report, args);
  }

  if (dk->parsed()) {
    int i = -1;
    if (dicke_i != "all") {
      try {
        std::size_t pos = 0;
        i = std::stoi(dicke_i, &pos);
        if (pos != dicke_i.size() || i < 0) throw std::invalid_argument(dicke_i);
      } catch (const std::exception&) {
        std::cerr << "error: --i expects a non-negative integer or 'all'\n";
        return 2;
      }
    }
    const rdml_status st =
        rdml_run_dicke(&args.opt, dicke_n, i, dk_c.value, dk_c.is_auto, &report);
    return finish(st, report, args);
  }

  if (gn->parsed()) {
    const rdml_status st =
        rdml_run_ghz_n(&args.opt, ghz_n_qubits, gn_c.value, gn_c.is_auto, &report);
    return finish(st, report, args);
  }

  if (fm->parsed()) {
    const rdml_status st = rdml_run_fermion(&args.opt, example.c_str(),
                                            fm_penalty.value, fm_penalty.is_auto,
                                            &report);
    return finish(st, report, args);
  }

  if (sq->parsed()) {
    rdml_hamiltonian* h = nullptr;
    const rdml_status hs = rdml_hamiltonian_load(sq_h.c_str(), &h);
    if (hs != RDML_OK) {
      std::cerr << "error: " << rdml_last_error() << "\n";
      return rdml_status_exit_code(hs);
    }
    rdml_state* psi = nullptr;
    if (int code = load_state_or_fail(sq_state, &psi)) {
      rdml_hamiltonian_free(h);
      return code;
    }
    const rdml_status st = rdml_run_square(&args.opt, h, psi, &report);
    rdml_state_free(psi);
    rdml_hamiltonian_free(h);
    return finish(st, report, args);
  }

  if (ps->parsed()) {
    rdml_state* psi = nullptr;
    if (int code = load_state_or_fail(ps_state, &psi)) return code;
    const rdml_status st =
        rdml_run_parent_search(&args.opt, psi, ps_k, ps_trials, &report);
    rdml_state_free(psi);
    return finish(st, report, args);
  }

  if (rc->parsed()) {
    rdml_state* a = nullptr;
    if (int code = load_state_or_fail(rc_a, &a)) return code;
    rdml_state* b = nullptr;
    if (int code = load_state_or_fail(rc_b, &b)) {
      rdml_state_free(a);
      return code;
    }
    const rdml_status st = rdml_run_rdm_compare(&args.opt, a, b, rc_k, &report);
    rdml_state_free(b);
    rdml_state_free(a);
    return finish(st, report, args);
  }

  return 2;
}
