#include "rdmlab/rdmlab.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "rdmlab/io.hpp"
#include "rdmlab/report.hpp"

struct rdml_hamiltonian {
  rdmlab::PauliSum sum;
};

struct rdml_state {
  rdmlab::StateVector state;
};

struct rdml_report {
  rdmlab::RunReport report;
};

namespace {

thread_local std::string g_last_error;

rdml_status status_of(const rdmlab::Error& e) {
  switch (e.code()) {
    case rdmlab::ErrorCode::InvalidArgument: return RDML_ERR_ARGUMENT;
    case rdmlab::ErrorCode::DimensionMismatch: return RDML_ERR_DIMENSION;
    case rdmlab::ErrorCode::ParseError: return RDML_ERR_PARSE;
    case rdmlab::ErrorCode::IoError: return RDML_ERR_IO;
    case rdmlab::ErrorCode::DenseLimitExceeded: return RDML_ERR_DENSE_LIMIT;
    case rdmlab::ErrorCode::NotEigenstate: return RDML_ERR_NOT_EIGENSTATE;
    case rdmlab::ErrorCode::NoValidCoupling: return RDML_ERR_NO_VALID_COUPLING;
    case rdmlab::ErrorCode::NumericalFailure: return RDML_ERR_NUMERICAL;
  }
  return RDML_ERR_INTERNAL;
}

template <typename Fn>
rdml_status guarded(Fn&& fn) {
  try {
    fn();
    return RDML_OK;
  } catch (const rdmlab::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RDML_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RDML_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rdml_status require(bool ok, const char* message) {
  if (ok) return RDML_OK;
  g_last_error = message;
  return RDML_ERR_ARGUMENT;
}

rdmlab::RunOptions convert(const rdml_run_options* opt) {
  rdmlab::RunOptions out;
  if (opt) {
    out.tol = opt->tol;
    out.rdm_tol = opt->rdm_tol;
    out.distinctness = opt->distinctness;
    out.seed = opt->seed;
  }
  return out;
}

std::optional<double> maybe(double value, int is_auto) {
  if (is_auto) return std::nullopt;
  return value;
}

}  // namespace

extern "C" {

const char* rdml_version(void) { return "0.1.0"; }

const char* rdml_last_error(void) { return g_last_error.c_str(); }

void rdml_string_free(char* s) { delete[] s; }

rdml_status rdml_hamiltonian_parse(const char* text, rdml_hamiltonian** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] {
    *out = new rdml_hamiltonian{rdmlab::parse_pauli_sum(text)};
  });
}

rdml_status rdml_hamiltonian_load(const char* path, rdml_hamiltonian** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] {
    *out = new rdml_hamiltonian{rdmlab::load_pauli_sum(path)};
  });
}

rdml_status rdml_hamiltonian_format(const rdml_hamiltonian* h, char** out) {
  if (auto st = require(h && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(rdmlab::format_pauli_sum(h->sum)); });
}

int rdml_hamiltonian_qubits(const rdml_hamiltonian* h) {
  return h ? h->sum.n() : 0;
}

int rdml_hamiltonian_locality(const rdml_hamiltonian* h) {
  return h ? h->sum.locality() : 0;
}

void rdml_hamiltonian_free(rdml_hamiltonian* h) { delete h; }

rdml_status rdml_state_parse(const char* json_text, rdml_state** out) {
  if (auto st = require(json_text && out, "null argument")) return st;
  return guarded([&] {
    *out = new rdml_state{rdmlab::parse_state_json(json_text)};
  });
}

rdml_status rdml_state_load(const char* path, rdml_state** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new rdml_state{rdmlab::load_state(path)}; });
}

int rdml_state_qubits(const rdml_state* s) { return s ? s->state.n() : 0; }

void rdml_state_free(rdml_state* s) { delete s; }

void rdml_run_options_init(rdml_run_options* opt) {
  if (!opt) return;
  const rdmlab::RunOptions defaults;
  opt->tol = defaults.tol;
  opt->rdm_tol = defaults.rdm_tol;
  opt->distinctness = defaults.distinctness;
  opt->seed = defaults.seed;
}

rdml_status rdml_run_ghz3(const rdml_run_options* opt, double c, int c_auto,
                          rdml_report** out) {
  if (auto st = require(out != nullptr, "null output handle")) return st;
  return guarded([&] {
    *out = new rdml_report{rdmlab::run_ghz3(maybe(c, c_auto), convert(opt))};
  });
}

rdml_status rdml_run_bacon_shor(const rdml_run_options* opt, double jx, double jz,
                                double c, int c_auto, rdml_report** out) {
  if (auto st = require(out != nullptr, "null output handle")) return st;
  return guarded([&] {
    *out = new rdml_report{
        rdmlab::run_bacon_shor(jx, jz, maybe(c, c_auto), convert(opt))};
  });
}

rdml_status rdml_run_dicke(const rdml_run_options* opt, int n, int i, double c,
                           int c_auto, rdml_report** out) {
  if (auto st = require(out != nullptr, "null output handle")) return st;
  return guarded([&] {
    *out = new rdml_report{rdmlab::run_dicke(n, i, maybe(c, c_auto), convert(opt))};
  });
}

rdml_status rdml_run_ghz_n(const rdml_run_options* opt, int n, double c,
                           int c_auto, rdml_report** out) {
  if (auto st = require(out != nullptr, "null output handle")) return st;
  return guarded([&] {
    *out = new rdml_report{rdmlab::run_ghz_n(n, maybe(c, c_auto), convert(opt))};
  });
}

rdml_status rdml_run_fermion(const rdml_run_options* opt, const char* example,
                             double penalty, int penalty_auto, rdml_report** out) {
  if (auto st = require(example && out, "null argument")) return st;
  return guarded([&] {
    *out = new rdml_report{
        rdmlab::run_fermion(example, maybe(penalty, penalty_auto), convert(opt))};
  });
}

rdml_status rdml_run_square(const rdml_run_options* opt, const rdml_hamiltonian* h,
                            const rdml_state* psi, rdml_report** out) {
  if (auto st = require(h && psi && out, "null argument")) return st;
  return guarded([&] {
    rdmlab::PauliSum widened = h->sum;
    if (widened.n() < psi->state.n()) widened = widened.embedded(psi->state.n());
    *out = new rdml_report{rdmlab::run_square(widened, psi->state, convert(opt))};
  });
}

rdml_status rdml_run_parent_search(const rdml_run_options* opt,
                                   const rdml_state* psi, int k, int trials,
                                   rdml_report** out) {
  if (auto st = require(psi && out, "null argument")) return st;
  return guarded([&] {
    *out = new rdml_report{
        rdmlab::run_parent_search(psi->state, k, trials, convert(opt))};
  });
}

rdml_status rdml_run_rdm_compare(const rdml_run_options* opt, const rdml_state* a,
                                 const rdml_state* b, int k, rdml_report** out) {
  if (auto st = require(a && b && out, "null argument")) return st;
  return guarded([&] {
    *out = new rdml_report{
        rdmlab::run_rdm_compare(a->state, b->state, k, convert(opt))};
  });
}

int rdml_report_pass(const rdml_report* r) { return r && r->report.pass ? 1 : 0; }

rdml_status rdml_report_json(const rdml_report* r, char** out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(r->report.to_json().dump(2)); });
}

rdml_status rdml_report_human(const rdml_report* r, char** out) {
  if (auto st = require(r && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(r->report.human()); });
}

void rdml_report_free(rdml_report* r) { delete r; }

int rdml_report_exit_code(const rdml_report* r) {
  return rdml_report_pass(r) ? 0 : 1;
}

int rdml_status_exit_code(rdml_status status) {
  switch (status) {
    case RDML_OK: return 0;
    case RDML_ERR_ARGUMENT:
    case RDML_ERR_DIMENSION:
    case RDML_ERR_PARSE:
    case RDML_ERR_IO:
    case RDML_ERR_DENSE_LIMIT: return 2;
    case RDML_ERR_NOT_EIGENSTATE:
    case RDML_ERR_NO_VALID_COUPLING:
    case RDML_ERR_NUMERICAL:
    case RDML_ERR_INTERNAL: return 3;
  }
  return 3;
}

}  // extern "C"
