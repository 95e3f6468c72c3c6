/* C interface to the rdmlab core: opaque handles, integer status codes,
 * heap-allocated strings released with rdml_string_free.  Thread safety:
 * handles are immutable after creation; the last-error message is
 * thread-local. */

#ifndef RDMLAB_RDMLAB_H
#define RDMLAB_RDMLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdml_status {
  RDML_OK = 0,
  RDML_ERR_ARGUMENT = 1,
  RDML_ERR_DIMENSION = 2,
  RDML_ERR_PARSE = 3,
  RDML_ERR_IO = 4,
  RDML_ERR_DENSE_LIMIT = 5,
  RDML_ERR_NOT_EIGENSTATE = 6,
  RDML_ERR_NO_VALID_COUPLING = 7,
  RDML_ERR_NUMERICAL = 8,
  RDML_ERR_INTERNAL = 9
} rdml_status;

typedef struct rdml_hamiltonian rdml_hamiltonian;
typedef struct rdml_state rdml_state;
typedef struct rdml_report rdml_report;

const char* rdml_version(void);

/* Message for the most recent failing call on this thread. */
const char* rdml_last_error(void);

void rdml_string_free(char* s);

/* Pauli-sum text format: one term per line, `<coeff> [<P>@<q>]*`. */
rdml_status rdml_hamiltonian_parse(const char* text, rdml_hamiltonian** out);
rdml_status rdml_hamiltonian_load(const char* path, rdml_hamiltonian** out);
rdml_status rdml_hamiltonian_format(const rdml_hamiltonian* h, char** out);
int rdml_hamiltonian_qubits(const rdml_hamiltonian* h);
int rdml_hamiltonian_locality(const rdml_hamiltonian* h);
void rdml_hamiltonian_free(rdml_hamiltonian* h);

/* State files: {"n": int, "amps": [[re, im], ...]}. */
rdml_status rdml_state_parse(const char* json_text, rdml_state** out);
rdml_status rdml_state_load(const char* path, rdml_state** out);
int rdml_state_qubits(const rdml_state* s);
void rdml_state_free(rdml_state* s);

typedef struct rdml_run_options {
  double tol;             /* eigenstate certification tolerance */
  double rdm_tol;         /* marginal deviation tolerance */
  double distinctness;    /* |<psi|phi>| <= 1 - distinctness */
  uint64_t seed;          /* fixes randomized paths */
} rdml_run_options;

void rdml_run_options_init(rdml_run_options* opt);

/* Command runners.  Flags named *_auto select the scanned/derived value and
 * make the explicit argument ignored.  On success *out owns a report. */
rdml_status rdml_run_ghz3(const rdml_run_options* opt, double c, int c_auto,
                          rdml_report** out);
rdml_status rdml_run_bacon_shor(const rdml_run_options* opt, double jx, double jz,
                                double c, int c_auto, rdml_report** out);
rdml_status rdml_run_dicke(const rdml_run_options* opt, int n, int i /* -1 = all */,
                           double c, int c_auto, rdml_report** out);
rdml_status rdml_run_ghz_n(const rdml_run_options* opt, int n, double c,
                           int c_auto, rdml_report** out);
rdml_status rdml_run_fermion(const rdml_run_options* opt, const char* example,
                             double penalty, int penalty_auto, rdml_report** out);
rdml_status rdml_run_square(const rdml_run_options* opt, const rdml_hamiltonian* h,
                            const rdml_state* psi, rdml_report** out);
rdml_status rdml_run_parent_search(const rdml_run_options* opt,
                                   const rdml_state* psi, int k, int trials,
                                   rdml_report** out);
rdml_status rdml_run_rdm_compare(const rdml_run_options* opt, const rdml_state* a,
                                 const rdml_state* b, int k, rdml_report** out);

int rdml_report_pass(const rdml_report* r);
rdml_status rdml_report_json(const rdml_report* r, char** out);
rdml_status rdml_report_human(const rdml_report* r, char** out);
void rdml_report_free(rdml_report* r);

/* Process exit code conventions: 0 verdict pass, 1 verdict fail, 2 input
 * error, 3 numerical failure. */
int rdml_report_exit_code(const rdml_report* r);
int rdml_status_exit_code(rdml_status status);

#ifdef __cplusplus
}
#endif

#endif /* RDMLAB_RDMLAB_H */
