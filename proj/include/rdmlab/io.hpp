#pragma once

#include <string>

#include <json.hpp>

#include "rdmlab/fermion.hpp"
#include "rdmlab/pauli.hpp"
#include "rdmlab/state.hpp"

namespace rdmlab {

/// Text format for Pauli sums, one term per line:
///   <real coeff> [<P>@<q>]*
/// with P in {X, Y, Z} and q a 0-based qubit index; a bare coefficient is an
/// identity term and '#' starts a comment.  Duplicate qubit indices within a
/// line are rejected.  When n_hint is omitted the register size is the
/// largest index mentioned plus one.
PauliSum parse_pauli_sum(const std::string& text, int n_hint = 0);

std::string format_pauli_sum(const PauliSum& h);

PauliSum load_pauli_sum(const std::string& path, int n_hint = 0);
void save_pauli_sum(const PauliSum& h, const std::string& path);

/// State files are JSON documents {"n": int, "amps": [[re, im], ...]} with
/// 2^n entries, qubit 0 the least significant index bit.
StateVector parse_state_json(const std::string& text);
std::string format_state_json(const StateVector& psi);

StateVector load_state(const std::string& path);
void save_state(const StateVector& psi, const std::string& path);

/// {"modes": M, "one_matrix": [[[re,im], ...], ...],
///  "two_matrix": {"(p,q|r,s)": [re, im], ...}} with p<q, r<s and keys in
/// lexicographic order.
nlohmann::ordered_json two_matrix_json(const TwoMatrix& tm);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rdmlab
