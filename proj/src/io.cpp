#include "rdmlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rdmlab {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ParsedTerm {
  double coeff = 0.0;
  std::vector<std::pair<int, char>> factors;
  int max_index = -1;
};

ParsedTerm parse_line(const std::string& line, int line_no) {
  std::istringstream in(line);
  ParsedTerm term;
  if (!(in >> term.coeff))
    fail(ErrorCode::ParseError,
         "line " + std::to_string(line_no) + ": expected a coefficient");
  std::string token;
  std::uint64_t seen = 0;
  while (in >> token) {
    if (token.size() < 3 || token[1] != '@' ||
        (token[0] != 'X' && token[0] != 'Y' && token[0] != 'Z'))
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                      ": bad factor token '" + token + "'");
    int qubit = 0;
    std::size_t pos = 0;
    try {
      qubit = std::stoi(token.substr(2), &pos);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                      ": bad qubit index in '" + token + "'");
    }
    if (pos != token.size() - 2 || qubit < 0 || qubit >= kMaskLimit)
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                      ": bad qubit index in '" + token + "'");
    if (seen & (1ULL << qubit))
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                      ": duplicate qubit index " +
                                      std::to_string(qubit));
    seen |= 1ULL << qubit;
    term.factors.emplace_back(qubit, token[0]);
    term.max_index = std::max(term.max_index, qubit);
  }
  return term;
}

}  // namespace

PauliSum parse_pauli_sum(const std::string& text, int n_hint) {
  std::vector<ParsedTerm> terms;
  int max_index = -1;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    ParsedTerm term = parse_line(line, line_no);
    max_index = std::max(max_index, term.max_index);
    terms.push_back(std::move(term));
  }
  int n = std::max(n_hint, max_index + 1);
  if (n == 0) n = 1;  // an empty or identity-only file is a 1-qubit zero sum
  PauliSum sum(n);
  for (const auto& term : terms)
    sum.add(PauliString::from_factors(n, term.factors), term.coeff);
  return sum;
}

std::string format_pauli_sum(const PauliSum& h) {
  std::ostringstream out;
  out << "# pauli sum on " << h.n() << " qubits\n";
  for (const auto& [p, c] : h.terms()) {
    out << format_double(c);
    if (!p.is_identity()) out << ' ' << p.to_string();
    out << '\n';
  }
  return out.str();
}

PauliSum load_pauli_sum(const std::string& path, int n_hint) {
  return parse_pauli_sum(read_text_file(path), n_hint);
}

void save_pauli_sum(const PauliSum& h, const std::string& path) {
  write_text_file(path, format_pauli_sum(h));
}

StateVector parse_state_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad state JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("amps") ||
      !doc["n"].is_number_integer() || !doc["amps"].is_array())
    fail(ErrorCode::ParseError, "state JSON must be {\"n\": int, \"amps\": [[re,im],...]}");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaskLimit)
    fail(ErrorCode::ParseError, "state JSON has bad qubit count");
  const auto& amps = doc["amps"];
  if (static_cast<std::int64_t>(amps.size()) != (1LL << n))
    fail(ErrorCode::ParseError, "state JSON must list exactly 2^n amplitudes");
  Eigen::VectorXcd v(1LL << n);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const auto& pair = amps[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      fail(ErrorCode::ParseError, "amplitude " + std::to_string(i) +
                                      " is not a [re, im] pair");
    v[static_cast<std::int64_t>(i)] =
        std::complex<double>(pair[0].get<double>(), pair[1].get<double>());
  }
  return StateVector(n, std::move(v));
}

std::string format_state_json(const StateVector& psi) {
  nlohmann::json amps = nlohmann::json::array();
  for (std::int64_t i = 0; i < psi.dim(); ++i)
    amps.push_back({psi.amps()[i].real(), psi.amps()[i].imag()});
  nlohmann::json doc{{"n", psi.n()}, {"amps", std::move(amps)}};
  return doc.dump();
}

StateVector load_state(const std::string& path) {
  return parse_state_json(read_text_file(path));
}

void save_state(const StateVector& psi, const std::string& path) {
  write_text_file(path, format_state_json(psi));
}

nlohmann::ordered_json two_matrix_json(const TwoMatrix& tm) {
  nlohmann::ordered_json doc;
  doc["modes"] = tm.modes();
  nlohmann::ordered_json one = nlohmann::ordered_json::array();
  for (int p = 0; p < tm.modes(); ++p) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int q = 0; q < tm.modes(); ++q)
      row.push_back({tm.one()(p, q).real(), tm.one()(p, q).imag()});
    one.push_back(std::move(row));
  }
  doc["one_matrix"] = std::move(one);
  nlohmann::ordered_json two = nlohmann::ordered_json::object();
  const int m = tm.modes();
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = r + 1; s < m; ++s) {
          const auto v = tm.two()(TwoMatrix::pair_index(p, q, m),
                                  TwoMatrix::pair_index(r, s, m));
          const std::string key = "(" + std::to_string(p) + "," + std::to_string(q) +
                                  "|" + std::to_string(r) + "," + std::to_string(s) +
                                  ")";
          two[key] = {v.real(), v.imag()};
        }
  doc["two_matrix"] = std::move(two);
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) fail(ErrorCode::IoError, "error reading " + path);
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << content;
  if (!out) fail(ErrorCode::IoError, "error writing " + path);
}

}  // namespace rdmlab
