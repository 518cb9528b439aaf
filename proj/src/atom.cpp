#include "wedgecp/atom.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wedgecp/errors.hpp"
#include "wedgecp/format.hpp"

namespace wedgecp {

namespace {

void validate(const AtomTransition& t) {
  if (!(std::isfinite(t.alpha_ge) && t.alpha_ge > 0.0)) {
    throw ValidationError("alpha_ge must be positive");
  }
  if (!(std::isfinite(t.k_eg) && t.k_eg > 0.0)) {
    throw ValidationError("k_eg must be positive");
  }
}

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

double gamma_spt(const AtomTransition& t) {
  const double k2 = t.k_eg * t.k_eg;
  return 2.0 * t.alpha_ge * k2 * k2;
}

AtomModel::AtomModel(std::vector<AtomTransition> transitions, std::string label)
    : transitions_(std::move(transitions)), label_(std::move(label)) {
  if (transitions_.empty()) {
    throw ValidationError("atom model needs at least one transition");
  }
  for (const auto& t : transitions_) validate(t);
}

AtomModel AtomModel::unit() { return AtomModel({{1.0, 1.0}}, "unit"); }

double AtomModel::static_polarizability() const {
  double sum = 0.0;
  for (const auto& t : transitions_) sum += t.alpha_ge;
  return sum;
}

double static_polarizability(const AtomModel& atom) {
  return atom.static_polarizability();
}

AtomModel parse_atom(std::istream& in, const std::string& source_name) {
  std::vector<AtomTransition> transitions;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string a_tok, k_tok, extra;
    fields >> a_tok >> k_tok;
    if (k_tok.empty() || (fields >> extra)) {
      throw ParseError(source_name, line_no,
                       "expected two fields \"alpha_ge k_eg\"");
    }
    AtomTransition t{};
    if (!parse_double(a_tok, t.alpha_ge) || !parse_double(k_tok, t.k_eg)) {
      throw ParseError(source_name, line_no, "malformed number");
    }
    try {
      validate(t);
    } catch (const ValidationError& e) {
      throw ParseError(source_name, line_no, e.what());
    }
    transitions.push_back(t);
  }
  if (transitions.empty()) {
    throw ValidationError(source_name + ": atom file contains no transitions");
  }
  return AtomModel(std::move(transitions), source_name);
}

AtomModel load_atom(const std::string& source) {
  if (source == "unit") return AtomModel::unit();
  std::ifstream in(source);
  if (!in) throw ParseError(source, 0, "cannot open atom file");
  return parse_atom(in, source);
}

void write_atom(std::ostream& out, const AtomModel& atom) {
  out << "# " << (atom.label().empty() ? "atom" : atom.label())
      << ": alpha_ge k_eg\n";
  for (const auto& t : atom.transitions()) {
    out << format_double(t.alpha_ge) << ' ' << format_double(t.k_eg) << '\n';
  }
}

}  // namespace wedgecp
