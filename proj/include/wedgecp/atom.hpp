#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

// Reduced units: hbar = c = 1 and a single user-chosen length unit L.
// Polarizability volumes are in L^3, wavenumbers in 1/L, energies in hbar c / L.

namespace wedgecp {

inline constexpr std::string_view kUnitsDeclaration =
    "hbar=c=1; length in L; alpha_ge in L^3; k_eg in 1/L; energy in hbar*c/L; "
    "force in hbar*c/L^2";

/// One ground <-> excited dipole transition.
struct AtomTransition {
  double alpha_ge;  ///< polarizability volume contributed by the transition
  double k_eg;      ///< transition wavenumber

  bool operator==(const AtomTransition&) const = default;
};

/// Hbar times the spontaneous emission rate, 2 alpha_ge k_eg^4.
double gamma_spt(const AtomTransition& t);

/// Immutable, validated list of transitions.
class AtomModel {
 public:
  /// Throws ValidationError on an empty list or a non-positive field.
  explicit AtomModel(std::vector<AtomTransition> transitions,
                     std::string label = {});

  /// Single transition with alpha_ge = 1, k_eg = 1.
  static AtomModel unit();

  const std::vector<AtomTransition>& transitions() const { return transitions_; }
  const std::string& label() const { return label_; }

  /// alpha(0) = sum of alpha_ge.
  double static_polarizability() const;

 private:
  std::vector<AtomTransition> transitions_;
  std::string label_;
};

double static_polarizability(const AtomModel& atom);

/// Reads the plain-text atom format: one "alpha_ge k_eg" pair per line,
/// '#' comments and blank lines ignored. The name "unit" selects the preset.
AtomModel load_atom(const std::string& source);
AtomModel parse_atom(std::istream& in, const std::string& source_name);

/// Writes the model in the format read by parse_atom, with shortest
/// round-trip decimals.
void write_atom(std::ostream& out, const AtomModel& atom);

}  // namespace wedgecp
