#pragma once

#include "wedgecp/atom.hpp"

// Closed-form limiting cases of the atom-wedge potential.

namespace wedgecp::limits {

/// Non-retarded atom-wall potential, -(1/8 z^3) sum_e alpha_e k_e.
double wall_nonretarded(const AtomModel& atom, double z);

/// Retarded (Casimir-Polder) atom-wall potential, -3 alpha(0) / (8 pi z^4).
double wall_retarded(const AtomModel& atom, double z);

/// Retarded wedge potential as the explicit image sum
///   alpha0 / (16 pi rho^4) [-6 sum_{l<q} csc^4(phi + pi l/q)
///                           + 2 sum_{0<l<q} csc^4(pi l/q)].
double cp_wedge_sum(double alpha0, double rho, double phi, int q);

/// Dimensionless bracket of the closed form
///   (1/90)(q^2-1)(q^2+11) - (q^2/sin^2 q phi)(3 q^2 / (2 sin^2 q phi) + 1 - q^2),
/// valid for real q > 0.
double cp_bracket(double phi, double q);

/// Closed-form retarded wedge potential alpha0 / (4 pi rho^4) * cp_bracket.
double cp_wedge_closed(double alpha0, double rho, double phi, double q);

struct CpParts {
  double direct;  ///< phi-dependent image part
  double corner;  ///< phi-independent corner part
};

/// Closed-form retarded potential split as in the image sum:
/// direct = -(q^2/sin^2 q phi)(...) term, corner = (1/90)(q^2-1)(q^2+11) term,
/// both multiplied by alpha0 / (4 pi rho^4).
CpParts cp_wedge_closed_parts(double alpha0, double rho, double phi, double q);

/// sum_{l=1}^{q-1} csc^4(pi l / q), summed term by term.
double csc4_corner_sum(int q);
/// (1/45)(q^2 - 1)(q^2 + 11).
double csc4_corner_closed(double q);

/// sum_{l=0}^{q-1} csc^4(phi + pi l / q), summed term by term.
double csc4_field_sum(int q, double phi);
/// q^4 / sin^4(q phi) - (2/3) q^2 (q^2 - 1) / sin^2(q phi).
double csc4_field_closed(double q, double phi);

/// Bracket rebuilt from the two lattice sums, (-6 field + 2 corner) / 4.
double bracket_from_sums(double field_sum, double corner_sum);

}  // namespace wedgecp::limits
