#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "wedgecp/atom.hpp"
#include "wedgecp/kernels.hpp"

// Ground-state dispersion potential of a polarizable atom inside a perfectly
// conducting wedge of opening angle pi/q, at cylindrical position (rho, phi)
// measured from the edge and from one plate.
//
//   V = sum_e alpha_e k_e^4 S(2 k_e rho, phi, q)
//   S = sum_{l=0}^{q-1} U(x sin psi_l)
//       - sum_{l=1}^{q-1} [U_par(x sin t_l) cos^2 t_l - U_perp(x sin t_l) cos 2 t_l]
//
// with psi_l = phi + pi l / q and t_l = pi l / q. The first sum is the direct
// (image) part, the second the phi-independent corner part.

namespace wedgecp {

/// Validated position inside a wedge of opening angle pi/q.
struct WedgePoint {
  int q;
  double rho;
  double phi;

  /// Throws ValidationError unless q >= 1, rho > 0 and 0 < phi < pi/q.
  static WedgePoint make(int q, double rho, double phi);

  double opening_angle() const;
};

struct ShapeBreakdown {
  double direct = 0.0;
  double corner = 0.0;
  double total = 0.0;
};

/// Dimensionless braces S at x = 2 k rho, full kernels.
ShapeBreakdown wedge_shape(double x, double phi, int q);

struct PotentialResult {
  double value = 0.0;            ///< total energy, hbar c / L
  ShapeBreakdown energy;         ///< direct / corner / total in energy units
  std::vector<ShapeBreakdown> per_transition;  ///< dimensionless shapes
  WedgePoint point;
};

PotentialResult potential_ground(const AtomModel& atom, const WedgePoint& p);

enum class Polarization { z, phi, rho };

std::string_view to_string(Polarization sigma);

/// One polarization / reservoir contribution. Summed over the three
/// polarizations and kinds {rr, fr} it reproduces potential_ground.
double potential_component(const AtomModel& atom, const WedgePoint& p,
                           Polarization sigma, kernels::KernelKind kind);

struct ForceResult {
  double f_rho = 0.0;         ///< -dV/drho; positive points away from the edge
  double f_phi = 0.0;         ///< -(1/rho) dV/dphi; positive towards larger phi
  double f_rho_corner = 0.0;  ///< corner-only part of f_rho
  double f_rho_error = 0.0;
  double f_phi_error = 0.0;
  double f_rho_corner_error = 0.0;
  bool reduced_accuracy = false;  ///< a one-sided stencil was used
};

/// Energy breakdown as a function of position, used by the differencing.
using PotentialField =
    std::function<ShapeBreakdown(double rho, double phi)>;

/// Forces by 5-point central differences with h_rho = 1e-4 rho and
/// h_phi = 1e-4 min(phi, pi/q - phi), halving-checked.
ForceResult force(const AtomModel& atom, const WedgePoint& p);
ForceResult force(const PotentialField& field, const WedgePoint& p);

}  // namespace wedgecp
