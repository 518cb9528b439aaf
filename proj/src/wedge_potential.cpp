#include "wedgecp/wedge_potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wedgecp/differencing.hpp"
#include "wedgecp/errors.hpp"

namespace wedgecp {

namespace {

using kernels::KernelKind;

constexpr double kPi = std::numbers::pi;
constexpr double kRelativeStep = 1e-4;

double image_angle(int l, int q) { return kPi * l / q; }

void check_off_plate(double phi, int q) {
  const double near = std::min(std::sin(phi), std::sin(kPi / q - phi));
  if (!(near >= kernels::kMinSinPsi)) {
    throw SingularityError("phi = " + std::to_string(phi) +
                           ": atom on a plate");
  }
}

// Weight hbar Gamma^spt / 2 = alpha k^4 of one transition in front of S.
double transition_weight(const AtomTransition& t) { return 0.5 * gamma_spt(t); }

}  // namespace

WedgePoint WedgePoint::make(int q, double rho, double phi) {
  if (q < 1) throw ValidationError("wedge index q must be >= 1");
  if (!(std::isfinite(rho) && rho > 0.0)) {
    throw ValidationError("rho must be positive");
  }
  if (!(phi > 0.0 && phi < kPi / q)) {
    throw ValidationError("phi must lie strictly inside (0, pi/q)");
  }
  return {q, rho, phi};
}

double WedgePoint::opening_angle() const { return kPi / q; }

ShapeBreakdown wedge_shape(double x, double phi, int q) {
  if (q < 1) throw ValidationError("wedge index q must be >= 1");
  if (!(phi > 0.0 && phi < kPi / q)) {
    throw ValidationError("phi must lie strictly inside (0, pi/q)");
  }
  check_off_plate(phi, q);

  ShapeBreakdown s;
  for (int l = 0; l < q; ++l) {
    const double psi = phi + image_angle(l, q);
    s.direct += kernels::u_total(x * std::sin(psi), KernelKind::full);
  }
  for (int l = 1; l < q; ++l) {
    const double t = image_angle(l, q);
    const double y = x * std::sin(t);
    const double c = std::cos(t);
    s.corner -= kernels::u_par(y, KernelKind::full) * c * c -
                kernels::u_perp(y, KernelKind::full) * std::cos(2.0 * t);
  }
  s.total = s.direct + s.corner;
  return s;
}

PotentialResult potential_ground(const AtomModel& atom, const WedgePoint& p) {
  PotentialResult r{0.0, {}, {}, p};
  r.per_transition.reserve(atom.transitions().size());
  for (const auto& t : atom.transitions()) {
    const auto shape = wedge_shape(2.0 * t.k_eg * p.rho, p.phi, p.q);
    const double w = transition_weight(t);
    r.energy.direct += w * shape.direct;
    r.energy.corner += w * shape.corner;
    r.per_transition.push_back(shape);
  }
  r.energy.total = r.energy.direct + r.energy.corner;
  r.value = r.energy.total;
  return r;
}

std::string_view to_string(Polarization sigma) {
  switch (sigma) {
    case Polarization::z:
      return "z";
    case Polarization::phi:
      return "phi";
    case Polarization::rho:
      return "rho";
  }
  return "?";
}

double potential_component(const AtomModel& atom, const WedgePoint& p,
                           Polarization sigma, KernelKind kind) {
  check_off_plate(p.phi, p.q);
  const int q = p.q;
  // Accumulated in long double: rr and fr parts are individually much larger
  // than their sum at large distance.
  const long double pi = std::numbers::pi_v<long double>;
  // z and rho subtract the corner images, phi adds them.
  const long double corner_sign = sigma == Polarization::phi ? 1.0L : -1.0L;
  auto term = [&](long double x, long double psi) {
    const long double s = std::sin(psi);
    const long double c = std::cos(psi);
    const auto k = kernels::detail::evaluate_extended(x * s, kind);
    switch (sigma) {
      case Polarization::z:
        return k.par;
      case Polarization::phi:
        return k.par * s * s + 2.0L * k.perp * c * c;
      case Polarization::rho:
        return k.par * c * c + 2.0L * k.perp * s * s;
    }
    return 0.0L;
  };

  long double value = 0.0L;
  for (const auto& t : atom.transitions()) {
    const long double x = 2.0L * t.k_eg * p.rho;
    long double braces = 0.0L;
    for (int l = 0; l < q; ++l) braces += term(x, p.phi + pi * l / q);
    for (int l = 1; l < q; ++l) braces += corner_sign * term(x, pi * l / q);
    // Gamma^sigma = Gamma^spt for an isotropic atom.
    value += 0.25L * gamma_spt(t) * braces;
  }
  return static_cast<double>(value);
}

ForceResult force(const PotentialField& field, const WedgePoint& p) {
  const double phi0 = p.opening_angle();
  const double h_rho = kRelativeStep * p.rho;
  const double h_phi = kRelativeStep * std::min(p.phi, phi0 - p.phi);

  auto along_rho = [&](auto pick) {
    return stencil_derivative(
        [&](double rho) { return pick(field(rho, p.phi)); }, p.rho, h_rho, 0.0,
        std::numeric_limits<double>::infinity());
  };
  const auto d_rho = along_rho([](const ShapeBreakdown& s) { return s.total; });
  const auto d_corner =
      along_rho([](const ShapeBreakdown& s) { return s.corner; });
  const auto d_phi = stencil_derivative(
      [&](double phi) { return field(p.rho, phi).total; }, p.phi, h_phi, 0.0,
      phi0);

  ForceResult f;
  f.f_rho = -d_rho.value;
  f.f_rho_error = d_rho.error;
  f.f_rho_corner = -d_corner.value;
  f.f_rho_corner_error = d_corner.error;
  f.f_phi = -d_phi.value / p.rho;
  f.f_phi_error = d_phi.error / p.rho;
  f.reduced_accuracy = d_rho.one_sided || d_corner.one_sided || d_phi.one_sided;
  return f;
}

ForceResult force(const AtomModel& atom, const WedgePoint& p) {
  return force(
      [&](double rho, double phi) {
        return potential_ground(atom, WedgePoint{p.q, rho, phi}).energy;
      },
      p);
}

}  // namespace wedgecp
