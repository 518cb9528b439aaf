#pragma once

#include <string_view>

// Dimensionless response kernels of a perfectly conducting plane.
//
// The full kernels U_perp, U_par are built from the auxiliary integrals F, G;
// the reaction-of-reservoir (rr) kernels are elementary; the
// fluctuation-of-reservoir (fr) kernels are always full - rr.
//
//   U_perp(x)    = (-F + x G) / (pi x^3)
//   U_par(x)     = ((x^2 - 1) F + x G - x) / (pi x^3)
//   U_perp^rr(x) = -(cos x + x sin x) / (2 x^3)
//   U_par^rr(x)  = -(cos x + x sin x - x^2 cos x) / (2 x^3)

namespace wedgecp::kernels {

enum class KernelKind { full, rr, fr };

std::string_view to_string(KernelKind kind);

/// Arguments below this value are treated as the physical divergence.
inline constexpr double kMinArgument = 1e-9;
/// Above this argument the full kernels are summed from their 1/x series.
inline constexpr double kAsymptoticSwitch = 50.0;
/// sin(psi) below this value means the atom sits on a plate.
inline constexpr double kMinSinPsi = 1e-9;

double u_perp(double x, KernelKind kind);
double u_par(double x, KernelKind kind);
double u_total(double x, KernelKind kind);

/// U_par(x sin psi) sin^2 psi + 2 U_perp(x sin psi) cos^2 psi
double w_phi(double x, double psi, KernelKind kind);
/// U_par(x sin psi) cos^2 psi + 2 U_perp(x sin psi) sin^2 psi
double w_rho(double x, double psi, KernelKind kind);

/// Multiplies every full-kernel value by (1 + epsilon). Sensitivity hook for
/// the validation runner; must be reset to 0 after use.
void set_full_kernel_perturbation(double epsilon);
double full_kernel_perturbation();

namespace detail {

struct PerpPar {
  double perp;
  double par;
};

struct PerpParExtended {
  long double perp;
  long double par;
};

// Kernel pair with the rr part (and hence fr = full - rr) carried in long
// double. Used where rr and fr contributions are summed against each other.
PerpParExtended evaluate_extended(long double x, KernelKind kind);

// Full kernels from F and G with no branch switching.
PerpPar full_direct(double x);
// Full kernels from the asymptotic series in 1/x.
PerpPar full_asymptotic(double x);

}  // namespace detail

}  // namespace wedgecp::kernels
