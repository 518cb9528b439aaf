#pragma once

// Sine and cosine integrals and the auxiliary integrals
//
//   F(x) =  int_0^inf sin t / (t + x) dt = Ci(x) sin x - si(x) cos x
//   G(x) = -int_0^inf cos t / (t + x) dt = Ci(x) cos x + si(x) sin x = F'(x)
//
// in double precision. Below kSeriesSwitch the Maclaurin series of si and Ci
// are summed; above it F and G are obtained directly from a continued
// fraction for E1(ix), and si/Ci are reconstructed from them.

namespace wedgecp::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kSeriesSwitch = 4.0;

/// si(x) = -pi/2 + int_0^x sin t / t dt, for x >= 0.
double sin_integral_si(double x);

/// Ci(x) = gamma + ln x + int_0^x (cos t - 1) / t dt, for x > 0.
double cos_integral_Ci(double x);

/// F(x) for x >= 0; F(0) = pi/2.
double aux_F(double x);

/// G(x) for x > 0. Diverges like gamma + ln x as x -> 0+.
double aux_G(double x);

namespace detail {

struct SiCi {
  double si;
  double ci;
};

struct AuxFG {
  double f;
  double g;
  double xf_minus_one;  ///< x F(x) - 1, free of cancellation
};

// Branch-level entry points, exposed so the overlap of the two evaluation
// routes can be tested directly. No domain checks.
SiCi series_si_ci(double x);
AuxFG continued_fraction_fg(double x);

}  // namespace detail

}  // namespace wedgecp::specfun
