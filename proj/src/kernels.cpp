#include "wedgecp/kernels.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "wedgecp/errors.hpp"
#include "wedgecp/specfun.hpp"

namespace wedgecp::kernels {

namespace {

std::atomic<double> g_perturbation{0.0};

void check_argument(double x) {
  if (!std::isfinite(x)) throw DomainError("kernel argument must be finite");
  if (x < kMinArgument) {
    throw SingularityError("kernel argument " + std::to_string(x) +
                           " below singular threshold");
  }
}

detail::PerpPar full(double x) {
  auto k = x > kAsymptoticSwitch ? detail::full_asymptotic(x)
                                 : detail::full_direct(x);
  const double eps = g_perturbation.load(std::memory_order_relaxed);
  if (eps != 0.0) {
    k.perp *= 1.0 + eps;
    k.par *= 1.0 + eps;
  }
  return k;
}

detail::PerpPar reservoir_reaction(double x) {
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double pre = -0.5 / (x * x * x);
  return {pre * (c + x * s), pre * (c + x * s - x * x * c)};
}

detail::PerpPar evaluate(double x, KernelKind kind) {
  check_argument(x);
  switch (kind) {
    case KernelKind::full:
      return full(x);
    case KernelKind::rr:
      return reservoir_reaction(x);
    case KernelKind::fr: {
      const auto f = full(x);
      const auto r = reservoir_reaction(x);
      return {f.perp - r.perp, f.par - r.par};
    }
  }
  return {};
}

double sin_of_angle(double psi) {
  const double s = std::sin(psi);
  if (!(s >= kMinSinPsi)) {
    throw SingularityError("sin(psi) = " + std::to_string(s) +
                           ": atom on a plate");
  }
  return s;
}

}  // namespace

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::full:
      return "full";
    case KernelKind::rr:
      return "rr";
    case KernelKind::fr:
      return "fr";
  }
  return "?";
}

namespace detail {

PerpParExtended evaluate_extended(long double x, KernelKind kind) {
  check_argument(static_cast<double>(x));
  PerpParExtended out{0.0L, 0.0L};
  if (kind != KernelKind::rr) {
    const auto f = full(static_cast<double>(x));
    out = {f.perp, f.par};
  }
  if (kind != KernelKind::full) {
    const long double c = std::cos(x);
    const long double s = std::sin(x);
    const long double pre = -0.5L / (x * x * x);
    const long double perp = pre * (c + x * s);
    const long double par = pre * (c + x * s - x * x * c);
    if (kind == KernelKind::rr) return {perp, par};
    out.perp -= perp;
    out.par -= par;
  }
  return out;
}

PerpPar full_direct(double x) {
  const double scale = 1.0 / (std::numbers::pi * x * x * x);
  if (x < specfun::kSeriesSwitch) {
    const double f = specfun::aux_F(x);
    const double g = specfun::aux_G(x);
    return {scale * (-f + x * g), scale * ((x * x - 1.0) * f + x * g - x)};
  }
  // (x^2 - 1) F + x G - x = x (x F - 1) + (-F + x G); both terms negative.
  const auto cf = specfun::detail::continued_fraction_fg(x);
  const double perp = -cf.f + x * cf.g;
  return {scale * perp, scale * (x * cf.xf_minus_one + perp)};
}

PerpPar full_asymptotic(double x) {
  // pi x^3 U_perp ~ sum_n -(-1)^n (2n)! (2n+2) / x^(2n+1)
  // pi x^3 U_par  ~ sum_n (-1)^(n+1) ((2n+2)! + (2n+1)! + (2n)!) / x^(2n+1)
  // Summed until the terms stop shrinking or drop below roundoff.
  const double inv_x2 = 1.0 / (x * x);
  double fact = 1.0;   // (2n)!
  double power = 1.0;  // x^-(2n)
  double sign = 1.0;   // (-1)^n
  double perp = 0.0;
  double par = 0.0;
  double last = std::numeric_limits<double>::infinity();
  for (int n = 0; n < 40; ++n) {
    const double m = 2.0 * n;
    const double t_perp = -sign * fact * (m + 2.0) * power;
    const double t_par = -sign * fact * ((m + 2.0) * (m + 1.0) + (m + 1.0) + 1.0) * power;
    if (std::abs(t_par) > last) break;
    perp += t_perp;
    par += t_par;
    last = std::abs(t_par);
    if (last < 1e-18 * std::abs(par)) break;
    fact *= (m + 1.0) * (m + 2.0);
    power *= inv_x2;
    sign = -sign;
  }
  const double scale = 1.0 / (std::numbers::pi * x * x * x * x);
  return {scale * perp, scale * par};
}

}  // namespace detail

void set_full_kernel_perturbation(double epsilon) {
  g_perturbation.store(epsilon, std::memory_order_relaxed);
}

double full_kernel_perturbation() {
  return g_perturbation.load(std::memory_order_relaxed);
}

double u_perp(double x, KernelKind kind) { return evaluate(x, kind).perp; }

double u_par(double x, KernelKind kind) { return evaluate(x, kind).par; }

double u_total(double x, KernelKind kind) {
  const auto k = evaluate(x, kind);
  return k.par + k.perp;
}

double w_phi(double x, double psi, KernelKind kind) {
  const double s = sin_of_angle(psi);
  const double c = std::cos(psi);
  const auto k = evaluate(x * s, kind);
  return k.par * s * s + 2.0 * k.perp * c * c;
}

double w_rho(double x, double psi, KernelKind kind) {
  const double s = sin_of_angle(psi);
  const double c = std::cos(psi);
  const auto k = evaluate(x * s, kind);
  return k.par * c * c + 2.0 * k.perp * s * s;
}

}  // namespace wedgecp::kernels
