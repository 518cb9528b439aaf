#include "wedgecp/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "wedgecp/errors.hpp"

namespace wedgecp::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 200;

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": argument must be finite");
  }
}

}  // namespace

namespace detail {

SiCi series_si_ci(double x) {
  const double x2 = x * x;

  // Si(x) = sum (-1)^n x^(2n+1) / ((2n+1) (2n+1)!)
  double power = x;  // (-1)^n x^(2n+1) / (2n+1)!
  double si_sum = x;
  for (int n = 1; n < kMaxTerms; ++n) {
    power *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
    const double term = power / (2.0 * n + 1.0);
    si_sum += term;
    if (std::abs(term) < kEps * std::abs(si_sum)) break;
  }

  // Ci(x) - gamma - ln x = sum_{n>=1} (-1)^n x^(2n) / (2n (2n)!)
  double cpower = 1.0;  // (-1)^n x^(2n) / (2n)!
  double ci_sum = 0.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    cpower *= -x2 / ((2.0 * n - 1.0) * (2.0 * n));
    const double term = cpower / (2.0 * n);
    ci_sum += term;
    if (std::abs(term) <= kEps * std::abs(ci_sum)) break;
  }

  const double ci =
      x > 0.0 ? (kEulerGamma + std::log(x)) + ci_sum
              : -std::numeric_limits<double>::infinity();
  return {si_sum - std::numbers::pi / 2.0, ci};
}

namespace {

// Modified Lentz evaluation of 1/(b_0 - a_1/(b_1 - a_2/(b_2 - ...))) with
// b_j = 2(j + shift) + 1 + ix and a_j = (j + shift)^2.
std::complex<double> lentz_e1(double x, int shift) {
  using cplx = std::complex<double>;
  constexpr double kTiny = 1e-300;
  cplx b{2.0 * shift + 1.0, x};
  cplx c{1.0 / kTiny, 0.0};
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 100000; ++i) {
    const double n = static_cast<double>(i + shift);
    const double a = -n * n;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  return h;
}

}  // namespace

AuxFG continued_fraction_fg(double x) {
  // E1(ix) = exp(-ix) K(x) with K = 1/(1 + ix - T) and T the same fraction
  // started one level deeper. K = -G - iF, and x F - 1 = -Re((1 - T) K),
  // which avoids the cancellation in forming x F - 1 from F.
  const auto k = lentz_e1(x, 0);
  const auto t = lentz_e1(x, 1);
  const double d = -((1.0 - t.real()) * k.real() + t.imag() * k.imag());
  return {-k.imag(), -k.real(), d};
}

}  // namespace detail

double sin_integral_si(double x) {
  require_finite(x, "sin_integral_si");
  if (x < 0.0) throw DomainError("sin_integral_si: x must be >= 0");
  if (x < kSeriesSwitch) return detail::series_si_ci(x).si;
  const auto cf = detail::continued_fraction_fg(x);
  return -cf.f * std::cos(x) + cf.g * std::sin(x);
}

double cos_integral_Ci(double x) {
  require_finite(x, "cos_integral_Ci");
  if (x <= 0.0) throw DomainError("cos_integral_Ci: x must be > 0");
  if (x < kSeriesSwitch) return detail::series_si_ci(x).ci;
  const auto cf = detail::continued_fraction_fg(x);
  return cf.f * std::sin(x) + cf.g * std::cos(x);
}

double aux_F(double x) {
  require_finite(x, "aux_F");
  if (x < 0.0) throw DomainError("aux_F: x must be >= 0");
  if (x == 0.0) return std::numbers::pi / 2.0;
  if (x < kSeriesSwitch) {
    const auto [si, ci] = detail::series_si_ci(x);
    return ci * std::sin(x) - si * std::cos(x);
  }
  return detail::continued_fraction_fg(x).f;
}

double aux_G(double x) {
  require_finite(x, "aux_G");
  if (x <= 0.0) throw DomainError("aux_G: x must be > 0");
  if (x < kSeriesSwitch) {
    const auto [si, ci] = detail::series_si_ci(x);
    return ci * std::cos(x) + si * std::sin(x);
  }
  return detail::continued_fraction_fg(x).g;
}

}  // namespace wedgecp::specfun
