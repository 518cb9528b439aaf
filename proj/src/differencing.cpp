#include "wedgecp/differencing.hpp"

#include <cmath>

#include "wedgecp/errors.hpp"

namespace wedgecp {

namespace {

double central5(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// Second-order one-sided stencil; direction +1 looks right, -1 looks left.
double one_sided3(const std::function<double(double)>& f, double x, double h,
                  int direction) {
  const double s = direction * h;
  return (-3 * f(x) + 4 * f(x + s) - f(x + 2 * s)) / (2 * s);
}

}  // namespace

Derivative stencil_derivative(const std::function<double(double)>& f, double x,
                              double h, double lo, double hi) {
  if (!(h > 0.0)) throw DomainError("difference step must be positive");
  if (!(x > lo && x < hi)) throw DomainError("difference point outside domain");

  if (x - 2 * h > lo && x + 2 * h < hi) {
    const double coarse = central5(f, x, h);
    const double fine = central5(f, x, h / 2);
    return {fine, std::abs(fine - coarse), false};
  }

  const int direction = (x - lo) > (hi - x) ? -1 : 1;
  double step = h;
  // Shrink until the one-sided stencil fits.
  while (!(x + direction * 2 * step > lo && x + direction * 2 * step < hi)) {
    step /= 2;
  }
  const double coarse = one_sided3(f, x, step, direction);
  const double fine = one_sided3(f, x, step / 2, direction);
  return {fine, std::abs(fine - coarse), true};
}

}  // namespace wedgecp
