#pragma once

#include <functional>

namespace wedgecp {

struct Derivative {
  double value = 0.0;
  double error = 0.0;       ///< |D(h) - D(h/2)|
  bool one_sided = false;   ///< stencil would have left the domain
};

/// First derivative of f at x by the 5-point central stencil, evaluated at h
/// and h/2; returns the h/2 value with the halving difference as error
/// estimate. If x +- 2h leaves the open interval (lo, hi), falls back to a
/// 3-point one-sided stencil pointing into the domain and sets one_sided.
Derivative stencil_derivative(const std::function<double(double)>& f, double x,
                              double h, double lo, double hi);

}  // namespace wedgecp
