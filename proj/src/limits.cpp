#include "wedgecp/limits.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wedgecp/errors.hpp"
#include "wedgecp/kernels.hpp"

namespace wedgecp::limits {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw DomainError(std::string(what) + " must be positive");
  }
}

double csc4(double angle) {
  const double s = std::sin(angle);
  if (!(std::abs(s) >= kernels::kMinSinPsi)) {
    throw SingularityError("csc^4 of an angle on a plate");
  }
  const double s2 = s * s;
  return 1.0 / (s2 * s2);
}

double sin_q_phi(double phi, double q) {
  const double s = std::sin(q * phi);
  if (!(std::abs(s) >= kernels::kMinSinPsi)) {
    throw SingularityError("sin(q phi) vanishes: atom on a plate");
  }
  return s;
}

// alpha0 / (16 pi rho^4): image-sum prefactor hbar Gamma / (32 pi k^4 rho^4)
// with hbar Gamma / k^4 = 2 alpha.
double image_sum_prefactor(double alpha0, double rho) {
  const double r2 = rho * rho;
  return alpha0 / (16.0 * kPi * r2 * r2);
}

double closed_prefactor(double alpha0, double rho) {
  const double r2 = rho * rho;
  return alpha0 / (4.0 * kPi * r2 * r2);
}

}  // namespace

double wall_nonretarded(const AtomModel& atom, double z) {
  require_positive(z, "z");
  double sum = 0.0;
  for (const auto& t : atom.transitions()) sum += t.alpha_ge * t.k_eg;
  return -sum / (8.0 * z * z * z);
}

double wall_retarded(const AtomModel& atom, double z) {
  require_positive(z, "z");
  const double z2 = z * z;
  return -3.0 * atom.static_polarizability() / (8.0 * kPi * z2 * z2);
}

double csc4_corner_sum(int q) {
  if (q < 1) throw DomainError("q must be >= 1");
  double sum = 0.0;
  for (int l = 1; l < q; ++l) sum += csc4(kPi * l / q);
  return sum;
}

double csc4_corner_closed(double q) {
  const double q2 = q * q;
  return (q2 - 1.0) * (q2 + 11.0) / 45.0;
}

double csc4_field_sum(int q, double phi) {
  if (q < 1) throw DomainError("q must be >= 1");
  double sum = 0.0;
  for (int l = 0; l < q; ++l) sum += csc4(phi + kPi * l / q);
  return sum;
}

double csc4_field_closed(double q, double phi) {
  const double q2 = q * q;
  const double s = sin_q_phi(phi, q);
  const double inv_s2 = 1.0 / (s * s);
  return q2 * q2 * inv_s2 * inv_s2 - (2.0 / 3.0) * q2 * (q2 - 1.0) * inv_s2;
}

double bracket_from_sums(double field_sum, double corner_sum) {
  return (-6.0 * field_sum + 2.0 * corner_sum) / 4.0;
}

double cp_wedge_sum(double alpha0, double rho, double phi, int q) {
  require_positive(rho, "rho");
  if (q < 1) throw DomainError("q must be >= 1");
  const double braces = -6.0 * csc4_field_sum(q, phi) + 2.0 * csc4_corner_sum(q);
  return image_sum_prefactor(alpha0, rho) * braces;
}

double cp_bracket(double phi, double q) {
  require_positive(q, "q");
  const double q2 = q * q;
  const double s = sin_q_phi(phi, q);
  const double s2 = s * s;
  return (q2 - 1.0) * (q2 + 11.0) / 90.0 -
         (q2 / s2) * (3.0 * q2 / (2.0 * s2) + 1.0 - q2);
}

double cp_wedge_closed(double alpha0, double rho, double phi, double q) {
  require_positive(rho, "rho");
  return closed_prefactor(alpha0, rho) * cp_bracket(phi, q);
}

CpParts cp_wedge_closed_parts(double alpha0, double rho, double phi, double q) {
  require_positive(rho, "rho");
  require_positive(q, "q");
  const double q2 = q * q;
  const double s = sin_q_phi(phi, q);
  const double s2 = s * s;
  const double pre = closed_prefactor(alpha0, rho);
  return {-pre * (q2 / s2) * (3.0 * q2 / (2.0 * s2) + 1.0 - q2),
          pre * (q2 - 1.0) * (q2 + 11.0) / 90.0};
}

}  // namespace wedgecp::limits
