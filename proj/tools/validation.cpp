#include "validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "oracle.hpp"
#include "sweep.hpp"
#include "wedgecp/atom.hpp"
#include "wedgecp/kernels.hpp"
#include "wedgecp/limits.hpp"
#include "wedgecp/specfun.hpp"
#include "wedgecp/wedge_potential.hpp"

namespace wedgecp::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  if (got == want) return 0.0;
  return std::abs(got - want) / std::abs(want);
}

CheckResult bound(std::string name, double measured, double tol,
                  std::string detail = {}) {
  return {std::move(name), measured, tol, measured <= tol, std::move(detail)};
}

CheckResult lattice_identity() {
  double worst = 0.0;
  for (int q = 1; q <= 12; ++q) {
    const double brute = limits::csc4_corner_sum(q);
    const double closed = limits::csc4_corner_closed(q);
    const double err = closed == 0.0 ? std::abs(brute) : rel_err(brute, closed);
    worst = std::max(worst, err);
  }
  return bound("lattice_identity", worst, 1e-12, "q=1..12");
}

CheckResult cp_equivalence() {
  double worst = 0.0;
  for (int q = 1; q <= 8; ++q) {
    for (int j = 1; j <= 9; ++j) {
      const double phi = j * (kPi / q) / 10.0;
      worst = std::max(worst, rel_err(limits::cp_wedge_sum(1.0, 1.0, phi, q),
                                      limits::cp_wedge_closed(1.0, 1.0, phi, q)));
    }
  }
  return bound("cp_equivalence", worst, 1e-10, "q=1..8 x 9 phi");
}

// Full kernels deep in the retarded regime against the closed form; the
// remaining difference is O(1/(k rho)^2).
CheckResult cp_equivalence_full_kernels() {
  const auto atom = AtomModel::unit();
  double worst = 0.0;
  for (int q : {1, 2, 3}) {
    const double rho = 0.5e4;
    const auto p = WedgePoint::make(q, rho, 0.5 * kPi / q);
    worst = std::max(worst, rel_err(potential_ground(atom, p).value,
                                    limits::cp_wedge_closed(1.0, rho, p.phi, q)));
  }
  return bound("cp_equivalence_full_kernels", worst, 1e-4, "2k rho=1e4");
}

std::vector<CheckResult> wall_limits() {
  const auto atom = AtomModel::unit();
  auto wall_ratio_error = [&](double two_kz, bool retarded) {
    const double z = 0.5 * two_kz;
    const double v = potential_ground(atom, WedgePoint::make(1, z, kPi / 2)).value;
    const double ref = retarded ? limits::wall_retarded(atom, z)
                                : limits::wall_nonretarded(atom, z);
    return std::abs(v / ref - 1.0);
  };
  auto ladder = [&](std::initializer_list<double> xs, bool retarded) {
    int violations = 0;
    double previous = INFINITY;
    double last = 0.0;
    for (double x : xs) {
      last = wall_ratio_error(x, retarded);
      if (!(last < previous)) ++violations;
      previous = last;
    }
    return std::pair{last, violations};
  };
  const auto [nr, nr_bad] = ladder({1e-1, 3e-2, 1e-2, 3e-3, 1e-3}, false);
  const auto [r, r_bad] = ladder({20.0, 50.0, 100.0, 150.0, 200.0}, true);
  return {
      bound("wall_nonretarded", nr, 0.01, "2kz=1e-3"),
      bound("wall_nonretarded_monotone", nr_bad, 0.0, "violations on ladder"),
      bound("wall_retarded", r, 0.05, "2kz=200"),
      bound("wall_retarded_monotone", r_bad, 0.0, "violations on ladder"),
  };
}

CheckResult component_sum() {
  using kernels::KernelKind;
  const auto atom = AtomModel::unit();
  double worst = 0.0;
  for (int q : {1, 2, 3}) {
    for (double x : {0.3, 1.0, 3.0, 10.0, 30.0}) {
      for (double frac : {0.2, 0.5, 0.8}) {
        const auto p = WedgePoint::make(q, 0.5 * x, frac * kPi / q);
        double sum = 0.0;
        for (auto s : {Polarization::z, Polarization::phi, Polarization::rho}) {
          for (auto k : {KernelKind::rr, KernelKind::fr}) {
            sum += potential_component(atom, p, s, k);
          }
        }
        worst = std::max(worst, rel_err(sum, potential_ground(atom, p).value));
      }
    }
  }
  return bound("component_sum", worst, 1e-12, "45 grid points");
}

std::vector<CheckResult> specfun_fidelity() {
  double worst_f = 0.0;
  double worst_g = 0.0;
  double worst_d = 0.0;
  for (double x : {0.01, 0.1, 1.0, 5.0, 20.0, 100.0}) {
    worst_f = std::max(worst_f, rel_err(specfun::aux_F(x), oracle::quad_F(x).value));
    worst_g = std::max(worst_g, rel_err(specfun::aux_G(x), oracle::quad_G(x).value));
    const auto d = oracle::fd_derivative([](double t) { return specfun::aux_F(t); },
                                         x, 0.1 * x, 0.0, 1e300);
    worst_d = std::max(worst_d, rel_err(d.value, specfun::aux_G(x)));
  }
  return {
      bound("aux_F_vs_oracle", worst_f, 1e-8),
      bound("aux_G_vs_oracle", worst_g, 1e-8),
      bound("aux_G_vs_derivative_of_F", worst_d, 1e-6),
  };
}

std::vector<CheckResult> kernel_asymptotics() {
  using kernels::KernelKind;
  const double small = 1e-3;
  const double large = 100.0;
  const double e_small = rel_err(kernels::u_total(small, KernelKind::full),
                                 -1.0 / (small * small * small));
  const double e_large = rel_err(kernels::u_total(large, KernelKind::full),
                                 -6.0 / (kPi * std::pow(large, 4)));
  const double sw = kernels::kAsymptoticSwitch;
  const auto direct = kernels::detail::full_direct(sw);
  const auto series = kernels::detail::full_asymptotic(sw);
  const double overlap = std::max(rel_err(series.perp, direct.perp),
                                  rel_err(series.par, direct.par));
  return {
      bound("kernel_small_x", e_small, 0.01, "x=1e-3"),
      bound("kernel_large_x", e_large, 0.05, "x=100"),
      bound("kernel_branch_overlap", overlap, 1e-9, "x=50"),
  };
}

std::vector<CheckResult> qualitative() {
  const auto atom = AtomModel::unit();
  int bad_q = 0;
  double previous = 0.0;
  for (int q : {2, 3, 5}) {
    const double v = std::abs(
        potential_ground(atom, WedgePoint::make(q, 0.5, 0.5 * kPi / q)).value);
    if (!(v > previous)) ++bad_q;
    previous = v;
  }

  int bad_sign = 0;
  double worst_bisector = 0.0;
  for (int q : {1, 2, 3, 5}) {
    const double phi0 = kPi / q;
    for (double rho : {0.25, 1.0, 5.0}) {
      const auto mid = force(atom, WedgePoint::make(q, rho, 0.5 * phi0));
      const auto off = force(atom, WedgePoint::make(q, rho, 0.3 * phi0));
      worst_bisector = std::max(worst_bisector,
                                std::abs(mid.f_phi) / std::abs(off.f_phi));
      for (double frac : {0.1, 0.3, 0.45}) {
        if (!(force(atom, WedgePoint::make(q, rho, frac * phi0)).f_phi < 0.0)) ++bad_sign;
        if (!(force(atom, WedgePoint::make(q, rho, (1 - frac) * phi0)).f_phi > 0.0)) ++bad_sign;
      }
    }
  }

  int bad_corner = 0;
  for (int q = 2; q <= 6; ++q) {
    for (double x : {0.5, 1.0, 2.0, 5.0, 20.0}) {
      for (double frac : {0.25, 0.5, 0.75}) {
        const auto f = force(atom, WedgePoint::make(q, 0.5 * x, frac * kPi / q));
        if (!(f.f_rho_corner > 0.0)) ++bad_corner;
      }
    }
  }
  return {
      bound("potential_increases_with_q", bad_q, 0.0, "q=2,3,5 at 2k rho=1"),
      bound("f_phi_zero_on_bisector", worst_bisector, 1e-8,
            "|F_phi(phi0/2)| / |F_phi(0.3 phi0)|"),
      bound("f_phi_nearest_plate_sign", bad_sign, 0.0, "sign violations"),
      bound("corner_f_rho_repulsive", bad_corner, 0.0, "q=2..6 violations"),
  };
}

CheckResult determinism() {
  SweepConfig config;
  const auto fig2 = preset("fig2");
  for (const auto& [k, v] : *fig2) config.set(k, v);
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream c;
  run_sweep(Command::potential, config, a);
  run_sweep(Command::potential, config, b);
  config.threads = 4;
  run_sweep(Command::potential, config, c);
  const int mismatches = (a.str() != b.str()) + (a.str() != c.str());
  return bound("fig2_determinism", mismatches, 0.0, "repeat and 4 threads");
}

}  // namespace

std::vector<CheckResult> run_validation() {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  out.push_back(lattice_identity());
  out.push_back(cp_equivalence());
  out.push_back(cp_equivalence_full_kernels());
  append(wall_limits());
  out.push_back(component_sum());
  append(specfun_fidelity());
  append(kernel_asymptotics());
  append(qualitative());
  out.push_back(determinism());
  return out;
}

std::string validation_report_json(const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json doc;
  doc["passed"] = std::all_of(checks.begin(), checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["measured"] = c.measured;
    j["tolerance"] = c.tolerance;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  doc["checks"] = std::move(arr);
  return doc.dump(2);
}

}  // namespace wedgecp::cli
