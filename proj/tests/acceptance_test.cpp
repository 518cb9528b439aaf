// Exit gate: one PASS/FAIL line per acceptance criterion.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "wedgecp/atom.hpp"
#include "wedgecp/kernels.hpp"
#include "wedgecp/limits.hpp"
#include "wedgecp/specfun.hpp"
#include "wedgecp/wedge_potential.hpp"

namespace {

using namespace wedgecp;
using kernels::KernelKind;

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  if (got == want) return 0.0;
  return std::abs(got - want) / std::abs(want);
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome lattice_identity() {
  double worst = 0.0;
  for (int q = 1; q <= 12; ++q) {
    const auto sums = oracle::brute_lattice_sums(q, 0.3 * kPi / q);
    const double closed = limits::csc4_corner_closed(q);
    worst = std::max(worst, closed == 0.0 ? std::abs(sums.corner_sum)
                                          : rel_err(sums.corner_sum, closed));
  }
  return {worst <= 1e-12, fmt("max rel err %.3g (tol 1e-12), q=1..12", worst)};
}

Outcome cp_equivalence() {
  double worst = 0.0;
  for (int q = 1; q <= 8; ++q) {
    for (int j = 1; j <= 9; ++j) {
      const double phi = j * (kPi / q) / 10.0;
      worst = std::max(worst, rel_err(limits::cp_wedge_sum(1.0, 1.0, phi, q),
                                      limits::cp_wedge_closed(1.0, 1.0, phi, q)));
    }
  }
  return {worst <= 1e-10, fmt("max rel diff %.3g (tol 1e-10), 72 points", worst)};
}

Outcome wall_limits() {
  const auto atom = AtomModel::unit();
  auto err = [&](double two_kz, bool retarded) {
    const double z = 0.5 * two_kz;
    const double v = potential_ground(atom, WedgePoint::make(1, z, kPi / 2)).value;
    return std::abs(v / (retarded ? limits::wall_retarded(atom, z)
                                  : limits::wall_nonretarded(atom, z)) -
                    1.0);
  };
  auto monotone = [&](std::vector<double> xs, bool retarded) {
    double previous = INFINITY;
    for (double x : xs) {
      const double e = err(x, retarded);
      if (!(e < previous)) return false;
      previous = e;
    }
    return true;
  };
  const double nr = err(1e-3, false);
  const double r = err(200.0, true);
  const bool nr_mono = monotone({1e-1, 3e-2, 1e-2, 3e-3, 1e-3}, false);
  const bool r_mono = monotone({20.0, 50.0, 100.0, 150.0, 200.0}, true);
  return {nr <= 0.01 && r <= 0.05 && nr_mono && r_mono,
          fmt("NR %.3g (tol 0.01), R %.3g (tol 0.05)", nr, r) +
              (nr_mono && r_mono ? ", ladders monotone" : ", ladder NOT monotone")};
}

Outcome component_sum() {
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
  return {worst <= 1e-12, fmt("max rel err %.3g (tol 1e-12), 45 points", worst)};
}

Outcome specfun_fidelity() {
  double f_err = 0.0;
  double g_err = 0.0;
  double d_err = 0.0;
  for (double x : {0.01, 0.1, 1.0, 5.0, 20.0, 100.0}) {
    f_err = std::max(f_err, rel_err(specfun::aux_F(x), oracle::quad_F(x).value));
    g_err = std::max(g_err, rel_err(specfun::aux_G(x), oracle::quad_G(x).value));
    const auto d = oracle::fd_derivative([](double t) { return specfun::aux_F(t); },
                                         x, 0.1 * x, 0.0, 1e300);
    d_err = std::max(d_err, rel_err(d.value, specfun::aux_G(x)));
  }
  return {f_err <= 1e-8 && g_err <= 1e-8 && d_err <= 1e-6,
          fmt("F %.3g, G %.3g (tol 1e-8); G vs dF/dx %.3g (tol 1e-6)", f_err, g_err,
              d_err)};
}

Outcome kernel_asymptotics() {
  const double small = rel_err(kernels::u_total(1e-3, KernelKind::full), -1e9);
  const double large = rel_err(kernels::u_total(100.0, KernelKind::full),
                               -6.0 / (kPi * 1e8));
  const auto d = kernels::detail::full_direct(kernels::kAsymptoticSwitch);
  const auto s = kernels::detail::full_asymptotic(kernels::kAsymptoticSwitch);
  const double overlap = std::max(rel_err(s.perp, d.perp), rel_err(s.par, d.par));
  return {small <= 0.01 && large <= 0.05 && overlap <= 1e-9,
          fmt("x=1e-3 %.3g (tol 0.01), x=100 %.3g (tol 0.05), ", small, large) +
              fmt("overlap at 50 %.3g (tol 1e-9)", overlap)};
}

Outcome qualitative() {
  const auto atom = AtomModel::unit();
  std::vector<double> mags;
  for (int q : {2, 3, 5}) {
    mags.push_back(std::abs(
        potential_ground(atom, WedgePoint::make(q, 0.5, 0.5 * kPi / q)).value));
  }
  const bool a = mags[0] < mags[1] && mags[1] < mags[2];

  bool b = true;
  double bisector = 0.0;
  for (int q : {1, 2, 3, 5}) {
    const double phi0 = kPi / q;
    for (double rho : {0.25, 0.5, 2.5}) {
      const double scale =
          std::abs(force(atom, WedgePoint::make(q, rho, 0.25 * phi0)).f_phi);
      const double mid = force(atom, WedgePoint::make(q, rho, 0.5 * phi0)).f_phi;
      bisector = std::max(bisector, std::abs(mid) / scale);
      for (double frac : {0.05, 0.2, 0.4, 0.49}) {
        b = b && force(atom, WedgePoint::make(q, rho, frac * phi0)).f_phi < 0.0;
        b = b && force(atom, WedgePoint::make(q, rho, (1 - frac) * phi0)).f_phi > 0.0;
      }
    }
  }
  b = b && bisector <= 1e-8;

  bool c = true;
  double min_corner = INFINITY;
  for (int q = 2; q <= 6; ++q) {
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
      for (double frac : {0.1, 0.5, 0.9}) {
        const auto f = force(atom, WedgePoint::make(q, 0.5 * x, frac * kPi / q));
        c = c && f.f_rho_corner > 0.0;
        min_corner = std::min(min_corner, f.f_rho_corner);
      }
    }
  }
  return {a && b && c,
          std::string("(a) |V| q=2,3,5: ") + (a ? "increasing" : "NOT increasing") +
              fmt("; (b) |F_phi(phi0/2)|/scale %.3g, signs ", bisector) +
              (b ? "ok" : "WRONG") + fmt("; (c) min corner F_rho %.3g", min_corner)};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "wedgecp_acceptance";
  fs::create_directories(dir);
  auto run = [&](const std::string& name, const std::string& extra) {
    const auto path = dir / name;
    fs::remove(path);
    const std::string cmd = std::string(WEDGECP_CLI) + " potential --preset fig2" +
                            extra + " --out " + path.string();
    const int status = std::system(cmd.c_str());
    std::ifstream in(path, std::ios::binary);
    std::string body{std::istreambuf_iterator<char>(in), {}};
    return std::pair{WIFEXITED(status) && WEXITSTATUS(status) == 0, body};
  };
  const auto [ok1, first] = run("a.csv", "");
  const auto [ok2, second] = run("b.csv", "");
  const auto [ok3, threaded] = run("c.csv", " --threads 8");
  const bool pass = ok1 && ok2 && ok3 && !first.empty() && first == second &&
                    first == threaded;
  return {pass, fmt("%g bytes; repeat ", static_cast<double>(first.size())) +
                    (first == second ? "identical" : "DIFFERENT") + ", 8 threads " +
                    (first == threaded ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 lattice identity", lattice_identity},
      {"2 CP equivalence", cp_equivalence},
      {"3 wall limits", wall_limits},
      {"4 component-sum identity", component_sum},
      {"5 special-function fidelity", specfun_fidelity},
      {"6 kernel asymptotics", kernel_asymptotics},
      {"7 qualitative figure claims", qualitative},
      {"8 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
