#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wedgecp/atom.hpp"
#include "wedgecp/errors.hpp"
#include "wedgecp/format.hpp"
#include "wedgecp/limits.hpp"
#include "wedgecp/wedge_potential.hpp"

namespace wedgecp::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("invalid " + what + ": '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("invalid " + what + ": '" + text + "'");
  }
  return v;
}

std::vector<int> parse_q_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const int q = parse_int(item, "q");
    if (q < 1) throw ConfigError("q must be a positive integer, got " + item);
    out.push_back(q);
  }
  if (out.empty()) throw ConfigError("q list is empty");
  return out;
}

std::string join_q(const std::vector<int>& q) {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(q[i]);
  }
  return s;
}

Regime parse_regime(const std::string& s) {
  if (s == "full") return Regime::full;
  if (s == "nr_wall") return Regime::nr_wall;
  if (s == "r_wall") return Regime::r_wall;
  if (s == "cp") return Regime::cp;
  throw ConfigError("unknown regime '" + s + "'");
}

struct GridPoint {
  int q;
  double rho;
  double phi;
};

struct Row {
  GridPoint point;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  bool boundary = false;
  bool reduced_accuracy = false;
};

double nearest_plate_distance(const WedgePoint& p) {
  const double phi0 = p.opening_angle();
  return p.rho * std::sin(std::min(p.phi, phi0 - p.phi));
}

PotentialField make_field(Regime regime, const AtomModel& atom, int q) {
  switch (regime) {
    case Regime::full:
      return [&atom, q](double rho, double phi) {
        return potential_ground(atom, WedgePoint{q, rho, phi}).energy;
      };
    case Regime::nr_wall:
    case Regime::r_wall:
      return [&atom, q, regime](double rho, double phi) {
        const double z = nearest_plate_distance(WedgePoint{q, rho, phi});
        const double v = regime == Regime::nr_wall
                             ? limits::wall_nonretarded(atom, z)
                             : limits::wall_retarded(atom, z);
        return ShapeBreakdown{v, 0.0, v};
      };
    case Regime::cp:
      return [&atom, q](double rho, double phi) {
        const auto parts = limits::cp_wedge_closed_parts(
            atom.static_polarizability(), rho, phi, q);
        return ShapeBreakdown{parts.direct, parts.corner,
                              parts.direct + parts.corner};
      };
  }
  throw ConfigError("unknown regime");
}

Row evaluate(Command command, Regime regime, const AtomModel& atom,
             const GridPoint& g) {
  Row row{g};
  try {
    const auto p = WedgePoint::make(g.q, g.rho, g.phi);
    const auto field = make_field(regime, atom, g.q);
    if (command == Command::potential) {
      const auto e = field(p.rho, p.phi);
      row.a = e.total;
      row.b = e.direct;
      row.c = e.corner;
    } else {
      const auto f = regime == Regime::full ? force(atom, p) : force(field, p);
      row.a = f.f_rho;
      row.b = f.f_phi;
      row.c = f.f_rho_corner;
      row.reduced_accuracy = f.reduced_accuracy;
    }
  } catch (const SingularityError&) {
    row.boundary = true;
  } catch (const ValidationError&) {
    row.boundary = true;
  } catch (const DomainError&) {
    row.boundary = true;
  }
  if (row.boundary) {
    row.a = row.b = row.c = std::nan("");
  }
  return row;
}

std::vector<GridPoint> build_grid(const SweepConfig& config) {
  std::vector<GridPoint> grid;
  const auto rhos = config.rho.values();
  const auto phis = config.phi.values();
  for (int q : config.q) {
    const double phi0 = std::numbers::pi / q;
    for (double rho : rhos) {
      for (double phi : phis) {
        grid.push_back({q, rho, config.phi_fraction ? phi * phi0 : phi});
      }
    }
  }
  return grid;
}

std::vector<Row> evaluate_grid(Command command, const SweepConfig& config,
                               const AtomModel& atom,
                               const std::vector<GridPoint>& grid) {
  std::vector<Row> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      rows[i] = evaluate(command, config.regime, atom, grid[i]);
    }
  };
  const int n = std::max(1, std::min<int>(config.threads,
                                          static_cast<int>(grid.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> config_echo(
    Command command, const SweepConfig& c) {
  return {
      {"command", command == Command::potential ? "potential" : "force"},
      {"atom", c.atom_source},
      {"q", join_q(c.q)},
      {"phi", c.phi.to_string()},
      {"phi_mode", c.phi_fraction ? "fraction" : "absolute"},
      {"rho", c.rho.to_string()},
      {"regime", to_string(c.regime)},
  };
}

std::vector<std::string> columns(Command command) {
  if (command == Command::potential) {
    return {"rho", "phi", "q", "V_total", "V_direct", "V_corner"};
  }
  return {"rho", "phi", "q", "F_rho", "F_phi", "F_rho_corner"};
}

void write_csv(Command command, const SweepConfig& config,
               const std::vector<Row>& rows, std::ostream& out) {
  out << "# wedgecp " << (command == Command::potential ? "potential" : "force")
      << '\n';
  out << "# units: " << kUnitsDeclaration << '\n';
  for (const auto& [k, v] : config_echo(command, config)) {
    out << "# " << k << '=' << v << '\n';
  }
  const auto cols = columns(command);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    out << (i ? "," : "") << cols[i];
  }
  out << '\n';
  for (const auto& r : rows) {
    out << format_double(r.point.rho) << ',' << format_double(r.point.phi)
        << ',' << r.point.q << ',' << format_double(r.a) << ','
        << format_double(r.b) << ',' << format_double(r.c);
    if (r.boundary) out << ",# boundary";
    else if (r.reduced_accuracy) out << ",# reduced_accuracy";
    out << '\n';
  }
}

void write_json(Command command, const SweepConfig& config,
                const std::vector<Row>& rows, std::ostream& out) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["units"] = std::string(kUnitsDeclaration);
  ordered_json echo = ordered_json::object();
  for (const auto& [k, v] : config_echo(command, config)) echo[k] = v;
  doc["config"] = echo;
  const auto cols = columns(command);
  doc["columns"] = cols;
  ordered_json data = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json row;
    row[cols[0]] = r.point.rho;
    row[cols[1]] = r.point.phi;
    row[cols[2]] = r.point.q;
    // Non-finite values become null.
    row[cols[3]] = r.a;
    row[cols[4]] = r.b;
    row[cols[5]] = r.c;
    if (r.boundary) row["flag"] = "boundary";
    else if (r.reduced_accuracy) row["flag"] = "reduced_accuracy";
    data.push_back(std::move(row));
  }
  doc["rows"] = std::move(data);
  out << doc.dump(1) << '\n';
}

}  // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::full:
      return "full";
    case Regime::nr_wall:
      return "nr_wall";
    case Regime::r_wall:
      return "r_wall";
    case Regime::cp:
      return "cp";
  }
  return "?";
}

RangeSpec RangeSpec::parse(const std::string& raw) {
  std::string text = trim(raw);
  RangeSpec r;
  if (text.rfind("log", 0) == 0) {
    r.log = true;
    text = text.substr(3);
  }
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    if (r.log) throw ConfigError("log range needs MIN:MAX:STEPS: '" + raw + "'");
    r.min = r.max = parse_number(text, "value");
    r.steps = 1;
    return r;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
    throw ConfigError("range must be MIN:MAX:STEPS: '" + raw + "'");
  }
  r.min = parse_number(text.substr(0, c1), "range minimum");
  r.max = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "range maximum");
  r.steps = parse_int(text.substr(c2 + 1), "range steps");
  if (r.steps < 1) throw ConfigError("range steps must be >= 1: '" + raw + "'");
  if (r.log && !(r.min > 0.0 && r.max > 0.0)) {
    throw ConfigError("log range bounds must be positive: '" + raw + "'");
  }
  return r;
}

std::vector<double> RangeSpec::values() const {
  std::vector<double> v;
  v.reserve(steps);
  if (steps == 1) {
    v.push_back(min);
    return v;
  }
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / (steps - 1);
    if (log) {
      const double lmin = std::log(min);
      const double lmax = std::log(max);
      v.push_back(std::exp(lmin + t * (lmax - lmin)));
    } else {
      v.push_back(min + t * (max - min));
    }
  }
  // Endpoints are exact.
  v.front() = min;
  v.back() = max;
  return v;
}

std::string RangeSpec::to_string() const {
  if (steps == 1 && !log) return format_double(min);
  return (log ? "log" : "") + format_double(min) + ":" + format_double(max) +
         ":" + std::to_string(steps);
}

void SweepConfig::set(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "atom") {
    if (v.empty()) throw ConfigError("atom must not be empty");
    atom_source = v;
  } else if (key == "q") {
    q = parse_q_list(v);
  } else if (key == "phi") {
    phi = RangeSpec::parse(v);
    phi_set = true;
  } else if (key == "phi_mode") {
    if (v == "absolute") phi_fraction = false;
    else if (v == "fraction") phi_fraction = true;
    else throw ConfigError("phi_mode must be absolute or fraction, got '" + v + "'");
  } else if (key == "rho") {
    rho = RangeSpec::parse(v);
    rho_set = true;
  } else if (key == "regime") {
    regime = parse_regime(v);
  } else if (key == "format") {
    if (v == "csv") format = Format::csv;
    else if (v == "json") format = Format::json;
    else throw ConfigError("format must be csv or json, got '" + v + "'");
  } else if (key == "out") {
    output = v.empty() ? "-" : v;
  } else if (key == "threads") {
    threads = parse_int(v, "threads");
    if (threads < 1) throw ConfigError("threads must be >= 1");
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void SweepConfig::validate() const {
  if (!phi_set) throw ConfigError("phi is required");
  if (!rho_set) throw ConfigError("rho is required");
  if (!(rho.min > 0.0 && rho.max > 0.0) || !std::isfinite(rho.min) ||
      !std::isfinite(rho.max)) {
    throw ConfigError("rho must be positive and finite");
  }
  for (int qq : q) {
    if (qq < 1) throw ConfigError("q must be a positive integer");
    const double upper = phi_fraction ? 1.0 : std::numbers::pi / qq;
    for (double bound : {phi.min, phi.max}) {
      if (!(bound > 0.0 && bound < upper)) {
        throw ConfigError("phi " + format_double(bound) +
                          " outside the open interval (0, " +
                          format_double(upper) + ") for q=" +
                          std::to_string(qq));
      }
    }
  }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key=value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::optional<std::map<std::string, std::string>> preset(const std::string& name) {
  // Unit atom: 2 k rho in [0.5, 20] is rho in [0.25, 10].
  if (name == "fig2") {
    return std::map<std::string, std::string>{
        {"atom", "unit"},         {"q", "2,3,5"},
        {"phi", "0.5"},           {"phi_mode", "fraction"},
        {"rho", "log0.25:10:41"}, {"regime", "full"},
    };
  }
  if (name == "fig3" || name == "fig4") {
    return std::map<std::string, std::string>{
        {"atom", "unit"},          {"q", "2,3,5"},
        {"phi", "0.05:0.95:19"},   {"phi_mode", "fraction"},
        {"rho", "0.5"},            {"regime", "full"},
    };
  }
  return std::nullopt;
}

SweepOutcome run_sweep(Command command, const SweepConfig& config,
                       std::ostream& out) {
  config.validate();
  AtomModel atom = [&] {
    try {
      return load_atom(config.atom_source);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("atom: ") + e.what());
    }
  }();
  const auto grid = build_grid(config);
  const auto rows = evaluate_grid(command, config, atom, grid);
  if (config.format == Format::csv) {
    write_csv(command, config, rows, out);
  } else {
    write_json(command, config, rows, out);
  }
  SweepOutcome outcome;
  outcome.total_rows = static_cast<int>(rows.size());
  outcome.boundary_rows = static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.boundary; }));
  return outcome;
}

}  // namespace wedgecp::cli
