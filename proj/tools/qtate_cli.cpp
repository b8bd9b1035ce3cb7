// qtate: verification tables for the quaternionic Tate Gamma functions, the
// conductor operator and the truncated trace.
//
// Usage:
//   qtate gamma-table   [--n-min 0 --n-max 4] [--s-grid 0.1:0.9:9,-5:5:11 | --tau-min/--tau-max/--tau-step] [--out f.csv]
//   qtate spectral-scan [--n-min --n-max --tau-min --tau-max --tau-step] [--out f.csv]
//   qtate functional-eq [--n-min --n-max --s-grid --tol] [--out f.csv]
//   qtate oracle-check  [--grid-l 2 --grid-m 33 --probes 10 --seed 1] [--out report.json]
//   qtate trace-sweep   [--n 0 --center 0 --width 1 --amplitude 1 --lambda-list 2,4,8,16 --tol] [--out f.csv]
//   qtate g-constant    [--tol 1e-6] [--out report.json]
//
// CSV files start with '#' followed by the run manifest as JSON. Tables written to
// a file get a JSON summary next to them (f.csv -> f.json); tables written to
// stdout send the summary to stderr.
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtate/additive_oracle.hpp"
#include "qtate/connes_trace.hpp"
#include "qtate/errors.hpp"
#include "qtate/gamma_op.hpp"
#include "qtate/specfun.hpp"

#ifndef QTATE_VERSION
#define QTATE_VERSION "unknown"
#endif

namespace {

using json = nlohmann::ordered_json;
using qtate::cdouble;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Options {
  int n_min = 0;
  int n_max = 4;
  double tau_min = -10.0;
  double tau_max = 10.0;
  double tau_step = 0.1;
  std::string s_grid;
  std::vector<double> lambdas{2.0, 4.0, 8.0, 16.0};
  std::size_t grid_m = 33;
  double grid_l = 2.0;
  std::size_t probes = 10;
  std::uint64_t seed = 1;
  std::string out;
  double tol = 1e-6;
  int n = 0;
  double center = 0.0;
  double width = 1.0;
  double amplitude = 1.0;
};

void check_modes(const Options& o) {
  if (o.n_min < 0 || o.n_max < o.n_min) throw UsageError("need 0 <= --n-min <= --n-max");
}

std::vector<double> tau_points(const Options& o) {
  if (!(o.tau_step > 0.0) || !std::isfinite(o.tau_step)) throw UsageError("--tau-step must be positive");
  if (!(o.tau_min <= o.tau_max)) throw UsageError("need --tau-min <= --tau-max");
  const double count = std::floor((o.tau_max - o.tau_min) / o.tau_step + 1e-9) + 1.0;
  if (count > 1e8) throw UsageError("tau grid too large");
  std::vector<double> out;
  for (std::size_t k = 0; k < static_cast<std::size_t>(count); ++k) out.push_back(o.tau_min + o.tau_step * k);
  return out;
}

struct Axis {
  double lo;
  double hi;
  std::size_t count;
  double at(std::size_t k) const { return count == 1 ? lo : lo + (hi - lo) * k / static_cast<double>(count - 1); }
};

Axis parse_axis(const std::string& text) {
  std::istringstream in(text);
  Axis a{};
  char c1 = 0, c2 = 0;
  long long count = -1;
  if (!(in >> a.lo >> c1 >> a.hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 0 || !in.eof()) {
    throw UsageError("bad --s-grid axis '" + text + "', expected lo:hi:count");
  }
  a.count = static_cast<std::size_t>(count);
  return a;
}

/// "re_lo:re_hi:n,im_lo:im_hi:m", endpoints included; every point must lie in the open strip.
std::vector<qtate::CriticalStripPoint> strip_points(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw UsageError("--s-grid needs two comma-separated axes");
  const Axis re = parse_axis(spec.substr(0, comma));
  const Axis im = parse_axis(spec.substr(comma + 1));
  if (re.count * im.count > 10000000) throw UsageError("--s-grid too large");
  std::vector<qtate::CriticalStripPoint> out;
  for (std::size_t i = 0; i < re.count; ++i) {
    for (std::size_t j = 0; j < im.count; ++j) {
      try {
        out.emplace_back(cdouble(re.at(i), im.at(j)));
      } catch (const std::domain_error&) {
        throw UsageError("--s-grid leaves the open strip 0 < Re(s) < 1");
      }
    }
  }
  return out;
}

class Run {
 public:
  Run(std::string command, json parameters)
      : start_(std::chrono::steady_clock::now()) {
    manifest_["command"] = std::move(command);
    manifest_["version"] = QTATE_VERSION;
    manifest_["parameters"] = std::move(parameters);
  }

  json& manifest() { return manifest_; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  /// Manifest plus wall-clock time, for JSON summaries and reports.
  json timed_manifest() const {
    json m = manifest_;
    m["wall_clock_seconds"] = elapsed();
    return m;
  }

 private:
  json manifest_;
  std::chrono::steady_clock::time_point start_;
};

std::ofstream open_file(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  return f;
}

class Table {
 public:
  Table(const std::string& path, const json& manifest, const std::vector<std::string>& header) : path_(path) {
    if (!path.empty()) file_ = open_file(path);
    out() << '#' << manifest.dump() << '\n';
    row(header);
  }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out() << (k ? "," : "") << cells[k];
    out() << '\n';
  }

  /// Writes the summary next to the table, or to stderr when the table went to stdout.
  void finish(const json& summary) {
    out().flush();
    if (path_.empty()) {
      std::cerr << summary.dump(2) << '\n';
      return;
    }
    std::filesystem::path p(path_);
    p.replace_extension(".json");
    if (p == std::filesystem::path(path_)) p += ".summary.json";
    auto f = open_file(p.string());
    f << summary.dump(2) << '\n';
  }

 private:
  std::ostream& out() { return path_.empty() ? std::cout : static_cast<std::ostream&>(file_); }

  std::string path_;
  std::ofstream file_;
};

void write_report(const std::string& path, const json& report) {
  if (path.empty()) {
    std::cout << report.dump(2) << '\n';
    return;
  }
  auto f = open_file(path);
  f << report.dump(2) << '\n';
}

int gamma_table(const Options& o) {
  check_modes(o);
  const bool strip_mode = !o.s_grid.empty();
  std::vector<qtate::CriticalStripPoint> points;
  if (strip_mode) {
    points = strip_points(o.s_grid);
  } else {
    for (double tau : tau_points(o)) points.push_back(qtate::CriticalStripPoint::on_critical_line(tau));
  }
  json p{{"n_min", o.n_min}, {"n_max", o.n_max}};
  if (strip_mode) {
    p["s_grid"] = o.s_grid;
  } else {
    p["tau_min"] = o.tau_min;
    p["tau_max"] = o.tau_max;
    p["tau_step"] = o.tau_step;
  }
  Run run("gamma-table", p);
  Table table(o.out, run.manifest(), {"N", "re_s", "im_s", "re_gamma", "im_gamma", "abs_gamma"});
  double worst_unit = 0.0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    for (const auto& s : points) {
      const cdouble g = qtate::gamma_N(qtate::AngularMode(static_cast<unsigned>(n)), s);
      if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) throw qtate::NumericalError("non-finite Gamma_N");
      if (s.value().real() == 0.5) worst_unit = std::max(worst_unit, std::abs(std::abs(g) - 1.0));
      table.row({std::to_string(n), num(s.value().real()), num(s.value().imag()), num(g.real()), num(g.imag()),
                 num(std::abs(g))});
    }
  }
  table.finish({{"manifest", run.timed_manifest()},
                {"rows", points.size() * static_cast<std::size_t>(o.n_max - o.n_min + 1)},
                {"max_unit_deviation_on_critical_line", worst_unit}});
  return 0;
}

int spectral_scan(const Options& o) {
  check_modes(o);
  const auto taus = tau_points(o);
  Run run("spectral-scan", {{"n_min", o.n_min},
                            {"n_max", o.n_max},
                            {"tau_min", o.tau_min},
                            {"tau_max", o.tau_max},
                            {"tau_step", o.tau_step}});
  Table table(o.out, run.manifest(), {"N", "tau", "h", "k"});
  json min_h{{"value", nullptr}, {"N", nullptr}, {"tau", nullptr}};
  json max_k{{"value", nullptr}, {"N", nullptr}, {"tau", nullptr}};
  double best_h = INFINITY, best_k = -1.0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const qtate::AngularMode mode(static_cast<unsigned>(n));
    for (double tau : taus) {
      const double h = qtate::h_N(mode, tau);
      const double k = qtate::k_N(mode, tau);
      if (!std::isfinite(h) || !std::isfinite(k)) throw qtate::NumericalError("non-finite h_N or k_N");
      if (h < best_h) {
        best_h = h;
        min_h = {{"value", h}, {"N", n}, {"tau", tau}};
      }
      if (std::abs(k) > best_k) {
        best_k = std::abs(k);
        max_k = {{"value", std::abs(k)}, {"N", n}, {"tau", tau}};
      }
      table.row({std::to_string(n), num(tau), num(h), num(k)});
    }
  }
  table.finish({{"manifest", run.timed_manifest()}, {"min_h", min_h}, {"max_abs_k", max_k}});
  return 0;
}

int functional_eq(const Options& o) {
  check_modes(o);
  const std::string grid = o.s_grid.empty() ? "0.025:0.975:20,-2.85:2.85:20" : o.s_grid;
  const auto points = strip_points(grid);
  Run run("functional-eq", {{"n_min", o.n_min}, {"n_max", o.n_max}, {"s_grid", grid}, {"tol", o.tol}});
  Table table(o.out, run.manifest(), {"N", "re_s", "im_s", "residual", "quadrature_error"});
  double worst = 0.0, worst_quad = 0.0;
  for (int n = o.n_min; n <= o.n_max; ++n) {
    const qtate::AngularMode mode(static_cast<unsigned>(n));
    for (const auto& s : points) {
      const double r = qtate::functional_equation_residual(mode, s);
      const cdouble closed = qtate::gaussian_moment(mode, s);
      const double q = std::abs(qtate::gaussian_moment_quadrature(mode, s) - closed) / std::abs(closed);
      if (!std::isfinite(r) || !std::isfinite(q)) throw qtate::NumericalError("non-finite residual");
      worst = std::max(worst, r);
      worst_quad = std::max(worst_quad, q);
      table.row({std::to_string(n), num(s.value().real()), num(s.value().imag()), num(r), num(q)});
    }
  }
  const bool ok = worst <= o.tol && worst_quad <= o.tol;
  table.finish({{"manifest", run.timed_manifest()},
                {"max_residual", worst},
                {"max_quadrature_error", worst_quad},
                {"tol", o.tol},
                {"pass", ok}});
  return ok ? 0 : 1;
}

std::vector<qtate::Quaternion> random_probes(std::size_t count, double r_min, double r_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(r_min, r_max);
  std::vector<qtate::Quaternion> out;
  while (out.size() < count) {
    const qtate::Quaternion q{normal(rng), normal(rng), normal(rng), normal(rng)};
    const double n = std::sqrt(qtate::reduced_norm(q));
    if (n < 1e-12) continue;
    out.push_back((radius(rng) / n) * q);
  }
  return out;
}

double max_relative_error(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  double diff = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    ref = std::max(ref, std::abs(b[i]));
  }
  return ref > 0.0 ? diff / ref : diff;
}

int oracle_check(const Options& o) {
  if (o.probes < 1) throw UsageError("--probes must be at least 1");
  if (o.grid_m < 3 || o.grid_m % 2 == 0) throw UsageError("--grid-m must be odd and >= 3");
  if (!(o.grid_l > 0.0)) throw UsageError("--grid-l must be positive");
  Run run("oracle-check", {{"grid_l", o.grid_l}, {"grid_m", o.grid_m}, {"probes", o.probes}, {"seed", o.seed}});
  const qtate::Grid4D grid(o.grid_l, o.grid_m);

  const auto omega = [](const qtate::Quaternion& x) {
    return cdouble(std::exp(-2.0 * std::numbers::pi * qtate::reduced_norm(x)), 0.0);
  };
  const qtate::GridFunction w = qtate::GridFunction::sample(grid, omega);
  const auto ys = random_probes(o.probes, 0.0, 1.0, o.seed);
  std::vector<cdouble> expected;
  for (const auto& y : ys) expected.push_back(omega(y));
  json report{{"manifest", nullptr},
              {"self_dual_gaussian",
               {{"relative_error", max_relative_error(qtate::brute_fourier(w, ys), expected)},
                {"boundary_level", w.boundary_level()}}}};

  const auto ys2 = random_probes(o.probes, 0.4, 1.0, o.seed + 1);
  json modes = json::array();
  for (unsigned n = 0; n <= 2; ++n) {
    const auto f = qtate::IsotypicFunction::from_log_profile(
        qtate::AngularMode(n), [](double v) { return cdouble(std::exp(-2.0 * v * v), 0.0); });
    const auto input = qtate::GridFunction::sample_additive(grid, qtate::to_additive(qtate::inversion(f)));
    const auto brute = qtate::brute_fourier(input, ys2);
    const auto multiplied = qtate::to_additive(qtate::gamma_transform(f));
    std::vector<cdouble> via_multiplier;
    for (const auto& y : ys2) via_multiplier.push_back(multiplied(y));
    modes.push_back({{"N", n},
                     {"relative_error", max_relative_error(brute, via_multiplier)},
                     {"boundary_level", input.boundary_level()}});
  }
  report["multiplier_vs_brute_force"] = modes;
  report["manifest"] = run.timed_manifest();
  write_report(o.out, report);
  return 0;
}

int trace_sweep(const Options& o) {
  if (o.n < 0) throw UsageError("--n must be nonnegative");
  if (!(o.width > 0.0)) throw UsageError("--width must be positive");
  const double center = o.center, width = o.width, amplitude = o.amplitude;
  const auto f = qtate::IsotypicFunction::from_log_profile(
      qtate::AngularMode(static_cast<unsigned>(o.n)), [=](double v) {
        const double x = (v - center) / width;
        return cdouble(amplitude * std::exp(-0.5 * x * x), 0.0);
      });
  qtate::TraceConfig config{f, o.lambdas, {}};
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Run run("trace-sweep", {{"n", o.n},
                          {"center", o.center},
                          {"width", o.width},
                          {"amplitude", o.amplitude},
                          {"lambda_list", o.lambdas},
                          {"tol", o.tol},
                          {"radial_nodes", config.options.radial_nodes},
                          {"remainder_depth", config.options.remainder_depth},
                          {"quadrature_tol", config.options.tol}});
  const auto results = qtate::residual_sweep(config);
  Table table(o.out, run.manifest(),
              {"lambda", "two_log_lambda", "re_trace_direct", "im_trace_direct", "re_trace_spectral",
               "im_trace_spectral", "re_residual", "im_residual", "re_residual_direct", "im_residual_direct"});
  double routes = 0.0;
  json rates = json::array();
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    const double scale = std::abs(r.trace_direct);
    const double d = std::abs(r.trace_direct - r.trace_spectral);
    routes = std::max(routes, scale > 0.0 ? d / scale : d);
    table.row({num(r.lambda), num(2.0 * std::log(r.lambda)), num(r.trace_direct.real()), num(r.trace_direct.imag()),
               num(r.trace_spectral.real()), num(r.trace_spectral.imag()), num(r.residual.real()),
               num(r.residual.imag()), num(r.residual_direct.real()), num(r.residual_direct.imag())});
    if (k > 0 && std::abs(r.residual) > 0.0 && std::abs(results[k - 1].residual) > 0.0) {
      rates.push_back(std::log(std::abs(r.residual) / std::abs(results[k - 1].residual)) /
                      std::log(r.lambda / results[k - 1].lambda));
    }
  }
  const cdouble f1 = f.value_at_one();
  const cdouble h1 = results.front().h_at_one;
  json summary{{"manifest", run.timed_manifest()},
               {"f_at_one", {f1.real(), f1.imag()}},
               {"h_at_one", {h1.real(), h1.imag()}},
               {"max_route_discrepancy", routes},
               {"residual_log_slopes", rates},
               {"tol", o.tol}};
  if (results.size() >= 2) {
    const auto fit = qtate::fit_leading_term(results);
    summary["fit"] = {{"slope", fit.slope}, {"intercept", fit.intercept}};
  }
  const bool ok = routes <= o.tol;
  summary["pass"] = ok;
  table.finish(summary);
  return ok ? 0 : 1;
}

int g_constant(const Options& o) {
  if (!(o.tol >= 1e-10)) throw UsageError("--tol must be at least 1e-10");
  Run run("g-constant", {{"tol", o.tol}});
  const auto e = qtate::gamma0_expansion(2, o.tol);
  const double closed = qtate::g_distribution_constant();
  json report{{"manifest", nullptr},
              {"eps_coefficient", e.coefficients[0]},
              {"eps2_coefficient", e.coefficients[1]},
              {"closed_form", closed},
              {"difference", e.coefficients[1] - closed},
              {"convergence", e.convergence}};
  report["manifest"] = run.timed_manifest();
  write_report(o.out, report);
  return std::abs(e.coefficients[1] - closed) <= o.tol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic Tate Gamma functions, conductor operator and truncated trace"};
  app.set_version_flag("--version", QTATE_VERSION);
  app.require_subcommand(1);
  Options o;

  auto modes = [&](CLI::App* c) {
    c->add_option("--n-min", o.n_min, "Smallest sector N")->capture_default_str();
    c->add_option("--n-max", o.n_max, "Largest sector N")->capture_default_str();
  };
  auto taus = [&](CLI::App* c) {
    c->add_option("--tau-min", o.tau_min)->capture_default_str();
    c->add_option("--tau-max", o.tau_max)->capture_default_str();
    c->add_option("--tau-step", o.tau_step)->capture_default_str();
  };
  auto out = [&](CLI::App* c) { c->add_option("--out", o.out, "Output path (default stdout)"); };

  auto* gamma = app.add_subcommand("gamma-table", "Gamma_N on a strip grid or gamma_N on a tau grid");
  modes(gamma);
  taus(gamma);
  gamma->add_option("--s-grid", o.s_grid, "re_lo:re_hi:n,im_lo:im_hi:m (overrides the tau grid)");
  out(gamma);

  auto* scan = app.add_subcommand("spectral-scan", "h_N and k_N on a tau grid");
  modes(scan);
  taus(scan);
  out(scan);

  auto* fe = app.add_subcommand("functional-eq", "Gaussian-moment residuals of the local functional equation");
  modes(fe);
  fe->add_option("--s-grid", o.s_grid, "re_lo:re_hi:n,im_lo:im_hi:m")->default_str("0.025:0.975:20,-2.85:2.85:20");
  fe->add_option("--tol", o.tol, "Failure threshold")->default_str("1e-9");
  out(fe);

  auto* oracle = app.add_subcommand("oracle-check", "Brute-force 4D Fourier transform against closed forms");
  oracle->add_option("--grid-l", o.grid_l, "Grid half-width")->capture_default_str();
  oracle->add_option("--grid-m", o.grid_m, "Points per axis (odd)")->capture_default_str();
  oracle->add_option("--probes", o.probes)->capture_default_str();
  oracle->add_option("--seed", o.seed)->capture_default_str();
  out(oracle);

  auto* trace = app.add_subcommand("trace-sweep", "Truncated trace by two routes over a Lambda list");
  trace->add_option("--n", o.n, "Sector N")->capture_default_str();
  trace->add_option("--center", o.center, "Profile center in v = log|g|")->capture_default_str();
  trace->add_option("--width", o.width, "Profile standard deviation")->capture_default_str();
  trace->add_option("--amplitude", o.amplitude)->capture_default_str();
  trace->add_option("--lambda-list", o.lambdas, "Comma-separated cutoffs")->delimiter(',')->capture_default_str();
  trace->add_option("--tol", o.tol, "Failure threshold for route discrepancy")->default_str("1e-4");
  out(trace);

  auto* gconst = app.add_subcommand("g-constant", "eps^2 coefficient of 2 pi^2 Gamma_0(1 - eps)");
  gconst->add_option("--tol", o.tol)->capture_default_str();
  out(gconst);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (fe->parsed() && fe->count("--tol") == 0) o.tol = 1e-9;
  if (trace->parsed() && trace->count("--tol") == 0) o.tol = 1e-4;

  try {
    if (gamma->parsed()) return gamma_table(o);
    if (scan->parsed()) return spectral_scan(o);
    if (fe->parsed()) return functional_eq(o);
    if (oracle->parsed()) return oracle_check(o);
    if (trace->parsed()) return trace_sweep(o);
    if (gconst->parsed()) return g_constant(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
