#include "ptq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ptq/dynamics.hpp"
#include "ptq/entanglement.hpp"
#include "ptq/ep.hpp"
#include "ptq/error.hpp"

namespace ptq::cli {

namespace {

using io::Cell;
using io::Dataset;

std::string num(double v) { return io::format_number(v); }

std::string flag_text(const std::optional<ErrorCode>& flag) { return flag ? std::string(to_string(*flag)) : ""; }

Cell maybe(double v, bool defined) { return defined && std::isfinite(v) ? Cell(v) : Cell(); }

std::vector<double> sweep_grid(const SweepSpec& s) { return linspace(s.lo, s.hi, s.n); }

// --- spectrum ---------------------------------------------------------------

Dataset spectrum_dataset(const RunConfig& c) {
  Dataset d;
  d.params = c.params;
  if (!c.sweep) {
    const Spectrum s = solve_spectrum(c.params);
    const PhaseLabel phase = classify_phase(c.params);
    d.note("source", std::string(to_string(s.source)));
    d.note("phase", std::string(to_string(phase.phase)));
    d.note("max_residual", num(s.max_residual));
    d.table.columns = {"label", "re_E", "im_E", "re_v00", "im_v00", "re_v01", "im_v01",
                       "re_v10", "im_v10", "re_v11", "im_v11", "residual"};
    const ComplexMatrix4 h = build_hamiltonian(c.params);
    for (int k = 0; k < 4; ++k) {
      std::vector<Cell> row{"E" + std::to_string(k + 1)};
      io::push_complex(row, s.eigenvalues[k]);
      for (int a = 0; a < 4; ++a) io::push_complex(row, s.eigenvectors[k](a));
      row.emplace_back(eigen_residual(h, s.eigenvalues[k], s.eigenvectors[k]));
      d.table.add_row(std::move(row));
    }
    d.diagnostics["pt_symmetry_residual"] = pt_symmetry_residual(c.params);
    d.diagnostics["source"] = to_string(s.source);
    return d;
  }

  const auto grid = sweep_grid(*c.sweep);
  const auto rows = map_indices(
      grid.size(),
      [&](std::size_t i) {
        const SystemParams p = with_kappa(c.params, c.sweep->axis, grid[i]);
        const Spectrum s = solve_spectrum(p);
        std::vector<Cell> row{p.omega, p.j};
        for (const auto& e : s.eigenvalues) io::push_complex(row, e);
        row.emplace_back(std::string(to_string(classify_phase(p).phase)));
        row.emplace_back(s.max_residual);
        return row;
      },
      Exec::Parallel);
  d.note("sweep", std::string(to_string(c.sweep->axis)));
  d.table.columns = {"omega", "j", "re_E1", "im_E1", "re_E2", "im_E2", "re_E3", "im_E3",
                     "re_E4", "im_E4", "phase", "max_residual"};
  for (auto row : rows) d.table.add_row(std::move(row));
  return d;
}

// --- exceptional points -----------------------------------------------------

void push_ep(std::vector<Cell>& row, const EpPoint& ep) {
  row.emplace_back(ep.omega_c);
  row.emplace_back(ep.j_c);
  row.emplace_back(ep.residual_theta);
  row.emplace_back(ep.residual_x);
  row.emplace_back(ep.gap);
  io::push_complex(row, ep.e_degenerate);
  row.emplace_back(std::string(ep.second_order ? "EP2" : "higher"));
}

const std::vector<std::string> kEpColumns = {"omega_c", "j_c", "residual_theta", "residual_x",
                                             "gap", "re_E", "im_E", "order"};

EpPoint locate_on_axis(Kappa axis, const SystemParams& params, std::pair<double, double> range) {
  const EpSlice slice = axis == Kappa::J ? EpSlice{FixOmega{params.omega}} : EpSlice{FixJ{params.j}};
  const auto bracket = find_phase_bracket(slice, range, params.gamma);
  if (!bracket) throw Error(ErrorCode::NoSignChange, "no PT phase change in the sweep range");
  return locate_ep(slice, *bracket, 1e-8, params.gamma);
}

Dataset ep_locate_dataset(const RunConfig& c) {
  const SweepSpec sweep = c.sweep.value_or(SweepSpec{Kappa::J, 0.0, 3.0, 2});
  const EpPoint ep = locate_on_axis(sweep.axis, c.params, {sweep.lo, sweep.hi});
  Dataset d;
  d.params = c.params;
  d.note("swept", std::string(to_string(sweep.axis)));
  d.table.columns = kEpColumns;
  std::vector<Cell> row;
  push_ep(row, ep);
  d.table.add_row(std::move(row));
  return d;
}

Dataset ep_curve_dataset(const RunConfig& c) {
  if (!c.sweep) throw Error(ErrorCode::InvalidArgument, "ep-curve needs --sweep-range over omega");
  const auto points = ep_curve({c.sweep->lo, c.sweep->hi}, c.sweep->n, c.params.gamma);
  Dataset d;
  d.params = c.params;
  d.table.columns = {"omega", "j_c", "residual_theta", "residual_x", "gap", "re_E", "im_E", "status"};
  std::size_t gaps = 0;
  for (const auto& pt : points) {
    std::vector<Cell> row{pt.omega};
    if (pt.point) {
      row.insert(row.end(), {pt.point->j_c, pt.point->residual_theta, pt.point->residual_x, pt.point->gap,
                             pt.point->e_degenerate.real(), pt.point->e_degenerate.imag(), std::string("ok")});
    } else {
      ++gaps;
      row.insert(row.end(), {Cell(), Cell(), Cell(), Cell(), Cell(), Cell(), std::string("gap")});
      d.diagnostics["failures"].push_back({{"omega", pt.omega}, {"reason", pt.failure}});
    }
    d.table.add_row(std::move(row));
  }
  d.note("gaps", std::to_string(gaps));
  return d;
}

// --- eigenstate concurrence -------------------------------------------------

std::vector<Cell> concurrence_row(const SystemParams& p, nlohmann::ordered_json& discrepancies) {
  const Spectrum s = solve_spectrum(p);
  std::vector<Cell> row{p.omega, p.j};
  for (int k = 0; k < 4; ++k) row.emplace_back(concurrence_pure(s.eigenvectors[k]));
  if (std::abs(p.omega) > 1e-12) {
    for (int state : {3, 4}) {
      const auto cf = eigenstate_concurrence_closed(p, state);
      row.emplace_back(cf.closed_form);
      if (cf.discrepancy)
        discrepancies.push_back({{"omega", p.omega}, {"j", p.j}, {"state", state},
                                 {"closed_form", cf.closed_form}, {"wootters", cf.wootters}});
    }
  } else {
    row.emplace_back(Cell());
    row.emplace_back(Cell());
  }
  row.emplace_back(std::string(to_string(classify_phase(p).phase)));
  return row;
}

Dataset concurrence_dataset(const RunConfig& c, std::optional<SweepSpec> sweep) {
  Dataset d;
  d.params = c.params;
  d.table.columns = {"omega", "j", "C1", "C2", "C3", "C4", "C3_closed", "C4_closed", "phase"};
  const std::vector<double> grid = sweep ? sweep_grid(*sweep) : std::vector<double>{};
  const std::size_t n = sweep ? grid.size() : 1;
  std::vector<nlohmann::ordered_json> reports(n, nlohmann::ordered_json::array());
  const auto rows = map_indices(
      n,
      [&](std::size_t i) {
        const SystemParams p = sweep ? with_kappa(c.params, sweep->axis, grid[i]) : c.params;
        return concurrence_row(p, reports[i]);
      },
      Exec::Parallel);
  for (auto row : rows) d.table.add_row(std::move(row));
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (auto& r : reports)
    for (auto& item : r) all.push_back(item);
  d.diagnostics["discrepancy_reports"] = all;
  d.note("closed_form_discrepancies", std::to_string(all.size()));
  return d;
}

// --- dynamics ---------------------------------------------------------------

std::size_t auto_stride(const DynamicsSpec& dyn) {
  if (dyn.stride > 0) return dyn.stride;
  const double steps = dyn.t_max / dyn.dt;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(steps / 100000.0)));
}

Trajectory run_trajectory(const SystemParams& p, const DynamicsSpec& dyn) {
  return propagate(p, initial_state({dyn.theta_init}), dyn.t_max, dyn.dt, {auto_stride(dyn), false});
}

Dataset evolve_dataset(const RunConfig& c) {
  const Trajectory traj = run_trajectory(c.params, c.dynamics);
  Dataset d;
  d.params = c.params;
  d.note("theta_init", num(c.dynamics.theta_init));
  d.note("dt", num(c.dynamics.dt));
  if (traj.times.back() > 5.0) {
    if (const auto ss = detect_steady_state(traj, 5.0, 1e-3)) {
      d.note("steady_state_t", num(ss->t_ss));
      d.note("steady_state_C", num(ss->c_ss));
    } else {
      d.note("steady_state_t", "none");
    }
  }
  d.table.columns = {"t", "C", "sx1", "norm_log"};
  for (std::size_t i = 0; i < traj.size(); ++i)
    d.table.add_row({traj.times[i], traj.concurrence[i], traj.coherence_x[i], traj.norm_log[i]});
  return d;
}

Dataset revivals_dataset(const RunConfig& c) {
  const Trajectory traj = run_trajectory(c.params, c.dynamics);
  const auto revivals = detect_revivals(traj, 5.0);
  Dataset d;
  d.params = c.params;
  d.note("envelope_window", "5");
  d.note("collapse_fraction", "0.3");
  d.note("first_revival", revivals.empty() ? "none" : num(revivals.front()));
  d.table.columns = {"index", "t_revival"};
  for (std::size_t i = 0; i < revivals.size(); ++i)
    d.table.add_row({static_cast<long long>(i + 1), revivals[i]});
  return d;
}

// --- sensing ----------------------------------------------------------------

std::vector<SensingPoint> sensing_points(const RunConfig& c) {
  if (!c.sweep) return {sensing_point(c.params, Kappa::J)};
  const Kappa fixed = c.sweep->axis == Kappa::J ? Kappa::Omega : Kappa::J;
  return sensing_sweep(c.sweep->axis, kappa_value(c.params, fixed), {c.sweep->lo, c.sweep->hi}, c.sweep->n,
                       c.params.gamma);
}

Dataset qfi_dataset(const RunConfig& c) {
  Dataset d;
  d.params = c.params;
  const Kappa axis = c.sweep ? c.sweep->axis : Kappa::J;
  d.note("kappa", std::string(to_string(axis)));
  d.table.columns = {"kappa_value", "F", "log10_F", "flag"};
  for (const auto& pt : sensing_points(c)) {
    const bool ok = pt.qfi_defined() && pt.qfi > 0.0;
    d.table.add_row({pt.value, maybe(pt.qfi, pt.qfi_defined()), maybe(std::log10(pt.qfi), ok), flag_text(pt.qfi_flag)});
  }
  return d;
}

Dataset sense_dataset(const RunConfig& c) {
  Dataset d;
  d.params = c.params;
  const Kappa axis = c.sweep ? c.sweep->axis : Kappa::J;
  d.note("kappa", std::string(to_string(axis)));
  d.table.columns = {"kappa_value", "F", "variance_sq", "inverse_variance", "sx1", "cr_bound", "qfi_flag", "variance_flag"};
  for (const auto& pt : sensing_points(c)) {
    const bool var_ok = pt.variance_defined() && pt.variance_sq > 0.0;
    d.table.add_row({pt.value, maybe(pt.qfi, pt.qfi_defined()), maybe(pt.variance_sq, pt.variance_defined()),
                     maybe(1.0 / pt.variance_sq, var_ok), pt.coherence, maybe(pt.cr_bound, pt.qfi_defined()),
                     flag_text(pt.qfi_flag), flag_text(pt.variance_flag)});
  }
  return d;
}

// --- reproduction presets ---------------------------------------------------

Dataset fig2() {
  Dataset d;
  d.params = {0.0, 0.0, 1.0};
  const auto js = linspace(0.0, 1.2, 61);
  const auto omegas = linspace(0.1, 3.0, 59);
  const auto rows = map_indices(
      js.size() * omegas.size(),
      [&](std::size_t idx) {
        const SystemParams p{omegas[idx % omegas.size()], js[idx / omegas.size()], 1.0};
        const Eigenvalues e = solve_spectrum(p).eigenvalues;
        std::vector<Cell> row{p.j, p.omega};
        io::push_complex(row, e[2]);
        io::push_complex(row, e[3]);
        row.emplace_back(std::string(to_string(classify_phase(p).phase)));
        return row;
      },
      Exec::Parallel);
  d.table.columns = {"j", "omega", "re_E3", "im_E3", "re_E4", "im_E4", "phase"};
  for (auto row : rows) d.table.add_row(std::move(row));
  return d;
}

Dataset fig3(Kappa axis) {
  RunConfig c;
  c.params = axis == Kappa::J ? SystemParams{2.0, 0.0, 1.0} : SystemParams{0.0, 0.3, 1.0};
  const SweepSpec sweep = axis == Kappa::J ? SweepSpec{Kappa::J, 0.0, 1.0, 201} : SweepSpec{Kappa::Omega, 1.0, 2.5, 151};
  Dataset d = concurrence_dataset(c, sweep);
  const EpPoint ep = axis == Kappa::J ? locate_ep(FixOmega{2.0}, {0.3, 0.9}) : locate_ep(FixJ{0.3}, {1.2, 2.2});
  d.note(axis == Kappa::J ? "J_c" : "Omega_c", num(axis == Kappa::J ? ep.j_c : ep.omega_c));
  return d;
}

struct Series {
  std::string name;
  SystemParams params;
  double theta_init;
};

Dataset dynamics_figure(const std::vector<Series>& series, double t_max, std::size_t stride, bool revivals) {
  Dataset d;
  d.params = series.front().params;
  d.table.columns = {"series", "omega", "j", "gamma", "theta", "t", "C", "sx1", "norm_log"};
  const auto trajs = map_indices(
      series.size(),
      [&](std::size_t i) { return propagate(series[i].params, initial_state({series[i].theta_init}), t_max, 1e-3, {stride, false}); },
      Exec::Parallel);
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& traj = trajs[s];
    const auto& meta = series[s];
    const double cmax = *std::max_element(traj.concurrence.begin(), traj.concurrence.end());
    d.note(meta.name + ".max_C", num(cmax));
    const auto hit = std::find_if(traj.concurrence.begin(), traj.concurrence.end(), [](double v) { return v >= 0.99; });
    d.note(meta.name + ".first_t_C_ge_0.99", hit == traj.concurrence.end() ? "none" : num(traj.times[hit - traj.concurrence.begin()]));
    if (revivals) {
      const auto rv = detect_revivals(traj, 5.0);
      d.note(meta.name + ".first_revival", rv.empty() ? "none" : num(rv.front()));
    } else if (const auto ss = detect_steady_state(traj, 5.0, 1e-3)) {
      d.note(meta.name + ".steady_state_C", num(ss->c_ss));
    } else {
      d.note(meta.name + ".steady_state_C", "none");
    }
    for (std::size_t i = 0; i < traj.size(); ++i)
      d.table.add_row({meta.name, meta.params.omega, meta.params.j, meta.params.gamma, meta.theta_init, traj.times[i],
                       traj.concurrence[i], traj.coherence_x[i], traj.norm_log[i]});
  }
  return d;
}

struct SensingSeries {
  std::string name;
  double fixed;
};

Dataset sensing_figure(Kappa axis, const std::vector<SensingSeries>& series, std::pair<double, double> range,
                       std::size_t n, bool with_variance) {
  Dataset d;
  d.params = axis == Kappa::Omega ? SystemParams{0.0, series.front().fixed, 1.0} : SystemParams{series.front().fixed, 0.0, 1.0};
  d.note("kappa", std::string(to_string(axis)));
  d.table.columns = {"series", "fixed", "kappa_value", "F", "log10_F", "inverse_variance", "log10_inverse_variance",
                     "qfi_flag", "variance_flag"};
  for (const auto& s : series) {
    const auto pts = sensing_sweep(axis, s.fixed, range, n);
    double best = -1.0;
    double best_at = 0.0;
    for (const auto& pt : pts) {
      const bool f_ok = pt.qfi_defined() && pt.qfi > 0.0;
      const bool v_ok = with_variance && pt.variance_defined() && pt.variance_sq > 0.0;
      if (f_ok && pt.qfi > best) {
        best = pt.qfi;
        best_at = pt.value;
      }
      d.table.add_row({s.name, s.fixed, pt.value, maybe(pt.qfi, f_ok), maybe(std::log10(pt.qfi), f_ok),
                       maybe(1.0 / pt.variance_sq, v_ok), maybe(-std::log10(pt.variance_sq), v_ok),
                       flag_text(pt.qfi_flag), with_variance ? flag_text(pt.variance_flag) : std::string()});
    }
    d.note(s.name + ".peak_F_at", num(best_at));
  }
  return d;
}

Dataset reproduce_dataset(const std::string& preset) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double quarter_pi = std::numbers::pi / 4.0;
  Dataset d;
  if (preset == "fig2") d = fig2();
  else if (preset == "fig3a") d = fig3(Kappa::J);
  else if (preset == "fig3b") d = fig3(Kappa::Omega);
  else if (preset == "fig4")
    d = dynamics_figure({{"PTB", {2.0, 0.7, 1.0}, half_pi}, {"PTS", {2.0, 0.4, 1.0}, half_pi}}, 40.0, 10, false);
  else if (preset == "fig5a")
    d = dynamics_figure({{"J0.337", {1.7, 0.337, 1.0}, half_pi}, {"J0.336", {1.7, 0.336, 1.0}, half_pi}}, 2000.0, 100, true);
  else if (preset == "fig5b")
    d = dynamics_figure({{"Omega1.901", {1.901, 0.5, 1.0}, half_pi}, {"Omega1.902", {1.902, 0.5, 1.0}, half_pi}}, 2000.0, 100, true);
  else if (preset == "fig6a")
    d = dynamics_figure({{"theta_pi_2", {1.5, 0.01, 0.0}, half_pi}, {"theta_pi_4", {1.5, 0.01, 0.0}, quarter_pi}}, 200.0, 100, false);
  else if (preset == "fig6b")
    d = dynamics_figure({{"theta_pi_2", {1.5, 0.01, 1.1}, half_pi}, {"theta_pi_4", {1.5, 0.01, 1.1}, quarter_pi}}, 200.0, 100, false);
  else if (preset == "fig7a")
    d = sensing_figure(Kappa::Omega, {{"J0.300", 0.3}, {"J0.500", 0.5}}, {1.4, 2.2}, 801, false);
  else if (preset == "fig7b")
    d = sensing_figure(Kappa::J, {{"Omega1.700", 1.7}, {"Omega2.000", 2.0}}, {0.1, 0.9}, 801, false);
  else if (preset == "fig8a")
    d = sensing_figure(Kappa::Omega, {{"J0.300", 0.3}}, {1.4, 2.0}, 601, true);
  else if (preset == "fig8b")
    d = sensing_figure(Kappa::J, {{"Omega1.700", 1.7}}, {0.1, 0.6}, 501, true);
  else
    throw Error(ErrorCode::InvalidArgument, "unknown preset '" + preset + "'");
  d.metadata.insert(d.metadata.begin(), {"preset", preset});
  return d;
}

void validate(const RunConfig& c) {
  if (!c.params.is_finite()) throw Error(ErrorCode::InvalidArgument, "parameters must be finite");
  if (c.params.gamma < 0.0) throw Error(ErrorCode::InvalidArgument, "gamma must be non-negative");
  if (c.sweep) {
    if (!std::isfinite(c.sweep->lo) || !std::isfinite(c.sweep->hi))
      throw Error(ErrorCode::InvalidArgument, "sweep range must be finite");
    if (c.sweep->n < 1 || (c.sweep->n == 1 && c.sweep->lo != c.sweep->hi))
      throw Error(ErrorCode::InvalidArgument, "sweep needs n >= 2 (n = 1 only for a degenerate range)");
    if (c.sweep->lo > c.sweep->hi) throw Error(ErrorCode::InvalidArgument, "sweep range must satisfy a <= b");
  }
  const auto& dyn = c.dynamics;
  if (!std::isfinite(dyn.theta_init) || !(dyn.dt > 0.0) || !std::isfinite(dyn.dt) || !std::isfinite(dyn.t_max) ||
      dyn.t_max < dyn.dt)
    throw Error(ErrorCode::InvalidArgument, "dynamics flags need dt > 0 and tmax >= dt");
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2",  "fig3a", "fig3b", "fig4",  "fig5a", "fig5b",
                                                 "fig6a", "fig6b", "fig7a", "fig7b", "fig8a", "fig8b"};
  return names;
}

io::Dataset build_dataset(const RunConfig& c) {
  validate(c);
  switch (c.command) {
    case Command::Spectrum: return spectrum_dataset(c);
    case Command::EpLocate: return ep_locate_dataset(c);
    case Command::EpCurve: return ep_curve_dataset(c);
    case Command::Concurrence: return concurrence_dataset(c, c.sweep);
    case Command::Evolve: return evolve_dataset(c);
    case Command::Revivals: return revivals_dataset(c);
    case Command::Qfi: return qfi_dataset(c);
    case Command::Sense: return sense_dataset(c);
    case Command::Reproduce: return reproduce_dataset(c.preset);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command");
}

int run(const RunConfig& config, std::ostream& err) {
  try {
    const Dataset data = build_dataset(config);
    std::ostringstream buffer;
    if (config.format == Format::Json)
      io::write_json(buffer, data);
    else
      io::write_csv(buffer, data);
    if (config.out.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) {
        err << "ptq-sim: error code=InvalidArgument message=\"cannot open output " << config.out << "\"\n";
        return kExitUsage;
      }
      file << buffer.str();
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "ptq-sim: error code=" << to_string(e.code()) << " message=\"" << e.detail() << "\"\n";
    return is_validation_error(e.code()) ? kExitUsage : kExitNumerical;
  }
}

namespace {

std::optional<Kappa> parse_axis(const std::string& s) {
  if (s == "j" || s == "J") return Kappa::J;
  if (s == "omega" || s == "Omega") return Kappa::Omega;
  return std::nullopt;
}

bool parse_range(const std::string& s, double& lo, double& hi) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return false;
  try {
    std::size_t used = 0;
    lo = std::stod(s.substr(0, colon), &used);
    if (used != colon) return false;
    const std::string rest = s.substr(colon + 1);
    hi = std::stod(rest, &used);
    return used == rest.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& err) {
  CLI::App app{"Simulator for a PT-symmetric Ising-coupled qubit pair"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig config;
  std::string axis = "j";
  std::string range;
  std::size_t n = 101;
  std::string format = "csv";
  app.add_option("--omega", config.params.omega, "Rabi coupling Omega (units of gamma)");
  app.add_option("--j", config.params.j, "Ising coupling J (units of gamma)");
  app.add_option("--gamma", config.params.gamma, "gain/loss rate")->capture_default_str();
  app.add_option("--theta", config.dynamics.theta_init, "initial-state angle (radians)");
  app.add_option("--tmax", config.dynamics.t_max, "propagation time (1/gamma)");
  app.add_option("--dt", config.dynamics.dt, "RK4 step (1/gamma)");
  app.add_option("--stride", config.dynamics.stride, "record every k-th step (0 = automatic)");
  auto* axis_opt = app.add_option("--sweep-axis", axis, "swept parameter: omega or j");
  auto* range_opt = app.add_option("--sweep-range", range, "sweep interval a:b");
  app.add_option("--n", n, "number of sweep points");
  app.add_option("--out", config.out, "output file (default stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  const std::vector<std::pair<const char*, Command>> commands = {
      {"spectrum", Command::Spectrum}, {"ep-locate", Command::EpLocate}, {"ep-curve", Command::EpCurve},
      {"concurrence", Command::Concurrence}, {"evolve", Command::Evolve}, {"revivals", Command::Revivals},
      {"qfi", Command::Qfi}, {"sense", Command::Sense}, {"reproduce", Command::Reproduce}};
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, cmd] : commands) subs.emplace_back(app.add_subcommand(name), cmd);
  CLI::App* reproduce = subs.back().first;
  reproduce->add_option("preset", config.preset, "figure preset")->required()->check(CLI::IsMember(preset_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ptq-sim: error code=Usage message=\"" << e.what() << "\"\n";
    return kExitUsage;
  }

  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) config.command = cmd;
  config.format = format == "json" ? Format::Json : Format::Csv;

  if (config.command == Command::EpCurve) axis = "omega";
  if (range_opt->count() > 0 || axis_opt->count() > 0 || config.command == Command::EpCurve) {
    SweepSpec sweep;
    const auto parsed_axis = parse_axis(axis);
    if (!parsed_axis) {
      err << "ptq-sim: error code=Usage message=\"--sweep-axis must be omega or j\"\n";
      return kExitUsage;
    }
    sweep.axis = *parsed_axis;
    sweep.n = n;
    if (range_opt->count() == 0) {
      if (config.command == Command::EpLocate) {
        sweep.lo = 0.0;
        sweep.hi = 3.0;
      } else {
        err << "ptq-sim: error code=Usage message=\"--sweep-range a:b is required with a sweep\"\n";
        return kExitUsage;
      }
    } else if (!parse_range(range, sweep.lo, sweep.hi)) {
      err << "ptq-sim: error code=Usage message=\"--sweep-range expects a:b\"\n";
      return kExitUsage;
    }
    config.sweep = sweep;
  }
  return run(config, err);
}

}  // namespace ptq::cli
