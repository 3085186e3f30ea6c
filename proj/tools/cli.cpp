#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "confined_atom/bound_state.hpp"
#include "confined_atom/dalgarno_lewis.hpp"
#include "confined_atom/errors.hpp"
#include "confined_atom/fowler.hpp"
#include "confined_atom/resonance.hpp"
#include "confined_atom/spectral_oracle.hpp"
#include "confined_atom/units.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace confined_atom::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AtomOptions {
  double charge = 0.0;
  std::optional<double> wall;
  bool isolated = false;
};

void add_atom_options(CLI::App* cmd, AtomOptions& o) {
  cmd->add_option("--Z", o.charge, "Effective charge Z (a.u.)")->required();
  auto* a = cmd->add_option("--a", o.wall, "Wall distance a (a.u.)");
  auto* iso = cmd->add_flag("--isolated", o.isolated, "Atom without a wall");
  a->excludes(iso);
}

AtomConfig make_config(const AtomOptions& o) {
  if (o.isolated) return AtomConfig::isolated(o.charge);
  if (!o.wall) throw UsageError("either --a or --isolated is required");
  return AtomConfig::near_wall(o.charge, *o.wall);
}

Cell wall_cell(const AtomConfig& cfg) {
  if (cfg.is_isolated()) return std::string("isolated");
  return cfg.wall_distance();
}

std::string wall_parameter(const AtomConfig& cfg) {
  return cfg.is_isolated() ? "isolated" : format_parameter(cfg.wall_distance());
}

struct OutputOptions {
  std::string path;
  bool json = false;
};

int emit(const Report& report, const OutputOptions& o, std::ostream& out, std::ostream& err) {
  if (o.path.empty()) {
    o.json ? write_json(report, out) : write_csv(report, out);
    return ExitCode::ok;
  }
  std::ofstream file(o.path);
  if (!file) {
    err << "error: cannot open output file " << o.path << '\n';
    return ExitCode::io_error;
  }
  o.json ? write_json(report, file) : write_csv(report, file);
  file.flush();
  if (!file) {
    err << "error: failed writing " << o.path << '\n';
    return ExitCode::io_error;
  }
  return ExitCode::ok;
}

// ---- bound ------------------------------------------------------------------

struct BoundArgs {
  AtomOptions atom;
  OutputOptions output;
};

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  const AtomConfig cfg = make_config(args.atom);
  const BoundState bs = solve_bound_state(cfg);
  Report r{"bound", {{"Z", format_parameter(cfg.charge())}, {"a", wall_parameter(cfg)}}, {}};
  Table t{"bound", {"Z", "a", "k_b", "energy", "norm_A", "energy_ev", "bound"}, {}};
  t.rows.push_back({cfg.charge(), wall_cell(cfg), bs.wave_vector, bs.energy, bs.norm,
                    units::energy_to_ev(bs.energy), true});
  r.tables.push_back(std::move(t));
  return emit(r, args.output, out, err);
}

// ---- static-sweep -----------------------------------------------------------

struct SweepArgs {
  double charge = 0.0;
  double a_min = 0.0;
  double a_max = 0.0;
  int points = 100;
  bool compare_asymptotic = false;
  bool compare_isolated = false;
  OutputOptions output;
};

int cmd_static_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (!(args.a_min > 0.0) || !(args.a_max >= args.a_min) || args.points < 1)
    throw UsageError("need 0 < a-min <= a-max and points >= 1");
  const AtomConfig isolated = AtomConfig::isolated(args.charge);
  const double alpha_isolated = static_polarizability(solve_bound_state(isolated), isolated);

  std::vector<double> grid(args.points);
  for (int i = 0; i < args.points; ++i)
    grid[i] = args.points == 1 ? args.a_min
                               : args.a_min * std::pow(args.a_max / args.a_min,
                                                       static_cast<double>(i) / (args.points - 1));
  std::vector<std::optional<std::vector<Cell>>> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const AtomConfig cfg = AtomConfig::near_wall(args.charge, grid[i]);
    if (!supports_bound_state(cfg)) return;
    const BoundState bs = solve_bound_state(cfg);
    const double nan = std::nan("");
    rows[i] = std::vector<Cell>{grid[i], bs.wave_vector, static_polarizability(bs, cfg),
                                args.compare_isolated ? alpha_isolated : nan,
                                args.compare_asymptotic ? asymptotic_polarizability(bs) : nan};
  });

  Report r{"static-sweep",
           {{"Z", format_parameter(args.charge)},
            {"a-min", format_parameter(args.a_min)},
            {"a-max", format_parameter(args.a_max)},
            {"points", std::to_string(args.points)},
            {"compare-asymptotic", args.compare_asymptotic ? "1" : "0"},
            {"compare-isolated", args.compare_isolated ? "1" : "0"}},
           {}};
  Table t{"static", {"a", "k_b", "alpha", "alpha_isolated", "alpha_asymptotic"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (rows[i])
      t.rows.push_back(*rows[i]);
    else
      err << "note: no bound state at a=" << format_parameter(grid[i]) << " (Z <= 1/(2a)), row omitted\n";
  }
  r.tables.push_back(std::move(t));
  return emit(r, args.output, out, err);
}

// ---- resonance --------------------------------------------------------------

struct ResonanceArgs {
  AtomOptions atom;
  std::vector<double> fields;
  OutputOptions output;
};

int cmd_resonance(const ResonanceArgs& args, std::ostream& out, std::ostream& err) {
  const AtomConfig cfg = make_config(args.atom);
  const BoundState bs = solve_bound_state(cfg);
  for (double F : args.fields)
    if (!(F >= 0.0)) throw UsageError("field strengths must be >= 0");

  const std::size_t n = args.fields.size();
  std::vector<std::vector<Cell>> rows(n);
  std::vector<bool> failed(n, false), warned(n, false);
  parallel_for(n, [&](std::size_t i) {
    const double F = args.fields[i];
    const double pert = stark_shift_through_second_order(bs, cfg, F);
    const double asym_shift = asymptotic_stark_shift(bs, F);
    const double asym_gamma = asymptotic_ionization_rate(bs, cfg, F);
    const double asym_log = asymptotic_log_ionization_rate(bs, cfg, F);
    if (F == 0.0) {
      rows[i] = {F, bs.energy, 0.0, 0.0, 0.0, -INFINITY, asym_shift, asym_gamma, asym_log, pert, true, true};
      return;
    }
    ResonanceResult res;
    try {
      res = solve_resonance(cfg, F);
    } catch (const NumericalError&) {
      res.converged = false;
      res.energy = std::nan("");
      res.stark_shift = res.gamma = res.log_gamma = std::nan("");
    }
    failed[i] = !res.converged;
    warned[i] = !res.within_validity;
    rows[i] = {F, res.energy.real(), res.energy.imag(), res.stark_shift, res.gamma, res.log_gamma,
               asym_shift, asym_gamma, asym_log, pert, res.converged, res.within_validity};
  });

  std::size_t attempted = 0, failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (args.fields[i] > 0.0) ++attempted;
    if (failed[i]) {
      ++failures;
      err << "warning: resonance did not converge at F=" << format_parameter(args.fields[i]) << '\n';
    }
    if (warned[i])
      err << "warning: F=" << format_parameter(args.fields[i])
          << " exceeds the weak-field range F <= 0.3 k_b^3\n";
  }

  Report r{"resonance",
           {{"Z", format_parameter(cfg.charge())}, {"a", wall_parameter(cfg)}, {"F", format_list(args.fields)}},
           {}};
  r.tables.push_back({"resonance",
                      {"F", "re_energy", "im_energy", "stark_shift", "gamma", "log_gamma", "asymptotic_shift",
                       "asymptotic_gamma", "asymptotic_log_gamma", "perturbative_shift", "converged",
                       "within_validity"},
                      std::move(rows)});
  const int code = emit(r, args.output, out, err);
  if (code != ExitCode::ok) return code;
  return attempted > 0 && failures == attempted ? ExitCode::numerical_failure : ExitCode::ok;
}

// ---- dynamic ----------------------------------------------------------------

struct DynamicArgs {
  double charge = 0.0;
  std::vector<double> walls;
  bool isolated = false;
  double omega_min = 0.0;
  double omega_max = 1.0;
  int omega_points = 201;
  double eta = default_eta;
  OutputOptions output;
};

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  return g;
}

int cmd_dynamic(const DynamicArgs& args, std::ostream& out, std::ostream& err) {
  if (args.walls.empty() && !args.isolated) throw UsageError("give at least one --a or --isolated");
  if (args.omega_points < 1 || !(args.omega_max >= args.omega_min) || args.omega_min < 0.0)
    throw UsageError("need 0 <= omega-min <= omega-max and omega-points >= 1");
  if (!(args.eta >= 0.0)) throw UsageError("eta must be >= 0");

  std::vector<AtomConfig> configs;
  for (double a : args.walls) {
    const AtomConfig cfg = AtomConfig::near_wall(args.charge, a);
    if (supports_bound_state(cfg))
      configs.push_back(cfg);
    else
      err << "note: no bound state at a=" << format_parameter(a) << " (Z <= 1/(2a)), block omitted\n";
  }
  if (args.isolated) configs.push_back(AtomConfig::isolated(args.charge));
  if (configs.empty()) throw NoBoundState("no bound state for any requested distance");

  std::vector<BoundState> states;
  for (const auto& cfg : configs) states.push_back(solve_bound_state(cfg));
  const std::vector<double> omegas = linear_grid(args.omega_min, args.omega_max, args.omega_points);
  const std::size_t m = omegas.size();
  std::vector<cplx> alpha(configs.size() * m);
  parallel_for(alpha.size(), [&](std::size_t idx) {
    const std::size_t c = idx / m;
    alpha[idx] = dynamic_polarizability(states[c], configs[c], omegas[idx % m], args.eta);
  });

  std::string walls = format_list(args.walls);
  if (args.isolated) walls += walls.empty() ? "isolated" : ",isolated";
  Report r{"dynamic",
           {{"Z", format_parameter(args.charge)},
            {"a", walls},
            {"omega-min", format_parameter(args.omega_min)},
            {"omega-max", format_parameter(args.omega_max)},
            {"omega-points", std::to_string(args.omega_points)},
            {"eta", format_parameter(args.eta)}},
           {}};
  Table t{"dynamic", {"a", "omega", "re_alpha", "im_alpha"}, {}};
  for (std::size_t c = 0; c < configs.size(); ++c)
    for (std::size_t j = 0; j < m; ++j) {
      const cplx v = alpha[c * m + j];
      t.rows.push_back({wall_cell(configs[c]), omegas[j], v.real(), v.imag()});
    }
  r.tables.push_back(std::move(t));
  return emit(r, args.output, out, err);
}

// ---- oracle -----------------------------------------------------------------

struct OracleArgs {
  AtomOptions atom;
  std::optional<double> length;
  std::size_t points = 8000;
  std::vector<double> omegas;
  double eta = default_eta;
  OutputOptions output;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  const AtomConfig cfg = make_config(args.atom);
  const BoundState bs = solve_bound_state(cfg);
  const OracleBox box = default_oracle_box(bs);
  const double length = args.length.value_or(box.length);
  if (!(length > 0.0) || args.points < 500) throw UsageError("need L > 0 and N >= 500");
  const SpectralModel model = make_spectral_model(cfg, length, args.points);

  Report r{"oracle",
           {{"Z", format_parameter(cfg.charge())},
            {"a", wall_parameter(cfg)},
            {"L", format_parameter(length)},
            {"N", std::to_string(args.points)},
            {"omega", format_list(args.omegas)},
            {"eta", format_parameter(args.eta)}},
           {}};
  Table summary{"oracle", {"Z", "a", "L", "N", "h", "E0", "eps_b", "alpha_oracle", "alpha_exact", "trk_sum"}, {}};
  summary.rows.push_back({cfg.charge(), wall_cell(cfg), model.grid.right, static_cast<double>(model.size()),
                          model.grid.spacing, model.energies.front(), bs.energy, static_alpha_oracle(model),
                          static_polarizability(bs, cfg), trk_sum(model)});
  r.tables.push_back(std::move(summary));
  if (!args.omegas.empty()) {
    Table dyn{"dynamic", {"omega", "re_oracle", "im_oracle", "re_alpha", "im_alpha"}, {}};
    for (double w : args.omegas) {
      const cplx o = dynamic_alpha_oracle(model, w, args.eta);
      const cplx f = dynamic_polarizability(bs, cfg, w, args.eta);
      dyn.rows.push_back({w, o.real(), o.imag(), f.real(), f.imag()});
    }
    r.tables.push_back(std::move(dyn));
  }
  return emit(r, args.output, out, err);
}

void add_output_options(CLI::App* cmd, OutputOptions& o, bool with_file) {
  cmd->add_flag("--json", o.json, "Write one JSON document instead of CSV");
  if (with_file) cmd->add_option("--out", o.path, "Output file (default: stdout)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta-function atom near a hard wall: bound state, Stark resonance and polarizabilities"};
  app.name("confined-atom");
  app.require_subcommand(1);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Bound state k_b, energy and normalization");
  add_atom_options(bound, bound_args.atom);
  add_output_options(bound, bound_args.output, false);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("static-sweep", "Static polarizability on a log-spaced a grid");
  sweep->add_option("--Z", sweep_args.charge, "Effective charge Z (a.u.)")->required();
  sweep->add_option("--a-min", sweep_args.a_min, "Smallest wall distance")->required();
  sweep->add_option("--a-max", sweep_args.a_max, "Largest wall distance")->required();
  sweep->add_option("--points", sweep_args.points, "Number of grid points")->capture_default_str();
  sweep->add_flag("--compare-asymptotic", sweep_args.compare_asymptotic, "Fill alpha_asymptotic = 5/(4 k_b^4)");
  sweep->add_flag("--compare-isolated", sweep_args.compare_isolated, "Fill alpha_isolated = 5/(4 Z^4)");
  add_output_options(sweep, sweep_args.output, true);

  ResonanceArgs res_args;
  auto* resonance = app.add_subcommand("resonance", "Complex Stark resonance for one or more fields");
  add_atom_options(resonance, res_args.atom);
  resonance->add_option("--F", res_args.fields, "Field strength (repeatable)")->required();
  add_output_options(resonance, res_args.output, true);

  DynamicArgs dyn_args;
  auto* dynamic = app.add_subcommand("dynamic", "Dynamic polarizability on an omega grid");
  dynamic->add_option("--Z", dyn_args.charge, "Effective charge Z (a.u.)")->required();
  dynamic->add_option("--a", dyn_args.walls, "Wall distance (repeatable)");
  dynamic->add_flag("--isolated", dyn_args.isolated, "Add a block for the isolated atom");
  dynamic->add_option("--omega-min", dyn_args.omega_min, "Lowest frequency")->capture_default_str();
  dynamic->add_option("--omega-max", dyn_args.omega_max, "Highest frequency")->capture_default_str();
  dynamic->add_option("--omega-points", dyn_args.omega_points, "Frequencies per block")->capture_default_str();
  dynamic->add_option("--eta", dyn_args.eta, "Broadening added to omega")->capture_default_str();
  add_output_options(dynamic, dyn_args.output, true);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Finite-difference sum-over-states check");
  add_atom_options(oracle, oracle_args.atom);
  oracle->add_option("--L", oracle_args.length, "Right box edge (default max(40, 20/k_b))");
  oracle->add_option("--N", oracle_args.points, "Interior grid points")->capture_default_str();
  oracle->add_option("--omega", oracle_args.omegas, "Frequency for the dynamic comparison (repeatable)");
  oracle->add_option("--eta", oracle_args.eta, "Broadening added to omega")->capture_default_str();
  add_output_options(oracle, oracle_args.output, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    if (*bound) return cmd_bound(bound_args, out, err);
    if (*sweep) return cmd_static_sweep(sweep_args, out, err);
    if (*resonance) return cmd_resonance(res_args, out, err);
    if (*dynamic) return cmd_dynamic(dyn_args, out, err);
    if (*oracle) return cmd_oracle(oracle_args, out, err);
  } catch (const NoBoundState& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::no_bound_state;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return ExitCode::usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::numerical_failure;
  }
  return ExitCode::usage;
}

}  // namespace confined_atom::cli
