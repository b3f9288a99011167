#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "aisw/eigensolver.hpp"
#include "aisw/io.hpp"
#include "aisw/momentum.hpp"
#include "aisw/tuner.hpp"
#include "aisw/wavefunction.hpp"
#include "aisw/well.hpp"

namespace {

using nlohmann::ordered_json;

struct Cli {
  double a = 3.0;
  double b = 3.0;
  double v0 = 33.0;
  double hbar = 1.0;
  double mass = 0.5;
  double p_max = 0.0;
  bool p_max_given = false;
  bool v0_given = false;
  int n = 1;
  int n_max = 9;
  int points = 1001;
  std::string format = "csv";
  std::string out;

  aisw::Constants constants() const { return {hbar, mass}; }
  aisw::WellConfig well() const { return {a, b, v0, constants()}; }
  bool json() const { return format == "json"; }
};

aisw::SolverOptions solver_options() {
  aisw::SolverOptions options;
  // looser than the library default so that a v0 typed to the printed
  // precision of a tuned value still tags as zero-curvature
  options.regime_tol = 1e-6;
  return options;
}

ordered_json well_json(const aisw::WellConfig& well) {
  return ordered_json{{"a", well.a},
                      {"b", well.b},
                      {"v0", well.v0},
                      {"hbar", well.constants.hbar},
                      {"mass", well.constants.mass}};
}

ordered_json state_json(const aisw::Eigenstate& s,
                        const aisw::WellConfig& well) {
  const auto [p_i, p_ii] = aisw::region_probabilities(s, well);
  return ordered_json{{"n", s.n},
                      {"energy", s.energy},
                      {"regime", aisw::to_string(s.regime)},
                      {"k", s.k},
                      {"secondary", s.secondary},
                      {"amp_i", s.amp_i},
                      {"amp_ii", s.amp_ii},
                      {"norm", s.norm},
                      {"p_i", p_i},
                      {"p_ii", p_ii}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string cmd_spectrum(const Cli& cli) {
  const auto well = cli.well();
  const auto spectrum = aisw::solve_spectrum(well, cli.n_max, solver_options());
  if (cli.json()) {
    ordered_json j{{"well", well_json(well)},
                   {"states", ordered_json::array()}};
    for (const auto& s : spectrum.states)
      j["states"].push_back(state_json(s, well));
    return dump(j);
  }
  std::ostringstream os;
  os << "n,energy,regime,k,secondary,p_i,p_ii\n";
  for (const auto& s : spectrum.states) {
    const auto [p_i, p_ii] = aisw::region_probabilities(s, well);
    os << s.n << ',' << aisw::format_sig12(s.energy) << ','
       << aisw::to_string(s.regime) << ',' << aisw::format_sig12(s.k) << ','
       << aisw::format_sig12(s.secondary) << ',' << aisw::format_sig12(p_i)
       << ',' << aisw::format_sig12(p_ii) << '\n';
  }
  return os.str();
}

std::string cmd_tune(const Cli& cli) {
  const auto results = aisw::tune_all(cli.a, cli.b, cli.n_max, cli.constants());
  if (cli.json()) {
    ordered_json j{{"a", cli.a},
                   {"b", cli.b},
                   {"hbar", cli.hbar},
                   {"mass", cli.mass},
                   {"results", ordered_json::array()}};
    for (const auto& r : results)
      j["results"].push_back(ordered_json{
          {"n", r.n}, {"v0", r.v0}, {"k", r.k}, {"residual", r.residual}});
    return dump(j);
  }
  std::ostringstream os;
  os << "n,v0,k,residual\n";
  for (const auto& r : results)
    os << r.n << ',' << aisw::format_sig12(r.v0) << ','
       << aisw::format_sig12(r.k) << ',' << aisw::format_sig12(r.residual)
       << '\n';
  return os.str();
}

std::string cmd_state(const Cli& cli) {
  const auto well = cli.well();
  const auto s = aisw::solve_state(well, cli.n, solver_options());
  if (cli.json())
    return dump(
        ordered_json{{"well", well_json(well)}, {"state", state_json(s, well)}});
  const auto [p_i, p_ii] = aisw::region_probabilities(s, well);
  std::ostringstream os;
  os << "n,energy,regime,k,secondary,amp_i,amp_ii,norm,p_i,p_ii\n";
  os << s.n << ',' << aisw::format_sig12(s.energy) << ','
     << aisw::to_string(s.regime) << ',' << aisw::format_sig12(s.k) << ','
     << aisw::format_sig12(s.secondary) << ',' << aisw::format_sig12(s.amp_i)
     << ',' << aisw::format_sig12(s.amp_ii) << ','
     << aisw::format_sig12(s.norm) << ',' << aisw::format_sig12(p_i) << ','
     << aisw::format_sig12(p_ii) << '\n';
  return os.str();
}

std::string cmd_density(const Cli& cli) {
  const auto well = cli.well();
  const auto s = aisw::solve_state(well, cli.n, solver_options());
  const auto sd = aisw::sample_density(s, well, cli.points);
  if (cli.json()) {
    ordered_json j{{"well", well_json(well)},
                   {"n", s.n},
                   {"energy", s.energy},
                   {"regime", aisw::to_string(s.regime)},
                   {"space", "position"},
                   {"x", sd.abscissae},
                   {"psi", ordered_json::array()},
                   {"density", sd.values}};
    for (double x : sd.abscissae)
      j["psi"].push_back(aisw::eval_psi(s, well, x));
    return dump(j);
  }
  std::ostringstream os;
  os << "x,psi,density\n";
  for (std::size_t i = 0; i < sd.abscissae.size(); ++i) {
    const double psi = aisw::eval_psi(s, well, sd.abscissae[i]);
    os << aisw::format_sig12(sd.abscissae[i]) << ',' << aisw::format_sig12(psi)
       << ',' << aisw::format_sig12(sd.values[i]) << '\n';
  }
  return os.str();
}

std::string cmd_momentum(const Cli& cli) {
  const auto well = cli.well();
  const auto s = aisw::solve_state(well, cli.n, solver_options());
  const double p_max =
      cli.p_max_given ? cli.p_max : 3.0 * cli.hbar * s.k;
  const auto sd = aisw::sample_momentum_density(s, well, p_max, cli.points);
  if (cli.json()) {
    return dump(ordered_json{{"well", well_json(well)},
                             {"n", s.n},
                             {"energy", s.energy},
                             {"regime", aisw::to_string(s.regime)},
                             {"space", "momentum"},
                             {"p", sd.abscissae},
                             {"density", sd.values}});
  }
  std::ostringstream os;
  os << "p,density\n";
  for (std::size_t i = 0; i < sd.abscissae.size(); ++i)
    os << aisw::format_sig12(sd.abscissae[i]) << ','
       << aisw::format_sig12(sd.values[i]) << '\n';
  return os.str();
}

std::string cmd_partition(const Cli& cli) {
  double v0 = cli.v0;
  if (!cli.v0_given) v0 = aisw::tune_v0(cli.a, cli.b, cli.n, cli.constants()).v0;
  const aisw::WellConfig well{cli.a, cli.b, v0, cli.constants()};
  const auto s = aisw::solve_state(well, cli.n, solver_options());
  if (s.regime != aisw::Regime::ZeroCurvature)
    throw std::invalid_argument(
        "partition needs a zero-curvature state; omit --v0 to tune it");
  const auto part = aisw::peak_partition(s, well);
  if (cli.json())
    return dump(ordered_json{{"well", well_json(well)},
                             {"n", s.n},
                             {"left", part.left},
                             {"center", part.center},
                             {"right", part.right}});
  std::ostringstream os;
  os << "left,center,right\n";
  os << aisw::format_sig12(part.left) << ',' << aisw::format_sig12(part.center)
     << ',' << aisw::format_sig12(part.right) << '\n';
  return os.str();
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  file << text;
  file.flush();
  if (!file) {
    std::cerr << "error: failed writing " << path << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymmetric infinite square well: spectra, zero-curvature "
               "tuning, and figure data export"};
  Cli cli;
  app.fallthrough();
  app.add_option("--a", cli.a, "Region I width (wall at x = -a)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--b", cli.b, "Region II width (wall at x = +b)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* v0_opt = app.add_option("--v0", cli.v0, "Step height on 0 < x < b")
                     ->check(CLI::NonNegativeNumber)
                     ->capture_default_str();
  app.add_option("--hbar", cli.hbar, "Reduced Planck constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--mass", cli.mass, "Particle mass")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--n", cli.n, "State index (1-based)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--n-max", cli.n_max, "Number of states")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--points", cli.points, "Grid points for density exports")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* p_max_opt =
      app.add_option("--p-max", cli.p_max,
                     "Momentum grid half-width (default 3 hbar k)")
          ->check(CLI::PositiveNumber);
  app.add_option("--format", cli.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cli.out, "Output path (default stdout)");
  app.set_config("--config", "", "Flat key=value settings file; flags win");

  auto* sub_spectrum =
      app.add_subcommand("spectrum", "First n-max states with region "
                                     "probabilities");
  auto* sub_tune = app.add_subcommand(
      "tune", "Step heights v0 making states 1..n-max zero-curvature");
  auto* sub_state =
      app.add_subcommand("state", "Single state record for --n");
  auto* sub_density = app.add_subcommand(
      "density", "Position-space psi and |psi|^2 on a uniform grid");
  auto* sub_momentum = app.add_subcommand(
      "momentum", "Momentum-space |phi|^2 on a uniform grid");
  auto* sub_partition = app.add_subcommand(
      "partition", "Left/center/right momentum masses of a zero-curvature "
                   "state (tunes v0 unless --v0 is given)");
  for (auto* sub : {sub_spectrum, sub_tune, sub_state, sub_density,
                    sub_momentum, sub_partition})
    sub->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }
  cli.v0_given = v0_opt->count() > 0;
  cli.p_max_given = p_max_opt->count() > 0;

  try {
    std::string text;
    if (sub_spectrum->parsed())
      text = cmd_spectrum(cli);
    else if (sub_tune->parsed())
      text = cmd_tune(cli);
    else if (sub_state->parsed())
      text = cmd_state(cli);
    else if (sub_density->parsed())
      text = cmd_density(cli);
    else if (sub_momentum->parsed())
      text = cmd_momentum(cli);
    else
      text = cmd_partition(cli);
    return write_output(text, cli.out);
  } catch (const aisw::solver_error& e) {
    std::cerr << "solver error: " << e.what() << " in ["
              << aisw::format_shortest(e.interval_lo()) << ", "
              << aisw::format_shortest(e.interval_hi()) << "]\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
