// Copyright 2026 The fiberlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: spectra tables, time series, sweeps and steady states as CSV.

#include "CLI11.hpp"

#include "fiberlink/errors.hpp"
#include "fiberlink/observables.hpp"
#include "fiberlink/scenario.hpp"
#include "fiberlink/spectra.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace fiberlink;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

struct Overrides {
  std::string config_path;
  std::optional<double> g, nu, omega, omega_mw, beta, kappa, gamma;
  std::optional<std::string> delta;
  std::optional<std::string> initial_state;
  std::optional<double> t_max;
  std::optional<std::size_t> n_records;
  std::optional<double> record_time;
  std::optional<std::string> output;
  std::vector<std::string> sweep;
};

void add_common(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config_path, "JSON scenario file");
  app->add_option("--g", o.g);
  app->add_option("--nu", o.nu);
  app->add_option("--omega", o.omega);
  app->add_option("--omega_mw", o.omega_mw);
  app->add_option("--delta", o.delta, "number or auto_T4");
  app->add_option("--beta", o.beta);
  app->add_option("--kappa", o.kappa);
  app->add_option("--gamma", o.gamma);
  app->add_option("--initial_state", o.initial_state);
  app->add_option("--t_max", o.t_max);
  app->add_option("--n_records", o.n_records);
  app->add_option("--record_time", o.record_time);
  app->add_option("--output", o.output, "CSV path, '-' for stdout");
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError("bad number for " + what + ": '" + text + "'");
  }
  return v;
}

// field[,field...]=lo:hi:points[:relative]
SweepAxis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("sweep axis must look like field=lo:hi:points, got '" + text + "'");
  }
  std::vector<std::string> fields;
  std::stringstream names(text.substr(0, eq));
  for (std::string f; std::getline(names, f, ',');) {
    fields.push_back(f);
  }
  std::vector<std::string> parts;
  std::stringstream range(text.substr(eq + 1));
  for (std::string p; std::getline(range, p, ':');) {
    parts.push_back(p);
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw ConfigError("sweep range must be lo:hi:points[:relative], got '" + text + "'");
  }
  auto scale = SweepAxis::Scale::absolute;
  if (parts.size() == 4) {
    if (parts[3] != "relative") {
      throw ConfigError("unknown sweep scale '" + parts[3] + "'");
    }
    scale = SweepAxis::Scale::relative;
  }
  const double points = parse_double(parts[2], "points");
  if (points < 1 || points != static_cast<double>(static_cast<std::size_t>(points))) {
    throw ConfigError("sweep points must be a positive integer");
  }
  return SweepAxis::linear(std::move(fields), parse_double(parts[0], "lo"), parse_double(parts[1], "hi"),
                           static_cast<std::size_t>(points), scale);
}

void apply(ScenarioConfig& c, const Overrides& o) {
  auto& p = c.params;
  if (o.g) p.g = *o.g;
  if (o.nu) p.nu = *o.nu;
  if (o.omega) p.omega = *o.omega;
  if (o.omega_mw) p.omega_mw = *o.omega_mw;
  if (o.beta) p.beta = *o.beta;
  if (o.kappa) p.kappa = *o.kappa;
  if (o.gamma) p.gamma = *o.gamma;
  if (o.delta) {
    p.delta = *o.delta == "auto_T4" ? Detuning::auto_t4() : Detuning::fixed(parse_double(*o.delta, "delta"));
  }
  if (o.initial_state) c.initial_state = *o.initial_state;
  if (o.t_max) c.t_max = *o.t_max;
  if (o.n_records) c.n_records = *o.n_records;
  if (o.record_time) c.record_time = *o.record_time;
  if (o.output) c.output = *o.output;
  if (!o.sweep.empty()) {
    c.sweep.clear();
    for (const auto& s : o.sweep) {
      c.sweep.push_back(parse_axis(s));
    }
  }
}

ScenarioConfig build_config(ScenarioConfig base, const Overrides& o) {
  if (!o.config_path.empty()) {
    base = load_config(o.config_path);
  }
  apply(base, o);
  validate(base);
  return base;
}

template <class Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot open '" + path + "' for writing");
  }
  write(out);
  if (!out) {
    throw ConfigError("write to '" + path + "' failed");
  }
}

int run_spectra(const ScenarioConfig& c) {
  const auto basis = build_basis(1);
  const auto report = verify_spectrum(basis, c.params);
  if (!report.ok) {
    for (const auto& f : report.failures) {
      std::cerr << "spectrum mismatch: " << f << "\n";
    }
    return kExitVerification;
  }
  const auto table = dressed_couplings(basis, c.params);
  const double g = c.params.g;
  emit(c.output, [&](std::ostream& out) {
    out << "source,target,drive,magnitude_over_g,detuning_over_g\n";
    for (const auto& row : table.rows) {
      out << dressed_name(row.source) << ',' << dressed_name(row.target) << ',' << drive_name(row.drive) << ','
          << format_number(row.magnitude / g) << ',' << format_number(row.detuning / g) << '\n';
    }
  });
  std::cerr << "spectrum verified: " << report.matched_states << " states, max residual "
            << format_number(report.max_eigen_residual) << "\n";
  return 0;
}

void run_evolve(const ScenarioConfig& c) {
  const auto series = run_time_series(c);
  emit(c.output, [&](std::ostream& out) { write_time_series_csv(out, series); });
  if (!series.records.empty()) {
    std::cerr << "fidelity at t=" << format_number(series.times.back()) << ": "
              << format_number(series.records.back().fidelity) << "\n";
  }
}

void run_sweep_cmd(const ScenarioConfig& c) {
  if (c.sweep.empty()) {
    throw ConfigError("sweep needs at least one axis (--sweep or config)");
  }
  const auto grid = run_sweep(c);
  emit(c.output, [&](std::ostream& out) { write_sweep_csv(out, grid); });
}

void run_steady_cmd(const ScenarioConfig& c) {
  const auto result = run_steady(c);
  emit(c.output, [&](std::ostream& out) { write_steady_csv(out, result); });
  std::cerr << "steady fidelity: " << format_number(result.record.fidelity)
            << " (photon-traced " << format_number(result.traced_fidelity) << ")\n";
}

std::string steady_path(const std::string& output) {
  if (output.empty() || output == "-") return output;
  const auto dot = output.rfind(".csv");
  return (dot == std::string::npos ? output : output.substr(0, dot)) + "_steady.csv";
}

void run_preset(const ScenarioConfig& c) {
  if (!c.sweep.empty()) {
    run_sweep_cmd(c);
    return;
  }
  run_evolve(c);
  if (c.include_steady) {
    ScenarioConfig s = c;
    s.output = steady_path(c.output);
    run_steady_cmd(s);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissipative two-atom entanglement in a cavity-fiber-cavity network"};
  app.require_subcommand(1);

  Overrides o;
  auto* spectra = app.add_subcommand("spectra", "verify dressed states and print the coupling table");
  auto* evolve = app.add_subcommand("evolve", "time series of populations and fidelity");
  auto* sweep = app.add_subcommand("sweep", "fidelity on a parameter grid at record_time");
  auto* steady = app.add_subcommand("steady", "stationary state of the master equation");
  auto* preset_cmd = app.add_subcommand("preset", "run a named scenario");
  auto* list = app.add_subcommand("list-presets", "print preset names");

  std::string preset_name;
  preset_cmd->add_option("name", preset_name)->required();
  for (auto* sub : {spectra, evolve, sweep, steady, preset_cmd}) {
    add_common(sub, o);
  }
  sweep->add_option("--sweep", o.sweep, "field[,field]=lo:hi:points[:relative]; repeat for a second axis");
  preset_cmd->add_option("--sweep", o.sweep, "replace the preset's sweep axes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (list->parsed()) {
      for (const auto& name : preset_names()) {
        std::cout << name << "\n";
      }
      return 0;
    }
    if (preset_cmd->parsed()) {
      run_preset(build_config(preset(preset_name), o));
      return 0;
    }
    const auto config = build_config(ScenarioConfig{}, o);
    if (spectra->parsed()) return run_spectra(config);
    if (evolve->parsed()) run_evolve(config);
    if (sweep->parsed()) run_sweep_cmd(config);
    if (steady->parsed()) run_steady_cmd(config);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ShapeError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}
