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

#include "fiberlink/scenario.hpp"

#include "fiberlink/errors.hpp"
#include "fiberlink/observables.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

namespace fiberlink {

using nlohmann::json;

namespace {

constexpr double kDefaultStep = 10.0;
constexpr std::string_view kAutoT4 = "auto_T4";

const std::vector<std::string_view>& sweepable_fields() {
  static const std::vector<std::string_view> fields{"g", "nu", "omega", "omega_mw", "delta", "beta", "kappa", "gamma"};
  return fields;
}

bool is_sweepable(std::string_view field) {
  const auto& f = sweepable_fields();
  return std::find(f.begin(), f.end(), field) != f.end();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += parts[i];
  }
  return out;
}

}  // namespace

SweepAxis SweepAxis::linear(std::vector<std::string> fields, double lo, double hi, std::size_t points, Scale scale) {
  if (points == 0) {
    throw ConfigError("sweep axis needs at least one point");
  }
  SweepAxis axis;
  axis.fields = std::move(fields);
  axis.scale = scale;
  axis.values.resize(points);
  for (std::size_t k = 0; k < points; ++k) {
    axis.values[k] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  return axis;
}

std::string SweepAxis::column_name() const {
  return (scale == Scale::relative ? "d_" : "") + join(fields, "=");
}

void set_param(SystemParams& p, std::string_view field, double value) {
  if (field == "g") {
    p.g = value;
  } else if (field == "nu") {
    p.nu = value;
  } else if (field == "omega") {
    p.omega = value;
  } else if (field == "omega_mw") {
    p.omega_mw = value;
  } else if (field == "delta") {
    p.delta = Detuning::fixed(value);
  } else if (field == "beta") {
    p.beta = value;
  } else if (field == "kappa") {
    p.kappa = value;
  } else if (field == "gamma") {
    p.gamma = value;
  } else {
    throw ConfigError("unknown parameter field '" + std::string(field) + "'");
  }
}

double get_param(const SystemParams& p, std::string_view field) {
  if (field == "g") return p.g;
  if (field == "nu") return p.nu;
  if (field == "omega") return p.omega;
  if (field == "omega_mw") return p.omega_mw;
  if (field == "delta") return resolved_detuning(p);
  if (field == "beta") return p.beta;
  if (field == "kappa") return p.kappa;
  if (field == "gamma") return p.gamma;
  throw ConfigError("unknown parameter field '" + std::string(field) + "'");
}

void validate(const ScenarioConfig& c) {
  try {
    validate(c.params);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (!(c.t_max > 0.0) || !std::isfinite(c.t_max)) {
    throw ConfigError("t_max must be positive");
  }
  if (c.n_records < 2) {
    throw ConfigError("n_records must be at least 2");
  }
  if (c.sweep.size() > 2) {
    throw ConfigError("at most 2 sweep axes are supported");
  }
  std::size_t time_axes = 0;
  for (const auto& axis : c.sweep) {
    if (axis.fields.empty()) {
      throw ConfigError("sweep axis names no field");
    }
    if (axis.values.empty()) {
      throw ConfigError("sweep axis '" + axis.column_name() + "' has no points");
    }
    if (axis.is_time()) {
      ++time_axes;
      if (axis.scale == SweepAxis::Scale::relative) {
        throw ConfigError("time axis cannot be relative");
      }
      for (double t : axis.values) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
          throw ConfigError("time axis values must be non-negative");
        }
      }
      continue;
    }
    for (const auto& f : axis.fields) {
      if (!is_sweepable(f)) {
        throw ConfigError("cannot sweep unknown field '" + f + "'");
      }
    }
  }
  if (time_axes > 1) {
    throw ConfigError("at most one time axis");
  }
  if (!c.sweep.empty() && time_axes == 0) {
    if (!c.record_time || !(*c.record_time >= 0.0)) {
      throw ConfigError("sweep requires a non-negative record_time or a time axis");
    }
  }
  const auto& labels = {"ket00", "ket01", "ket10", "ket11", "S", "T"};
  if (std::find(labels.begin(), labels.end(), c.initial_state) == labels.end()) {
    throw ConfigError("unknown initial_state '" + c.initial_state + "' (expected ket00, ket01, ket10, ket11, S, T)");
  }
}

DensityMatrix initial_state(const BasisPtr& basis, std::string_view label) {
  const BasisState s00{Level::g0, Level::g0, 0, 0, 0};
  const BasisState s01{Level::g0, Level::g1, 0, 0, 0};
  const BasisState s10{Level::g1, Level::g0, 0, 0, 0};
  const BasisState s11{Level::g1, Level::g1, 0, 0, 0};
  if (label == "ket00") return DensityMatrix::pure(basis, s00);
  if (label == "ket01") return DensityMatrix::pure(basis, s01);
  if (label == "ket10") return DensityMatrix::pure(basis, s10);
  if (label == "ket11") return DensityMatrix::pure(basis, s11);
  if (label == "S") return DensityMatrix::pure(basis, Vector(basis->ket(s01) - basis->ket(s10)));
  if (label == "T") return DensityMatrix::pure(basis, Vector(basis->ket(s01) + basis->ket(s10)));
  throw ConfigError("unknown initial_state '" + std::string(label) + "'");
}

// ---------------------------------------------------------------------------
// JSON

namespace {

double read_number(const json& j, const char* key) {
  if (!j.is_number()) {
    throw ConfigError(std::string("field '") + key + "' must be a number");
  }
  return j.get<double>();
}

SweepAxis parse_axis(const json& j) {
  if (!j.is_object()) {
    throw ConfigError("sweep axis must be an object");
  }
  std::vector<std::string> fields;
  if (j.contains("fields")) {
    for (const auto& f : j.at("fields")) {
      if (!f.is_string()) {
        throw ConfigError("sweep fields must be strings");
      }
      fields.push_back(f.get<std::string>());
    }
  } else if (j.contains("field")) {
    if (!j.at("field").is_string()) {
      throw ConfigError("sweep field must be a string");
    }
    fields.push_back(j.at("field").get<std::string>());
  } else {
    throw ConfigError("sweep axis needs 'field' or 'fields'");
  }

  auto scale = SweepAxis::Scale::absolute;
  if (j.contains("mode")) {
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "relative") {
      scale = SweepAxis::Scale::relative;
    } else if (mode != "absolute") {
      throw ConfigError("sweep mode must be 'absolute' or 'relative'");
    }
  }

  if (j.contains("values")) {
    SweepAxis axis;
    axis.fields = std::move(fields);
    axis.scale = scale;
    for (const auto& v : j.at("values")) {
      axis.values.push_back(read_number(v, "values"));
    }
    return axis;
  }
  for (const char* key : {"lo", "hi", "points"}) {
    if (!j.contains(key)) {
      throw ConfigError(std::string("sweep axis is missing '") + key + "'");
    }
  }
  const auto& points = j.at("points");
  if (!points.is_number_integer() || points.get<long long>() < 1) {
    throw ConfigError("sweep points must be a positive integer");
  }
  return SweepAxis::linear(std::move(fields), read_number(j.at("lo"), "lo"), read_number(j.at("hi"), "hi"),
                           points.get<std::size_t>(), scale);
}

SystemParams parse_params(const json& j, SystemParams p) {
  if (!j.is_object()) {
    throw ConfigError("'params' must be an object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "delta" && value.is_string()) {
      if (value.get<std::string>() != kAutoT4) {
        throw ConfigError("delta must be a number or \"auto_T4\"");
      }
      p.delta = Detuning::auto_t4();
      continue;
    }
    if (!is_sweepable(key)) {
      throw ConfigError("unknown params field '" + key + "'");
    }
    set_param(p, key, read_number(value, key.c_str()));
  }
  return p;
}

}  // namespace

ScenarioConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  ScenarioConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "name") {
        c.name = value.get<std::string>();
      } else if (key == "params") {
        c.params = parse_params(value, c.params);
      } else if (key == "initial_state") {
        c.initial_state = value.get<std::string>();
      } else if (key == "t_max") {
        c.t_max = read_number(value, "t_max");
      } else if (key == "n_records") {
        if (!value.is_number_integer() || value.get<long long>() < 0) {
          throw ConfigError("n_records must be a non-negative integer");
        }
        c.n_records = value.get<std::size_t>();
      } else if (key == "sweep") {
        if (value.is_object()) {
          c.sweep.push_back(parse_axis(value));
        } else {
          for (const auto& axis : value) {
            c.sweep.push_back(parse_axis(axis));
          }
        }
      } else if (key == "record_time") {
        if (!value.is_null()) {
          c.record_time = read_number(value, "record_time");
        }
      } else if (key == "output") {
        c.output = value.get<std::string>();
      } else if (key == "include_steady") {
        c.include_steady = value.get<bool>();
      } else {
        throw ConfigError("unknown config field '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string config_to_json(const ScenarioConfig& c) {
  json params = {{"g", c.params.g},       {"nu", c.params.nu},       {"omega", c.params.omega},
                 {"omega_mw", c.params.omega_mw}, {"beta", c.params.beta}, {"kappa", c.params.kappa},
                 {"gamma", c.params.gamma}};
  if (c.params.delta.is_auto()) {
    params["delta"] = kAutoT4;
  } else {
    params["delta"] = c.params.delta.value();
  }
  json j = {{"name", c.name},   {"params", params},     {"initial_state", c.initial_state},
            {"t_max", c.t_max}, {"n_records", c.n_records}, {"output", c.output}};
  if (c.include_steady) {
    j["include_steady"] = true;
  }
  if (c.record_time) {
    j["record_time"] = *c.record_time;
  }
  if (!c.sweep.empty()) {
    json axes = json::array();
    for (const auto& axis : c.sweep) {
      axes.push_back({{"fields", axis.fields},
                      {"mode", axis.scale == SweepAxis::Scale::relative ? "relative" : "absolute"},
                      {"values", axis.values}});
    }
    j["sweep"] = axes;
  }
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Presets

namespace {

// Experimental cavity parameters, 2 pi x MHz.
constexpr double kExpG = 34.0;
constexpr double kExpKappa = 4.1;
constexpr double kExpGamma = 3.6;

ScenarioConfig fig3_base(std::string name, double omega_mw_ratio, double beta, double kappa, double gamma,
                         double t_max) {
  ScenarioConfig c;
  c.name = std::move(name);
  c.params.omega = 0.008;
  c.params.omega_mw = omega_mw_ratio * c.params.omega;
  c.params.nu = 1.0;
  c.params.beta = beta;
  c.params.kappa = kappa;
  c.params.gamma = gamma;
  c.t_max = t_max;
  c.n_records = static_cast<std::size_t>(std::lround(t_max / kDefaultStep)) + 1;
  return c;
}

ScenarioConfig fig3_inset(std::string name, double omega_mw_ratio, const char* field, double record_time) {
  ScenarioConfig c = fig3_base(std::move(name), omega_mw_ratio, 0.0, 0.0, 0.0, record_time);
  c.sweep.push_back(SweepAxis::linear({field}, 0.0, 0.1, 11));
  c.record_time = record_time;
  return c;
}

ScenarioConfig fig4(std::string name, const char* first, const char* second) {
  ScenarioConfig c = fig3_base(std::move(name), 0.25, 0.0, 0.0, 0.0, 1.5e4);
  c.sweep.push_back(SweepAxis::linear({first}, 0.0, 0.06, 13));
  c.sweep.push_back(SweepAxis::linear({second}, 0.0, 0.06, 13));
  c.record_time = 1.5e4;
  return c;
}

ScenarioConfig fig6_base(std::string name) {
  ScenarioConfig c = fig3_base(std::move(name), 0.0, 0.04, 0.04, 0.04, 2e4);
  c.params.omega_mw = 0.002;
  return c;
}

ScenarioConfig make_preset(std::string_view name) {
  if (name == "fig3a" || name == "fig3b") {
    return fig3_base(std::string(name), 0.25, 0.1, 0.0, 0.0, 1e4);
  }
  if (name == "fig3b_inset") {
    return fig3_inset("fig3b_inset", 0.25, "beta", 8e3);
  }
  if (name == "fig3c" || name == "fig3d") {
    return fig3_base(std::string(name), 0.2, 0.0, 0.1, 0.0, 1.6e4);
  }
  if (name == "fig3d_inset") {
    return fig3_inset("fig3d_inset", 0.2, "kappa", 1.6e4);
  }
  if (name == "fig3e" || name == "fig3f") {
    return fig3_base(std::string(name), 0.2, 0.0, 0.0, 0.1, 1.6e4);
  }
  if (name == "fig3f_inset") {
    return fig3_inset("fig3f_inset", 0.2, "gamma", 1.6e4);
  }
  if (name == "fig4a") {
    return fig4("fig4a", "beta", "kappa");
  }
  if (name == "fig4b") {
    return fig4("fig4b", "beta", "gamma");
  }
  if (name == "fig4c") {
    return fig4("fig4c", "gamma", "kappa");
  }
  if (name == "fig5") {
    ScenarioConfig c = fig3_base("fig5", 0.25, 0.0, 0.0, 0.0, 2e4);
    SweepAxis rates;
    rates.fields = {"beta", "kappa", "gamma"};
    rates.values = {0.0, 0.01, 0.02, 0.04, 0.08, 0.12};
    c.sweep.push_back(std::move(rates));
    c.sweep.push_back(SweepAxis::linear({"t"}, 0.0, 2e4, 41));
    return c;
  }
  if (name == "fig6a") {
    ScenarioConfig c = fig6_base("fig6a");
    c.sweep.push_back(SweepAxis::linear({"omega"}, -0.5, 0.5, 11, SweepAxis::Scale::relative));
    c.sweep.push_back(SweepAxis::linear({"omega_mw"}, -0.5, 0.5, 11, SweepAxis::Scale::relative));
    c.record_time = 2e4;
    return c;
  }
  if (name == "fig6b") {
    ScenarioConfig c = fig6_base("fig6b");
    c.sweep.push_back(SweepAxis::linear({"nu"}, 0.5, 1.5, 11));
    c.sweep.push_back(SweepAxis::linear({"t"}, 0.0, 2e4, 21));
    return c;
  }
  if (name == "exp_check") {
    ScenarioConfig c;
    c.name = "exp_check";
    c.params.g = 1.0;
    c.params.nu = 0.9;
    c.params.omega = 0.015;
    c.params.omega_mw = 0.36 * c.params.omega;
    c.params.kappa = kExpKappa / kExpG;
    c.params.gamma = kExpGamma / kExpG;
    c.params.beta = c.params.kappa;
    c.t_max = 2e4;
    c.n_records = 2001;
    c.include_steady = true;
    return c;
  }
  std::string valid;
  for (const auto& n : preset_names()) {
    valid += (valid.empty() ? "" : ", ") + n;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'; valid presets: " + valid);
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{
      "fig3a", "fig3b", "fig3b_inset", "fig3c", "fig3d", "fig3d_inset", "fig3e", "fig3f", "fig3f_inset",
      "fig4a", "fig4b", "fig4c",       "fig5",  "fig6a", "fig6b",       "exp_check"};
  return names;
}

ScenarioConfig preset(std::string_view name) {
  ScenarioConfig c = make_preset(name);
  c.output = std::string(name) + ".csv";
  return c;
}

// ---------------------------------------------------------------------------
// Runs

TimeSeries run_time_series(const ScenarioConfig& config) {
  validate(config);
  const auto basis = build_basis(1);
  const auto liouvillian = build_liouvillian(basis, config.params);
  const auto grid = uniform_grid(config.t_max, config.n_records);
  return propagate(initial_state(basis, config.initial_state), liouvillian, grid);
}

namespace {

// Fidelity at each requested time (sorted ascending), stepping on a fixed grid.
std::vector<double> fidelities_at(const DensityMatrix& rho0, const Liouvillian& liouvillian,
                                  const std::vector<double>& times) {
  const auto n = liouvillian.state_dimension();
  const Propagator step(liouvillian, kDefaultStep);
  std::map<double, Propagator> remainders;

  std::vector<double> out;
  out.reserve(times.size());
  Vector v = vectorize(rho0.matrix());
  std::size_t steps_done = 0;
  for (double t : times) {
    const auto target_steps = static_cast<std::size_t>(std::floor(t / kDefaultStep + 1e-9));
    for (; steps_done < target_steps; ++steps_done) {
      v = step.apply(v);
    }
    const double remainder = t - static_cast<double>(steps_done) * kDefaultStep;
    Vector at = v;
    if (remainder > 1e-9) {
      auto it = remainders.find(remainder);
      if (it == remainders.end()) {
        it = remainders.emplace(remainder, Propagator(liouvillian, remainder)).first;
      }
      at = it->second.apply(v);
    }
    const DensityMatrix rho(rho0.basis(), unvectorize(at, n));
    if (!rho.matrix().allFinite()) {
      throw NumericalError("sweep state became non-finite at t = " + format_number(t));
    }
    out.push_back(fidelity_t(rho.hermitized()));
  }
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) {
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace

std::size_t worker_count() {
  if (const char* env = std::getenv("FIBERLINK_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && n > 0) {
      return static_cast<std::size_t>(n);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepGrid run_sweep(const ScenarioConfig& config, std::size_t workers) {
  validate(config);
  if (config.sweep.empty()) {
    throw ConfigError("sweep mode needs at least one sweep axis");
  }
  const auto basis = build_basis(1);
  const auto rho0 = initial_state(basis, config.initial_state);

  // Split axes into parameter axes and the optional time axis.
  std::vector<std::size_t> param_axes;
  std::optional<std::size_t> time_axis;
  for (std::size_t a = 0; a < config.sweep.size(); ++a) {
    if (config.sweep[a].is_time()) {
      time_axis = a;
    } else {
      param_axes.push_back(a);
    }
  }
  std::vector<double> times;
  if (time_axis) {
    times = config.sweep[*time_axis].values;
  } else {
    times = {*config.record_time};
  }
  std::vector<double> sorted_times = times;
  std::sort(sorted_times.begin(), sorted_times.end());
  sorted_times.erase(std::unique(sorted_times.begin(), sorted_times.end()), sorted_times.end());

  std::size_t param_points = 1;
  for (std::size_t a : param_axes) {
    param_points *= config.sweep[a].values.size();
  }

  const auto param_index_of = [&](std::size_t p) {
    std::vector<std::size_t> idx(param_axes.size());
    for (std::size_t k = param_axes.size(); k-- > 0;) {
      const auto size = config.sweep[param_axes[k]].values.size();
      idx[k] = p % size;
      p /= size;
    }
    return idx;
  };

  std::vector<std::vector<double>> results(param_points);
  parallel_for(param_points, workers == 0 ? worker_count() : workers, [&](std::size_t p) {
    SystemParams params = config.params;
    const auto idx = param_index_of(p);
    for (std::size_t k = 0; k < param_axes.size(); ++k) {
      const auto& axis = config.sweep[param_axes[k]];
      const double x = axis.values[idx[k]];
      for (const auto& field : axis.fields) {
        const double value =
            axis.scale == SweepAxis::Scale::relative ? get_param(config.params, field) * (1.0 + x) : x;
        set_param(params, field, value);
      }
    }
    try {
      validate(params);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("sweep point out of range: ") + e.what());
    }
    const auto liouvillian = build_liouvillian(basis, params);
    results[p] = fidelities_at(rho0, liouvillian, sorted_times);
  });

  SweepGrid grid;
  grid.axes = config.sweep;
  std::size_t total = 1;
  for (const auto& axis : config.sweep) {
    total *= axis.values.size();
  }
  grid.coordinates.reserve(total);
  grid.fidelity.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<std::size_t> idx(config.sweep.size());
    std::size_t rest = flat;
    for (std::size_t k = config.sweep.size(); k-- > 0;) {
      idx[k] = rest % config.sweep[k].values.size();
      rest /= config.sweep[k].values.size();
    }
    std::vector<double> coords(config.sweep.size());
    std::size_t p = 0;
    for (std::size_t k = 0; k < config.sweep.size(); ++k) {
      coords[k] = config.sweep[k].values[idx[k]];
    }
    for (std::size_t a : param_axes) {
      p = p * config.sweep[a].values.size() + idx[a];
    }
    const double t = time_axis ? config.sweep[*time_axis].values[idx[*time_axis]] : times.front();
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(sorted_times.begin(), sorted_times.end(), t) - sorted_times.begin());
    grid.coordinates.push_back(std::move(coords));
    grid.fidelity.push_back(results[p][pos]);
  }
  return grid;
}

SteadyResult run_steady(const ScenarioConfig& config) {
  validate(config);
  const auto basis = build_basis(1);
  const auto liouvillian = build_liouvillian(basis, config.params);
  DensityMatrix rho = steady_state(liouvillian);
  const auto record = observe(rho);
  const double traced = traced_fidelity_t(rho);
  return {std::move(rho), record, traced};
}

// ---------------------------------------------------------------------------
// CSV

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

void write_record(std::ostream& out, const ObservableRecord& r) {
  out << format_number(r.p00) << ',' << format_number(r.ps) << ',' << format_number(r.pt) << ','
      << format_number(r.p11) << ',' << format_number(r.fidelity) << ',' << format_number(r.trace_error) << ','
      << format_number(r.min_eig);
}

}  // namespace

void write_time_series_csv(std::ostream& out, const TimeSeries& series) {
  out << "t,P00,PS,PT,P11,fidelity,trace_error,min_eig\n";
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    out << format_number(series.times[k]) << ',';
    write_record(out, series.records[k]);
    out << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
  for (const auto& axis : grid.axes) {
    out << axis.column_name() << ',';
  }
  out << "fidelity\n";
  for (std::size_t k = 0; k < grid.fidelity.size(); ++k) {
    for (double x : grid.coordinates[k]) {
      out << format_number(x) << ',';
    }
    out << format_number(grid.fidelity[k]) << '\n';
  }
}

void write_steady_csv(std::ostream& out, const SteadyResult& result) {
  out << "P00,PS,PT,P11,fidelity,trace_error,min_eig,traced_fidelity\n";
  write_record(out, result.record);
  out << ',' << format_number(result.traced_fidelity) << '\n';
}

}  // namespace fiberlink
