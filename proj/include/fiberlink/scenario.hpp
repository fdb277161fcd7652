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

#pragma once

#include "fiberlink/dynamics.hpp"
#include "fiberlink/model.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fiberlink {

/// One sweep axis. Every listed field takes the same value at each grid point.
/// The pseudo-field "t" sweeps evaluation time instead of a parameter.
struct SweepAxis {
  enum class Scale { absolute, relative };

  std::vector<std::string> fields;
  Scale scale = Scale::absolute;  ///< relative: field = base * (1 + value)
  std::vector<double> values;

  static SweepAxis linear(std::vector<std::string> fields, double lo, double hi, std::size_t points,
                          Scale scale = Scale::absolute);

  bool is_time() const { return fields.size() == 1 && fields.front() == "t"; }
  /// CSV column header: fields joined by '=', prefixed "d_" for relative axes.
  std::string column_name() const;
};

struct ScenarioConfig {
  std::string name;
  SystemParams params;
  std::string initial_state = "ket11";
  double t_max = 1e4;
  std::size_t n_records = 1001;
  std::vector<SweepAxis> sweep;
  std::optional<double> record_time;
  std::string output;
  /// Also report the steady state (used by exp_check).
  bool include_steady = false;
};

/// Throws ConfigError describing the first problem found.
void validate(const ScenarioConfig& config);

/// Zero-excitation, photon-vacuum initial states: ket00, ket01, ket10, ket11, S, T.
DensityMatrix initial_state(const BasisPtr& basis, std::string_view label);

/// Sets a named SystemParams field. Throws ConfigError for unknown or non-sweepable names.
void set_param(SystemParams& params, std::string_view field, double value);
double get_param(const SystemParams& params, std::string_view field);

ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::string& path);
std::string config_to_json(const ScenarioConfig& config);

// Presets

const std::vector<std::string>& preset_names();
/// Throws ConfigError listing the valid names.
ScenarioConfig preset(std::string_view name);

// Runs

TimeSeries run_time_series(const ScenarioConfig& config);

struct SweepGrid {
  std::vector<SweepAxis> axes;
  /// Row-major over axes (first axis slowest); one entry per grid point.
  std::vector<std::vector<double>> coordinates;
  std::vector<double> fidelity;
};

/// Grid points run concurrently on `workers` threads (0: worker_count()).
SweepGrid run_sweep(const ScenarioConfig& config, std::size_t workers = 0);

struct SteadyResult {
  DensityMatrix state;
  ObservableRecord record;
  double traced_fidelity;
};

SteadyResult run_steady(const ScenarioConfig& config);

/// FIBERLINK_WORKERS if set and positive, otherwise hardware concurrency.
std::size_t worker_count();

// CSV output: 12 significant digits, '\n' line endings, header row first.

std::string format_number(double value);
void write_time_series_csv(std::ostream& out, const TimeSeries& series);
void write_sweep_csv(std::ostream& out, const SweepGrid& grid);
void write_steady_csv(std::ostream& out, const SteadyResult& result);

}  // namespace fiberlink
