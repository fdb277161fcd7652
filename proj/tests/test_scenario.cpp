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

#include "doctest.h"

#include "fiberlink/errors.hpp"
#include "fiberlink/observables.hpp"
#include "fiberlink/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace fiberlink;

namespace {

ScenarioConfig small_sweep() {
  ScenarioConfig c = preset("fig4a");
  c.sweep = {SweepAxis::linear({"beta"}, 0.0, 0.06, 3), SweepAxis::linear({"kappa"}, 0.0, 0.06, 2)};
  c.record_time = 500.0;
  return c;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("presets carry the published parameters") {
  const auto a = preset("fig3a");
  CHECK(a.params.omega == 0.008);
  CHECK(a.params.omega_mw == doctest::Approx(0.002));
  CHECK(a.params.beta == 0.1);
  CHECK(a.params.kappa == 0.0);
  CHECK(a.params.gamma == 0.0);
  CHECK(a.params.delta.is_auto());
  CHECK(a.t_max == 1e4);
  CHECK(a.output == "fig3a.csv");

  const auto d = preset("fig3d");
  CHECK(d.params.kappa == 0.1);
  CHECK(d.params.omega_mw == doctest::Approx(0.2 * 0.008));
  CHECK(d.t_max == 1.6e4);

  const auto f = preset("fig3f");
  CHECK(f.params.gamma == 0.1);

  const auto e = preset("exp_check");
  CHECK(e.params.nu == 0.9);
  CHECK(e.params.omega == 0.015);
  CHECK(e.params.omega_mw == doctest::Approx(0.36 * 0.015));
  CHECK(e.params.kappa == doctest::Approx(4.1 / 34));
  CHECK(e.params.gamma == doctest::Approx(3.6 / 34));
  CHECK(e.params.beta == e.params.kappa);
  CHECK(e.include_steady);

  const auto g = preset("fig4b");
  REQUIRE(g.sweep.size() == 2);
  CHECK(g.sweep[0].values.size() == 13);
  CHECK(g.sweep[0].values.back() == doctest::Approx(0.06));
  CHECK(g.record_time.value() == 1.5e4);

  for (const auto& name : preset_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(validate(preset(name)));
  }
}

TEST_CASE("unknown preset lists the valid names") {
  try {
    (void)preset("fig9");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("fig3a") != std::string::npos);
    CHECK(msg.find("exp_check") != std::string::npos);
  }
}

TEST_CASE("config parsing") {
  const auto c = parse_config(R"({
    "name": "probe",
    "params": {"omega": 0.01, "delta": "auto_T4", "beta": 0.02},
    "initial_state": "ket01",
    "t_max": 2000,
    "n_records": 21,
    "sweep": {"field": "kappa", "lo": 0, "hi": 0.1, "points": 5},
    "record_time": 1000
  })");
  CHECK(c.name == "probe");
  CHECK(c.params.omega == 0.01);
  CHECK(c.params.delta.is_auto());
  CHECK(c.params.beta == 0.02);
  CHECK(c.initial_state == "ket01");
  CHECK(c.n_records == 21);
  REQUIRE(c.sweep.size() == 1);
  CHECK(c.sweep[0].values.size() == 5);
  CHECK(c.sweep[0].values[1] == doctest::Approx(0.025));

  const auto fixed = parse_config(R"({"params": {"delta": -0.5}})");
  CHECK_FALSE(fixed.params.delta.is_auto());
  CHECK(fixed.params.delta.value() == -0.5);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"params": {"delta": "auto"}})"), ConfigError);
  // parsing is lenient so CLI flags can complete a file; validate() is the gate
  const auto checked = [](const char* text) { validate(parse_config(text)); };
  CHECK_THROWS_AS(checked(R"({"sweep": {"field": "colour", "lo": 0, "hi": 1, "points": 2}, "record_time": 1})"),
                  ConfigError);
  CHECK_THROWS_AS(checked(R"({"sweep": {"field": "beta", "lo": 0, "hi": 1, "points": 2}})"), ConfigError);
  CHECK_THROWS_AS(checked(R"({"initial_state": "phi3"})"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);

  ScenarioConfig c = preset("fig3a");
  c.sweep = {SweepAxis::linear({"t"}, 0, 1, 2), SweepAxis::linear({"t"}, 0, 1, 2)};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.sweep = {SweepAxis::linear({"beta"}, 0, 1, 2), SweepAxis::linear({"kappa"}, 0, 1, 2),
             SweepAxis::linear({"gamma"}, 0, 1, 2)};
  c.record_time = 10.0;
  CHECK_THROWS_AS(validate(c), ConfigError);

  SystemParams p;
  CHECK_THROWS_AS(set_param(p, "omega_l", 1.0), ConfigError);
}

TEST_CASE("config round-trips through JSON") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const auto c = preset(name);
    const auto back = parse_config(config_to_json(c));
    CHECK(config_to_json(back) == config_to_json(c));
    CHECK(back.sweep.size() == c.sweep.size());
  }
}

TEST_CASE("initial states") {
  const auto b = build_basis(1);
  const auto s = initial_state(b, "S");
  CHECK(s.trace_error() < 1e-15);
  CHECK(zero_subspace_populations(s).ps == doctest::Approx(1.0));
  CHECK(fidelity_t(initial_state(b, "T")) == doctest::Approx(1.0));
  CHECK(zero_subspace_populations(initial_state(b, "ket00")).p00 == doctest::Approx(1.0));
  const auto mixed = zero_subspace_populations(initial_state(b, "ket01"));
  CHECK(mixed.ps == doctest::Approx(0.5));
  CHECK(mixed.pt == doctest::Approx(0.5));
  CHECK_THROWS_AS(initial_state(b, "up"), ConfigError);
}

TEST_CASE("sweep covers the full grid and ignores worker count") {
  const auto c = small_sweep();
  const auto one = run_sweep(c, 1);
  const auto four = run_sweep(c, 4);
  CHECK(one.fidelity.size() == 6);
  CHECK(one.coordinates.size() == 6);
  CHECK(one.coordinates[1] == std::vector<double>{0.0, 0.06});
  CHECK(one.coordinates[2][0] == doctest::Approx(0.03));

  std::ostringstream a;
  std::ostringstream b;
  write_sweep_csv(a, one);
  write_sweep_csv(b, four);
  CHECK(a.str() == b.str());
  CHECK(first_line(a.str()) == "beta,kappa,fidelity");

  // each point matches a standalone run
  ScenarioConfig single = c;
  single.sweep.clear();
  set_param(single.params, "beta", 0.06);
  set_param(single.params, "kappa", 0.06);
  const auto rho = evolve_to(initial_state(build_basis(1), "ket11"), build_liouvillian(build_basis(1), single.params),
                             500.0);
  CHECK(one.fidelity[5] == doctest::Approx(fidelity_t(rho)).epsilon(1e-9));
}

TEST_CASE("time and relative axes") {
  ScenarioConfig c = preset("fig6a");
  c.sweep = {SweepAxis::linear({"omega"}, -0.5, 0.5, 3, SweepAxis::Scale::relative),
             SweepAxis::linear({"t"}, 0.0, 400.0, 3)};
  const auto grid = run_sweep(c, 2);
  REQUIRE(grid.fidelity.size() == 9);
  std::ostringstream out;
  write_sweep_csv(out, grid);
  CHECK(first_line(out.str()) == "d_omega,t,fidelity");
  // t = 0 starts from |11>, which has no T component
  CHECK(grid.fidelity[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(grid.fidelity[3] == doctest::Approx(0.0).epsilon(1e-12));

  ScenarioConfig probe = c;
  probe.sweep.clear();
  probe.params.omega *= 1.5;
  const auto b = build_basis(1);
  const auto rho = evolve_to(initial_state(b, "ket11"), build_liouvillian(b, probe.params), 400.0);
  CHECK(grid.fidelity[8] == doctest::Approx(fidelity_t(rho)).epsilon(1e-9));
}

TEST_CASE("time series and steady CSV") {
  ScenarioConfig c = preset("fig3a");
  c.t_max = 200;
  c.n_records = 5;
  const auto series = run_time_series(c);
  CHECK(series.times.size() == 5);
  std::ostringstream out;
  write_time_series_csv(out, series);
  const auto text = out.str();
  CHECK(first_line(text) == "t,P00,PS,PT,P11,fidelity,trace_error,min_eig");
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);

  const auto steady = run_steady(preset("fig3a"));
  std::ostringstream s;
  write_steady_csv(s, steady);
  CHECK(first_line(s.str()) == "P00,PS,PT,P11,fidelity,trace_error,min_eig,traced_fidelity");
  CHECK(steady.traced_fidelity >= steady.record.fidelity - 1e-12);

  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
}
