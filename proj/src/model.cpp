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

#include "fiberlink/model.hpp"

#include "fiberlink/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fiberlink {

namespace {

void require_one_excitation(const BasisPtr& basis) {
  if (!basis || basis->max_excitation() != 1) {
    throw ShapeError("model operators require the single-excitation basis (max_excitation = 1)");
  }
}

void require_rate(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError(std::string(name) + " must be a finite non-negative rate");
  }
}

}  // namespace

void validate(const SystemParams& p) {
  if (!std::isfinite(p.g) || p.g <= 0.0) {
    throw DomainError("g must be positive");
  }
  require_rate(p.nu, "nu");
  require_rate(p.omega, "omega");
  require_rate(p.omega_mw, "omega_mw");
  require_rate(p.beta, "beta");
  require_rate(p.kappa, "kappa");
  require_rate(p.gamma, "gamma");
  if (!p.delta.is_auto() && !std::isfinite(p.delta.value())) {
    throw DomainError("delta must be finite");
  }
  if (p.delta.is_auto() && p.nu <= 0.0) {
    throw DomainError("delta = auto_T4 requires nu > 0");
  }
}

double resolved_detuning(const SystemParams& params) {
  return params.delta.is_auto() ? resonance_detuning(params.g, params.nu) : params.delta.value();
}

CouplingConstants CouplingConstants::from(double g, double nu) {
  const double g2 = g * g;
  const double nu2 = nu * nu;
  return {g2 + 2.0 * nu2, g2 - 2.0 * nu2, std::sqrt(g2 * g2 + 4.0 * nu2 * nu2)};
}

double resonance_detuning(double g, double nu) {
  if (!(g > 0.0) || !(nu > 0.0)) {
    throw DomainError("resonance_detuning requires g > 0 and nu > 0");
  }
  const auto c = CouplingConstants::from(g, nu);
  return -std::sqrt(c.g1_sq + c.g3_sq) / std::numbers::sqrt2;
}

HamiltonianTerms hamiltonian_terms(const BasisPtr& basis, const SystemParams& params) {
  require_one_excitation(basis);
  validate(params);
  const double delta = resolved_detuning(params);

  const Operator a_a = mode_annihilator(basis, Mode::cavity_a);
  const Operator a_b = mode_annihilator(basis, Mode::cavity_b);
  const Operator fib = mode_annihilator(basis, Mode::fiber);

  // Products of truncated operators must lower before they raise, otherwise the
  // intermediate state falls outside the basis.

  // Every excitation carries the same rotating-frame energy delta.
  Operator acf = delta * excitation_operator(basis);

  Operator coupling = params.g * (atomic_transition(basis, Atom::a, Level::e, Level::g1) * a_a +
                                  atomic_transition(basis, Atom::b, Level::e, Level::g1) * a_b) +
                      params.nu * ((a_a.adjoint() + a_b.adjoint()) * fib);
  acf += coupling + coupling.adjoint();

  Operator laser_half = params.omega * (atomic_transition(basis, Atom::a, Level::g0, Level::e) +
                                        atomic_transition(basis, Atom::b, Level::g0, Level::e));
  Operator laser = laser_half + laser_half.adjoint();

  Operator mw_half = params.omega_mw * (atomic_transition(basis, Atom::a, Level::g0, Level::g1) -
                                        atomic_transition(basis, Atom::b, Level::g0, Level::g1));
  Operator microwave = mw_half + mw_half.adjoint();

  return {std::move(acf), std::move(laser), std::move(microwave)};
}

Operator hamiltonian(const BasisPtr& basis, const SystemParams& params) {
  return hamiltonian_terms(basis, params).total();
}

std::string_view channel_name(Channel channel) noexcept {
  switch (channel) {
    case Channel::beta:
      return "beta";
    case Channel::gamma1:
      return "gamma1";
    case Channel::gamma2:
      return "gamma2";
    case Channel::gamma3:
      return "gamma3";
    case Channel::gamma4:
      return "gamma4";
    case Channel::kappa1:
      return "kappa1";
    case Channel::kappa2:
      break;
  }
  return "kappa2";
}

Channel parse_channel(std::string_view name) {
  for (Channel c : kChannels) {
    if (channel_name(c) == name) {
      return c;
    }
  }
  throw std::invalid_argument("unknown Lindblad channel '" + std::string(name) + "'");
}

namespace {

std::array<Operator, 7> make_jump_operators(const BasisPtr& basis, const SystemParams& p) {
  require_one_excitation(basis);
  validate(p);
  const double emit = std::sqrt(p.gamma / 2.0);
  const double leak = std::sqrt(p.kappa);
  return {
      std::sqrt(p.beta) * mode_annihilator(basis, Mode::fiber),
      emit * atomic_transition(basis, Atom::a, Level::g0, Level::e),
      emit * atomic_transition(basis, Atom::a, Level::g1, Level::e),
      emit * atomic_transition(basis, Atom::b, Level::g0, Level::e),
      emit * atomic_transition(basis, Atom::b, Level::g1, Level::e),
      leak * mode_annihilator(basis, Mode::cavity_a),
      leak * mode_annihilator(basis, Mode::cavity_b),
  };
}

}  // namespace

LindbladSet::LindbladSet(BasisPtr basis, const SystemParams& params)
    : basis_(std::move(basis)), ops_(make_jump_operators(basis_, params)) {}

Operator LindbladSet::decay_generator() const {
  Operator k = Operator::zero(basis_);
  for (const auto& l : ops_) {
    k += l.adjoint() * l;
  }
  return k;
}

LindbladSet lindblad_set(const BasisPtr& basis, const SystemParams& params) {
  return LindbladSet(basis, params);
}

bool validate_short_fiber(double length_m, double vbar) {
  if (!(length_m > 0.0) || !(vbar > 0.0) || !std::isfinite(length_m) || !std::isfinite(vbar)) {
    throw DomainError("fiber length and vbar must be positive");
  }
  return length_m * vbar / (2.0 * std::numbers::pi * kSpeedOfLight) <= 1.0;
}

}  // namespace fiberlink
