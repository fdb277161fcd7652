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

#include "fiberlink/hilbert.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace fiberlink {

/// Rotating-frame detuning: either a fixed rate or resolved to the
/// |00>|000> <-> |T4> resonance.
class Detuning {
 public:
  static Detuning auto_t4() { return Detuning(); }
  static Detuning fixed(double value) { return Detuning(value); }

  bool is_auto() const noexcept { return !value_.has_value(); }
  /// Throws std::bad_optional_access for the auto sentinel.
  double value() const { return value_.value(); }

  bool operator==(const Detuning&) const = default;

 private:
  Detuning() = default;
  explicit Detuning(double v) : value_(v) {}
  std::optional<double> value_;
};

/// Physical rates, all in units of the atom-cavity coupling when g = 1.
struct SystemParams {
  double g = 1.0;
  double nu = 1.0;
  double omega = 0.0;
  double omega_mw = 0.0;
  Detuning delta = Detuning::auto_t4();
  double beta = 0.0;
  double kappa = 0.0;
  double gamma = 0.0;
};

/// Throws DomainError on negative rates, non-finite values or g <= 0.
void validate(const SystemParams& params);

/// Detuning in force for these parameters (auto_T4 resolved).
double resolved_detuning(const SystemParams& params);

/// Squared dressed-coupling constants g1^2 = g^2 + 2nu^2, g2^2 = g^2 - 2nu^2,
/// g3^2 = sqrt(g^4 + 4nu^4).
struct CouplingConstants {
  double g1_sq;
  double g2_sq;
  double g3_sq;

  static CouplingConstants from(double g, double nu);
};

/// omega_e - omega that makes |00>|000> resonant with |T4>.
double resonance_detuning(double g, double nu);

/// The three pieces of the rotating-frame Hamiltonian.
struct HamiltonianTerms {
  Operator atom_cavity_fiber;  ///< detuning + atom-cavity + cavity-fiber couplings
  Operator laser;
  Operator microwave;

  Operator total() const { return atom_cavity_fiber + laser + microwave; }
};

HamiltonianTerms hamiltonian_terms(const BasisPtr& basis, const SystemParams& params);
Operator hamiltonian(const BasisPtr& basis, const SystemParams& params);

enum class Channel : unsigned char { beta, gamma1, gamma2, gamma3, gamma4, kappa1, kappa2 };

inline constexpr std::array<Channel, 7> kChannels{Channel::beta,   Channel::gamma1, Channel::gamma2,
                                                  Channel::gamma3, Channel::gamma4, Channel::kappa1,
                                                  Channel::kappa2};

std::string_view channel_name(Channel channel) noexcept;
/// Throws std::invalid_argument on an unknown name.
Channel parse_channel(std::string_view name);

/// Jump operators in fixed channel order; zero-rate channels are zero matrices.
class LindbladSet {
 public:
  LindbladSet(BasisPtr basis, const SystemParams& params);

  const Operator& operator[](Channel channel) const { return ops_[static_cast<std::size_t>(channel)]; }
  const std::array<Operator, 7>& ops() const noexcept { return ops_; }
  const BasisPtr& basis() const noexcept { return basis_; }

  /// Sum of L^dagger L over all channels.
  Operator decay_generator() const;

 private:
  BasisPtr basis_;
  std::array<Operator, 7> ops_;
};

LindbladSet lindblad_set(const BasisPtr& basis, const SystemParams& params);

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// True iff length * vbar / (2 pi c) <= 1.
bool validate_short_fiber(double length_m, double vbar);

}  // namespace fiberlink
