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
#include "fiberlink/model.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fiberlink {

/// Analytic eigenstates of the drive-free Hamiltonian. The first four are the
/// zero-excitation states (photon vacuum), the rest span the one-excitation block.
enum class DressedLabel : unsigned char {
  ket00, S, T, ket11,
  phi1, phi2, phi3, phi4, phi5, phi6, phi7, phi8,
  T1, T2, T3, T4,
  S1, S2, S3, S4,
};

inline constexpr std::size_t kDressedCount = 20;

const std::array<DressedLabel, kDressedCount>& dressed_labels() noexcept;
std::string_view dressed_name(DressedLabel label) noexcept;
/// Throws std::invalid_argument for unknown labels.
DressedLabel parse_dressed_label(std::string_view name);
bool is_zero_excitation(DressedLabel label) noexcept;

struct DressedState {
  DressedLabel label;
  BasisPtr basis;
  Vector vector;
  double energy;  ///< rotating-frame eigenvalue of the drive-free Hamiltonian
};

struct LabeledEnergy {
  DressedLabel label;
  double energy;
};

/// Closed-form energies for all 20 dressed states at detuning delta.
/// Throws DomainError outside the real-spectrum region (g, nu > 0, g1^2 >= g3^2).
std::vector<LabeledEnergy> analytic_energies(double g, double nu, double delta);

/// Amplitude vector from the closed-form expansion, normalized with the
/// closed-form denominators. Uses params.g, params.nu and the resolved detuning.
DressedState dressed_state(DressedLabel label, const BasisPtr& basis, const SystemParams& params);
std::vector<DressedState> dressed_states(const BasisPtr& basis, const SystemParams& params);

/// Laser coupling of |00>|000> to T1 and T2.
double laser_coupling_t12(double g, double nu, double omega);
/// Laser coupling of |00>|000> to T3 and T4.
double laser_coupling_t34(double g, double nu, double omega);

struct LabelResidual {
  DressedLabel label;
  double analytic_energy;
  double eigen_residual;  ///< ||H v - E v||
};

struct SpectrumReport {
  bool ok = true;
  double max_eigen_residual = 0.0;
  double max_energy_mismatch = 0.0;
  double max_projector_distance = 0.0;
  std::size_t matched_states = 0;
  std::vector<LabelResidual> residuals;
  std::vector<std::string> failures;
};

inline constexpr double kSpectrumTolerance = 1e-9;

/// Diagonalizes the drive-free Hamiltonian and matches the analytic states to it.
/// Degenerate clusters are compared as subspaces via projector distance.
SpectrumReport verify_spectrum(const BasisPtr& basis, const SystemParams& params);
/// Same check against a caller-supplied analytic set.
SpectrumReport verify_spectrum(const BasisPtr& basis, const SystemParams& params,
                               std::span<const DressedState> analytic);

enum class Drive : unsigned char { laser, microwave };
std::string_view drive_name(Drive drive) noexcept;

struct CouplingRow {
  DressedLabel source;
  DressedLabel target;
  Drive drive;
  Complex element;   ///< <target| H_drive |source>
  double magnitude;  ///< |element|
  double detuning;   ///< energy(target) - energy(source)
};

struct CouplingTable {
  std::vector<CouplingRow> rows;

  /// Row for an unordered pair, or nullptr.
  const CouplingRow* find(DressedLabel a, DressedLabel b, Drive drive) const;
};

CouplingTable dressed_couplings(const BasisPtr& basis, const SystemParams& params);

struct JumpImage {
  Vector image;             ///< L |state>, unnormalized
  double norm_sq;
  double overlap_with_t000; ///< |<T,000|image>|^2 / ||image||^2, zero for a null image
};

JumpImage jump_image(const DressedState& state, Channel channel, const SystemParams& params);

/// |T>|000> on the given basis.
Vector target_ket(const Basis& basis);

}  // namespace fiberlink
