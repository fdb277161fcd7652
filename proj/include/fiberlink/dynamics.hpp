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

#include "fiberlink/density.hpp"
#include "fiberlink/model.hpp"
#include "fiberlink/observables.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fiberlink {

/// Column-major vectorization: vec(A X B) = (B^T kron A) vec(X).
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, Eigen::Index dim);

/// Superoperator of rho -> i[rho, H] + sum_j (L_j rho L_j^+ - {L_j^+ L_j, rho}/2)
/// acting on column-vectorized density matrices.
class Liouvillian {
 public:
  Liouvillian(Operator hamiltonian, LindbladSet jumps);

  const Matrix& matrix() const noexcept { return matrix_; }
  const BasisPtr& basis() const noexcept { return hamiltonian_.basis(); }
  const Operator& hamiltonian() const noexcept { return hamiltonian_; }
  const LindbladSet& jumps() const noexcept { return jumps_; }
  Eigen::Index state_dimension() const noexcept { return static_cast<Eigen::Index>(basis()->size()); }

  /// L(rho) as a matrix.
  Matrix apply(const Matrix& rho) const;

 private:
  Operator hamiltonian_;
  LindbladSet jumps_;
  Matrix matrix_;
};

/// Throws ShapeError when H and the jump operators use different truncations.
Liouvillian build_liouvillian(const Operator& hamiltonian, const LindbladSet& jumps);

/// Convenience: H and jump set straight from parameters on the single-excitation basis.
Liouvillian build_liouvillian(const BasisPtr& basis, const SystemParams& params);

/// exp(step * L), computed once by scaling and squaring.
class Propagator {
 public:
  Propagator(const Liouvillian& liouvillian, double step);

  double step() const noexcept { return step_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  Vector apply(const Vector& vec_rho) const { return matrix_ * vec_rho; }
  DensityMatrix apply(const DensityMatrix& rho) const;

 private:
  double step_;
  Matrix matrix_;
};

/// t_k = k * t_max / (n_records - 1), k = 0 .. n_records - 1.
std::vector<double> uniform_grid(double t_max, std::size_t n_records);

struct TimeSeries {
  std::vector<double> times;
  std::vector<ObservableRecord> records;
  std::vector<DensityMatrix> states;  ///< filled only when requested
  std::optional<DensityMatrix> final_state;
};

struct PropagateOptions {
  bool keep_states = false;
  /// Relative tolerance on grid uniformity.
  double grid_tolerance = 1e-9;
};

/// Propagates over a uniform grid starting at t = 0 with a single precomputed
/// step propagator. Throws DomainError on a malformed grid and NumericalError
/// when the state stops being finite.
TimeSeries propagate(const DensityMatrix& rho0, const Liouvillian& liouvillian, std::span<const double> t_grid,
                     const PropagateOptions& options = {});

/// rho(t) for a single time, stepping with `step` (the last step is shortened to land on t).
DensityMatrix evolve_to(const DensityMatrix& rho0, const Liouvillian& liouvillian, double t, double step = 10.0);

inline constexpr double kNullThreshold = 1e-10;

/// Singular values below kNullThreshold * sigma_max.
std::size_t null_space_dimension(const Liouvillian& liouvillian);

/// Unique stationary state from the smallest right singular vector. Throws
/// DegenerateSteadyState when the kernel is more than one-dimensional.
DensityMatrix steady_state(const Liouvillian& liouvillian);

}  // namespace fiberlink
