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

namespace fiberlink {

/// Density matrix on a truncated basis. Validity is checked, not enforced:
/// propagation results are reported as-is so drift stays visible.
class DensityMatrix {
 public:
  DensityMatrix(BasisPtr basis, Matrix matrix);

  static DensityMatrix pure(BasisPtr basis, const Vector& ket);
  static DensityMatrix pure(BasisPtr basis, const BasisState& state);

  const BasisPtr& basis() const noexcept { return basis_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  double trace_error() const;
  double hermiticity_error() const;
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;
  /// Hermitian, unit trace within 1e-8 and min eigenvalue >= -1e-8.
  bool is_valid(double tol = 1e-8) const;

  /// (rho + rho^dagger) / 2
  DensityMatrix hermitized() const;

 private:
  BasisPtr basis_;
  Matrix matrix_;
};

}  // namespace fiberlink
